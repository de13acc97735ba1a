#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tlex/clustering.hpp"

namespace tlex {

// Train/test partition of nominal-matrix rows, stratified by label.
struct SplitPlan {
    std::vector<int> train;
    std::vector<int> test;
    std::uint64_t seed = 0;
};

SplitPlan make_split(const std::vector<int>& labels, std::uint64_t seed,
                     double train_fraction = 0.75, bool stratified = true);

// Drop columns that are (nearly) constant: most-common/second-most-common
// level count ratio > freq_cut together with distinct/rows below
// unique_cut, or constant outright. Returns retained feature indices.
std::vector<int> nzv_filter(const NominalMatrix& data, double freq_cut = 19.0,
                            double unique_cut = 0.10);

struct CartParams {
    int min_split = 5;
    int min_leaf = 2;
    int max_depth = 30;
    double cp = 0.01;
};

struct TreeNode {
    int feature = -1;               // index into TreeModel::feature_ids; -1 = leaf
    std::uint16_t left_levels = 0;  // bitmask, bit (L-1) set = level L routes left
    int left = -1;
    int right = -1;
    std::array<int, 3> counts{};  // training class counts reaching this node
    int majority = 0;
    int depth = 0;
};

struct TreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] = root
    std::vector<std::string> feature_ids;
    CartParams params;
};

TreeModel fit_cart(const NominalMatrix& data, const std::vector<int>& rows,
                   const std::vector<int>& features, const CartParams& params = {});

int predict(const TreeModel& model, const std::vector<int>& levels);

struct GbmParams {
    int n_trees = 100;
    int depth = 2;  // maximum regression-tree depth
    double shrinkage = 0.1;
    int min_obs = 10;  // minimum rows per terminal node
};

struct GbmGrid {
    std::vector<int> n_trees = {50, 100, 150};
    std::vector<int> depths = {1, 2, 3};
    std::vector<double> shrinkages = {0.1};
    int min_obs = 10;
};

struct RegNode {
    int feature = -1;  // -1 = leaf
    std::uint16_t left_levels = 0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // leaf increment, shrinkage folded in
};

struct RegTree {
    std::vector<RegNode> nodes;
};

struct TuningEntry {
    int n_trees = 0;
    int depth = 0;
    double shrinkage = 0.0;
    double cv_accuracy = 0.0;
};

struct BoostModel {
    std::vector<std::string> feature_ids;
    std::vector<int> features;     // column indices the fit considered
    std::array<double, 3> init{};  // log class priors
    GbmParams params;
    std::vector<std::array<RegTree, 3>> trees;    // one per iteration
    std::map<int, double> influence_raw;          // feature index -> summed improvement
    std::vector<double> train_deviance;           // per iteration, after update
    std::vector<TuningEntry> tuning;              // filled by fit_gbm_cv
};

BoostModel fit_gbm(const NominalMatrix& data, const std::vector<int>& rows,
                   const std::vector<int>& features, const GbmParams& params);

// Grid search by stratified cross-validated accuracy; ties prefer higher
// accuracy, then fewer trees, then smaller depth, then smaller shrinkage.
// Refits the winner on all given rows.
BoostModel fit_gbm_cv(const NominalMatrix& data, const std::vector<int>& rows,
                      const std::vector<int>& features, const GbmGrid& grid, int cv_folds,
                      std::uint64_t seed);

int predict(const BoostModel& model, const std::vector<int>& levels);
std::array<double, 3> predict_proba(const BoostModel& model, const std::vector<int>& levels);

struct InfluenceReport {
    // feature id -> percent, sorted descending (ties by id).
    std::vector<std::pair<std::string, double>> entries;
};

InfluenceReport relative_influence(const BoostModel& model);

// Backward feature elimination: rank by full-fit influence, score each
// candidate size by stratified CV accuracy, keep the best (ties -> the
// smaller size). Returns retained feature indices in rank order.
std::vector<int> rfe_select(const NominalMatrix& data, const std::vector<int>& rows,
                            const std::vector<int>& features, std::vector<int> sizes,
                            int cv_folds, std::uint64_t seed,
                            const GbmParams& params = {100, 2, 0.1, 10});

// Stratified fold ids (0..folds-1) for the given rows.
std::vector<int> stratified_folds(const std::vector<int>& labels, const std::vector<int>& rows,
                                  int folds, std::uint64_t seed);

std::string tree_to_json(const TreeModel& model);
TreeModel tree_from_json(const std::string& text);
std::string boost_to_json(const BoostModel& model);
BoostModel boost_from_json(const std::string& text);

std::string render_tree_dot(const TreeModel& model);
std::string render_tree_svg(const TreeModel& model);

}  // namespace tlex
