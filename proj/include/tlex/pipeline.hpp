#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlex/classify.hpp"
#include "tlex/clustering.hpp"
#include "tlex/corpus.hpp"
#include "tlex/intensity.hpp"
#include "tlex/metrics.hpp"
#include "tlex/periodics.hpp"

namespace tlex {

struct FilterParams {
    int min_posts = 20;
    int span_min = 50;
    int span_max = 1800;
};

struct PeriodParams {
    int min_period_days = 12;
    bool shared_per_user = false;  // one period per user (from exposure) vs per feature
};

struct ClassifierParams {
    CartParams cart;
    GbmGrid gbm_grid;
    int cv_folds = 10;
    double train_fraction = 0.75;
    bool stratified = true;
    bool rfe_enabled = false;
    std::vector<int> rfe_sizes = {5, 10, 20, 50, 0};  // 0 = all features
    int influence_repeats = 10;
    double nzv_freq_cut = 19.0;
    double nzv_unique_cut = 0.10;
};

struct PipelineConfig {
    std::string corpus_path;
    std::string dictionary_path;
    std::string schema_path;
    std::string cohort_path;
    std::string output_dir;
    FilterParams filter;
    PeriodParams periods;
    KernelConfig kernel;
    KmeansOptions clustering;
    ClassifierParams classifier;
    std::uint64_t seed = 0;

    static PipelineConfig load(const std::string& path);
    void validate() const;
};

inline const std::vector<std::string> kStageNames = {
    "synth",  "ingest", "extract",  "periods",   "smooth", "describe",
    "cluster", "assign", "train",    "evaluate",  "influence", "report"};

// Runs one named stage against the artifacts in config.output_dir.
// Throws InvalidInputError when upstream artifacts are missing (the
// message names the stage to run first) and ConfigError for bad config.
void run_stage(const std::string& stage, const PipelineConfig& config);

// All applicable stages in order (synth only with a cohort configured;
// ingest/extract only for post-corpus inputs).
void run_all(const PipelineConfig& config);

// Renders the statistics block for a bare 3x3 confusion CSV (three rows
// of three counts, prediction-major), bypassing the pipeline.
std::string stats_from_confusion_csv(const std::string& path);

// ---- in-process analysis (shared by the smooth stage and simulations) ----

struct UserSequences {
    std::string user_id;
    std::optional<int> label;
    std::vector<PeriodEstimate> periods;     // per feature
    std::vector<SmoothedSequence> smoothed;  // per feature
};

UserSequences process_user_series(const DailySeriesSet& series, const FeatureSchema& schema,
                                  const PeriodParams& period_params,
                                  const IntensitySmoother& smoother);

struct CohortAnalysis {
    std::vector<std::string> feature_ids;
    std::vector<std::string> background_users;
    std::vector<std::string> labeled_users;
    std::vector<int> labels;                    // parallel to labeled_users
    std::vector<ClusterModel> cluster_models;   // per feature
    NominalMatrix nominal;                      // labeled users only
};

// Synthesize a series-mode cohort and carry it through smoothing,
// descriptors, clustering and nominal encoding without touching disk.
CohortAnalysis analyze_cohort(const CohortSpec& spec, const FeatureSchema& schema,
                              const PipelineConfig& config);

std::string cluster_model_to_json(const ClusterModel& model);
ClusterModel cluster_model_from_json(const std::string& text);

// Cluster-center table in the report layout: tab-separated header
// "AVG SD 0 1 2 Arg1", one row per cluster, raw units.
std::string render_center_table(const ClusterModel& model);

}  // namespace tlex
