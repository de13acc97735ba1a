#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tlex/descriptors.hpp"

namespace tlex {

using Point6 = std::array<double, 6>;

enum class AssignMetric { L1, L2 };

struct KmeansOptions {
    int k_min = 2;
    int k_max = 7;
    int restarts = 10;
    int max_iterations = 100;
    bool standardize = true;
    AssignMetric assign_metric = AssignMetric::L1;

    void validate() const;
};

// Per-feature cluster model: centers in raw descriptor units plus the
// column standardization used for fitting and assignment.
struct ClusterModel {
    std::string feature_id;
    int k = 0;
    std::vector<Point6> centers;  // raw units
    Point6 col_mean{};
    Point6 col_sd{};
    std::array<bool, 6> constant_col{};
    std::map<int, double> silhouette_by_k;
    AssignMetric assign_metric = AssignMetric::L1;
};

class UndefinedSilhouetteError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

// Collects the per-iteration within-cluster sum of squares for every
// Lloyd run, mainly so tests can assert monotone descent.
struct KmeansDiagnostics {
    std::vector<std::vector<double>> wcss_traces;
};

// Mean silhouette of a clustering; Euclidean distances on the rows as
// given. Singletons score 0; coincident points (a = b = 0) score 0.
// Throws UndefinedSilhouetteError when fewer than 2 clusters are
// non-empty.
double silhouette_mean(const std::vector<Point6>& points, const std::vector<int>& assignment);

ClusterModel fit_kmeans_auto(const DescriptorMatrix& matrix, std::uint64_t seed,
                             const KmeansOptions& options = {},
                             KmeansDiagnostics* diag = nullptr);

// Same fit on bare rows (used by simulations and tests).
ClusterModel fit_kmeans_points(std::string feature_id, const std::vector<Point6>& points,
                               std::uint64_t seed, const KmeansOptions& options = {},
                               KmeansDiagnostics* diag = nullptr);

// Nearest-center cluster id (1-based) under the model's metric on
// standardized columns; ties go to the smaller id.
int assign_nearest(const ClusterModel& model, const DescriptorRow& row);

// The classifiers' input: one nominal column per feature (values
// 1..k_feature) plus the risk label per row.
struct NominalMatrix {
    std::vector<std::string> feature_ids;
    std::vector<std::string> user_ids;
    std::vector<std::vector<int>> cells;  // [user][feature]
    std::vector<int> labels;
    std::vector<int> k_by_feature;
};

// models and labeled_matrices are parallel (one per feature); each
// labeled matrix holds the same users in the same order.
NominalMatrix build_nominal_matrix(const std::vector<ClusterModel>& models,
                                   const std::vector<DescriptorMatrix>& labeled_matrices,
                                   const std::vector<int>& labels);

}  // namespace tlex
