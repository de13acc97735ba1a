#pragma once

#include <array>
#include <string>
#include <vector>

#include "tlex/common.hpp"

namespace tlex {

// 3x3 confusion counts; rows = prediction, columns = reference.
struct ConfusionMatrix {
    std::array<std::array<long long, 3>, 3> counts{};

    long long n() const {
        long long t = 0;
        for (const auto& row : counts)
            for (long long c : row) t += c;
        return t;
    }
    long long trace() const { return counts[0][0] + counts[1][1] + counts[2][2]; }
};

ConfusionMatrix confusion(const std::vector<int>& predictions,
                          const std::vector<int>& references);

struct StatsBlock {
    double accuracy = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double nir = 0.0;
    double p_value = 0.0;
    double kappa = 0.0;
};

// Exact statistics: Clopper-Pearson interval for the accuracy, one-sided
// exact binomial test of accuracy > no-information rate, Cohen's kappa.
StatsBlock stats(const ConfusionMatrix& matrix, double alpha = 0.05);

// Text block mirroring the layout the statistics are reported in
// (tab-separated confusion table, then "Name : value" lines, 4
// significant digits).
std::string render_stats_block(const ConfusionMatrix& matrix, const StatsBlock& block);

// Exposed numerics (also exercised directly by tests).
double regularized_incomplete_beta(double a, double b, double x);
double beta_quantile(double p, double a, double b);
double binomial_tail_geq(long long n, long long x, double p);

}  // namespace tlex
