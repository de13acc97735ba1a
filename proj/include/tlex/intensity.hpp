#pragma once

#include <array>
#include <map>
#include <vector>

#include "tlex/common.hpp"

namespace tlex {

// Binned counting-process observation on [0,1]: event increments and word
// exposure per bin, midpoints t_i = (i + 0.5)/12.
struct CountingObservation {
    std::array<double, 12> events{};
    std::array<double, 12> exposure{};
};

enum class Normalization { MinMax, UnitSum };

// How the design matrix A(t) is discretized. Midpoint matches the data
// sum over bin midpoints, so local polynomials reproduce constants
// exactly; Quadrature integrates A over [0,1] with a fixed trapezoid grid.
enum class DesignMatrix { Midpoint, Quadrature };

struct KernelConfig {
    int degree = 1;  // local polynomial order p, 0..3
    double bandwidth = 0.5;
    bool auto_bandwidth = true;
    std::vector<double> bandwidth_grid = {0.15, 0.2, 0.3, 0.45, 0.7, 1.0};
    int quadrature_points = 401;
    double ridge = 1e-8;
    Normalization normalization = Normalization::MinMax;
    DesignMatrix design = DesignMatrix::Midpoint;

    void validate() const;
};

struct SmoothedSequence {
    std::array<double, 14> raw{};        // estimate on the 14-point grid {0, 1/13, ..., 1}
    std::array<double, 12> trimmed{};    // raw without the boundary entries
    std::array<double, 12> normalized{};
    double bandwidth = 0.0;              // bandwidth actually used
};

class SelectorError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

double epanechnikov(double u);                   // 0.75 (1 - u^2) on [-1, 1]
double epanechnikov_scaled(double u, double b);  // K(u/b)/b

// Martingale local-polynomial intensity estimate at one point; bandwidth
// must be resolved. J(s)/Y(s) = 0 on zero-exposure bins, result floored
// at zero.
double estimate_intensity(const CountingObservation& obs, const KernelConfig& config, double t);

// Leave-one-bin-out Poisson-deviance bandwidth pick over config.bandwidth_grid;
// ties go to the smaller bandwidth. Throws SelectorError when no candidate
// scores finite.
double select_bandwidth(const CountingObservation& obs, const KernelConfig& config);

SmoothedSequence smooth_sequence(const CountingObservation& obs, const KernelConfig& config);

// Caches the data-independent smoothing weights per bandwidth; use this
// when smoothing many sequences under one config.
class IntensitySmoother {
public:
    explicit IntensitySmoother(KernelConfig config);

    SmoothedSequence smooth(const CountingObservation& obs) const;
    double pick_bandwidth(const CountingObservation& obs) const;
    const KernelConfig& config() const { return config_; }

private:
    struct BandWeights {
        std::array<std::array<double, 12>, 14> eval;  // eval point x bin
        std::array<std::array<double, 12>, 12> loo;   // held-out bin x bin (diagonal zero)
    };

    const BandWeights& weights_for(double b) const;

    KernelConfig config_;
    std::map<double, BandWeights> bands_;
};

}  // namespace tlex
