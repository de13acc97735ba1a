#pragma once

#include <array>
#include <vector>

#include "tlex/common.hpp"
#include "tlex/lexicon.hpp"

namespace tlex {

// One-sided amplitude/phase spectrum of a real series.
// A(f) = |sum_t x(t) e^(-2*pi*i*f*t/N)| / N over f in 0..floor(N/2).
struct Spectrum {
    int n = 0;
    std::vector<double> amplitudes;
    std::vector<double> phases;  // atan2(Im, Re)
};

struct PeriodEstimate {
    int f_star = 1;
    int period_days = 12;
    bool fallback_used = false;
};

struct ResampledSequence {
    std::array<double, 12> values{};
    std::array<double, 12> exposure{};
    double bin_width_days = 1.0;
    int period_days = 12;
    bool fallback_used = false;
};

Spectrum dft(const std::vector<double>& series);

// Dominant-period pick: argmax amplitude over f in 1..floor(N/min_period),
// ties to the smaller index (longer period). A flat spectrum falls back to
// the minimum period, flagged.
PeriodEstimate detect_period(const Spectrum& spectrum, int min_period_days = 12);

// Repartitions the last period_days of the series into 12 bins; fractional
// day boundaries split a day's mass proportionally. Sum features bin by
// sum, ratio features by length-weighted mean; exposure always by sum.
ResampledSequence resample_last_period(const std::vector<double>& series,
                                       const std::vector<double>& exposure, int period_days,
                                       Aggregation aggregation = Aggregation::Sum);

}  // namespace tlex
