#pragma once

#include <array>
#include <string>
#include <vector>

#include "tlex/intensity.hpp"

namespace tlex {

// Six-column summary of one user's smoothed sequence for one feature:
// mean/sd of the trimmed (pre-normalization) values, DFT amplitudes of
// the normalized values at frequencies 0..2, and the phase at the
// strongest non-DC frequency.
struct DescriptorRow {
    double avg = 0.0;
    double sd = 0.0;
    double amp0 = 0.0;
    double amp1 = 0.0;
    double amp2 = 0.0;
    double arg1 = 0.0;

    std::array<double, 6> as_array() const { return {avg, sd, amp0, amp1, amp2, arg1}; }
};

inline constexpr std::array<const char*, 6> kDescriptorColumns = {"avg",  "sd",   "amp0",
                                                                  "amp1", "amp2", "arg1"};

struct DescriptorMatrix {
    std::string feature_id;
    std::vector<std::string> user_ids;
    std::vector<DescriptorRow> rows;  // same order as user_ids
};

DescriptorRow describe(const SmoothedSequence& smoothed);

DescriptorMatrix build_descriptor_matrix(std::string feature_id,
                                         const std::vector<std::string>& user_ids,
                                         const std::vector<SmoothedSequence>& sequences);

}  // namespace tlex
