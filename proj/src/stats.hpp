#pragma once

#include <atomic>
#include <cstdint>

namespace ordseek {

// Global counters for the exact runtime checks that the search paths
// perform on every call. Tests read these to confirm the checks ran.
struct Stats {
    std::atomic<std::uint64_t> basis_det_checks{0};
    std::atomic<std::uint64_t> h_division_checks{0};
    std::atomic<std::uint64_t> norm_bound_checks{0};
    std::atomic<std::uint64_t> size_condition_checks{0};
    std::atomic<std::uint64_t> interval_count_checks{0};
    std::atomic<std::uint64_t> h_lower_bound_checks{0};
    std::atomic<std::uint64_t> lll_calls{0};
    std::atomic<std::uint64_t> lattice_ranges{0};
    std::atomic<std::uint64_t> brute_ranges{0};
    std::atomic<std::uint64_t> factor_enumerations{0};
    std::atomic<std::uint64_t> scan_span_violations{0};
};

Stats& stats();
void reset_stats();

}  // namespace ordseek
