#include "stats.hpp"

namespace ordseek {

Stats& stats() {
    static Stats s;
    return s;
}

void reset_stats() {
    Stats& s = stats();
    s.basis_det_checks = 0;
    s.h_division_checks = 0;
    s.norm_bound_checks = 0;
    s.size_condition_checks = 0;
    s.interval_count_checks = 0;
    s.h_lower_bound_checks = 0;
    s.lll_calls = 0;
    s.lattice_ranges = 0;
    s.brute_ranges = 0;
    s.factor_enumerations = 0;
    s.scan_span_violations = 0;
}

}  // namespace ordseek
