#pragma once

#include "alex3/equivalence.hpp"

namespace alex3 {

/// Search-space bounds for the catalog. max_r bounds the number of singular
/// pairs, i.e. the singular multiset sums to at most 2*max_r.
struct ComplexityBound {
    i64 max_genus = 0;
    i64 max_f = 0;
    i64 max_t = 0;
    i64 max_s = 0;
    i64 max_alpha = 0;
    i64 max_pairs = 0;
    i64 max_b_abs = 0;
    i64 max_r = 0;
};

/// Count of inequivalent actions per the published closed-form: binomial(r, s).
/// Requires r >= s >= 1.
i64 count_actions_paper(i64 r, i64 s);

/// Direct count of the classifying datum: the number of multisets of s even
/// positive integers summing to 2r (equivalently, partitions of r into
/// exactly s parts), found by exhaustive enumeration. Requires r >= s >= 1.
i64 count_actions_enumerated(i64 r, i64 s);

/// Both counts side by side. Deliberately does not decide which is right;
/// they first disagree at r=3, s=2.
struct CountReport {
    i64 r = 0;
    i64 s = 0;
    i64 paper_count = 0;
    i64 enumerated_count = 0;
    bool agree = false;
};

CountReport compare_counts(i64 r, i64 s);

nlohmann::json count_report_to_json(const CountReport& report);

/// One canonical representative per equivalence class that meets the bounds,
/// sorted by tuple_less. The representative is the global minimum of its
/// class; for closed orientable tuples its b can leave [-max_b_abs, max_b_abs]
/// when the mirror tuple has smaller pairs.
std::vector<CanonicalTuple> enumerate_census(const ComplexityBound& bound,
                                             const EquivalenceOptions& opts = {});

} // namespace alex3
