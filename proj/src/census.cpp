#include "alex3/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace alex3 {

namespace {

void require_count_domain(i64 r, i64 s) {
    if (s < 1 || s > r)
        throw DomainError("count requires r >= s >= 1, got r=" + std::to_string(r) +
                          " s=" + std::to_string(s));
}

} // namespace

i64 count_actions_paper(i64 r, i64 s) {
    require_count_domain(r, s);
    s = std::min(s, r - s);
    i64 result = 1;
    for (i64 i = 1; i <= s; ++i) {
        __int128 next = static_cast<__int128>(result) * (r - s + i) / i;
        if (next > INT64_MAX)
            throw DomainError("binomial overflows 64 bits");
        result = static_cast<i64>(next);
    }
    return result;
}

i64 count_actions_enumerated(i64 r, i64 s) {
    require_count_domain(r, s);
    // Multisets {r_1 <= ... <= r_s}, each even >= 2, summing to 2r.
    i64 count = 0;
    auto recurse = [&](auto&& self, i64 remaining, i64 parts, i64 minimum) -> void {
        if (parts == 1) {
            if (remaining >= minimum && remaining % 2 == 0)
                ++count;
            return;
        }
        for (i64 value = minimum; value * parts <= remaining; value += 2)
            self(self, remaining - value, parts - 1, value);
    };
    recurse(recurse, 2 * r, s, 2);
    return count;
}

CountReport compare_counts(i64 r, i64 s) {
    CountReport report;
    report.r = r;
    report.s = s;
    report.paper_count = count_actions_paper(r, s);
    report.enumerated_count = count_actions_enumerated(r, s);
    report.agree = report.paper_count == report.enumerated_count;
    return report;
}

nlohmann::json count_report_to_json(const CountReport& report) {
    return {{"r", report.r},
            {"s", report.s},
            {"paper_count", report.paper_count},
            {"enumerated_count", report.enumerated_count},
            {"agree", report.agree}};
}

namespace {

bool within_bounds(const InvariantTuple& t, const ComplexityBound& bound) {
    if (t.surface.genus > bound.max_genus || t.fixed_circles > bound.max_f ||
        t.se_circles > bound.max_t || static_cast<i64>(t.singular.size()) > bound.max_s ||
        t.pair_count() > bound.max_pairs || std::abs(t.b) > bound.max_b_abs)
        return false;
    for (const SeifertPair& p : t.exceptional)
        if (p.alpha > bound.max_alpha)
            return false;
    return singular_point_count(t) <= 2 * bound.max_r;
}

// Nondecreasing sequences of even entries >= 2 with the given length and
// bounded sum.
void singular_multisets(i64 length, i64 max_sum, std::vector<i64>& current,
                        const std::function<void(const std::vector<i64>&)>& emit) {
    if (length == 0) {
        emit(current);
        return;
    }
    i64 minimum = current.empty() ? 2 : current.back();
    for (i64 value = minimum; value * length <= max_sum; value += 2) {
        current.push_back(value);
        singular_multisets(length - 1, max_sum - value, current, emit);
        current.pop_back();
    }
}

// Nondecreasing (lexicographically) sequences of legal Seifert pairs.
void pair_multisets(const std::vector<SeifertPair>& legal, i64 length, std::size_t from,
                    std::vector<SeifertPair>& current,
                    const std::function<void(const std::vector<SeifertPair>&)>& emit) {
    if (length == 0) {
        emit(current);
        return;
    }
    for (std::size_t i = from; i < legal.size(); ++i) {
        current.push_back(legal[i]);
        pair_multisets(legal, length - 1, i, current, emit);
        current.pop_back();
    }
}

} // namespace

std::vector<CanonicalTuple> enumerate_census(const ComplexityBound& bound,
                                             const EquivalenceOptions& opts) {
    if (bound.max_genus < 0 || bound.max_f < 0 || bound.max_t < 0 || bound.max_s < 0 ||
        bound.max_alpha < 0 || bound.max_pairs < 0 || bound.max_b_abs < 0 || bound.max_r < 0)
        throw DomainError("census bounds must be non-negative");
    if (bound.max_pairs > 0 && bound.max_alpha < 2)
        throw DomainError("max_alpha >= 2 required when max_pairs > 0");

    std::vector<SeifertPair> legal_pairs;
    for (i64 alpha = 2; alpha <= bound.max_alpha; ++alpha)
        for (i64 beta = 1; beta < alpha; ++beta)
            if (std::gcd(alpha, beta) == 1)
                legal_pairs.push_back({alpha, beta});

    std::vector<BaseSurface> surfaces;
    for (i64 g = 0; g <= bound.max_genus; ++g)
        surfaces.push_back({Orientation::Orientable, g});
    for (i64 g = 1; g <= bound.max_genus; ++g)
        surfaces.push_back({Orientation::Nonorientable, g});

    std::vector<CanonicalTuple> result;

    // Every legal tuple inside the bounds is visited exactly once (multisets
    // are generated sorted). A tuple stands for its class when it is the
    // least in-bounds member of its move orbit; the emitted representative
    // is the orbit's global minimum.
    auto consider = [&](const InvariantTuple& t) {
        std::vector<InvariantTuple> orbit = move_closure(t, opts);
        const InvariantTuple* least_in_bounds = nullptr;
        const InvariantTuple* least = nullptr;
        for (const InvariantTuple& u : orbit) {
            if (!least || tuple_less(u, *least))
                least = &u;
            if (within_bounds(u, bound) && (!least_in_bounds || tuple_less(u, *least_in_bounds)))
                least_in_bounds = &u;
        }
        if (*least_in_bounds == t)
            result.push_back({*least});
    };

    std::vector<i64> singular_scratch;
    std::vector<SeifertPair> pair_scratch;
    for (const BaseSurface& surface : surfaces)
        for (i64 f = 0; f <= bound.max_f; ++f)
            for (i64 t = 0; t <= bound.max_t; ++t)
                for (i64 s = 0; s <= bound.max_s; ++s)
                    singular_multisets(s, 2 * bound.max_r, singular_scratch,
                                       [&](const std::vector<i64>& singular) {
        for (i64 n = 0; n <= bound.max_pairs; ++n)
            pair_multisets(legal_pairs, n, 0, pair_scratch,
                           [&](const std::vector<SeifertPair>& pairs) {
                bool closed = f + t + s == 0;
                i64 b_lo = closed ? -bound.max_b_abs : 0;
                i64 b_hi = closed ? bound.max_b_abs : 0;
                for (i64 b = b_lo; b <= b_hi; ++b) {
                    InvariantTuple tuple{b, surface, f, t, pairs, singular};
                    consider(tuple);
                }
            });
    });

    std::sort(result.begin(), result.end(),
              [](const CanonicalTuple& a, const CanonicalTuple& b) {
                  return tuple_less(a.inner, b.inner);
              });
    return result;
}

} // namespace alex3
