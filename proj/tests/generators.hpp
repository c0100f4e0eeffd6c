#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "alex3/homology/simplicial.hpp"
#include "alex3/invariants.hpp"

namespace testgen {

using alex3::i64;

// Legal Seifert pairs with alpha <= max_alpha, ascending.
inline std::vector<alex3::SeifertPair> legal_pairs(i64 max_alpha) {
    std::vector<alex3::SeifertPair> out;
    for (i64 alpha = 2; alpha <= max_alpha; ++alpha)
        for (i64 beta = 1; beta < alpha; ++beta)
            if (std::gcd(alpha, beta) == 1)
                out.push_back({alpha, beta});
    return out;
}

// The bounded family of the acceptance gate: |pairs| <= 2, alpha <= 5,
// |b| <= 3, g <= 1, f,t,s <= 1, r_i <= 4. Valid tuples only.
inline std::vector<alex3::InvariantTuple> bounded_family() {
    std::vector<alex3::BaseSurface> surfaces = {
        {alex3::Orientation::Orientable, 0},
        {alex3::Orientation::Orientable, 1},
        {alex3::Orientation::Nonorientable, 1},
    };

    std::vector<std::vector<alex3::SeifertPair>> pair_sets = {{}};
    std::vector<alex3::SeifertPair> pairs = legal_pairs(5);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pair_sets.push_back({pairs[i]});
        for (std::size_t j = i; j < pairs.size(); ++j)
            pair_sets.push_back({pairs[i], pairs[j]});
    }

    std::vector<std::vector<i64>> singular_sets = {{}, {2}, {4}};

    std::vector<alex3::InvariantTuple> family;
    for (const alex3::BaseSurface& surface : surfaces)
        for (i64 f = 0; f <= 1; ++f)
            for (i64 t = 0; t <= 1; ++t)
                for (const std::vector<i64>& singular : singular_sets)
                    for (const std::vector<alex3::SeifertPair>& ps : pair_sets) {
                        bool closed = f == 0 && t == 0 && singular.empty();
                        i64 b_lo = closed ? -3 : 0;
                        i64 b_hi = closed ? 3 : 0;
                        for (i64 b = b_lo; b <= b_hi; ++b)
                            family.push_back({b, surface, f, t, ps, singular});
                    }
    return family;
}

// Valid tuples from a fixed-seed engine.
class TupleGen {
public:
    explicit TupleGen(std::uint32_t seed) : rng_(seed) {}

    alex3::InvariantTuple next() {
        alex3::InvariantTuple t;
        if (pick(0, 3) == 0) {
            t.surface.orient = alex3::Orientation::Nonorientable;
            t.surface.genus = pick(1, 3);
        } else {
            t.surface.orient = alex3::Orientation::Orientable;
            t.surface.genus = pick(0, 3);
        }
        t.fixed_circles = pick(0, 2);
        t.se_circles = pick(0, 2);
        i64 s = pick(0, 2);
        for (i64 i = 0; i < s; ++i)
            t.singular.push_back(2 * pick(1, 4));
        std::sort(t.singular.begin(), t.singular.end());

        static const std::vector<alex3::SeifertPair> pool = legal_pairs(7);
        i64 n = pick(0, 3);
        for (i64 i = 0; i < n; ++i)
            t.exceptional.push_back(pool[static_cast<std::size_t>(pick(0, static_cast<i64>(pool.size()) - 1))]);
        std::sort(t.exceptional.begin(), t.exceptional.end());

        t.b = t.boundary_class_count() == 0 ? pick(-5, 5) : 0;
        return t;
    }

private:
    i64 pick(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng_); }

    std::mt19937 rng_;
};

// Classical recurrence p(n, k) = p(n-1, k-1) + p(n-k, k): partitions of n
// into exactly k positive parts.
inline i64 partitions_into_parts(i64 n, i64 k) {
    if (k == 0)
        return n == 0 ? 1 : 0;
    if (n < k)
        return 0;
    return partitions_into_parts(n - 1, k - 1) + partitions_into_parts(n - k, k);
}

inline alex3::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 8,
                                          int magnitude = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-magnitude, magnitude);
    alex3::IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = entry(rng);
    return m;
}

// Pure complex of dimension <= 2: a random nonempty set of (d+1)-subsets of a
// small vertex pool.
inline alex3::SimplicialComplex random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim_dist(0, 2);
    int d = dim_dist(rng);
    std::uniform_int_distribution<int> pool_dist(d + 1, d + 5);
    int pool = pool_dist(rng);

    std::vector<std::vector<int>> candidates;
    for (int a = 0; a < pool; ++a) {
        if (d == 0) {
            candidates.push_back({a});
            continue;
        }
        for (int b = a + 1; b < pool; ++b) {
            if (d == 1) {
                candidates.push_back({a, b});
                continue;
            }
            for (int c = b + 1; c < pool; ++c)
                candidates.push_back({a, b, c});
        }
    }

    std::bernoulli_distribution keep(0.5);
    alex3::SimplicialComplex k;
    k.dimension = d;
    for (const std::vector<int>& f : candidates)
        if (keep(rng))
            k.facets.push_back(f);
    if (k.facets.empty())
        k.facets.push_back(candidates.front());
    return k;
}

} // namespace testgen
