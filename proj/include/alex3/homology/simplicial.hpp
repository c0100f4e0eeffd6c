#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alex3/homology/matrix.hpp"

namespace alex3 {

// A pure complex given by its top faces. Vertices are arbitrary non-negative
// ints; every facet is strictly increasing and has dimension+1 entries.
struct SimplicialComplex {
    int dimension = 0;
    std::vector<std::vector<int>> facets;
};

void validate_complex(const SimplicialComplex& k);

std::vector<int> vertices_of(const SimplicialComplex& k);

// All dim-faces, each ascending, the list lexicographically sorted.
std::vector<std::vector<int>> faces(const SimplicialComplex& k, int dim);

std::int64_t euler_characteristic(const SimplicialComplex& k);

struct ChainComplex {
    // cells[d] = lex-sorted d-faces, d = 0..dimension
    std::vector<std::vector<std::vector<int>>> cells;
    // boundary[d]: C_d -> C_{d-1} for d >= 1; boundary[0] is the empty map
    std::vector<IntegerMatrix> boundary;
};

// Boundary convention: d[v0..vn] = sum_i (-1)^i [v0..^vi..vn] on ascending
// tuples.
ChainComplex chain_complex(const SimplicialComplex& k);

bool boundary_squares_to_zero(const ChainComplex& c);

struct AbelianGroupDecomp {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion; // invariant factors >= 2, each divides the next
    bool operator==(const AbelianGroupDecomp&) const = default;
};

std::string group_to_string(const AbelianGroupDecomp& g);

// H_0..H_dim: rank = dim ker d_n - rank d_{n+1}, torsion from SNF of d_{n+1}.
std::vector<AbelianGroupDecomp> homology_groups(const ChainComplex& c);

std::vector<AbelianGroupDecomp> homology(const SimplicialComplex& k);

// Join with two fresh apex vertices (max+1 and max+2).
SimplicialComplex suspend(const SimplicialComplex& k);

// {sigma minus v : v in sigma}; pure of one dimension lower.
SimplicialComplex vertex_link(const SimplicialComplex& k, int v);

// Facet gluing for pure 3-complexes: drop one facet whose vertices all have
// 2-sphere links from each summand, relabel the second summand disjointly and
// identify the dropped facets' vertices in ascending order. When refine is
// set, summands without such a facet are stellarly subdivided (topology
// preserved) until one appears; otherwise NoRegularFacetError.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b,
                                bool refine = true);

// Vertices whose link has RP^2 homology (Z, Z/2, 0). Links with S^2 homology
// (Z, 0, Z) are regular; anything else is MalformedLinkError.
std::int64_t singular_vertex_count(const SimplicialComplex& k);

} // namespace alex3
