#pragma once

#include <optional>
#include <string>

#include "alex3/homology/simplicial.hpp"

namespace alex3 {

// The 6-vertex, 10-triangle projective plane (antipodal quotient of the
// icosahedron boundary).
SimplicialComplex rp2_minimal();

// Boundary of the 4-simplex.
SimplicialComplex s3_model();

// Staircase product triangulation of (boundary of a tetrahedron) x (3-cycle).
SimplicialComplex s2xs1_model();

// r-fold connected sum of suspensions of rp2_minimal().
SimplicialComplex realize_suspension_sum(int r);

// Curated model expressions: rp2, sus_rp2, sus_rp2^k, s3, s2xs1.
std::optional<SimplicialComplex> model_by_name(const std::string& expr);

} // namespace alex3
