#pragma once

#include <optional>
#include <vector>

#include "alex3/invariants.hpp"

namespace alex3 {

/// Knobs for the equivalence relation.
///
/// oriented: treat orientable orbit spaces as oriented, i.e. drop the
/// orientation-reversal move (CLI flag --oriented). Default is the
/// unoriented classification.
///
/// reflect_closed_nonorientable: whether beta-reflection counts as an
/// equivalence on closed nonorientable orbit spaces (f = t = s = 0,
/// eps = n). On by default; the alternative gate (reflection only with
/// boundary) is kept selectable so the two conventions can be compared.
struct EquivalenceOptions {
    bool oriented = false;
    bool reflect_closed_nonorientable = true;
};

/// A tuple that is the minimum of its move-equivalence class under
/// tuple_less. Produced by canonical_form and enumerate_census.
struct CanonicalTuple {
    InvariantTuple inner;

    bool operator==(const CanonicalTuple&) const = default;
};

struct MoveStep {
    std::string move;
    InvariantTuple before;
    InvariantTuple after;
};

/// Witness path between equivalent tuples, for debugging.
struct MoveTrace {
    std::vector<MoveStep> steps;
};

nlohmann::json trace_to_json(const MoveTrace& trace);

/// Orientation reversal of the Seifert data over an orientable base:
///   (b; ...) -> (-b - n; ...) with every pair (a, b) replaced by (a, a-b),
/// n the number of exceptional pairs. An involution. Throws MoveError on
/// nonorientable bases, where the move is the identity class.
InvariantTuple apply_orientation_reversal(const InvariantTuple& t);

/// True when beta-reflection is an allowed move on t: the orbit space has
/// boundary (f + t + s > 0) or is nonorientable.
bool beta_reflection_enabled(const InvariantTuple& t);

/// Replaces the selected pair (a, b) by (a, a-b). An involution per pair.
/// Throws MoveError when not enabled or the index is out of range.
InvariantTuple apply_beta_reflection(const InvariantTuple& t, std::size_t pair_index);

/// Component order used for canonical forms and catalog output:
/// (eps, g, f, t, s, singular, n, pairs, b) compared left to right,
/// with Orientable < Nonorientable.
bool tuple_less(const InvariantTuple& a, const InvariantTuple& b);

/// All tuples one enabled move away from t that are themselves legal.
/// A move whose result violates legality (orientation reversal on a
/// boundary tuple with pairs forces b = -n != 0) is treated as disabled.
std::vector<InvariantTuple> move_neighbors(const InvariantTuple& t,
                                           const EquivalenceOptions& opts = {});

/// Full move orbit of t (breadth-first closure; finite and small). When
/// depth >= 0 the search stops after that many layers.
std::vector<InvariantTuple> move_closure(const InvariantTuple& t,
                                         const EquivalenceOptions& opts = {}, int depth = -1);

/// Minimum of the move orbit of t under tuple_less. Idempotent. Requires a
/// valid tuple.
CanonicalTuple canonical_form(const InvariantTuple& t, const EquivalenceOptions& opts = {});

/// Weak-equivariant-homeomorphism equivalence: equal canonical forms.
bool are_equivalent(const InvariantTuple& a, const InvariantTuple& b,
                    const EquivalenceOptions& opts = {});

/// Independent test oracle: breadth-first closure over the move set from a,
/// limited to `depth` layers; true iff b appears. Orbits here are tiny, so
/// any depth >= the orbit diameter is exact.
bool closure_oracle_equivalent(const InvariantTuple& a, const InvariantTuple& b, int depth,
                               const EquivalenceOptions& opts = {});

/// BFS witness path from a to b (at most max_depth moves), if one exists.
std::optional<MoveTrace> find_move_path(const InvariantTuple& a, const InvariantTuple& b,
                                        int max_depth, const EquivalenceOptions& opts = {});

} // namespace alex3
