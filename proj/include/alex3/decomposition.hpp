#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "alex3/equivalence.hpp"
#include "alex3/invariants.hpp"

namespace alex3 {

struct Decomposition {
    InvariantTuple manifold_tuple; // singular multiset always empty
    i64 suspension_count = 0;
    bool operator==(const Decomposition&) const = default;
};

// Split off the suspension summands: the manifold part keeps b, the pairs and
// t, absorbs the mixed circles into f, and r = (sum of the r_i) / 2.
Decomposition decompose(const InvariantTuple& t);

// True iff the singular multiset is nonempty; false is not a claim of
// asphericity, only the absence of this obstruction.
bool asphericity_obstructed(const InvariantTuple& t);

enum class NameSource { PaperExample, CuratedTable };

struct SpaceName {
    std::string name;
    NameSource source;
};

// Curated manifold labels, matched up to equivalence of the manifold tuple.
std::optional<SpaceName> name_lookup(const Decomposition& d, const EquivalenceOptions& opts = {});

nlohmann::json decomposition_to_json(const Decomposition& d, const EquivalenceOptions& opts = {});

} // namespace alex3
