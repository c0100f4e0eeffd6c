#include "alex3/decomposition.hpp"

#include <array>

#include "alex3/errors.hpp"

namespace alex3 {

namespace {

void require_valid(const InvariantTuple& t, const char* where) {
    ValidationReport report = validate(t);
    if (!report.ok)
        throw DomainError(std::string(where) + ": " + report.violations.front().message);
}

} // namespace

Decomposition decompose(const InvariantTuple& t) {
    require_valid(t, "decompose");
    Decomposition d;
    d.manifold_tuple = t;
    d.manifold_tuple.fixed_circles += static_cast<i64>(t.singular.size());
    d.manifold_tuple.singular.clear();
    d.suspension_count = singular_point_count(t) / 2;
    return d;
}

bool asphericity_obstructed(const InvariantTuple& t) {
    require_valid(t, "asphericity_obstructed");
    return !t.singular.empty();
}

namespace {

struct CuratedEntry {
    const char* tuple;
    const char* name;
    NameSource source;
};

// Cross-checked against the homology engine: s3_model() and s2xs1_model()
// realize the two labels.
constexpr std::array<CuratedEntry, 4> kCurated = {{
    {"(0;(o,0,2,0);[];[])", "S^2 × S^1", NameSource::PaperExample},
    {"(0;(o,0,0,0);[];[])", "S^2 × S^1", NameSource::CuratedTable},
    {"(0;(o,0,1,0);[];[])", "S^3", NameSource::CuratedTable},
    {"(1;(o,0,0,0);[];[])", "S^3", NameSource::CuratedTable},
}};

} // namespace

std::optional<SpaceName> name_lookup(const Decomposition& d, const EquivalenceOptions& opts) {
    CanonicalTuple key = canonical_form(d.manifold_tuple, opts);
    for (const CuratedEntry& entry : kCurated) {
        if (canonical_form(parse_tuple(entry.tuple), opts) != key)
            continue;
        std::string label = entry.name;
        if (d.suspension_count > 0)
            label += " # " + std::to_string(d.suspension_count) + "·Susp(RP^2)";
        return SpaceName{label, entry.source};
    }
    return std::nullopt;
}

nlohmann::json decomposition_to_json(const Decomposition& d, const EquivalenceOptions& opts) {
    nlohmann::json out;
    out["manifold"] = tuple_to_json(d.manifold_tuple);
    out["r"] = d.suspension_count;
    std::optional<SpaceName> name = name_lookup(d, opts);
    out["name"] = name ? nlohmann::json(name->name) : nlohmann::json(nullptr);
    return out;
}

} // namespace alex3
