#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alex3/errors.hpp"

namespace alex3 {

using i64 = std::int64_t;

/// Seifert invariant (alpha, beta) of one exceptional orbit.
/// Legal pairs satisfy alpha >= 2, 0 < beta < alpha, gcd(alpha, beta) = 1.
struct SeifertPair {
    i64 alpha = 0;
    i64 beta = 0;

    auto operator<=>(const SeifertPair&) const = default;
};

enum class Orientation { Orientable, Nonorientable };

/// Base surface of the orbit space: the symbol eps together with the genus
/// (cross-cap count in the nonorientable case, so genus >= 1 there).
struct BaseSurface {
    Orientation orient = Orientation::Orientable;
    i64 genus = 0;

    bool orientable() const { return orient == Orientation::Orientable; }
    auto operator<=>(const BaseSurface&) const = default;
};

/// The full classification datum
///   (b; (eps, g, f, t); {(alpha_i, beta_i)}; (r_1, ..., r_s)).
///
/// b is the bundle obstruction of the principal part, f counts boundary
/// circles of ordinary fixed points, t counts special-exceptional boundary
/// circles, and the singular multiset lists, per mixed boundary circle, the
/// (even) number of topologically singular points on it.
///
/// Both multisets are kept sorted ascending; parse_tuple and the move
/// operations maintain this. Values are immutable in practice: every
/// operation takes tuples by const reference and returns fresh values.
struct InvariantTuple {
    i64 b = 0;
    BaseSurface surface;
    i64 fixed_circles = 0; // f
    i64 se_circles = 0;    // t
    std::vector<SeifertPair> exceptional;
    std::vector<i64> singular;

    i64 pair_count() const { return static_cast<i64>(exceptional.size()); }
    i64 boundary_class_count() const {
        return fixed_circles + se_circles + static_cast<i64>(singular.size());
    }
    bool operator==(const InvariantTuple&) const = default;
};

/// Re-sorts the multiset fields; returns the same tuple value otherwise.
InvariantTuple normalized(InvariantTuple t);

struct Violation {
    std::string rule;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Parses the ASCII tuple grammar
///   "(" b ";" "(" eps "," g "," f "," t ")" ";" [pairs] ";" [rs] ")"
/// e.g. "(0;(n,1,1,0);[(2,1),(5,2)];[4])". Whitespace-insensitive.
/// Multisets come out sorted. Throws ParseError.
InvariantTuple parse_tuple(const std::string& text);

/// Inverse of parse_tuple; emits multisets in sorted order, no whitespace.
std::string serialize_tuple(const InvariantTuple& t);

/// Checks every legality rule and reports all violations, not just the first:
/// pair ranges and coprimality, genus conventions, evenness of the singular
/// entries, and b = 0 whenever the orbit space has boundary (f + t + s > 0).
ValidationReport validate(const InvariantTuple& t);

bool is_valid(const InvariantTuple& t);

/// Total number 2r of topologically singular points (sum of the multiset).
i64 singular_point_count(const InvariantTuple& t);

/// JSON object form:
/// {"b":..,"eps":"o"|"n","g":..,"f":..,"t":..,"pairs":[[a,b],..],"singular":[..]}
nlohmann::json tuple_to_json(const InvariantTuple& t);
InvariantTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ValidationReport& r);

} // namespace alex3
