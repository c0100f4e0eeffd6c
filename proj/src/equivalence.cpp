#include "alex3/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace alex3 {

nlohmann::json trace_to_json(const MoveTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const MoveStep& s : trace.steps)
        steps.push_back({{"move", s.move},
                         {"before", serialize_tuple(s.before)},
                         {"after", serialize_tuple(s.after)}});
    return {{"steps", steps}};
}

namespace {

InvariantTuple reversal_raw(const InvariantTuple& t) {
    InvariantTuple out = t;
    out.b = -t.b - t.pair_count();
    for (SeifertPair& p : out.exceptional)
        p.beta = p.alpha - p.beta;
    return normalized(std::move(out));
}

InvariantTuple reflection_raw(const InvariantTuple& t, std::size_t i) {
    InvariantTuple out = t;
    out.exceptional[i].beta = out.exceptional[i].alpha - out.exceptional[i].beta;
    return normalized(std::move(out));
}

void require_valid(const InvariantTuple& t, const char* op) {
    if (!is_valid(t))
        throw DomainError(std::string(op) + ": tuple is not legal: " + serialize_tuple(t));
}

} // namespace

InvariantTuple apply_orientation_reversal(const InvariantTuple& t) {
    if (!t.surface.orientable())
        throw MoveError("orientation reversal requires an orientable orbit space");
    return reversal_raw(t);
}

bool beta_reflection_enabled(const InvariantTuple& t) {
    return t.boundary_class_count() > 0 || !t.surface.orientable();
}

InvariantTuple apply_beta_reflection(const InvariantTuple& t, std::size_t pair_index) {
    if (!beta_reflection_enabled(t))
        throw MoveError("beta reflection requires boundary (f+t+s > 0) or a nonorientable base");
    if (pair_index >= t.exceptional.size())
        throw MoveError("pair index out of range");
    return reflection_raw(t, pair_index);
}

bool tuple_less(const InvariantTuple& a, const InvariantTuple& b) {
    auto key = [](const InvariantTuple& t) {
        return std::make_tuple(t.surface.orient, t.surface.genus, t.fixed_circles,
                               t.se_circles, static_cast<i64>(t.singular.size()), t.singular,
                               t.pair_count(), t.exceptional, t.b);
    };
    return key(a) < key(b);
}

std::vector<InvariantTuple> move_neighbors(const InvariantTuple& t,
                                           const EquivalenceOptions& opts) {
    std::vector<InvariantTuple> out;
    if (t.surface.orientable() && !opts.oriented) {
        InvariantTuple u = reversal_raw(t);
        if (is_valid(u))
            out.push_back(std::move(u));
    }
    bool reflect = t.boundary_class_count() > 0 ||
                   (!t.surface.orientable() && opts.reflect_closed_nonorientable);
    if (reflect)
        for (std::size_t i = 0; i < t.exceptional.size(); ++i)
            out.push_back(reflection_raw(t, i));
    return out;
}

// Orbits are tiny (at most 2^n reflections times the reversal), so plain
// BFS with serialized keys is exact and cheap.
std::vector<InvariantTuple> move_closure(const InvariantTuple& t, const EquivalenceOptions& opts,
                                         int depth) {
    std::vector<InvariantTuple> orbit{t};
    std::set<std::string> seen{serialize_tuple(t)};
    std::deque<std::pair<InvariantTuple, int>> queue{{t, 0}};
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (depth >= 0 && d == depth)
            continue;
        for (InvariantTuple& next : move_neighbors(cur, opts)) {
            if (seen.insert(serialize_tuple(next)).second) {
                orbit.push_back(next);
                queue.emplace_back(std::move(next), d + 1);
            }
        }
    }
    return orbit;
}

CanonicalTuple canonical_form(const InvariantTuple& t, const EquivalenceOptions& opts) {
    require_valid(t, "canonical_form");
    std::vector<InvariantTuple> orbit = move_closure(t, opts);
    return {*std::min_element(orbit.begin(), orbit.end(), tuple_less)};
}

bool are_equivalent(const InvariantTuple& a, const InvariantTuple& b,
                    const EquivalenceOptions& opts) {
    return canonical_form(a, opts) == canonical_form(b, opts);
}

bool closure_oracle_equivalent(const InvariantTuple& a, const InvariantTuple& b, int depth,
                               const EquivalenceOptions& opts) {
    require_valid(a, "closure_oracle_equivalent");
    require_valid(b, "closure_oracle_equivalent");
    std::string target = serialize_tuple(b);
    for (const InvariantTuple& u : move_closure(a, opts, depth))
        if (serialize_tuple(u) == target)
            return true;
    return false;
}

std::optional<MoveTrace> find_move_path(const InvariantTuple& a, const InvariantTuple& b,
                                        int max_depth, const EquivalenceOptions& opts) {
    require_valid(a, "find_move_path");
    require_valid(b, "find_move_path");

    std::string target = serialize_tuple(b);
    // parent[key] = (previous key, move name, tuple)
    std::map<std::string, std::tuple<std::string, std::string, InvariantTuple>> parent;
    std::string start = serialize_tuple(a);
    parent[start] = {"", "", a};
    std::deque<std::pair<InvariantTuple, int>> queue{{a, 0}};

    auto emit = [&](const std::string& key) {
        std::vector<MoveStep> steps;
        std::string cur = key;
        while (std::get<0>(parent[cur]) != "") {
            auto& [prev, move, tuple] = parent[cur];
            steps.push_back({move, std::get<2>(parent[prev]), tuple});
            cur = prev;
        }
        std::reverse(steps.begin(), steps.end());
        return MoveTrace{std::move(steps)};
    };

    if (start == target)
        return emit(start);

    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d == max_depth)
            continue;

        auto visit = [&](InvariantTuple next, const std::string& name) -> bool {
            std::string key = serialize_tuple(next);
            if (parent.count(key))
                return false;
            parent[key] = {serialize_tuple(cur), name, next};
            if (key == target)
                return true;
            queue.emplace_back(std::move(next), d + 1);
            return false;
        };

        if (cur.surface.orientable() && !opts.oriented) {
            InvariantTuple u = reversal_raw(cur);
            if (is_valid(u) && visit(std::move(u), "orientation_reversal"))
                return emit(target);
        }
        bool reflect = cur.boundary_class_count() > 0 ||
                       (!cur.surface.orientable() && opts.reflect_closed_nonorientable);
        if (reflect)
            for (std::size_t i = 0; i < cur.exceptional.size(); ++i)
                if (visit(reflection_raw(cur, i), "beta_reflection[" + std::to_string(i) + "]"))
                    return emit(target);
    }
    return std::nullopt;
}

} // namespace alex3
