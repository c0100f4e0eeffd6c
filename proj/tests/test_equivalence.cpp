#include <doctest.h>

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "alex3/equivalence.hpp"
#include "generators.hpp"

using namespace alex3;

TEST_CASE("orientation reversal: arithmetic and involution") {
    InvariantTuple t = parse_tuple("(1;(o,0,0,0);[(3,1)];[])");
    InvariantTuple rev = apply_orientation_reversal(t);
    CHECK(serialize_tuple(rev) == "(-2;(o,0,0,0);[(3,2)];[])");
    CHECK(apply_orientation_reversal(rev) == t);

    InvariantTuple fixed = parse_tuple("(0;(o,0,0,0);[];[2,2])");
    CHECK(apply_orientation_reversal(fixed) == fixed);

    for (const InvariantTuple& u : testgen::bounded_family()) {
        if (!u.surface.orientable())
            continue;
        CHECK(apply_orientation_reversal(apply_orientation_reversal(u)) == u);
    }
}

TEST_CASE("orientation reversal: rejected on nonorientable bases") {
    CHECK_THROWS_AS(apply_orientation_reversal(parse_tuple("(0;(n,1,0,0);[];[])")), MoveError);
}

TEST_CASE("beta reflection: gate condition") {
    CHECK(beta_reflection_enabled(parse_tuple("(0;(o,0,1,0);[(5,2)];[])")));
    CHECK(beta_reflection_enabled(parse_tuple("(0;(o,0,0,1);[(3,1)];[])")));
    CHECK(beta_reflection_enabled(parse_tuple("(0;(o,0,0,0);[(3,1)];[2])")));
    CHECK(beta_reflection_enabled(parse_tuple("(0;(n,1,0,0);[(3,1)];[])")));
    CHECK(!beta_reflection_enabled(parse_tuple("(1;(o,0,0,0);[(3,1)];[])")));
}

TEST_CASE("beta reflection: arithmetic") {
    InvariantTuple t = parse_tuple("(0;(o,0,1,0);[(5,2)];[])");
    CHECK(serialize_tuple(apply_beta_reflection(t, 0)) == "(0;(o,0,1,0);[(5,3)];[])");

    InvariantTuple n = parse_tuple("(0;(n,1,0,0);[(3,1)];[])");
    CHECK(serialize_tuple(apply_beta_reflection(n, 0)) == "(0;(n,1,0,0);[(3,2)];[])");

    CHECK_THROWS_AS(apply_beta_reflection(parse_tuple("(1;(o,0,0,0);[(3,1)];[])"), 0), MoveError);
    CHECK_THROWS_AS(apply_beta_reflection(t, 5), MoveError);

    CHECK(apply_beta_reflection(apply_beta_reflection(t, 0), 0) == t);
}

TEST_CASE("canonical form: derived examples") {
    CHECK(serialize_tuple(canonical_form(parse_tuple("(-2;(o,0,0,0);[(3,2)];[])")).inner) ==
          "(1;(o,0,0,0);[(3,1)];[])");
    CHECK(serialize_tuple(canonical_form(parse_tuple("(0;(o,0,1,0);[(5,3)];[])")).inner) ==
          "(0;(o,0,1,0);[(5,2)];[])");
}

TEST_CASE("canonical form: idempotent over the bounded family") {
    for (const InvariantTuple& t : testgen::bounded_family()) {
        CanonicalTuple c = canonical_form(t);
        CHECK(canonical_form(c.inner) == c);
        CHECK(is_valid(c.inner));
    }
}

TEST_CASE("are_equivalent: worked examples") {
    InvariantTuple a = parse_tuple("(0;(o,1,0,0);[(3,1),(5,2)];[])");
    InvariantTuple b = parse_tuple("(0;(o,1,0,0);[(5,2),(3,1)];[])");
    CHECK(are_equivalent(a, a));
    CHECK(are_equivalent(a, b));

    CHECK(!are_equivalent(parse_tuple("(0;(o,0,0,0);[];[2,2])"), parse_tuple("(0;(o,0,0,0);[];[4])")));
}

TEST_CASE("are_equivalent: matches the closure oracle on samples") {
    testgen::TupleGen gen(2024);
    for (int i = 0; i < 200; ++i) {
        InvariantTuple a = gen.next();
        InvariantTuple b = gen.next();
        CHECK(are_equivalent(a, b) == closure_oracle_equivalent(a, b, 8));
        CHECK(closure_oracle_equivalent(a, a, 0));
    }
}

TEST_CASE("closure oracle: one-move and involution reachability") {
    InvariantTuple a = parse_tuple("(1;(o,0,0,0);[(3,1)];[])");
    CHECK(closure_oracle_equivalent(a, apply_orientation_reversal(a), 1));

    InvariantTuple t = parse_tuple("(0;(o,0,1,0);[(5,2)];[])");
    CHECK(closure_oracle_equivalent(t, apply_beta_reflection(apply_beta_reflection(t, 0), 0), 2));
}

TEST_CASE("move closure: contains t, closed under moves, depth 0 is {t}") {
    testgen::TupleGen gen(7);
    for (int i = 0; i < 50; ++i) {
        InvariantTuple t = gen.next();

        std::vector<InvariantTuple> zero = move_closure(t, {}, 0);
        REQUIRE(zero.size() == 1);
        CHECK(zero[0] == t);

        std::vector<InvariantTuple> orbit = move_closure(t);
        std::set<std::string> seen;
        for (const InvariantTuple& u : orbit)
            seen.insert(serialize_tuple(u));
        CHECK(seen.count(serialize_tuple(t)) == 1);
        for (const InvariantTuple& u : orbit)
            for (const InvariantTuple& w : move_neighbors(u))
                CHECK(seen.count(serialize_tuple(w)) == 1);
    }
}

TEST_CASE("equivalence relation properties on random triples") {
    testgen::TupleGen gen(99);
    for (int i = 0; i < 100; ++i) {
        InvariantTuple a = gen.next();
        InvariantTuple b = gen.next();
        InvariantTuple c = gen.next();
        CHECK(are_equivalent(a, a));
        CHECK(are_equivalent(a, b) == are_equivalent(b, a));
        if (are_equivalent(a, b) && are_equivalent(b, c))
            CHECK(are_equivalent(a, c));
    }
}

TEST_CASE("canonical form preserves the class invariants") {
    for (const InvariantTuple& t : testgen::bounded_family()) {
        InvariantTuple c = canonical_form(t).inner;
        CHECK(c.singular == t.singular);
        CHECK(c.surface == t.surface);
        CHECK(c.fixed_circles == t.fixed_circles);
        CHECK(c.se_circles == t.se_circles);

        std::multiset<i64> alphas_before;
        std::multiset<i64> alphas_after;
        for (const SeifertPair& p : t.exceptional)
            alphas_before.insert(p.alpha);
        for (const SeifertPair& p : c.exceptional)
            alphas_after.insert(p.alpha);
        CHECK(alphas_before == alphas_after);
    }
}

TEST_CASE("orientation reversal negates the Euler number") {
    // e(t) = -(b + sum beta_i/alpha_i), exact rational arithmetic
    auto euler = [](const InvariantTuple& t) {
        mpq_class e(t.b);
        for (const SeifertPair& p : t.exceptional)
            e += mpq_class(p.beta, p.alpha);
        return mpq_class(-e);
    };

    for (const InvariantTuple& t : testgen::bounded_family()) {
        if (!t.surface.orientable() || t.boundary_class_count() > 0)
            continue;
        mpq_class lhs = euler(apply_orientation_reversal(t));
        mpq_class rhs = -euler(t);
        lhs.canonicalize();
        rhs.canonicalize();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("oriented mode drops the reversal move") {
    EquivalenceOptions oriented;
    oriented.oriented = true;

    InvariantTuple a = parse_tuple("(1;(o,0,0,0);[];[])");
    InvariantTuple b = parse_tuple("(-1;(o,0,0,0);[];[])");
    CHECK(are_equivalent(a, b));
    CHECK(!are_equivalent(a, b, oriented));
    CHECK(canonical_form(a, oriented).inner == a);
}

TEST_CASE("closed nonorientable reflection gate: both choices, discrepancies reported") {
    EquivalenceOptions with_gate;
    EquivalenceOptions without_gate;
    without_gate.reflect_closed_nonorientable = false;

    InvariantTuple a = parse_tuple("(1;(n,1,0,0);[(3,1)];[])");
    InvariantTuple b = parse_tuple("(1;(n,1,0,0);[(3,2)];[])");
    CHECK(are_equivalent(a, b, with_gate));
    CHECK(!are_equivalent(a, b, without_gate));

    // closed nonorientable slice of the bounded family: count class merges
    int merged = 0;
    int compared = 0;
    std::vector<InvariantTuple> slice;
    for (const InvariantTuple& t : testgen::bounded_family())
        if (!t.surface.orientable() && t.boundary_class_count() == 0)
            slice.push_back(t);
    for (std::size_t i = 0; i < slice.size(); ++i)
        for (std::size_t j = i + 1; j < slice.size(); ++j) {
            bool eq_with = are_equivalent(slice[i], slice[j], with_gate);
            bool eq_without = are_equivalent(slice[i], slice[j], without_gate);
            ++compared;
            if (eq_with != eq_without) {
                ++merged;
                CHECK(eq_with); // the gate only ever merges classes
            }
        }
    CHECK(compared > 0);
    CHECK(merged > 0);
    MESSAGE("closed nonorientable slice: ", slice.size(), " tuples, ", merged, " of ", compared,
            " pairs decided differently by the reflection gate");

    // outside that slice the gate is irrelevant
    testgen::TupleGen gen(5);
    for (int i = 0; i < 100; ++i) {
        InvariantTuple t = gen.next();
        InvariantTuple u = gen.next();
        if ((!t.surface.orientable() && t.boundary_class_count() == 0) ||
            (!u.surface.orientable() && u.boundary_class_count() == 0))
            continue;
        CHECK(are_equivalent(t, u, with_gate) == are_equivalent(t, u, without_gate));
    }
}

TEST_CASE("find_move_path: witness traces") {
    InvariantTuple a = parse_tuple("(-2;(o,0,0,0);[(3,2)];[])");
    InvariantTuple b = parse_tuple("(1;(o,0,0,0);[(3,1)];[])");

    std::optional<MoveTrace> trace = find_move_path(a, b, 4);
    REQUIRE(trace.has_value());
    REQUIRE(trace->steps.size() == 1);
    CHECK(trace->steps[0].move == "orientation_reversal");
    CHECK(trace->steps[0].before == a);
    CHECK(trace->steps[0].after == b);

    CHECK(!find_move_path(parse_tuple("(0;(o,0,0,0);[];[2,2])"), parse_tuple("(0;(o,0,0,0);[];[4])"), 8)
               .has_value());

    std::optional<MoveTrace> self = find_move_path(a, a, 0);
    REQUIRE(self.has_value());
    CHECK(self->steps.empty());

    nlohmann::json j = trace_to_json(*trace);
    CHECK(j["steps"].size() == 1);
    CHECK(j["steps"][0]["move"] == "orientation_reversal");
}

TEST_CASE("move validity: neighbors of valid tuples are valid") {
    for (const InvariantTuple& t : testgen::bounded_family())
        for (const InvariantTuple& u : move_neighbors(t))
            CHECK(is_valid(u));
}
