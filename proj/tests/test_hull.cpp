#include <doctest.h>

#include <random>

#include "crwp/error.hpp"
#include "crwp/hull.hpp"
#include "support.hpp"

using namespace crwp;

namespace {

/// The 2x2 component over C2 with rows (e, e) and (e, a).
ReesComponent square() {
    auto g = testing::c2();
    const GroupElement e = g->identity(), a = g->elements()[1];
    return ReesComponent("B", g, 2, 2, {{e, e}, {e, a}});
}

/// x (t y) == (x t) y over all element pairs, using the two actions directly.
bool linked_by_action(const ReesComponent& c, const Bitranslation& t) {
    const auto elems = c.elements();
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (c.multiply(x, hull_left(c, t, y)) != c.multiply(hull_right(c, x, t), y)) return false;
    return true;
}

}  // namespace

TEST_CASE("linked triples match the defining identity") {
    const ReesComponent c = square();
    std::size_t linked = 0;
    for (const auto& t : testing::all_triples(c)) {
        const bool expect = linked_by_action(c, t);
        REQUIRE(is_linked(c, t) == expect);
        linked += expect;
    }
    CHECK(linked == linked_triples(c).size());
    CHECK(linked == 16);
}

TEST_CASE("translations are a left and right translation") {
    const ReesComponent c = square();
    const auto elems = c.elements();
    for (const auto& t : linked_triples(c))
        for (const auto& x : elems)
            for (const auto& y : elems) {
                REQUIRE(hull_left(c, t, c.multiply(x, y)) == c.multiply(hull_left(c, t, x), y));
                REQUIRE(hull_right(c, c.multiply(x, y), t) == c.multiply(x, hull_right(c, y, t)));
            }
}

TEST_CASE("inner bitranslations and pull back") {
    const ReesComponent c = square();
    const auto elems = c.elements();
    for (const auto& x : elems) {
        const Bitranslation t = inner_bitranslation(c, x);
        CHECK(is_linked(c, t));
        CHECK(is_inner(c, t));
        CHECK(pull_back(c, t) == x);
        for (const auto& y : elems) {
            CHECK(hull_left(c, t, y) == c.multiply(x, y));
            CHECK(hull_right(c, y, t) == c.multiply(y, x));
        }
        for (const auto& y : elems)
            CHECK(hull_multiply(c, inner_bitranslation(c, x), inner_bitranslation(c, y)) ==
                  inner_bitranslation(c, c.multiply(x, y)));
    }
    CHECK_FALSE(is_inner(c, hull_identity(c)));
    CHECK_THROWS_AS(pull_back(c, hull_identity(c)), NotInner);
    CHECK(format_bitranslation(c, inner_bitranslation(c, {1, c.group().identity(), 1})) == "[2 2 | e; a | 2 2]");
}

TEST_CASE("hull product composes the actions") {
    const ReesComponent c = square();
    const auto elems = c.elements();
    const auto triples = linked_triples(c);
    for (const auto& s : triples)
        for (const auto& t : triples) {
            const Bitranslation st = hull_multiply(c, s, t);
            REQUIRE(is_linked(c, st));
            for (const auto& y : elems) {
                REQUIRE(hull_left(c, st, y) == hull_left(c, s, hull_left(c, t, y)));
                REQUIRE(hull_right(c, y, st) == hull_right(c, hull_right(c, y, s), t));
            }
            const Bitranslation& id = hull_identity(c);
            CHECK(hull_multiply(c, s, id) == s);
            CHECK(hull_multiply(c, id, s) == s);
        }
    std::mt19937 rng(31);
    for (int k = 0; k < 500; ++k) {
        const auto& a = triples[rng() % triples.size()];
        const auto& b = triples[rng() % triples.size()];
        const auto& d = triples[rng() % triples.size()];
        REQUIRE(hull_multiply(c, hull_multiply(c, a, b), d) == hull_multiply(c, a, hull_multiply(c, b, d)));
    }
}

TEST_CASE("hull product rejects unlinked operands") {
    const ReesComponent c = square();
    Bitranslation bad = hull_identity(c);
    bad.h[1] = c.group().elements()[1];
    REQUIRE_FALSE(is_linked(c, bad));
    CHECK_THROWS_AS(hull_multiply(c, bad, hull_identity(c)), InvalidInput);
    CHECK_THROWS_AS(hull_multiply(c, hull_identity(c), bad), InvalidInput);
}

TEST_CASE("transform follows a coordinate change") {
    auto g = testing::s3();
    const auto elems = g->elements();
    std::mt19937 rng(32);
    for (int round = 0; round < 10; ++round) {
        SandwichMatrix p(2, std::vector<GroupElement>(2));
        for (auto& row : p)
            for (auto& x : row) x = elems[rng() % elems.size()];
        const ReesComponent c("R", g, 2, 2, p);
        CoordinateChange phi;
        const ReesComponent n = c.normalized(&phi);
        const auto cel = c.elements();
        for (int k = 0; k < 5; ++k) {
            const Bitranslation t = inner_bitranslation(c, cel[rng() % cel.size()]);
            const Bitranslation u = transform(c, t, phi);
            REQUIRE(is_linked(n, u));
            for (const auto& y : cel) {
                REQUIRE(hull_left(n, u, phi.apply(*g, y)) == phi.apply(*g, hull_left(c, t, y)));
                REQUIRE(hull_right(n, phi.apply(*g, y), u) == phi.apply(*g, hull_right(c, y, t)));
            }
        }
    }
}
