#include <doctest.h>

#include <random>

#include "crwp/automata/runner.hpp"
#include "crwp/error.hpp"
#include "crwp/rees.hpp"
#include "support.hpp"

using namespace crwp;

namespace {

GroupElement el(const GroupOracle& g, std::size_t k) { return g.elements().at(k); }

/// 2x2 component over C2 with the non-normalized matrix [[a, e], [e, a]].
ReesComponent skew_c2() {
    auto g = testing::c2();
    const GroupElement e = g->identity(), a = el(*g, 1);
    return ReesComponent("B", g, 2, 2, {{a, e}, {e, a}});
}

ReesComponent random_component(std::mt19937& rng, std::shared_ptr<const GroupOracle> g) {
    const auto elems = g->elements();
    const std::size_t ni = 1 + rng() % 3, nl = 1 + rng() % 3;
    SandwichMatrix p(nl, std::vector<GroupElement>(ni));
    for (auto& row : p)
        for (auto& x : row) x = elems[rng() % elems.size()];
    return ReesComponent("R", g, ni, nl, p);
}

ReesElement random_element(std::mt19937& rng, const ReesComponent& c) {
    const auto elems = c.elements();
    return elems[rng() % elems.size()];
}

/// Checks u # rev(v) acceptance against direct evaluation for every split word.
void check_component_wp(const ReesComponent& c, std::size_t max_len) {
    const Pda m = component_wp_recognizer(c);
    const Alphabet& sigma = m.alphabet();
    const Symbol hash = sigma.at("#");
    testing::for_each_word(sigma.size(), 0, max_len, [&](const Word& w) {
        const auto split = std::find(w.begin(), w.end(), hash);
        bool expect = false;
        if (split != w.end() && std::count(w.begin(), w.end(), hash) == 1) {
            std::vector<std::size_t> u, v;
            for (auto it = w.begin(); it != split; ++it) u.push_back(*c.find_generator(sigma.name(*it)));
            for (auto it = w.rbegin(); *it != hash; ++it) v.push_back(*c.find_generator(sigma.name(*it)));
            expect = !u.empty() && !v.empty() && c.evaluate(u) == c.evaluate(v);
        }
        REQUIRE_MESSAGE(pda_membership(m, w) == expect, testing::show(sigma, w));
    });
}

}  // namespace

TEST_CASE("rees multiplication") {
    const ReesComponent c = skew_c2();
    const GroupOracle& g = c.group();
    const GroupElement e = g.identity(), a = el(g, 1);
    // (1,e,1)(1,e,1) = (1, p[1][1], 1) = (1,a,1)
    CHECK(c.multiply({0, e, 0}, {0, e, 0}) == ReesElement{0, a, 0});
    // (1,e,2)(1,e,1) = (1, p[2][1], 1) = (1,e,1)
    CHECK(c.multiply({0, e, 1}, {0, e, 0}) == ReesElement{0, e, 0});
    // (2,a,2)(2,a,1) = (2, a a a, 1) = (2,a,1)
    CHECK(c.multiply({1, a, 1}, {1, a, 0}) == ReesElement{1, a, 0});
    CHECK_THROWS_AS(c.check({2, e, 0}), MixedOperands);
}

TEST_CASE("rees multiplication is associative") {
    std::mt19937 rng(21);
    for (int round = 0; round < 30; ++round) {
        const ReesComponent c = random_component(rng, testing::s3());
        for (int k = 0; k < 50; ++k) {
            const ReesElement x = random_element(rng, c), y = random_element(rng, c), z = random_element(rng, c);
            REQUIRE(c.multiply(c.multiply(x, y), z) == c.multiply(x, c.multiply(y, z)));
        }
    }
}

TEST_CASE("normalization example") {
    const ReesComponent c = skew_c2();
    const GroupOracle& g = c.group();
    const GroupElement e = g.identity(), a = el(g, 1);
    CHECK_FALSE(c.is_normalized());
    const Normalization n = normalize_matrix(g, c.matrix());
    // P'[2][2] = P[2][1]^-1 P[2][2] P[1][2]^-1 P[1][1] = e a e a = e
    // (the matrix is equivalent to all-identity)
    CHECK(n.matrix == SandwichMatrix{{e, e}, {e, e}});
    CHECK(n.change.right == std::vector<GroupElement>{a, e});
}

TEST_CASE("normalization is an isomorphism onto the normalized component") {
    std::mt19937 rng(22);
    for (int round = 0; round < 40; ++round) {
        const ReesComponent c = random_component(rng, round % 2 ? testing::s3() : testing::cyclic(4));
        CoordinateChange phi;
        const ReesComponent n = c.normalized(&phi);
        REQUIRE(n.is_normalized());
        for (std::size_t i = 0; i < n.num_i(); ++i) CHECK(n.group().is_identity(n.sandwich(0, i)));
        for (std::size_t l = 0; l < n.num_lambda(); ++l) CHECK(n.group().is_identity(n.sandwich(l, 0)));
        std::set<ReesElement> image;
        for (const auto& x : c.elements()) image.insert(phi.apply(c.group(), x));
        CHECK(image.size() == c.elements().size());
        for (int k = 0; k < 60; ++k) {
            const ReesElement x = random_element(rng, c), y = random_element(rng, c);
            REQUIRE(phi.apply(c.group(), c.multiply(x, y)) ==
                    n.multiply(phi.apply(c.group(), x), phi.apply(c.group(), y)));
        }
        // generators follow the coordinate change
        for (std::size_t k = 0; k < c.generators().size(); ++k)
            CHECK(n.generator_value(k) == phi.apply(c.group(), c.generator_value(k)));
    }
}

TEST_CASE("canonical generators and representatives") {
    auto g = testing::c2();
    const SandwichMatrix p(3, std::vector<GroupElement>(2, g->identity()));
    const ReesComponent c("B", g, 2, 3, p);
    std::vector<std::string> names;
    for (const auto& gen : c.generators()) names.push_back(gen.name);
    CHECK(names == std::vector<std::string>{"B.i2", "B.a", "B.l2", "B.l3"});
    CHECK(c.missing_canonical().empty());
    for (const auto& x : c.elements()) {
        const auto word = c.representative(x);
        CHECK_FALSE(word.empty());
        CHECK(c.evaluate(word) == x);
    }
    CHECK_THROWS_AS(c.evaluate(std::vector<std::size_t>{}), InvalidInput);

    auto trivial = std::make_shared<const GroupOracle>(GroupOracle::finite({"e"}, 0, {{0}}, {}));
    const ReesComponent t("T", trivial, 1, 1, {{trivial->identity()}});
    REQUIRE(t.generators().size() == 1);
    CHECK(t.generators()[0].name == "T.1");
}

TEST_CASE("representatives in a free component") {
    auto f = testing::free_group({"x", "y"});
    const GroupElement one = f->identity();
    const ReesComponent c("F", f, 2, 2, {{one, one}, {one, f->evaluate_names(std::vector<std::string>{"x"})}});
    const ReesComponent n = c.normalized();
    const std::vector<std::string> word{"x", "y^-1", "x"};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t l = 0; l < 2; ++l) {
            const ReesElement x{i, f->evaluate_names(word), l};
            CHECK(n.evaluate(n.representative(x)) == x);
            const ReesElement one_x{i, one, l};
            CHECK(n.evaluate(n.representative(one_x)) == one_x);
        }
}

TEST_CASE("idempotents for an H-class") {
    const ReesComponent c = skew_c2().normalized();
    CHECK_THROWS_AS(skew_c2().idempotents_for_hclass(0, 0), InvalidInput);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t l = 0; l < 2; ++l) {
            const auto [e, f] = c.idempotents_for_hclass(i, l);
            CHECK(c.multiply(e, e) == e);
            CHECK(c.multiply(f, f) == f);
            for (const auto& x : c.elements())
                if (x.i == i && x.lambda == l) {
                    CHECK(c.multiply(e, x) == x);
                    CHECK(c.multiply(x, f) == x);
                }
        }
}

TEST_CASE("component word problem over a finite group") {
    check_component_wp(skew_c2().normalized(), 6);
    auto g = testing::s3();
    const SandwichMatrix p(1, std::vector<GroupElement>(1, g->identity()));
    check_component_wp(ReesComponent("S", g, 1, 1, p), 6);
}

TEST_CASE("component word problem over Z") {
    auto z = testing::free_group({"x"});
    const GroupElement one = z->identity();
    check_component_wp(ReesComponent("Z", z, 1, 1, {{one}}), 6);
    const GroupElement x = z->evaluate_names(std::vector<std::string>{"x"});
    check_component_wp(ReesComponent("Z", z, 2, 2, {{one, one}, {one, x}}), 6);
}
