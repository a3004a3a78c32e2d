#include <doctest.h>

#include "crwp/error.hpp"
#include "crwp/group_automata.hpp"
#include "support.hpp"

using namespace crwp;
using testing::for_each_word;

TEST_CASE("finite group arithmetic") {
    auto g = testing::c2();
    const auto a = g->letter_element(0);
    CHECK(g->is_identity(g->multiply(a, a)));
    std::vector<std::string> aaa{"a", "a", "a"};
    CHECK(g->evaluate_names(aaa) == a);
    CHECK(g->representative(g->identity()).empty());
    CHECK(g->representative(g->identity(), true) == GroupWord{0, 0});
}

TEST_CASE("free group arithmetic") {
    auto f = testing::free_group({"x", "y"});
    std::vector<std::string> xy{"x", "y"}, yi{"y^-1"}, x{"x"};
    CHECK(f->multiply(f->evaluate_names(xy), f->evaluate_names(yi)) == f->evaluate_names(x));
    std::vector<std::string> xyx{"x", "y", "x^-1"};
    CHECK(f->format(f->evaluate_names(xyx)) == "x y x^-1");
    std::vector<std::string> cancel{"x", "x^-1"};
    CHECK(f->is_identity(f->evaluate_names(cancel)));
    CHECK(f->letters().size() == 4);

    auto z = testing::free_group({"x"});
    std::vector<std::string> x3{"x", "x", "x", "x^-1"};
    CHECK(z->format(z->evaluate_names(x3)) == "x x");
}

TEST_CASE("mixed operands and unknown letters") {
    auto g = testing::c2();
    auto h = testing::c2();
    CHECK_THROWS_AS(g->multiply(g->identity(), h->identity()), MixedOperands);
    std::vector<std::string> bad{"q"};
    CHECK_THROWS_AS(g->evaluate_names(bad), UnknownLetter);
}

TEST_CASE("finite table validation") {
    CHECK_THROWS_AS(GroupOracle::finite({"e", "a"}, 0, {{0, 1}, {1, 1}}, {1}), InvalidInput);
    CHECK_THROWS_AS(GroupOracle::finite({"e", "a"}, 1, {{0, 1}, {1, 0}}, {1}), InvalidInput);
    CHECK_THROWS_AS(GroupOracle::finite({"e", "a"}, 0, {{0, 1}, {1, 0}}, {}), InvalidInput);
}

TEST_CASE("S3 breadth-first representatives") {
    auto g = testing::s3();
    CHECK(g->order() == 6);
    for (const auto& e : g->elements()) {
        auto w = g->representative(e);
        CHECK(g->evaluate(w) == e);
        if (w.empty()) continue;
        // no shorter word reaches e
        bool shorter = false;
        for_each_word(g->letters().size(), 0, w.size() - 1, [&](const Word& v) {
            if (g->evaluate(GroupWord(v.begin(), v.end())) == e) shorter = true;
        });
        CHECK_FALSE(shorter);
    }
}

TEST_CASE("representatives round-trip up to length 8") {
    for (auto g : {testing::c2(), testing::cyclic(3), testing::s3(), testing::free_group({"x"}),
                   testing::free_group({"x", "y"})}) {
        const std::size_t len = g->is_finite() ? 8 : 6;
        for_each_word(g->letters().size(), 0, len, [&](const Word& w) {
            const auto v = g->evaluate(GroupWord(w.begin(), w.end()));
            REQUIRE(g->evaluate(g->representative(v)) == v);
            REQUIRE(g->evaluate(g->representative(v, true)) == v);
            REQUIRE_FALSE(g->representative(v, true).empty());
        });
    }
}

TEST_CASE("free reduction is independent of cancellation order") {
    auto f = testing::free_group({"x", "y"});
    std::mt19937 rng(7);
    std::uniform_int_distribution<GroupLetter> letter(0, 3);
    for (int round = 0; round < 300; ++round) {
        GroupWord w(rng() % 14);
        for (auto& l : w) l = letter(rng);
        // cancel adjacent inverse pairs at random positions until none remain
        GroupWord r = w;
        while (true) {
            std::vector<std::size_t> spots;
            for (std::size_t k = 0; k + 1 < r.size(); ++k)
                if (r[k] == (r[k + 1] ^ 1u)) spots.push_back(k);
            if (spots.empty()) break;
            const std::size_t k = spots[rng() % spots.size()];
            r.erase(r.begin() + static_cast<long>(k), r.begin() + static_cast<long>(k) + 2);
        }
        CHECK(f->representative(f->evaluate(w)) == r);
    }
}

TEST_CASE("group word-problem automata agree with evaluation") {
    for (auto g : {testing::c2(), testing::cyclic(3), testing::s3(), testing::free_group({"x"}),
                   testing::free_group({"x", "y"})}) {
        const Recognizer r = group_wp_automaton(*g);
        CHECK(std::holds_alternative<Dfa>(r) == g->is_finite());
        const std::size_t n = g->letters().size();
        const Symbol hash = static_cast<Symbol>(n);
        for_each_word(n, 1, 7, [&](const Word& u) {
            const auto gu = g->evaluate(GroupWord(u.begin(), u.end()));
            for_each_word(n, 1, 8 - u.size(), [&](const Word& v) {
                Word w = u;
                w.push_back(hash);
                w.insert(w.end(), v.rbegin(), v.rend());
                const bool equal = gu == g->evaluate(GroupWord(v.begin(), v.end()));
                REQUIRE(recognizer_accepts(r, w) == equal);
            });
        });
    }
}

TEST_CASE("group word-problem automaton examples") {
    auto z = testing::free_group({"x"});
    auto zr = group_wp_automaton(*z);
    const Alphabet sz = group_wp_alphabet(*z);
    CHECK(recognizer_accepts(zr, sz.encode(std::vector<std::string>{"x", "#", "x"})));
    auto f2 = testing::free_group({"x", "y"});
    const Alphabet s2 = group_wp_alphabet(*f2);
    CHECK(recognizer_accepts(group_wp_automaton(*f2), s2.encode(std::vector<std::string>{"x", "x^-1", "#", "y^-1", "y"})));
    auto c = testing::c2();
    const Alphabet sc = group_wp_alphabet(*c);
    CHECK_FALSE(recognizer_accepts(group_wp_automaton(*c), sc.encode(std::vector<std::string>{"a", "#", "a", "a"})));
    CHECK_FALSE(recognizer_accepts(group_wp_automaton(*c), sc.encode(std::vector<std::string>{"#", "a"})));
}
