#include <doctest.h>

#include "checks.hpp"
#include "crwp/config.hpp"
#include "crwp/crossval.hpp"
#include "crwp/error.hpp"
#include "crwp/pipeline.hpp"
#include "support.hpp"

using namespace crwp;

namespace {

std::vector<CRSemigroup> instances() { return {testing::load_t2(), testing::load_t3()}; }

/// Value of u and v for u # v^rev, or nullopt when the word is not of that shape.
std::optional<std::pair<CRElement, CRElement>> sides(const CRSemigroup& s, const Alphabet& sigma, const Word& w) {
    const Symbol hash = sigma.at("#");
    if (std::count(w.begin(), w.end(), hash) != 1) return std::nullopt;
    const auto split = std::find(w.begin(), w.end(), hash);
    const Word u(w.begin(), split), v(w.rbegin(), std::make_reverse_iterator(split + 1));
    if (u.empty() || v.empty()) return std::nullopt;
    return std::pair{s.evaluate(u), s.evaluate(v)};
}

bool in_hclass(const HClassTask& t, const CRElement& x) {
    return x.component == t.alpha && x.value.i == t.i && x.value.lambda == t.lambda;
}

}  // namespace

TEST_CASE("tasks cover every H-class with e and f available") {
    const CRSemigroup t3 = testing::load_t3();
    const auto tasks = all_tasks(t3);
    REQUIRE(tasks.size() == 5);
    CHECK(tasks[0].alpha == 0);
    CHECK(tasks[4].alpha == 1);
    CHECK(tasks[4].i == 1);
    CHECK(tasks[4].lambda == 1);
    for (const auto& t : tasks) {
        const ReesComponent& c = t.component;
        CHECK(c.generator_value(t.e) == c.idempotents_for_hclass(t.i, t.lambda).first);
        CHECK(c.generator_value(t.f) == c.idempotents_for_hclass(t.i, t.lambda).second);
        const ReesComponent& base = t3.component(t.alpha);
        for (std::size_t k = 0; k < base.generators().size(); ++k) CHECK(c.generators()[k] == base.generators()[k]);
    }
    // (2,1,1) is not a T3 generator, so it is appended under a fresh name
    const HClassTask t = make_task(t3, 1, 1, 1);
    CHECK(t.component.generators().size() == t3.component(1).generators().size());
    const HClassTask t2 = make_task(testing::load_t2(), 0, 0, 0);
    CHECK(t2.component.generators().back().name == "Z.1");
}

TEST_CASE("factor tables factor the star products") {
    for (const CRSemigroup& s : instances())
        for (const HClassTask& task : all_tasks(s)) {
            const FactorTable ft = build_factor_table(s, task);
            const ReesComponent& c = task.component;
            for (Symbol y = 0; y < s.alphabet().size(); ++y)
                CHECK(ft.column(y).has_value() == s.semilattice().leq(task.alpha, s.letter(y).component));
            for (std::size_t x = 0; x < c.generators().size(); ++x)
                for (Symbol y : ft.domain) {
                    const FactorEntry& fe = ft.at(x, y);
                    const CRElement xv{task.alpha, c.generator_value(x)};
                    std::vector<std::size_t> wt = fe.w, sz{fe.s};
                    wt.push_back(fe.t);
                    sz.insert(sz.end(), fe.z.begin(), fe.z.end());
                    REQUIRE(s.star_multiply(xv, s.letter_value(y)) == CRElement{task.alpha, c.evaluate(wt)});
                    REQUIRE(s.star_multiply(s.letter_value(y), xv) == CRElement{task.alpha, c.evaluate(sz)});
                }
        }
}

TEST_CASE("gsm has the expected states and semantics") {
    for (const CRSemigroup& s : instances())
        for (const HClassTask& task : all_tasks(s)) {
            const FactorTable ft = build_factor_table(s, task);
            const Gsm g = build_gsm(s, task, ft);
            CHECK(g.num_states() == 2 * task.component.generators().size() + 1);
            CHECK(g.state_name(g.start()) == task.component.generators()[task.e].name);
        }
    for (const CRSemigroup& s : instances()) {
        const checks::Result r = checks::gsm_semantics(s, 6);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(r.cases > 0);
    }
}

TEST_CASE("gsm output on a T2 word") {
    const CRSemigroup s = testing::load_t2();
    const HClassTask task = make_task(s, 1, 0, 0);
    const FactorTable ft = build_factor_table(s, task);
    const Gsm g = build_gsm(s, task, ft);
    const std::vector<std::string> in{"x_Z", "b", "#", "b", "x_Z"};
    const auto out = gsm_transduce(g, g.input().encode(in));
    REQUIRE(out);
    const auto names = g.output().decode(*out);
    const auto hash = std::find(names.begin(), names.end(), "#");
    REQUIRE(hash != names.end());
    std::vector<std::size_t> u, v;
    for (auto it = names.begin(); it != hash; ++it) u.push_back(*task.component.find_generator(*it));
    for (auto it = names.rbegin(); *it != "#"; ++it) v.push_back(*task.component.find_generator(*it));
    const std::vector<std::string> xb{"x_Z", "b"};
    CHECK(CRElement{1, task.component.evaluate(u)} == s.evaluate_names(xb));
    CHECK(CRElement{1, task.component.evaluate(v)} == s.evaluate_names(xb));
    // a letter from a component below alpha has no transition
    const HClassTask top = make_task(s, 0, 0, 0);
    const Gsm gt = build_gsm(s, top, build_factor_table(s, top));
    const std::vector<std::string> low{"x_Z", "b", "#", "x_Z"};
    CHECK_FALSE(gsm_transduce(gt, gt.input().encode(low)));
}

TEST_CASE("regular filter shape") {
    const CRSemigroup s = testing::load_t2();
    const HClassTask task = make_task(s, 1, 0, 0);
    const Dfa d = build_regex_dfa(task, build_factor_table(s, task));
    const std::vector<std::string> no_hash{"b", "b"};
    CHECK_FALSE(d.accepts_names(no_hash));
    const std::vector<std::string> two_hash{"b", "#", "b", "#", "b"};
    CHECK_FALSE(d.accepts_names(two_hash));
}

TEST_CASE("H-class filter matches the evaluator") {
    for (const CRSemigroup& s : instances()) {
        const Alphabet sigma = wp_alphabet(s);
        for (const HClassTask& task : all_tasks(s)) {
            const Dfa l2 = build_l2_dfa(s, task);
            testing::for_each_word(sigma.size(), 0, 6, [&](const Word& w) {
                const auto uv = sides(s, sigma, w);
                const bool expect = uv && in_hclass(task, uv->first) && in_hclass(task, uv->second);
                REQUIRE_MESSAGE(l2.accepts(w) == expect, testing::show(sigma, w));
            });
        }
    }
}

TEST_CASE("H-class recognizer is the intersection of its two parts") {
    for (const CRSemigroup& s : instances()) {
        const Alphabet sigma = wp_alphabet(s);
        for (const HClassTask& task : all_tasks(s)) {
            const FactorTable ft = build_factor_table(s, task);
            const Pda l1 = build_l1_pda(s, task, ft);
            const Dfa l2 = build_l2_dfa(s, task);
            const Pda h = build_hclass_recognizer(s, task);
            testing::for_each_word(sigma.size(), 0, 5, [&](const Word& w) {
                const bool got = pda_membership(h, w);
                REQUIRE(got == (pda_membership(l1, w) && l2.accepts(w)));
                const auto uv = sides(s, sigma, w);
                REQUIRE(got == (uv && in_hclass(task, uv->first) && uv->first == uv->second));
            });
        }
    }
}

TEST_CASE("word-problem recognizer is the union of the H-class recognizers") {
    const CRSemigroup s = testing::load_t3();
    const Alphabet sigma = wp_alphabet(s);
    const Pda wp = build_wp_recognizer(s);
    std::vector<Pda> parts;
    for (const auto& task : all_tasks(s)) parts.push_back(build_hclass_recognizer(s, task));
    testing::for_each_word(sigma.size(), 0, 5, [&](const Word& w) {
        bool any = false;
        for (const auto& p : parts) any = any || pda_membership(p, w);
        REQUIRE(pda_membership(wp, w) == any);
    });
}

TEST_CASE("idempotents are absorbed") {
    for (const CRSemigroup& s : instances()) {
        const Alphabet sigma = wp_alphabet(s);
        const Symbol hash = sigma.at("#");
        for (const HClassTask& task : all_tasks(s)) {
            const Pda h = build_hclass_recognizer(s, task);
            // e and f as global words: their representatives in alpha
            const auto word_of = [&](const ReesElement& x) {
                Word w;
                for (std::size_t g : s.component(task.alpha).representative(x)) w.push_back(s.symbol_of(task.alpha, g));
                return w;
            };
            const auto [ev, fv] = task.component.idempotents_for_hclass(task.i, task.lambda);
            const Word e = word_of(ev), f = word_of(fv);
            testing::for_each_word(sigma.size() - 1, 1, 2, [&](const Word& u) {
                testing::for_each_word(sigma.size() - 1, 1, 2, [&](const Word& v) {
                    Word plain = u, padded = e;
                    plain.push_back(hash);
                    plain.insert(plain.end(), v.rbegin(), v.rend());
                    padded.insert(padded.end(), u.begin(), u.end());
                    padded.push_back(hash);
                    padded.insert(padded.end(), f.rbegin(), f.rend());
                    padded.insert(padded.end(), v.rbegin(), v.rend());
                    // e u = u and v f = v on the H-class, so padding keeps members in
                    if (pda_membership(h, plain)) REQUIRE(pda_membership(h, padded));
                    const CRElement eu = s.star_multiply({task.alpha, ev}, s.evaluate(u));
                    const CRElement vf = s.star_multiply(s.evaluate(v), {task.alpha, fv});
                    REQUIRE(pda_membership(h, padded) == (in_hclass(task, eu) && eu == vf));
                });
            });
        }
    }
}

TEST_CASE("every word equals itself") {
    for (const CRSemigroup& s : instances()) {
        const Alphabet sigma = wp_alphabet(s);
        const Pda wp = build_wp_recognizer(s);
        testing::for_each_word(sigma.size() - 1, 1, 5, [&](const Word& u) {
            Word w = u;
            w.push_back(sigma.at("#"));
            w.insert(w.end(), u.rbegin(), u.rend());
            REQUIRE(pda_membership(wp, w));
        });
    }
}

TEST_CASE("recognizers agree with the evaluator") {
    for (const CRSemigroup& s : instances()) {
        const CrossReport r = cross_validate(build_wp_recognizer(s), s.alphabet(), semigroup_oracle(s), 6);
        CHECK_MESSAGE(r.agree(), r.summary());
        CHECK(r.equal > 0);
    }
}

TEST_CASE("components given with a non-normalized matrix") {
    // the 2x2 component over C2 with rows (a, e) and (e, e), generators in
    // the written coordinates
    const char* text = R"(
[semilattice]
names A B
meet A : A B
meet B : B B

[component A]
group finite e a
identity e
table e : e a
table a : a e
generators a
size 1 1
gen g 1 a 1

[component B]
group finite e a
identity e
table e : e a
table a : a e
generators a
size 2 2
row a ; e
row e ; e
gen p 1 e 1
gen q 2 e 1
gen r 1 e 2
gen k 2 a 2

[map A B]
image g | 1 2 | e ; e | 1 2
)";
    const CRSemigroup s = parse_config(text);
    CHECK(s.component(1).is_normalized());
    CHECK(validate_structure(s).ok());
    const CrossReport r = cross_validate(build_wp_recognizer(s), s.alphabet(), semigroup_oracle(s), 5);
    CHECK_MESSAGE(r.agree(), r.summary());
}
