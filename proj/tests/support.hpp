#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crwp/automata/gsm.hpp"
#include "crwp/automata/ops.hpp"
#include "crwp/automata/pda.hpp"
#include "crwp/config.hpp"
#include "crwp/groups.hpp"

#ifndef CRWP_DATA_DIR
#define CRWP_DATA_DIR "data"
#endif

namespace testing {

using namespace crwp;

inline std::string data_path(const std::string& name) { return std::string(CRWP_DATA_DIR) + "/" + name; }
inline CRSemigroup load_t2() { return load_config(data_path("t2.cfg")); }
inline CRSemigroup load_t3() { return load_config(data_path("t3.cfg")); }

// ---- groups built from permutations ----

inline std::vector<std::size_t> compose(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    // apply p, then q
    std::vector<std::size_t> r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[k] = q[p[k]];
    return r;
}

/// Finite group generated by the given permutations, elements named g0, g1, ...
/// in discovery order; the identity comes first.
inline std::shared_ptr<const GroupOracle> permutation_group(const std::vector<std::vector<std::size_t>>& gens) {
    const std::size_t n = gens.at(0).size();
    std::vector<std::size_t> id(n);
    for (std::size_t k = 0; k < n; ++k) id[k] = k;
    std::vector<std::vector<std::size_t>> elems{id};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : gens) {
            auto c = compose(elems[k], g);
            if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
        }
    auto index = [&](const std::vector<std::size_t>& p) {
        return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    };
    std::vector<std::string> names;
    for (std::size_t k = 0; k < elems.size(); ++k) names.push_back("g" + std::to_string(k));
    std::vector<std::vector<std::size_t>> table(elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) table[a].push_back(index(compose(elems[a], elems[b])));
    std::vector<std::size_t> gen_idx;
    for (const auto& g : gens) gen_idx.push_back(index(g));
    return std::make_shared<const GroupOracle>(GroupOracle::finite(names, 0, table, gen_idx));
}

inline std::shared_ptr<const GroupOracle> cyclic(std::size_t n) {
    std::vector<std::size_t> rot(n);
    for (std::size_t k = 0; k < n; ++k) rot[k] = (k + 1) % n;
    return permutation_group({rot});
}

/// C2 with elements named e and a.
inline std::shared_ptr<const GroupOracle> c2() {
    return std::make_shared<const GroupOracle>(GroupOracle::finite({"e", "a"}, 0, {{0, 1}, {1, 0}}, {1}));
}

inline std::shared_ptr<const GroupOracle> s3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

inline std::shared_ptr<const GroupOracle> free_group(std::vector<std::string> names) {
    return std::make_shared<const GroupOracle>(GroupOracle::free(std::move(names)));
}

// ---- word enumeration ----

/// Calls f on every word over {0..n-1} with length in [min_len, max_len].
inline void for_each_word(std::size_t n, std::size_t min_len, std::size_t max_len,
                          const std::function<void(const Word&)>& f) {
    for (std::size_t len = min_len; len <= max_len; ++len) {
        Word w(len, 0);
        while (true) {
            f(w);
            std::size_t k = len;
            while (k > 0 && ++w[k - 1] == n) w[--k] = 0;
            if (k == 0) break;
        }
    }
}

// ---- independent PDA simulation ----

/// Breadth-first search over full configurations. Exact on machines whose
/// epsilon moves never grow the stack.
inline bool naive_accepts(const Pda& m, const Word& w) {
    using Config = std::tuple<StateId, std::size_t, std::vector<StackSymbol>>;  // stack top at back
    std::set<Config> seen;
    std::deque<Config> queue;
    auto visit = [&](Config c) {
        if (seen.insert(c).second) queue.push_back(std::move(c));
    };
    visit({m.start(), 0, {m.bottom()}});
    while (!queue.empty()) {
        auto [s, pos, stack] = queue.front();
        queue.pop_front();
        if (pos == w.size() && m.is_final(s) &&
            (m.mode() == AcceptMode::FinalState || (stack.size() == 1 && stack[0] == m.bottom())))
            return true;
        if (stack.empty()) continue;
        for (const auto& t : m.transitions()) {
            if (t.from != s || t.pop != stack.back()) continue;
            if (t.input != kEpsilon && (pos == w.size() || w[pos] != t.input)) continue;
            auto next = stack;
            next.pop_back();
            for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) next.push_back(*it);
            visit({t.to, pos + (t.input == kEpsilon ? 0 : 1), std::move(next)});
        }
    }
    return false;
}

inline std::string show(const Alphabet& sigma, const Word& w) {
    std::string out;
    for (Symbol a : w) out += (out.empty() ? "" : " ") + sigma.name(a);
    return out;
}

// ---- hull ----

/// Every triple of the right shape, linked or not.
inline std::vector<Bitranslation> all_triples(const ReesComponent& c) {
    const auto elems = c.group().elements();
    std::vector<Bitranslation> out;
    const std::size_t ni = c.num_i(), nl = c.num_lambda();
    std::size_t ci = 1, h = 1, cl = 1;
    for (std::size_t k = 0; k < ni; ++k) ci *= ni;
    for (std::size_t k = 0; k < nl; ++k) h *= elems.size(), cl *= nl;
    for (std::size_t a = 0; a < ci; ++a)
        for (std::size_t b = 0; b < h; ++b)
            for (std::size_t d = 0; d < cl; ++d) {
                Bitranslation t;
                for (std::size_t k = 0, x = a; k < ni; ++k, x /= ni) t.chi_i.push_back(x % ni);
                for (std::size_t k = 0, x = b; k < nl; ++k, x /= elems.size()) t.h.push_back(elems[x % elems.size()]);
                for (std::size_t k = 0, x = d; k < nl; ++k, x /= nl) t.chi_lambda.push_back(x % nl);
                out.push_back(t);
            }
    return out;
}

// ---- random machines ----

inline Alphabet ab() { return Alphabet({"a", "b"}); }

/// Random PDA over {a, b} with stack {$bot, A, B}; epsilon moves never grow
/// the stack.
inline Pda random_pda(std::mt19937& rng, std::size_t max_states = 4) {
    std::uniform_int_distribution<std::size_t> nstates(1, max_states);
    const std::size_t n = nstates(rng);
    std::bernoulli_distribution coin(0.5);
    PdaBuilder b(ab(), Alphabet({"$bot", "A", "B"}), 0, coin(rng) ? AcceptMode::FinalState : AcceptMode::EmptyStackAndFinal);
    for (std::size_t k = 0; k < n; ++k) b.add_state("s" + std::to_string(k), coin(rng));
    std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<StackSymbol> sym(1, 2);
    std::bernoulli_distribution sparse(0.35);
    for (StateId s = 0; s < n; ++s) {
        for (Symbol in : {Symbol{0}, Symbol{1}, kEpsilon}) {
            for (StackSymbol top = 0; top < 3; ++top) {
                if (!sparse(rng)) continue;
                const int k = kind(rng);
                std::vector<StackSymbol> push;
                if (top == 0) {
                    push = (k >= 2 && in != kEpsilon) ? std::vector<StackSymbol>{sym(rng), 0} : std::vector<StackSymbol>{0};
                } else if (k == 0) {
                    push = {};
                } else if (k == 1 || in == kEpsilon) {
                    push = {sym(rng)};
                } else {
                    push = {sym(rng), top};
                }
                b.add(s, in, top, state(rng), push);
            }
        }
    }
    return std::move(b).build();
}

inline Dfa random_dfa(std::mt19937& rng, std::size_t max_states = 4) {
    std::uniform_int_distribution<std::size_t> nstates(1, max_states);
    const std::size_t n = nstates(rng);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
    DfaBuilder b(ab());
    for (std::size_t k = 0; k < n; ++k) b.add_state("d" + std::to_string(k), coin(rng));
    for (StateId s = 0; s < n; ++s)
        for (Symbol a = 0; a < 2; ++a) b.set(s, a, state(rng));
    return std::move(b).build();
}

/// Random deterministic GSM from {a, b} to {a, b}, optionally with an
/// epsilon exit into a final sink.
inline Gsm random_gsm(std::mt19937& rng, std::size_t max_states = 3) {
    std::uniform_int_distribution<std::size_t> nstates(1, max_states);
    const std::size_t n = nstates(rng);
    std::bernoulli_distribution coin(0.5), often(0.8);
    std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
    std::uniform_int_distribution<std::size_t> len(0, 2);
    std::uniform_int_distribution<Symbol> letter(0, 1);
    auto out = [&] {
        Word w(len(rng));
        for (auto& a : w) a = letter(rng);
        return w;
    };
    GsmBuilder b(ab(), ab());
    std::vector<bool> final(n);
    for (std::size_t k = 0; k < n; ++k) {
        final[k] = coin(rng);
        b.add_state("g" + std::to_string(k), final[k]);
    }
    const StateId sink = b.add_state("sink", true);
    for (StateId s = 0; s < n; ++s) {
        for (Symbol a = 0; a < 2; ++a)
            if (often(rng)) b.add(s, a, state(rng), out());
        if (!final[s] && coin(rng)) b.add(s, kEpsilon, sink, out());
    }
    return std::move(b).build();
}

}  // namespace testing
