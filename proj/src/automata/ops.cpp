#include "crwp/automata/ops.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "crwp/automata/runner.hpp"
#include "crwp/error.hpp"

namespace crwp {

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "<" + a + "|" + b + ">"; }

}  // namespace

Pda pda_intersect_dfa(const Pda& m, const Dfa& d) {
    if (!m.alphabet().same_letters(d.alphabet())) throw InvalidInput("pda_intersect_dfa: alphabet mismatch");
    const std::vector<Symbol> to_dfa = m.alphabet().map_into(d.alphabet());

    PdaBuilder b(m.alphabet(), m.stack_alphabet(), m.bottom(), m.mode());
    std::unordered_map<std::uint64_t, StateId> ids;
    std::deque<std::pair<StateId, StateId>> queue;
    auto intern = [&](StateId p, StateId q) {
        std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
        auto [it, fresh] = ids.emplace(key, 0);
        if (fresh) {
            it->second = b.add_state(pair_name(m.state_name(p), d.state_name(q)), m.is_final(p) && d.accepting(q));
            queue.emplace_back(p, q);
        }
        return it->second;
    };
    b.set_start(intern(m.start(), d.start()));
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        StateId from = ids.at((static_cast<std::uint64_t>(p) << 32) | q);
        for (StackSymbol a = 0; a < m.stack_alphabet().size(); ++a) {
            for (const auto& t : m.transitions(p, a)) {
                StateId q2 = t.input == kEpsilon ? q : d.next(q, to_dfa[t.input]);
                b.add(from, t.input, t.pop, intern(t.to, q2), t.push);
            }
        }
    }
    return std::move(b).build();
}

Pda gsm_inverse_image(const Gsm& g, const Pda& m) {
    if (!g.output().same_letters(m.alphabet())) throw InvalidInput("gsm_inverse_image: alphabet mismatch");
    const std::vector<Symbol> out_to_m = g.output().map_into(m.alphabet());
    const std::size_t gamma = m.stack_alphabet().size();

    // Pending output positions: (transition, k) with 1 <= k < |output|.
    std::vector<std::uint32_t> pend_base(g.transitions().size() + 1, 0);
    for (std::size_t t = 0; t < g.transitions().size(); ++t) {
        std::size_t len = g.transitions()[t].output.size();
        pend_base[t + 1] = pend_base[t] + static_cast<std::uint32_t>(len > 1 ? len - 1 : 0);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pend_of(pend_base.back() + 1);
    for (std::uint32_t t = 0; t < g.transitions().size(); ++t)
        for (std::uint32_t k = 1; k < g.transitions()[t].output.size(); ++k) pend_of[pend_base[t] + k] = {t, k};
    auto pending = [&](std::uint32_t t, std::uint32_t k) -> std::uint32_t {
        return k >= g.transitions()[t].output.size() ? 0 : pend_base[t] + k;
    };

    struct Key {
        StateId s, p;
        std::uint32_t pend;
        bool operator<(const Key& o) const { return std::tie(s, p, pend) < std::tie(o.s, o.p, o.pend); }
    };
    PdaBuilder b(g.input(), m.stack_alphabet(), m.bottom(), m.mode());
    std::map<Key, StateId> ids;
    std::deque<Key> queue;
    auto intern = [&](Key k) {
        auto [it, fresh] = ids.emplace(k, 0);
        if (fresh) {
            std::string name = "<" + g.state_name(k.s) + "|" + m.state_name(k.p);
            if (k.pend) name += "|" + std::to_string(pend_of[k.pend].first) + "." + std::to_string(pend_of[k.pend].second);
            name += ">";
            it->second = b.add_state(std::move(name), k.pend == 0 && g.is_final(k.s) && m.is_final(k.p));
            queue.push_back(k);
        }
        return it->second;
    };
    // Feed output letter `o` to m from product state `from` (reading `input`).
    auto feed = [&](StateId from, Symbol input, StateId s2, StateId p, Symbol o, std::uint32_t t, std::uint32_t k) {
        for (StackSymbol a = 0; a < gamma; ++a)
            for (const auto& mt : m.transitions(p, a)) {
                if (mt.input != o) continue;
                b.add(from, input, mt.pop, intern(Key{s2, mt.to, pending(t, k)}), mt.push);
            }
    };

    b.set_start(intern(Key{g.start(), m.start(), 0}));
    while (!queue.empty()) {
        Key k = queue.front();
        queue.pop_front();
        StateId from = ids.at(k);
        for (StackSymbol a = 0; a < gamma; ++a)
            for (const auto& mt : m.transitions(k.p, a))
                if (mt.input == kEpsilon) b.add(from, kEpsilon, mt.pop, intern(Key{k.s, mt.to, k.pend}), mt.push);
        if (k.pend != 0) {
            auto [t, off] = pend_of[k.pend];
            feed(from, kEpsilon, k.s, k.p, out_to_m[g.transitions()[t].output[off]], t, off + 1);
            continue;
        }
        for (const auto& gt : g.transitions_from(k.s)) {
            auto t = static_cast<std::uint32_t>(&gt - g.transitions().data());
            if (gt.output.empty()) {
                StateId to = intern(Key{gt.to, k.p, 0});
                for (StackSymbol a = 0; a < gamma; ++a) b.add(from, gt.input, a, to, {a});
            } else {
                feed(from, gt.input, gt.to, k.p, out_to_m[gt.output[0]], t, 1);
            }
        }
    }
    return std::move(b).build();
}

Pda to_empty_stack_acceptance(const Pda& m) {
    if (m.mode() == AcceptMode::EmptyStackAndFinal) return m;
    PdaBuilder b(m.alphabet(), m.stack_alphabet(), m.bottom(), AcceptMode::EmptyStackAndFinal);
    for (StateId s = 0; s < m.num_states(); ++s) b.add_state(m.state_name(s), m.is_final(s));
    std::string drain_name = "drain";
    while (true) {
        bool clash = false;
        for (StateId s = 0; s < m.num_states(); ++s) clash = clash || m.state_name(s) == drain_name;
        if (!clash) break;
        drain_name += "'";
    }
    StateId drain = b.add_state(drain_name, true);
    b.set_start(m.start());
    for (const auto& t : m.transitions()) b.add(t);
    for (StackSymbol a = 0; a < m.stack_alphabet().size(); ++a) {
        if (a == m.bottom()) continue;
        b.add(drain, kEpsilon, a, drain, {});
        for (StateId s = 0; s < m.num_states(); ++s)
            if (m.is_final(s)) b.add(s, kEpsilon, a, drain, {});
    }
    return std::move(b).build();
}

Pda pda_union(std::span<const Pda> machines) {
    if (machines.empty()) throw InvalidInput("pda_union: empty list");
    const Alphabet& sigma = machines[0].alphabet();
    bool mixed = false;
    for (const auto& m : machines) {
        if (!m.alphabet().same_letters(sigma)) throw InvalidInput("pda_union: alphabet mismatch");
        mixed = mixed || m.mode() != machines[0].mode();
    }
    std::vector<Pda> converted;
    if (mixed)
        for (const auto& m : machines) converted.push_back(to_empty_stack_acceptance(m));
    std::span<const Pda> ms = mixed ? std::span<const Pda>(converted) : machines;

    const std::string& bottom_name = ms[0].stack_alphabet().name(ms[0].bottom());
    std::vector<std::string> stack_names{bottom_name};
    std::map<std::string, StackSymbol> stack_index{{bottom_name, 0}};
    std::vector<std::vector<StackSymbol>> stack_map;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        std::vector<StackSymbol> map;
        for (StackSymbol a = 0; a < ms[k].stack_alphabet().size(); ++a) {
            if (a == ms[k].bottom()) {
                map.push_back(0);
                continue;
            }
            std::string name = ms[k].stack_alphabet().name(a);
            if (name == bottom_name) name = std::to_string(k) + ":" + name;
            auto [it, fresh] = stack_index.emplace(name, static_cast<StackSymbol>(stack_names.size()));
            if (fresh) stack_names.push_back(name);
            map.push_back(it->second);
        }
        stack_map.push_back(std::move(map));
    }

    PdaBuilder b(sigma, Alphabet(stack_names), 0, ms[0].mode());
    StateId start = b.add_state("start");
    b.set_start(start);
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const Pda& m = ms[k];
        const std::vector<Symbol> letters = m.alphabet().map_into(sigma);
        const StateId base = static_cast<StateId>(b.num_states());
        for (StateId s = 0; s < m.num_states(); ++s)
            b.add_state(std::to_string(k) + ":" + m.state_name(s), m.is_final(s));
        b.add(start, kEpsilon, 0, base + m.start(), {0});
        for (const auto& t : m.transitions()) {
            std::vector<StackSymbol> push;
            for (StackSymbol a : t.push) push.push_back(stack_map[k][a]);
            b.add(base + t.from, t.input == kEpsilon ? kEpsilon : letters[t.input], stack_map[k][t.pop], base + t.to,
                  std::move(push));
        }
    }
    return std::move(b).build();
}

std::optional<Word> gsm_transduce(const Gsm& g, std::span<const Symbol> word) {
    Word out;
    StateId s = g.start();
    for (Symbol a : word) {
        const GsmTransition* t = g.find(s, a);
        if (!t) return std::nullopt;
        out.insert(out.end(), t->output.begin(), t->output.end());
        s = t->to;
    }
    if (!g.is_final(s)) {
        const GsmTransition* t = g.epsilon(s);
        if (!t) return std::nullopt;
        out.insert(out.end(), t->output.begin(), t->output.end());
        s = t->to;
    }
    return out;
}

StateId Nfa::add_state(bool is_final) {
    final.push_back(is_final);
    return static_cast<StateId>(num_states++);
}

void Nfa::add_path(StateId from, std::span<const Symbol> word, StateId to) {
    if (word.empty()) {
        edges.push_back(Edge{from, kEpsilon, to});
        return;
    }
    StateId cur = from;
    for (std::size_t k = 0; k < word.size(); ++k) {
        StateId next = k + 1 == word.size() ? to : add_state();
        edges.push_back(Edge{cur, word[k], next});
        cur = next;
    }
}

Dfa determinize(const Nfa& nfa) {
    using Edge = Nfa::Edge;
    std::vector<std::vector<Edge>> adj(nfa.num_states);
    for (const auto& e : nfa.edges) adj[e.from].push_back(e);
    auto closure = [&](std::set<StateId> s) {
        std::vector<StateId> stack(s.begin(), s.end());
        while (!stack.empty()) {
            StateId x = stack.back();
            stack.pop_back();
            for (const auto& e : adj[x])
                if (e.input == kEpsilon && s.insert(e.to).second) stack.push_back(e.to);
        }
        return s;
    };
    DfaBuilder b(nfa.alphabet);
    std::map<std::set<StateId>, StateId> ids;
    std::deque<std::set<StateId>> queue;
    auto intern = [&](const std::set<StateId>& s) {
        auto [it, fresh] = ids.emplace(s, 0);
        if (fresh) {
            bool acc = false;
            for (StateId x : s) acc = acc || nfa.final[x];
            it->second = b.add_state("d" + std::to_string(ids.size() - 1), acc);
            queue.push_back(s);
        }
        return it->second;
    };
    b.set_start(intern(closure({nfa.start})));
    while (!queue.empty()) {
        std::set<StateId> s = queue.front();
        queue.pop_front();
        StateId from = ids.at(s);
        for (Symbol a = 0; a < nfa.alphabet.size(); ++a) {
            std::set<StateId> next;
            for (StateId x : s)
                for (const auto& e : adj[x])
                    if (e.input == a) next.insert(e.to);
            b.set(from, a, intern(closure(std::move(next))));
        }
    }
    return std::move(b).build();
}

const Alphabet& recognizer_alphabet(const Recognizer& r) {
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet(); }, r);
}

bool recognizer_accepts(const Recognizer& r, std::span<const Symbol> word) {
    if (const auto* d = std::get_if<Dfa>(&r)) return d->accepts(word);
    return pda_membership(std::get<Pda>(r), word);
}

Pda recognizer_as_pda(const Recognizer& r) {
    if (const auto* d = std::get_if<Dfa>(&r)) return dfa_to_pda(*d);
    return std::get<Pda>(r);
}

}  // namespace crwp
