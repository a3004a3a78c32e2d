#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "crwp/automata/dfa.hpp"
#include "crwp/automata/gsm.hpp"
#include "crwp/automata/pda.hpp"

namespace crwp {

/// Product machine; only control states reachable from the start pair are
/// materialized, so the state count is at most |m| * |d|.
Pda pda_intersect_dfa(const Pda& m, const Dfa& d);

/// PDA for { w : g maps w to some o in L(m) }. Each GSM output word is fed
/// through `m` one letter at a time via intermediate product states, with
/// the epsilon moves of `m` available everywhere.
Pda gsm_inverse_image(const Gsm& g, const Pda& m);

/// Fresh start state with an epsilon branch into each machine.
Pda pda_union(std::span<const Pda> machines);

/// Output along the accepting run, or nullopt if the run dies or ends in a
/// non-final state.
std::optional<Word> gsm_transduce(const Gsm& g, std::span<const Symbol> word);

/// Equivalent machine that accepts with only the bottom marker left.
Pda to_empty_stack_acceptance(const Pda& m);

/// Small epsilon-NFA used to spell out regular expressions over finite sets
/// of words before determinizing them.
struct Nfa {
    struct Edge {
        StateId from;
        Symbol input;  ///< kEpsilon for epsilon edges
        StateId to;
    };
    Alphabet alphabet;
    std::size_t num_states = 0;
    StateId start = 0;
    std::vector<bool> final;
    std::vector<Edge> edges;

    StateId add_state(bool is_final = false);
    /// Path spelling `word` from `from` to `to` (an epsilon edge when empty).
    void add_path(StateId from, std::span<const Symbol> word, StateId to);
};

/// Subset construction; the result is complete.
Dfa determinize(const Nfa& nfa);

/// A word-problem recognizer: a finite automaton where one suffices, a PDA
/// otherwise.
using Recognizer = std::variant<Dfa, Pda>;

const Alphabet& recognizer_alphabet(const Recognizer& r);
bool recognizer_accepts(const Recognizer& r, std::span<const Symbol> word);
Pda recognizer_as_pda(const Recognizer& r);

}  // namespace crwp
