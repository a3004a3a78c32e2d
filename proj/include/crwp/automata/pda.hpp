#pragma once

#include <span>
#include <string>
#include <vector>

#include "crwp/automata/alphabet.hpp"
#include "crwp/automata/dfa.hpp"

namespace crwp {

using StackSymbol = std::uint32_t;

enum class AcceptMode {
    FinalState,          ///< final state after the whole input, any stack
    EmptyStackAndFinal,  ///< final state with only the bottom marker left
};

struct PdaTransition {
    StateId from = 0;
    Symbol input = kEpsilon;
    StackSymbol pop = 0;
    StateId to = 0;
    std::vector<StackSymbol> push;  ///< replaces `pop`; front is the new top

    friend bool operator==(const PdaTransition&, const PdaTransition&) = default;
};

/// Nondeterministic pushdown automaton with epsilon moves.
///
/// The bottom marker sits at the bottom of every reachable stack: a transition
/// popping it pushes a word ending in it, and no other transition pushes it.
/// Consequently a configuration whose top is the marker has an otherwise empty
/// stack.
class Pda {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Alphabet& stack_alphabet() const noexcept { return stack_; }
    StackSymbol bottom() const noexcept { return bottom_; }
    AcceptMode mode() const noexcept { return mode_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    const std::string& state_name(StateId s) const { return names_.at(s); }
    StateId start() const noexcept { return start_; }
    bool is_final(StateId s) const { return final_[s]; }

    std::span<const PdaTransition> transitions() const noexcept { return transitions_; }
    /// Transitions leaving `from` with `top` on the stack, sorted by input
    /// letter with epsilon moves last.
    std::span<const PdaTransition> transitions(StateId from, StackSymbol top) const {
        std::size_t key = static_cast<std::size_t>(from) * stack_.size() + top;
        return {transitions_.data() + offsets_[key], transitions_.data() + offsets_[key + 1]};
    }

private:
    friend class PdaBuilder;
    Alphabet alphabet_;
    Alphabet stack_;
    StackSymbol bottom_ = 0;
    AcceptMode mode_ = AcceptMode::EmptyStackAndFinal;
    std::vector<std::string> names_;
    std::vector<bool> final_;
    StateId start_ = 0;
    std::vector<PdaTransition> transitions_;
    std::vector<std::size_t> offsets_;
};

class PdaBuilder {
public:
    PdaBuilder(Alphabet input, Alphabet stack, StackSymbol bottom, AcceptMode mode);

    StateId add_state(std::string name, bool final = false);
    void set_final(StateId s, bool final) { final_.at(s) = final; }
    void set_start(StateId s) { start_ = s; }
    void add(StateId from, Symbol input, StackSymbol pop, StateId to, std::vector<StackSymbol> push);
    void add(PdaTransition t) { add(t.from, t.input, t.pop, t.to, std::move(t.push)); }

    std::size_t num_states() const noexcept { return names_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Alphabet& stack_alphabet() const noexcept { return stack_; }
    StackSymbol bottom() const noexcept { return bottom_; }

    /// Validates the bottom-marker discipline, sorts and indexes transitions.
    Pda build() &&;

private:
    Alphabet alphabet_;
    Alphabet stack_;
    StackSymbol bottom_;
    AcceptMode mode_;
    std::vector<std::string> names_;
    std::vector<bool> final_;
    StateId start_ = 0;
    std::vector<PdaTransition> transitions_;
};

/// One-to-one lift of a DFA to a PDA that never touches its stack.
Pda dfa_to_pda(const Dfa& dfa);

}  // namespace crwp
