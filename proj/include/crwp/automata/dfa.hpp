#pragma once

#include <span>
#include <string>
#include <vector>

#include "crwp/automata/alphabet.hpp"

namespace crwp {

using StateId = std::uint32_t;

/// Complete deterministic finite automaton.
class Dfa {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    const std::string& state_name(StateId s) const { return names_.at(s); }
    StateId start() const noexcept { return start_; }
    bool accepting(StateId s) const { return accepting_.at(s); }
    StateId next(StateId s, Symbol a) const { return delta_[static_cast<std::size_t>(s) * alphabet_.size() + a]; }

    bool accepts(std::span<const Symbol> word) const;
    bool accepts_names(std::span<const std::string> word) const { return accepts(alphabet_.encode(word)); }

    static Dfa universal(Alphabet alphabet);
    static Dfa empty(Alphabet alphabet);

private:
    friend class DfaBuilder;
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<bool> accepting_;
    std::vector<StateId> delta_;
    StateId start_ = 0;
};

class DfaBuilder {
public:
    explicit DfaBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    StateId add_state(std::string name, bool accepting = false);
    void set_accepting(StateId s, bool accepting) { accepting_.at(s) = accepting; }
    void set_start(StateId s) { start_ = s; }
    void set(StateId from, Symbol a, StateId to);
    std::size_t num_states() const noexcept { return names_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    /// Routes every missing transition to a fresh rejecting sink.
    void complete_with_sink(std::string name = "dead");
    /// Throws InvalidInput if any transition is missing.
    Dfa build() &&;

private:
    static constexpr StateId kUnset = static_cast<StateId>(-1);
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<bool> accepting_;
    std::vector<StateId> delta_;
    StateId start_ = 0;
};

}  // namespace crwp
