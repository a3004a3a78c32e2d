#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crwp/automata/alphabet.hpp"
#include "crwp/automata/dfa.hpp"

namespace crwp {

struct GsmTransition {
    StateId from = 0;
    Symbol input = kEpsilon;
    StateId to = 0;
    Word output;
};

/// Generalized sequential machine, restricted to the deterministic shape: at
/// most one transition per (state, letter), and at most one epsilon move per
/// state, which must lead from a non-final state to a final state without
/// outgoing transitions.
class Gsm {
public:
    const Alphabet& input() const noexcept { return input_; }
    const Alphabet& output() const noexcept { return output_; }
    std::size_t num_states() const noexcept { return names_.size(); }
    const std::string& state_name(StateId s) const { return names_.at(s); }
    StateId start() const noexcept { return start_; }
    bool is_final(StateId s) const { return final_.at(s); }
    std::span<const GsmTransition> transitions() const noexcept { return transitions_; }
    std::span<const GsmTransition> transitions_from(StateId s) const {
        return {transitions_.data() + offsets_.at(s), transitions_.data() + offsets_.at(s + 1)};
    }

    const GsmTransition* find(StateId from, Symbol input) const;
    const GsmTransition* epsilon(StateId from) const { return find(from, kEpsilon); }

private:
    friend class GsmBuilder;
    Alphabet input_;
    Alphabet output_;
    std::vector<std::string> names_;
    std::vector<bool> final_;
    StateId start_ = 0;
    std::vector<GsmTransition> transitions_;
    std::vector<std::size_t> offsets_;
};

class GsmBuilder {
public:
    GsmBuilder(Alphabet input, Alphabet output) : input_(std::move(input)), output_(std::move(output)) {}

    StateId add_state(std::string name, bool final = false);
    void set_start(StateId s) { start_ = s; }
    void set_final(StateId s, bool final) { final_.at(s) = final; }
    void add(StateId from, Symbol input, StateId to, Word output);
    std::size_t num_states() const noexcept { return names_.size(); }

    Gsm build() &&;

private:
    Alphabet input_;
    Alphabet output_;
    std::vector<std::string> names_;
    std::vector<bool> final_;
    StateId start_ = 0;
    std::vector<GsmTransition> transitions_;
};

}  // namespace crwp
