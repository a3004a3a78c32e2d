#include "crwp/automata/dfa.hpp"

#include "crwp/error.hpp"

namespace crwp {

bool Dfa::accepts(std::span<const Symbol> word) const {
    StateId s = start_;
    for (Symbol a : word) {
        if (a >= alphabet_.size()) throw UnknownLetter(std::to_string(a));
        s = next(s, a);
    }
    return accepting_[s];
}

Dfa Dfa::universal(Alphabet alphabet) {
    DfaBuilder b(std::move(alphabet));
    StateId s = b.add_state("all", true);
    for (Symbol a = 0; a < b.alphabet().size(); ++a) b.set(s, a, s);
    return std::move(b).build();
}

Dfa Dfa::empty(Alphabet alphabet) {
    DfaBuilder b(std::move(alphabet));
    StateId s = b.add_state("none", false);
    for (Symbol a = 0; a < b.alphabet().size(); ++a) b.set(s, a, s);
    return std::move(b).build();
}

StateId DfaBuilder::add_state(std::string name, bool accepting) {
    if (!is_token(name)) throw InvalidInput("invalid state name '" + name + "'");
    names_.push_back(std::move(name));
    accepting_.push_back(accepting);
    delta_.resize(names_.size() * alphabet_.size(), kUnset);
    return static_cast<StateId>(names_.size() - 1);
}

void DfaBuilder::set(StateId from, Symbol a, StateId to) {
    if (from >= names_.size() || to >= names_.size()) throw InvalidInput("DFA state out of range");
    if (a >= alphabet_.size()) throw UnknownLetter(std::to_string(a));
    delta_[static_cast<std::size_t>(from) * alphabet_.size() + a] = to;
}

void DfaBuilder::complete_with_sink(std::string name) {
    bool missing = false;
    for (StateId t : delta_) missing = missing || t == kUnset;
    if (!missing) return;
    StateId sink = add_state(std::move(name), false);
    for (auto& t : delta_)
        if (t == kUnset) t = sink;
}

Dfa DfaBuilder::build() && {
    if (names_.empty()) throw InvalidInput("DFA has no states");
    if (start_ >= names_.size()) throw InvalidInput("DFA start state out of range");
    for (StateId t : delta_)
        if (t == kUnset) throw InvalidInput("DFA transition function is not total");
    Dfa d;
    d.alphabet_ = std::move(alphabet_);
    d.names_ = std::move(names_);
    d.accepting_ = std::move(accepting_);
    d.delta_ = std::move(delta_);
    d.start_ = start_;
    return d;
}

}  // namespace crwp
