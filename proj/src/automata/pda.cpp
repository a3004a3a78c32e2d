#include "crwp/automata/pda.hpp"

#include <algorithm>
#include <tuple>

#include "crwp/error.hpp"

namespace crwp {

PdaBuilder::PdaBuilder(Alphabet input, Alphabet stack, StackSymbol bottom, AcceptMode mode)
    : alphabet_(std::move(input)), stack_(std::move(stack)), bottom_(bottom), mode_(mode) {
    if (bottom_ >= stack_.size()) throw InvalidInput("bottom marker is not a stack symbol");
}

StateId PdaBuilder::add_state(std::string name, bool final) {
    if (!is_token(name)) throw InvalidInput("invalid state name '" + name + "'");
    names_.push_back(std::move(name));
    final_.push_back(final);
    return static_cast<StateId>(names_.size() - 1);
}

void PdaBuilder::add(StateId from, Symbol input, StackSymbol pop, StateId to, std::vector<StackSymbol> push) {
    if (from >= names_.size() || to >= names_.size()) throw InvalidInput("PDA state out of range");
    if (input != kEpsilon && input >= alphabet_.size()) throw UnknownLetter(std::to_string(input));
    if (pop >= stack_.size()) throw InvalidInput("PDA stack symbol out of range");
    for (StackSymbol s : push)
        if (s >= stack_.size()) throw InvalidInput("PDA stack symbol out of range");
    transitions_.push_back(PdaTransition{from, input, pop, to, std::move(push)});
}

Pda PdaBuilder::build() && {
    if (names_.empty()) throw InvalidInput("PDA has no states");
    if (start_ >= names_.size()) throw InvalidInput("PDA start state out of range");
    for (const auto& t : transitions_) {
        auto bottoms = std::count(t.push.begin(), t.push.end(), bottom_);
        if (t.pop == bottom_) {
            if (t.push.empty() || t.push.back() != bottom_ || bottoms != 1)
                throw InvalidInput("transition from '" + names_[t.from] + "' does not restore the bottom marker");
        } else if (bottoms != 0) {
            throw InvalidInput("transition from '" + names_[t.from] + "' pushes the bottom marker");
        }
    }
    auto key = [](const PdaTransition& t) { return std::tie(t.from, t.pop, t.input, t.to, t.push); };
    std::sort(transitions_.begin(), transitions_.end(),
              [&](const PdaTransition& a, const PdaTransition& b) { return key(a) < key(b); });
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    Pda p;
    const std::size_t buckets = names_.size() * stack_.size();
    p.offsets_.assign(buckets + 1, 0);
    for (const auto& t : transitions_) ++p.offsets_[static_cast<std::size_t>(t.from) * stack_.size() + t.pop + 1];
    for (std::size_t k = 0; k < buckets; ++k) p.offsets_[k + 1] += p.offsets_[k];

    p.alphabet_ = std::move(alphabet_);
    p.stack_ = std::move(stack_);
    p.bottom_ = bottom_;
    p.mode_ = mode_;
    p.names_ = std::move(names_);
    p.final_ = std::move(final_);
    p.start_ = start_;
    p.transitions_ = std::move(transitions_);
    return p;
}

Pda dfa_to_pda(const Dfa& dfa) {
    PdaBuilder b(dfa.alphabet(), Alphabet({"$bot"}), 0, AcceptMode::EmptyStackAndFinal);
    for (StateId s = 0; s < dfa.num_states(); ++s) b.add_state(dfa.state_name(s), dfa.accepting(s));
    b.set_start(dfa.start());
    for (StateId s = 0; s < dfa.num_states(); ++s)
        for (Symbol a = 0; a < dfa.alphabet().size(); ++a) b.add(s, a, 0, dfa.next(s, a), {0});
    return std::move(b).build();
}

}  // namespace crwp
