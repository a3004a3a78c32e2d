#include "crwp/automata/gsm.hpp"

#include <algorithm>
#include <tuple>

#include "crwp/error.hpp"

namespace crwp {

const GsmTransition* Gsm::find(StateId from, Symbol input) const {
    auto first = transitions_.begin() + static_cast<std::ptrdiff_t>(offsets_[from]);
    auto last = transitions_.begin() + static_cast<std::ptrdiff_t>(offsets_[from + 1]);
    auto it = std::lower_bound(first, last, input, [](const GsmTransition& t, Symbol a) { return t.input < a; });
    if (it == last || it->input != input) return nullptr;
    return &*it;
}

StateId GsmBuilder::add_state(std::string name, bool final) {
    if (!is_token(name)) throw InvalidInput("invalid state name '" + name + "'");
    names_.push_back(std::move(name));
    final_.push_back(final);
    return static_cast<StateId>(names_.size() - 1);
}

void GsmBuilder::add(StateId from, Symbol input, StateId to, Word output) {
    if (from >= names_.size() || to >= names_.size()) throw InvalidInput("GSM state out of range");
    if (input != kEpsilon && input >= input_.size()) throw UnknownLetter(std::to_string(input));
    for (Symbol o : output)
        if (o >= output_.size()) throw UnknownLetter(std::to_string(o));
    transitions_.push_back(GsmTransition{from, input, to, std::move(output)});
}

Gsm GsmBuilder::build() && {
    if (names_.empty()) throw InvalidInput("GSM has no states");
    std::sort(transitions_.begin(), transitions_.end(), [](const GsmTransition& a, const GsmTransition& b) {
        return std::tie(a.from, a.input) < std::tie(b.from, b.input);
    });
    std::vector<bool> has_out(names_.size(), false);
    for (std::size_t k = 0; k < transitions_.size(); ++k) {
        const auto& t = transitions_[k];
        has_out[t.from] = true;
        if (k > 0 && transitions_[k - 1].from == t.from && transitions_[k - 1].input == t.input)
            throw InvalidInput("GSM is not deterministic at state '" + names_[t.from] + "'");
    }
    for (const auto& t : transitions_) {
        if (t.input != kEpsilon) continue;
        if (!final_[t.to] || has_out[t.to])
            throw InvalidInput("epsilon move of GSM state '" + names_[t.from] + "' must reach a final sink");
        // a final state with an epsilon exit would have two accepting runs
        if (final_[t.from]) throw InvalidInput("final GSM state '" + names_[t.from] + "' has an epsilon move");
    }
    Gsm g;
    g.offsets_.assign(names_.size() + 1, 0);
    for (const auto& t : transitions_) ++g.offsets_[t.from + 1];
    for (std::size_t k = 0; k < names_.size(); ++k) g.offsets_[k + 1] += g.offsets_[k];
    g.input_ = std::move(input_);
    g.output_ = std::move(output_);
    g.names_ = std::move(names_);
    g.final_ = std::move(final_);
    g.start_ = start_;
    g.transitions_ = std::move(transitions_);
    return g;
}

}  // namespace crwp
