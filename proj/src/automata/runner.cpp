#include "crwp/automata/runner.hpp"

#include "crwp/error.hpp"

namespace crwp {

void PdaRunner::Layer::clear() {
    calls.clear();
    call_set.clear();
    waiting.clear();
    local_pops.clear();
    pops.clear();
    agenda.clear();
}

PdaRunner::PdaRunner(const Pda& pda) : pda_(&pda), stack_size_(pda.stack_alphabet().size()) { reset(); }

void PdaRunner::reset() {
    if (layers_.empty()) layers_.resize(1);
    layers_[0].clear();
    used_ = 1;
    add_call(0, pda_->start(), pda_->bottom());
    close(0);
}

void PdaRunner::add_call(std::size_t j, StateId s, StackSymbol a) {
    Layer& L = layer(j);
    std::uint64_t key = pack(s, a);
    if (!L.call_set.insert(key).second) return;
    L.calls.push_back(key);
    L.agenda.push_back(Item{true, 0, key, 0});
}

void PdaRunner::add_pop(std::size_t j, std::uint32_t origin, std::uint64_t key, StateId target) {
    Layer& L = layer(j);
    if (!L.pops.insert(PopKey{key, (static_cast<std::uint64_t>(origin) << 32) | target}).second) return;
    if (origin == j) L.local_pops[key].push_back(target);
    L.agenda.push_back(Item{false, origin, key, target});
}

void PdaRunner::wait(std::size_t j, const Cont& c, StateId s, StackSymbol a) {
    std::uint64_t key = pack(s, a);
    layer(j).waiting[key].push_back(c);
    add_call(j, s, a);
    // Sub-runs from (s, a) that already finished at this same position.
    auto it = layer(j).local_pops.find(key);
    if (it == layer(j).local_pops.end()) return;
    std::vector<StateId> done = it->second;
    for (StateId t : done) advance(j, c, t);
}

void PdaRunner::advance(std::size_t j, const Cont& c, StateId s) {
    const PdaTransition& t = pda_->transitions()[c.transition];
    std::uint32_t k = c.k + 1;
    if (k < t.push.size())
        wait(j, Cont{c.origin, c.state, c.top, c.transition, k}, s, t.push[k]);
    else
        add_pop(j, c.origin, pack(c.state, c.top), s);
}

void PdaRunner::apply(const PdaTransition& t, std::uint32_t origin, std::uint64_t key, std::size_t j) {
    if (t.push.empty()) {
        add_pop(j, origin, key, t.to);
        return;
    }
    auto index = static_cast<std::uint32_t>(&t - pda_->transitions().data());
    auto state = static_cast<StateId>(key / stack_size_);
    auto top = static_cast<StackSymbol>(key % stack_size_);
    wait(j, Cont{origin, state, top, index, 0}, t.to, t.push[0]);
}

void PdaRunner::close(std::size_t j) {
    while (!layer(j).agenda.empty()) {
        Item it = layer(j).agenda.back();
        layer(j).agenda.pop_back();
        if (it.is_call) {
            auto state = static_cast<StateId>(it.key / stack_size_);
            auto top = static_cast<StackSymbol>(it.key % stack_size_);
            auto ts = pda_->transitions(state, top);
            // Epsilon moves sort last.
            for (auto t = ts.rbegin(); t != ts.rend() && t->input == kEpsilon; ++t)
                apply(*t, static_cast<std::uint32_t>(j), it.key, j);
        } else {
            auto& waiting = layer(it.origin).waiting;
            auto w = waiting.find(it.key);
            if (w == waiting.end()) continue;
            if (it.origin != j) {
                // Earlier layers are frozen.
                for (const Cont& c : w->second) advance(j, c, it.target);
                continue;
            }
            // Entries appended later at this position pick the pop up from
            // local_pops, so only the current ones need advancing here.
            const std::size_t n = w->second.size();
            for (std::size_t k = 0; k < n; ++k) {
                Cont c = waiting.find(it.key)->second[k];
                advance(j, c, it.target);
            }
        }
    }
}

void PdaRunner::push(Symbol letter) {
    if (letter >= pda_->alphabet().size()) throw UnknownLetter(std::to_string(letter));
    const std::size_t j = used_ - 1;
    if (layers_.size() <= used_) layers_.resize(used_ + 1);
    layers_[used_].clear();
    ++used_;
    const std::size_t n = layer(j).calls.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t key = layer(j).calls[k];
        auto state = static_cast<StateId>(key / stack_size_);
        auto top = static_cast<StackSymbol>(key % stack_size_);
        for (const auto& t : pda_->transitions(state, top)) {
            if (t.input < letter) continue;
            if (t.input != letter) break;
            apply(t, static_cast<std::uint32_t>(j), key, j + 1);
        }
    }
    close(j + 1);
}

void PdaRunner::pop() {
    if (used_ <= 1) throw InvalidInput("PdaRunner::pop on empty input");
    --used_;
}

bool PdaRunner::accepting() const {
    const auto& L = layers_[used_ - 1];
    const bool need_empty = pda_->mode() == AcceptMode::EmptyStackAndFinal;
    for (std::uint64_t key : L.calls) {
        auto state = static_cast<StateId>(key / stack_size_);
        auto top = static_cast<StackSymbol>(key % stack_size_);
        if (pda_->is_final(state) && (!need_empty || top == pda_->bottom())) return true;
    }
    return false;
}

bool pda_membership(const Pda& pda, std::span<const Symbol> word) {
    PdaRunner r(pda);
    for (Symbol a : word) r.push(a);
    return r.accepting();
}

bool pda_membership_names(const Pda& pda, std::span<const std::string> word) {
    return pda_membership(pda, pda.alphabet().encode(word));
}

}  // namespace crwp
