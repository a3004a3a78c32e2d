#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crwp/automata/pda.hpp"

namespace crwp {

/// Incremental PDA membership.
///
/// The runner keeps one layer per input position. A layer records the
/// reachable (state, stack top) pairs at that position together with the
/// stack-neutral sub-runs ("pops") that end there: a pop (i, p, A, q) says
/// that from state p at position i with A on top, the input up to here can be
/// consumed ending in state q with A removed and nothing below it touched.
/// Layers only depend on the prefix read so far, so `push`/`pop` let callers
/// share work across words with a common prefix. Epsilon cycles terminate
/// because every item is recorded at most once per layer.
class PdaRunner {
public:
    explicit PdaRunner(const Pda& pda);

    void reset();
    void push(Symbol letter);
    void pop();
    std::size_t length() const noexcept { return used_ - 1; }
    bool accepting() const;

private:
    struct Cont {
        std::uint32_t origin;
        StateId state;
        StackSymbol top;
        std::uint32_t transition;
        std::uint32_t k;  ///< index into the transition's push word now on top
    };
    struct Item {
        bool is_call;
        std::uint32_t origin;
        std::uint64_t key;  ///< packed (state, top)
        StateId target;
    };
    struct PopKey {
        std::uint64_t key;
        std::uint64_t rest;
        friend bool operator==(const PopKey&, const PopKey&) = default;
    };
    struct PopKeyHash {
        std::size_t operator()(const PopKey& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.key * 0x9E3779B97F4A7C15ull ^ k.rest);
        }
    };
    struct Layer {
        std::vector<std::uint64_t> calls;
        std::unordered_set<std::uint64_t> call_set;
        std::unordered_map<std::uint64_t, std::vector<Cont>> waiting;
        std::unordered_map<std::uint64_t, std::vector<StateId>> local_pops;
        std::unordered_set<PopKey, PopKeyHash> pops;
        std::vector<Item> agenda;
        void clear();
    };

    std::uint64_t pack(StateId s, StackSymbol a) const { return static_cast<std::uint64_t>(s) * stack_size_ + a; }
    Layer& layer(std::size_t j) { return layers_[j]; }
    void add_call(std::size_t j, StateId s, StackSymbol a);
    void add_pop(std::size_t j, std::uint32_t origin, std::uint64_t key, StateId target);
    void wait(std::size_t j, const Cont& c, StateId s, StackSymbol a);
    void advance(std::size_t j, const Cont& c, StateId s);
    void apply(const PdaTransition& t, std::uint32_t origin, std::uint64_t key, std::size_t j);
    void close(std::size_t j);

    const Pda* pda_;
    std::uint64_t stack_size_;
    std::vector<Layer> layers_;
    std::size_t used_ = 0;
};

/// True iff the machine has an accepting run on `word`.
bool pda_membership(const Pda& pda, std::span<const Symbol> word);
bool pda_membership_names(const Pda& pda, std::span<const std::string> word);

}  // namespace crwp
