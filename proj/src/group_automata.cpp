#include "crwp/group_automata.hpp"

#include "crwp/error.hpp"

namespace crwp {

Alphabet group_wp_alphabet(const GroupOracle& g) {
    std::vector<std::string> names = g.letters();
    names.emplace_back(kSeparator);
    return Alphabet(std::move(names));
}

namespace {

Dfa finite_wp(const GroupOracle& g) {
    const Alphabet sigma = group_wp_alphabet(g);
    const Symbol hash = static_cast<Symbol>(g.letters().size());
    const std::size_t n = g.order();
    const auto& names = g.element_names();

    DfaBuilder b(sigma);
    StateId start = b.add_state("start");
    b.set_start(start);
    std::vector<StateId> pre(n), mid(n), post(n * n);
    for (std::size_t x = 0; x < n; ++x) pre[x] = b.add_state("u:" + names[x]);
    for (std::size_t x = 0; x < n; ++x) mid[x] = b.add_state("h:" + names[x]);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) post[x * n + y] = b.add_state("v:" + names[x] + ":" + names[y], x == y);
    StateId dead = b.add_state("dead");

    const auto& table = g.table();
    const auto& gens = g.generator_elements();
    for (Symbol a = 0; a < gens.size(); ++a) {
        b.set(start, a, pre[gens[a]]);
        for (std::size_t x = 0; x < n; ++x) {
            b.set(pre[x], a, pre[table[x][gens[a]]]);
            b.set(mid[x], a, post[x * n + gens[a]]);
            for (std::size_t y = 0; y < n; ++y) b.set(post[x * n + y], a, post[x * n + table[gens[a]][y]]);
        }
    }
    b.set(start, hash, dead);
    for (std::size_t x = 0; x < n; ++x) {
        b.set(pre[x], hash, mid[x]);
        b.set(mid[x], hash, dead);
        for (std::size_t y = 0; y < n; ++y) b.set(post[x * n + y], hash, dead);
    }
    for (Symbol a = 0; a <= hash; ++a) b.set(dead, a, dead);
    return std::move(b).build();
}

Pda free_wp(const GroupOracle& g) {
    const Alphabet sigma = group_wp_alphabet(g);
    const auto letters = static_cast<Symbol>(g.letters().size());
    const Symbol hash = letters;
    // Stack symbol 0 is the bottom marker, letter l is stack symbol l + 1.
    std::vector<std::string> stack_names{"$bot"};
    for (const auto& l : g.letters()) stack_names.push_back(l);

    PdaBuilder b(sigma, Alphabet(stack_names), 0, AcceptMode::EmptyStackAndFinal);
    StateId q0 = b.add_state("q0");
    StateId q0n = b.add_state("q0n");
    StateId q1 = b.add_state("q1");
    StateId q1n = b.add_state("q1n", true);
    b.set_start(q0);
    for (StackSymbol top = 0; top <= letters; ++top) {
        for (Symbol a = 0; a < letters; ++a) {
            const StackSymbol push_a = a + 1;
            const StackSymbol push_inv = g.inverse_letter(a) + 1;
            for (StateId from : {q0, q0n}) {
                if (top == push_inv)
                    b.add(from, a, top, q0n, {});
                else
                    b.add(from, a, top, q0n, {push_a, top});
            }
            // After '#' the letters of v^rev cancel against the stack inverted.
            for (StateId from : {q1, q1n}) {
                if (top == push_a)
                    b.add(from, a, top, q1n, {});
                else
                    b.add(from, a, top, q1n, {push_inv, top});
            }
        }
        b.add(q0n, hash, top, q1, {top});
    }
    return std::move(b).build();
}

}  // namespace

Recognizer group_wp_automaton(const GroupOracle& g) {
    for (const auto& l : g.letters())
        if (l == kSeparator) throw InvalidInput("group letter may not be named '#'");
    if (g.is_finite()) return finite_wp(g);
    return free_wp(g);
}

}  // namespace crwp
