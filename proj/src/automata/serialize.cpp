#include "crwp/automata/serialize.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace crwp {

namespace {

std::string letter_or_eps(const Alphabet& a, Symbol s) {
    return s == kEpsilon ? std::string(kEpsilonName) : a.name(s);
}

std::string word_or_eps(const Alphabet& a, std::span<const Symbol> w) {
    if (w.empty()) return std::string(kEpsilonName);
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += a.name(w[k]);
    }
    return out;
}

void write_sorted(std::ostream& os, std::vector<std::string> lines) {
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) os << l << '\n';
}

template <typename F>
std::string sorted_states(std::size_t n, F&& pick) {
    std::vector<std::string> names;
    for (StateId s = 0; s < n; ++s)
        if (auto name = pick(s)) names.push_back(*name);
    std::sort(names.begin(), names.end());
    return join_tokens(names);
}

}  // namespace

void write_pda(std::ostream& os, const Pda& m) {
    os << "pda\n";
    os << "alphabet " << join_tokens(m.alphabet().names()) << '\n';
    os << "stack " << join_tokens(m.stack_alphabet().names()) << '\n';
    os << "bottom " << m.stack_alphabet().name(m.bottom()) << '\n';
    os << "mode " << (m.mode() == AcceptMode::FinalState ? "final-state" : "empty-stack-and-final") << '\n';
    os << "start " << m.state_name(m.start()) << '\n';
    os << "final "
       << sorted_states(m.num_states(),
                        [&](StateId s) { return m.is_final(s) ? std::optional(m.state_name(s)) : std::nullopt; })
       << '\n';
    std::vector<std::string> lines;
    lines.reserve(m.transitions().size());
    for (const auto& t : m.transitions()) {
        std::vector<Symbol> push(t.push.begin(), t.push.end());
        lines.push_back(m.state_name(t.from) + " , " + letter_or_eps(m.alphabet(), t.input) + " , " +
                        m.stack_alphabet().name(t.pop) + " -> " + m.state_name(t.to) + " , " +
                        word_or_eps(m.stack_alphabet(), push));
    }
    write_sorted(os, std::move(lines));
}

void write_dfa(std::ostream& os, const Dfa& d) {
    os << "dfa\n";
    os << "alphabet " << join_tokens(d.alphabet().names()) << '\n';
    os << "start " << d.state_name(d.start()) << '\n';
    os << "accepting "
       << sorted_states(d.num_states(),
                        [&](StateId s) { return d.accepting(s) ? std::optional(d.state_name(s)) : std::nullopt; })
       << '\n';
    std::vector<std::string> lines;
    for (StateId s = 0; s < d.num_states(); ++s)
        for (Symbol a = 0; a < d.alphabet().size(); ++a)
            lines.push_back(d.state_name(s) + " , " + d.alphabet().name(a) + " -> " + d.state_name(d.next(s, a)));
    write_sorted(os, std::move(lines));
}

void write_gsm(std::ostream& os, const Gsm& g) {
    os << "gsm\n";
    os << "input " << join_tokens(g.input().names()) << '\n';
    os << "output " << join_tokens(g.output().names()) << '\n';
    os << "start " << g.state_name(g.start()) << '\n';
    os << "final "
       << sorted_states(g.num_states(),
                        [&](StateId s) { return g.is_final(s) ? std::optional(g.state_name(s)) : std::nullopt; })
       << '\n';
    std::vector<std::string> lines;
    for (const auto& t : g.transitions())
        lines.push_back(g.state_name(t.from) + " , " + letter_or_eps(g.input(), t.input) + " -> " +
                        g.state_name(t.to) + " , " + word_or_eps(g.output(), t.output));
    write_sorted(os, std::move(lines));
}

void write_recognizer(std::ostream& os, const Recognizer& r) {
    if (const auto* d = std::get_if<Dfa>(&r))
        write_dfa(os, *d);
    else
        write_pda(os, std::get<Pda>(r));
}

std::string to_text(const Pda& m) {
    std::ostringstream os;
    write_pda(os, m);
    return os.str();
}

std::string to_text(const Dfa& d) {
    std::ostringstream os;
    write_dfa(os, d);
    return os.str();
}

std::string to_text(const Gsm& g) {
    std::ostringstream os;
    write_gsm(os, g);
    return os.str();
}

}  // namespace crwp
