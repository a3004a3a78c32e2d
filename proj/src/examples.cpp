#include "crwp/examples.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "crwp/error.hpp"

namespace crwp {

namespace {
constexpr Symbol kX = 0, kXInv = 1, kT0 = 2;
constexpr Symbol kY = 2, kYInv = 3, kB0 = 4;
}  // namespace

Alphabet ex1_alphabet() { return Alphabet({"x", "x^-1", "t0"}); }

Ex1Element ex1_multiply(const Ex1Element& a, const Ex1Element& b) {
    if (b.kind == Ex1Element::Kind::Const) return b;
    return {a.kind, a.value + b.value};
}

Ex1Element ex1_evaluate(std::span<const Symbol> word) {
    if (word.empty()) throw InvalidInput("empty word has no value in a semigroup");
    Ex1Element acc;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Ex1Element v;
        switch (word[k]) {
            case kX: v = Ex1Element::shift(1); break;
            case kXInv: v = Ex1Element::shift(-1); break;
            case kT0: v = Ex1Element::constant(0); break;
            default: throw UnknownLetter(std::to_string(word[k]));
        }
        acc = k == 0 ? v : ex1_multiply(acc, v);
    }
    return acc;
}

Ex1Element ex1_evaluate_names(std::span<const std::string> word) { return ex1_evaluate(ex1_alphabet().encode(word)); }

std::string ex1_format(const Ex1Element& a) {
    return (a.kind == Ex1Element::Kind::Shift ? "shift(" : "const(") + std::to_string(a.value) + ")";
}

Pda ex1_pda() {
    std::vector<std::string> names = ex1_alphabet().names();
    names.emplace_back(kSeparator);
    const Alphabet sigma(names);
    const Symbol hash = 3;
    constexpr StackSymbol bot = 0, plus = 1, minus = 2;
    PdaBuilder b(sigma, Alphabet({"$bot", "+", "-"}), bot, AcceptMode::EmptyStackAndFinal);
    const StateId q0 = b.add_state("q0");
    const StateId p0 = b.add_state("p0");
    const StateId erase = b.add_state("erase");
    const StateId q1 = b.add_state("q1", true);
    const StateId p1 = b.add_state("p1");
    const StateId p2 = b.add_state("p2", true);
    b.set_start(q0);

    // Net exponent on the stack as a run of + or - over the bottom marker.
    auto count = [&](StateId s, Symbol up, Symbol down) {
        for (auto [letter, same, other] : {std::tuple{up, plus, minus}, std::tuple{down, minus, plus}}) {
            b.add(s, letter, other, s, {});
            b.add(s, letter, same, s, {same, same});
            b.add(s, letter, bot, s, {same, bot});
        }
    };
    count(q0, kX, kXInv);
    count(p0, kX, kXInv);
    // After # a letter of v^rev cancels against the stack with opposite sign.
    count(q1, kXInv, kX);
    count(p1, kXInv, kX);
    for (StackSymbol top : {bot, plus, minus}) {
        b.add(q0, kT0, top, erase, {top});
        b.add(p0, kT0, top, erase, {top});
        b.add(q0, hash, top, q1, {top});
        b.add(p0, hash, top, p1, {top});
    }
    b.add(erase, kEpsilon, plus, erase, {});
    b.add(erase, kEpsilon, minus, erase, {});
    b.add(erase, kEpsilon, bot, p0, {bot});
    b.add(p1, kT0, bot, p2, {bot});
    for (Symbol a : {kX, kXInv, kT0}) b.add(p2, a, bot, p2, {bot});
    return std::move(b).build();
}

Alphabet ex2_alphabet() { return Alphabet({"x", "x^-1", "y", "y^-1", "b0"}); }

namespace {

// Position of i on the y-chain: 0 -> 0, 2^(p-1) -> p, -2^(-p-1) -> p.
std::optional<std::int64_t> chain_position(std::int64_t i) {
    if (i == 0) return 0;
    const std::uint64_t m = i > 0 ? static_cast<std::uint64_t>(i) : static_cast<std::uint64_t>(-(i + 1)) + 1;
    if ((m & (m - 1)) != 0) return std::nullopt;
    std::int64_t p = 1;
    for (std::uint64_t v = m; v > 1; v >>= 1) ++p;
    return i > 0 ? p : -p;
}

std::int64_t chain_index(std::int64_t p) {
    if (p == 0) return 0;
    const std::int64_t m = p > 0 ? p : -p;
    if (m > 62) throw InvalidInput("idempotent index out of range");
    const std::int64_t v = std::int64_t{1} << (m - 1);
    return p > 0 ? v : -v;
}

}  // namespace

std::int64_t ex2_act(std::uint32_t letter, std::int64_t index) {
    switch (letter) {
        case kX: return index + 1;
        case kXInv: return index - 1;
        case kY:
        case kYInv: {
            auto p = chain_position(index);
            if (!p) return index;
            return chain_index(letter == kY ? *p + 1 : *p - 1);
        }
        default: throw UnknownLetter(std::to_string(letter));
    }
}

Ex2Element ex2_multiply(const Ex2Element& a, const Ex2Element& b) {
    if (a.idempotent) return a;
    if (b.idempotent) {
        std::int64_t i = b.index;
        for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) i = ex2_act(*it, i);
        return Ex2Element::idem(i);
    }
    Ex2Element out = a;
    for (std::uint32_t l : b.word) {
        if (!out.word.empty() && out.word.back() == (l ^ 1u))
            out.word.pop_back();
        else
            out.word.push_back(l);
    }
    return out;
}

Ex2Element ex2_evaluate(std::span<const Symbol> word) {
    if (word.empty()) throw InvalidInput("empty word has no value in a semigroup");
    Ex2Element acc;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] > kB0) throw UnknownLetter(std::to_string(word[k]));
        Ex2Element v = word[k] == kB0 ? Ex2Element::idem(0) : Ex2Element{false, {word[k]}, 0};
        acc = k == 0 ? v : ex2_multiply(acc, v);
    }
    return acc;
}

Ex2Element ex2_evaluate_names(std::span<const std::string> word) { return ex2_evaluate(ex2_alphabet().encode(word)); }

std::string ex2_format(const Ex2Element& a) {
    if (a.idempotent) return "b" + std::to_string(a.index);
    if (a.word.empty()) return "1";
    return join_tokens(ex2_alphabet().decode(a.word));
}

std::vector<std::vector<std::string>> ex2_slice(std::size_t max_len) {
    const Alphabet sigma = ex2_alphabet();
    std::vector<std::vector<std::string>> out;
    for (std::size_t n = 0; n + 2 <= max_len; ++n) {
        Word v(n, kY);
        v.push_back(kB0);
        Ex2Element rhs;
        try {
            rhs = ex2_evaluate(v);
        } catch (const InvalidInput&) {
            continue;  // index beyond 2^62, no x-run of admissible length reaches it
        }
        for (std::size_t k = 0; k + n + 2 <= max_len; ++k) {
            Word u(k, kX);
            u.push_back(kB0);
            if (ex2_evaluate(u) != rhs) continue;
            std::vector<std::string> w(k, "x");
            w.insert(w.end(), {"b0", std::string(kSeparator), "b0"});
            w.insert(w.end(), n, "y");
            out.push_back(std::move(w));
        }
    }
    return out;
}

GapReport ex2_gap_check(const std::vector<std::vector<std::string>>& slice) {
    GapReport r;
    std::map<std::size_t, std::size_t> by_n;
    for (const auto& w : slice) {
        std::size_t k = 0;
        while (k < w.size() && w[k] == "x") ++k;
        if (w.size() < k + 3 || w[k] != "b0" || w[k + 1] != kSeparator || w[k + 2] != "b0") {
            r.reason = "word '" + join_tokens(w) + "' is not of the form x^k b0 # b0 y^n";
            return r;
        }
        const std::size_t n = w.size() - k - 3;
        for (std::size_t j = k + 3; j < w.size(); ++j) {
            if (w[j] != "y") {
                r.reason = "word '" + join_tokens(w) + "' is not of the form x^k b0 # b0 y^n";
                return r;
            }
        }
        if (n == 0) continue;
        auto [it, fresh] = by_n.emplace(n, k);
        if (!fresh && it->second != k) {
            r.reason = "y-run " + std::to_string(n) + " pairs with two x-runs";
            return r;
        }
    }
    r.runs.assign(by_n.begin(), by_n.end());
    if (r.runs.size() < 2) {
        r.reason = "fewer than two nontrivial entries";
        return r;
    }
    std::vector<std::size_t> ks;
    for (auto [n, k] : r.runs) ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end()) {
        r.reason = "x-run is not injective in the y-run";
        return r;
    }
    for (std::size_t j = 1; j < r.runs.size(); ++j) {
        const auto [n0, k0] = r.runs[j - 1];
        const auto [n1, k1] = r.runs[j];
        if (n1 != n0 + 1) {
            r.reason = "y-runs " + std::to_string(n0) + " and " + std::to_string(n1) + " are not consecutive";
            return r;
        }
        if (k1 != 2 * k0) {
            r.reason = "x-run ratio " + std::to_string(k1) + "/" + std::to_string(k0) + " at y-run " + std::to_string(n1) +
                       " is not 2";
            return r;
        }
    }
    r.pass = true;
    return r;
}

}  // namespace crwp
