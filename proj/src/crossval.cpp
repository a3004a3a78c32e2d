#include "crwp/crossval.hpp"

#include <exception>
#include <map>
#include <tuple>

#include "crwp/automata/runner.hpp"
#include "crwp/error.hpp"

namespace crwp {

std::string CrossReport::summary() const {
    std::string out = "checked " + std::to_string(checked) + ", recognizer IN " + std::to_string(accepted) +
                      ", oracle IN " + std::to_string(equal) + ", disagreements " + std::to_string(disagreements) + "\n";
    if (first)
        out += "first disagreement: " + join_tokens(first->word) + " (recognizer " + (first->recognizer ? "IN" : "OUT") +
               ", oracle " + (first->oracle ? "IN" : "OUT") + ")\n";
    return out;
}

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

struct Context {
    std::size_t n;  // number of letters
    std::size_t max_len;
    std::vector<Symbol> to_pda;
    Symbol hash;
    std::vector<std::vector<std::uint32_t>> ids;  // ids[len][rank]
};

std::size_t rank_of(std::span<const Symbol> w, std::size_t n) {
    std::size_t r = 0;
    for (Symbol a : w) r = r * n + a;
    return r;
}

std::size_t power(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    while (k--) r *= n;
    return r;
}

Word unrank(std::size_t r, std::size_t len, std::size_t n) {
    Word w(len);
    for (std::size_t k = len; k-- > 0;) {
        w[k] = static_cast<Symbol>(r % n);
        r /= n;
    }
    return w;
}

struct Tally {
    std::size_t checked = 0, accepted = 0, equal = 0, disagreements = 0;
    std::optional<Key> first;
    bool first_recognizer = false;

    void record(const Key& key, bool rec, bool orc) {
        ++checked;
        accepted += rec;
        equal += orc;
        if (rec == orc) return;
        ++disagreements;
        if (!first || key < *first) {
            first = key;
            first_recognizer = rec;
        }
    }
    void merge(const Tally& o) {
        checked += o.checked;
        accepted += o.accepted;
        equal += o.equal;
        disagreements += o.disagreements;
        if (o.first && (!first || *o.first < *first)) {
            first = o.first;
            first_recognizer = o.first_recognizer;
        }
    }
};

Context make_context(const Pda& pda, const Alphabet& letters, const ValueOracle& oracle, std::size_t max_len) {
    Context c{letters.size(), max_len, {}, 0, {}};
    if (letters.find(kSeparator)) throw InvalidInput("letters may not contain '#'");
    for (const auto& name : letters.names()) {
        auto s = pda.alphabet().find(name);
        if (!s) throw UnknownLetter(name);
        c.to_pda.push_back(*s);
    }
    auto h = pda.alphabet().find(kSeparator);
    if (!h) throw InvalidInput("recognizer alphabet lacks '#'");
    c.hash = *h;
    c.ids.resize(max_len);
    if (c.n == 0 || max_len < 2) return c;

    std::map<std::string, std::uint32_t> intern;
    for (std::size_t len = 1; len < max_len; ++len) {
        const std::size_t count = power(c.n, len);
        std::vector<std::string> keys(count);
        std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 64)
        for (long r = 0; r < static_cast<long>(count); ++r) {
            try {
                keys[r] = oracle(unrank(static_cast<std::size_t>(r), len, c.n));
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        c.ids[len].resize(count);
        for (std::size_t r = 0; r < count; ++r)
            c.ids[len][r] = intern.emplace(keys[r], static_cast<std::uint32_t>(intern.size())).first->second;
    }
    return c;
}

std::uint32_t id_of_reverse(const Context& c, const Word& r) {
    std::size_t rank = 0;
    for (auto it = r.rbegin(); it != r.rend(); ++it) rank = rank * c.n + *it;
    return c.ids[r.size()][rank];
}

Tally run_serial(const Pda& pda, const Context& c) {
    Tally t;
    for (std::size_t lu = 1; lu < c.max_len; ++lu) {
        for (std::size_t ru = 0; ru < power(c.n, lu); ++ru) {
            const Word u = unrank(ru, lu, c.n);
            for (std::size_t lr = 1; lu + lr <= c.max_len; ++lr) {
                for (std::size_t rr = 0; rr < power(c.n, lr); ++rr) {
                    const Word r = unrank(rr, lr, c.n);
                    Word w;
                    for (Symbol a : u) w.push_back(c.to_pda[a]);
                    w.push_back(c.hash);
                    for (Symbol a : r) w.push_back(c.to_pda[a]);
                    const bool rec = pda_membership(pda, w);
                    const bool orc = c.ids[lu][ru] == id_of_reverse(c, r);
                    t.record({lu + lr, lu, ru, rr}, rec, orc);
                }
            }
        }
    }
    return t;
}

void explore(PdaRunner& runner, const Context& c, std::size_t lu, std::size_t ru, std::uint32_t uid, Word& r,
             std::size_t budget, Tally& t) {
    for (Symbol a = 0; a < c.n; ++a) {
        runner.push(c.to_pda[a]);
        r.push_back(a);
        t.record({lu + r.size(), lu, ru, rank_of(r, c.n)}, runner.accepting(), uid == id_of_reverse(c, r));
        if (budget > 1) explore(runner, c, lu, ru, uid, r, budget - 1, t);
        r.pop_back();
        runner.pop();
    }
}

Tally run_parallel(const Pda& pda, const Context& c) {
    std::vector<std::pair<std::size_t, std::size_t>> us;
    for (std::size_t lu = 1; lu < c.max_len; ++lu)
        for (std::size_t ru = 0; ru < power(c.n, lu); ++ru) us.emplace_back(lu, ru);
    Tally total;
#pragma omp parallel
    {
        PdaRunner runner(pda);
        Tally local;
        Word r;
#pragma omp for schedule(dynamic)
        for (long k = 0; k < static_cast<long>(us.size()); ++k) {
            const auto [lu, ru] = us[k];
            runner.reset();
            for (Symbol a : unrank(ru, lu, c.n)) runner.push(c.to_pda[a]);
            runner.push(c.hash);
            explore(runner, c, lu, ru, c.ids[lu][ru], r, c.max_len - lu, local);
        }
#pragma omp critical
        total.merge(local);
    }
    return total;
}

}  // namespace

CrossReport cross_validate(const Pda& recognizer, const Alphabet& letters, const ValueOracle& oracle,
                           std::size_t max_len, Kernel kernel) {
    const Context c = make_context(recognizer, letters, oracle, max_len);
    CrossReport report;
    if (c.n == 0 || max_len < 2) return report;
    const Tally t = kernel == Kernel::Serial ? run_serial(recognizer, c) : run_parallel(recognizer, c);
    report.checked = t.checked;
    report.accepted = t.accepted;
    report.equal = t.equal;
    report.disagreements = t.disagreements;
    if (t.first) {
        const auto [total, lu, ru, rr] = *t.first;
        Disagreement d;
        d.word = letters.decode(unrank(ru, lu, c.n));
        d.word.emplace_back(kSeparator);
        for (auto& name : letters.decode(unrank(rr, total - lu, c.n))) d.word.push_back(std::move(name));
        d.recognizer = t.first_recognizer;
        d.oracle = !t.first_recognizer;
        report.first = std::move(d);
    }
    return report;
}

ValueOracle semigroup_oracle(const CRSemigroup& s) {
    return [&s](std::span<const Symbol> w) { return s.format(s.evaluate(w)); };
}

}  // namespace crwp
