#include "crwp/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "crwp/automata/ops.hpp"
#include "crwp/error.hpp"

namespace crwp {

Alphabet wp_alphabet(const CRSemigroup& s) {
    std::vector<std::string> names = s.alphabet().names();
    names.emplace_back(kSeparator);
    return Alphabet(std::move(names));
}

HClassTask make_task(const CRSemigroup& s, std::size_t alpha, std::size_t i, std::size_t lambda) {
    const ReesComponent& c = s.component(alpha);
    auto [ev, fv] = c.idempotents_for_hclass(i, lambda);
    ReesComponent ext = c;
    auto ensure = [&](const ReesElement& v) {
        if (auto k = ext.find_generator(v)) return *k;
        std::string name = c.name() + ".1";
        while (s.alphabet().find(name) || ext.find_generator(name)) name += "'";
        ext = ext.with_generator({name, v});
        return ext.generators().size() - 1;
    };
    std::size_t e = ensure(ev);
    std::size_t f = ensure(fv);
    return HClassTask{alpha, i, lambda, std::move(ext), e, f};
}

std::vector<HClassTask> all_tasks(const CRSemigroup& s) {
    std::vector<HClassTask> out;
    for (std::size_t a = 0; a < s.num_components(); ++a)
        for (std::size_t i = 0; i < s.component(a).num_i(); ++i)
            for (std::size_t l = 0; l < s.component(a).num_lambda(); ++l) out.push_back(make_task(s, a, i, l));
    return out;
}

std::optional<std::size_t> FactorTable::column(Symbol y) const {
    auto it = std::find(domain.begin(), domain.end(), y);
    if (it == domain.end()) return std::nullopt;
    return static_cast<std::size_t>(it - domain.begin());
}

const FactorEntry& FactorTable::at(std::size_t x, Symbol y) const {
    auto k = column(y);
    if (!k) throw InvalidInput("letter outside the factor table's domain");
    return entries.at(x).at(*k);
}

FactorTable::WordSet FactorTable::w_words() const {
    WordSet out;
    for (const auto& row : entries)
        for (const auto& e : row) out.insert(e.w);
    return out;
}

FactorTable::WordSet FactorTable::z_words() const {
    WordSet out;
    for (const auto& row : entries)
        for (const auto& e : row) out.insert(e.z);
    return out;
}

std::set<std::size_t> FactorTable::t_letters() const {
    std::set<std::size_t> out;
    for (const auto& row : entries)
        for (const auto& e : row) out.insert(e.t);
    return out;
}

std::set<std::size_t> FactorTable::s_letters() const {
    std::set<std::size_t> out;
    for (const auto& row : entries)
        for (const auto& e : row) out.insert(e.s);
    return out;
}

FactorTable::WordSet FactorTable::w_words_of(std::size_t x) const {
    WordSet out;
    for (const auto& e : entries.at(x)) out.insert(e.w);
    return out;
}

FactorTable::WordSet FactorTable::z_words_of(std::size_t x) const {
    WordSet out;
    for (const auto& e : entries.at(x)) out.insert(e.z);
    return out;
}

FactorTable build_factor_table(const CRSemigroup& s, const HClassTask& task) {
    const Semilattice& y = s.semilattice();
    const ReesComponent& c = task.component;
    FactorTable ft;
    for (Symbol l = 0; l < s.alphabet().size(); ++l)
        if (y.leq(task.alpha, s.letter(l).component)) ft.domain.push_back(l);
    ft.entries.resize(c.generators().size());
    for (std::size_t x = 0; x < c.generators().size(); ++x) {
        const CRElement xe{task.alpha, c.generator_value(x)};
        for (Symbol l : ft.domain) {
            const GlobalLetter& gl = s.letter(l);
            FactorEntry entry;
            if (gl.component == task.alpha) {
                entry.w = {x};
                entry.t = gl.generator;
                entry.s = gl.generator;
                entry.z = {x};
            } else {
                const CRElement ye = s.letter_value(l);
                std::vector<std::size_t> right = c.representative(s.star_multiply(xe, ye).value);
                std::vector<std::size_t> left = c.representative(s.star_multiply(ye, xe).value);
                entry.t = right.back();
                right.pop_back();
                entry.w = std::move(right);
                entry.s = left.front();
                entry.z.assign(left.begin() + 1, left.end());
            }
            ft.entries[x].push_back(std::move(entry));
        }
    }
    return ft;
}

namespace {

Alphabet task_output_alphabet(const HClassTask& task) {
    std::vector<std::string> names;
    for (const auto& g : task.component.generators()) names.push_back(g.name);
    names.emplace_back(kSeparator);
    return Alphabet(std::move(names));
}

Word as_word(const std::vector<std::size_t>& w) { return Word(w.begin(), w.end()); }

}  // namespace

Gsm build_gsm(const CRSemigroup& s, const HClassTask& task, const FactorTable& ft) {
    const Alphabet in = wp_alphabet(s);
    const Alphabet out = task_output_alphabet(task);
    const Symbol in_hash = in.at(kSeparator);
    const Symbol out_hash = out.at(kSeparator);
    const auto& gens = task.component.generators();
    const std::size_t n = gens.size();

    GsmBuilder b(in, out);
    std::vector<StateId> pre(n), post(n);
    for (std::size_t x = 0; x < n; ++x) pre[x] = b.add_state(gens[x].name);
    for (std::size_t x = 0; x < n; ++x) post[x] = b.add_state(gens[x].name + "'");
    const StateId fin = b.add_state("$", true);
    b.set_start(pre[task.e]);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t k = 0; k < ft.domain.size(); ++k) {
            const FactorEntry& e = ft.entries[x][k];
            b.add(pre[x], ft.domain[k], pre[e.t], as_word(e.w));
            Word zr(e.z.rbegin(), e.z.rend());
            b.add(post[x], ft.domain[k], post[e.s], std::move(zr));
        }
        b.add(pre[x], in_hash, post[task.f], {static_cast<Symbol>(x), out_hash});
        b.add(post[x], kEpsilon, fin, {static_cast<Symbol>(x)});
    }
    return std::move(b).build();
}

Dfa build_regex_dfa(const HClassTask& task, const FactorTable& ft) {
    Nfa nfa;
    nfa.alphabet = task_output_alphabet(task);
    const Symbol hash = nfa.alphabet.at(kSeparator);
    const StateId q0 = nfa.add_state();
    const StateId q1 = nfa.add_state();
    const StateId q2 = nfa.add_state();
    const StateId q3 = nfa.add_state();
    const StateId q4 = nfa.add_state();
    const StateId q5 = nfa.add_state(true);
    nfa.start = q0;
    for (const auto& w : ft.w_words_of(task.e)) nfa.add_path(q0, as_word(w), q1);
    for (const auto& w : ft.w_words()) nfa.add_path(q1, as_word(w), q1);
    for (std::size_t t : ft.t_letters()) nfa.add_path(q1, Word{static_cast<Symbol>(t)}, q2);
    nfa.add_path(q2, Word{hash}, q3);
    for (const auto& z : ft.z_words_of(task.f)) nfa.add_path(q3, Word(z.rbegin(), z.rend()), q4);
    for (const auto& z : ft.z_words()) nfa.add_path(q4, Word(z.rbegin(), z.rend()), q4);
    for (std::size_t s : ft.s_letters()) nfa.add_path(q4, Word{static_cast<Symbol>(s)}, q5);
    return determinize(nfa);
}

Dfa build_l2_dfa(const CRSemigroup& s, const HClassTask& task) {
    const Semilattice& y = s.semilattice();
    const ReesComponent& c = s.component(task.alpha);
    const std::size_t ni = c.num_i(), nl = c.num_lambda();
    const Alphabet sigma = wp_alphabet(s);
    const Symbol hash = sigma.at(kSeparator);

    // Projection of each letter's image in the hull of alpha onto T(I) x T'(Lambda).
    struct Proj {
        bool live;
        std::size_t comp;
        std::vector<std::size_t> chi_i, chi_l;
    };
    std::vector<Proj> proj;
    for (Symbol l = 0; l < s.alphabet().size(); ++l) {
        const GlobalLetter& gl = s.letter(l);
        if (!y.leq(task.alpha, gl.component)) {
            proj.push_back({false, gl.component, {}, {}});
        } else if (gl.component == task.alpha) {
            const ReesElement v = c.generator_value(gl.generator);
            proj.push_back({true, gl.component, std::vector<std::size_t>(ni, v.i), std::vector<std::size_t>(nl, v.lambda)});
        } else {
            const Bitranslation& t = s.image(gl.component, gl.generator, task.alpha);
            proj.push_back({true, gl.component, t.chi_i, t.chi_lambda});
        }
    }

    // Key layout: side, meet (or npos before the first letter), chi_i, chi_l.
    using Key = std::vector<std::size_t>;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    DfaBuilder b(sigma);
    std::map<Key, StateId> ids;
    std::vector<Key> work;
    auto name_of = [&](const Key& k) {
        std::string out = k[0] == 0 ? "u" : "v";
        if (k[1] == kNone) return out + ":start";
        out += ":" + y.name(k[1]) + ":";
        for (std::size_t j = 0; j < ni; ++j) out += (j ? "/" : "") + std::to_string(k[2 + j] + 1);
        out += ":";
        for (std::size_t j = 0; j < nl; ++j) out += (j ? "/" : "") + std::to_string(k[2 + ni + j] + 1);
        return out;
    };
    auto in_hclass = [&](const Key& k) {
        if (k[1] != task.alpha) return false;
        for (std::size_t j = 0; j < ni; ++j)
            if (k[2 + j] != task.i) return false;
        for (std::size_t j = 0; j < nl; ++j)
            if (k[2 + ni + j] != task.lambda) return false;
        return true;
    };
    auto state = [&](const Key& k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        StateId id = b.add_state(name_of(k), k[0] == 1 && in_hclass(k));
        ids.emplace(k, id);
        work.push_back(k);
        return id;
    };
    const StateId dead = b.add_state("dead");
    for (Symbol a = 0; a < sigma.size(); ++a) b.set(dead, a, dead);
    b.set_start(state({0, kNone}));

    while (!work.empty()) {
        const Key k = work.back();
        work.pop_back();
        const StateId from = ids.at(k);
        const bool post = k[0] == 1;
        for (Symbol l = 0; l < s.alphabet().size(); ++l) {
            const Proj& p = proj[l];
            if (!p.live) {
                b.set(from, l, dead);
                continue;
            }
            Key next{k[0], 0};
            next.resize(2 + ni + nl);
            if (k[1] == kNone) {
                next[1] = p.comp;
                std::copy(p.chi_i.begin(), p.chi_i.end(), next.begin() + 2);
                std::copy(p.chi_l.begin(), p.chi_l.end(), next.begin() + 2 + ni);
            } else {
                next[1] = y.meet(k[1], p.comp);
                for (std::size_t j = 0; j < ni; ++j)
                    next[2 + j] = post ? p.chi_i[k[2 + j]] : k[2 + p.chi_i[j]];
                for (std::size_t j = 0; j < nl; ++j)
                    next[2 + ni + j] = post ? k[2 + ni + p.chi_l[j]] : p.chi_l[k[2 + ni + j]];
            }
            b.set(from, l, state(next));
        }
        if (!post && k[1] != kNone && in_hclass(k))
            b.set(from, hash, state({1, kNone}));
        else
            b.set(from, hash, dead);
    }
    return std::move(b).build();
}

Pda build_l1_pda(const CRSemigroup& s, const HClassTask& task, const FactorTable& ft) {
    const Gsm gsm = build_gsm(s, task, ft);
    const Pda shaped = pda_intersect_dfa(component_wp_recognizer(task.component), build_regex_dfa(task, ft));
    return gsm_inverse_image(gsm, shaped);
}

Pda build_hclass_recognizer(const CRSemigroup& s, const HClassTask& task, const PipelineHooks& hooks) {
    FactorTable ft = build_factor_table(s, task);
    if (hooks.tamper_factor) hooks.tamper_factor(task, ft);
    return pda_intersect_dfa(build_l1_pda(s, task, ft), build_l2_dfa(s, task));
}

Pda build_wp_recognizer(const CRSemigroup& s, const PipelineHooks& hooks) {
    const std::vector<HClassTask> tasks = all_tasks(s);
    std::vector<std::optional<Pda>> parts(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const auto n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        try {
            parts[k] = build_hclass_recognizer(s, tasks[k], hooks);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Pda> machines;
    for (auto& p : parts) machines.push_back(std::move(*p));
    return pda_union(machines);
}

}  // namespace crwp
