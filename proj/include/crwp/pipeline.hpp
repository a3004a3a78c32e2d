#pragma once

#include <functional>
#include <set>
#include <vector>

#include "crwp/automata/dfa.hpp"
#include "crwp/automata/gsm.hpp"
#include "crwp/automata/pda.hpp"
#include "crwp/clifford.hpp"

namespace crwp {

/// Restriction of the word problem to the H-class H_{i,lambda} of component
/// alpha. `component` is the generating set of alpha extended by e and f
/// when they are missing; its first generators are those of alpha.
struct HClassTask {
    std::size_t alpha = 0;
    std::size_t i = 0;
    std::size_t lambda = 0;
    ReesComponent component;
    std::size_t e = 0;  ///< generator index of (i,1,1)
    std::size_t f = 0;  ///< generator index of (1,1,lambda)
};

HClassTask make_task(const CRSemigroup& s, std::size_t alpha, std::size_t i, std::size_t lambda);
/// All tasks in (alpha, i, lambda) lexicographic order.
std::vector<HClassTask> all_tasks(const CRSemigroup& s);

/// x * y = w t and y * x = s z, with w, z words and t, s letters over the
/// task's generators.
struct FactorEntry {
    std::vector<std::size_t> w;
    std::size_t t = 0;
    std::size_t s = 0;
    std::vector<std::size_t> z;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct FactorTable {
    /// Global letters whose component lies above or at alpha.
    std::vector<Symbol> domain;
    /// entries[x][k]: generator x of the task, letter domain[k].
    std::vector<std::vector<FactorEntry>> entries;

    std::optional<std::size_t> column(Symbol y) const;
    const FactorEntry& at(std::size_t x, Symbol y) const;

    using WordSet = std::set<std::vector<std::size_t>>;
    WordSet w_words() const;
    WordSet z_words() const;
    std::set<std::size_t> t_letters() const;
    std::set<std::size_t> s_letters() const;
    WordSet w_words_of(std::size_t x) const;
    WordSet z_words_of(std::size_t x) const;
};

FactorTable build_factor_table(const CRSemigroup& s, const HClassTask& task);

/// Input alphabet: global letters and `#`; output alphabet: the task's
/// generators and `#`. States x, x' for each generator and a final `$`.
Gsm build_gsm(const CRSemigroup& s, const HClassTask& task, const FactorTable& ft);

/// Accepts a # b over the task's generators with a in W_e W* T and b^rev in
/// S Z* Z_f, i.e. exactly the GSM's output shape.
Dfa build_regex_dfa(const HClassTask& task, const FactorTable& ft);

/// Accepts u#v^rev iff u and v are nonempty and both values lie in the
/// task's H-class. Each side tracks the meet of its letters' components and
/// the I- and Lambda-transformations of the product of their images.
Dfa build_l2_dfa(const CRSemigroup& s, const HClassTask& task);

/// Preimage under the GSM of the component word problem cut down to the
/// output shape.
Pda build_l1_pda(const CRSemigroup& s, const HClassTask& task, const FactorTable& ft);

struct PipelineHooks {
    /// Called on each factor table before any machine is built from it.
    std::function<void(const HClassTask&, FactorTable&)> tamper_factor;
};

Pda build_hclass_recognizer(const CRSemigroup& s, const HClassTask& task, const PipelineHooks& hooks = {});

/// Union of all H-class recognizers. Tasks are built in parallel and joined
/// in task order.
Pda build_wp_recognizer(const CRSemigroup& s, const PipelineHooks& hooks = {});

/// Global alphabet with `#` appended.
Alphabet wp_alphabet(const CRSemigroup& s);

}  // namespace crwp
