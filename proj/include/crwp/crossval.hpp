#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crwp/automata/pda.hpp"
#include "crwp/clifford.hpp"

namespace crwp {

/// Canonical text of the value of a nonempty word; equal values give equal
/// keys.
using ValueOracle = std::function<std::string(std::span<const Symbol>)>;

struct Disagreement {
    std::vector<std::string> word;  ///< u # v^rev
    bool recognizer = false;
    bool oracle = false;
};

struct CrossReport {
    std::size_t checked = 0;
    std::size_t accepted = 0;  ///< recognizer verdicts IN
    std::size_t equal = 0;     ///< oracle verdicts IN
    std::size_t disagreements = 0;
    std::optional<Disagreement> first;  ///< shortest, then by |u|, then lexicographic

    bool agree() const noexcept { return disagreements == 0; }
    std::string summary() const;
};

enum class Kernel {
    Serial,    ///< fresh membership run per word
    Parallel,  ///< OpenMP over u, runner state shared along v^rev prefixes
};

/// Compares the recognizer with the oracle on every u#v^rev over `letters`
/// with u, v nonempty and |u| + |v| <= max_len. The recognizer's alphabet must
/// contain `letters` and `#`.
CrossReport cross_validate(const Pda& recognizer, const Alphabet& letters, const ValueOracle& oracle,
                           std::size_t max_len, Kernel kernel = Kernel::Parallel);

ValueOracle semigroup_oracle(const CRSemigroup& s);

}  // namespace crwp
