#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crwp/automata/pda.hpp"
#include "crwp/groups.hpp"

namespace crwp {

/// Coordinates (i, g, lambda) of a Rees matrix semigroup element; indices are
/// 0-based here and 1-based in all text formats.
struct ReesElement {
    std::size_t i = 0;
    GroupElement g;
    std::size_t lambda = 0;

    friend bool operator==(const ReesElement&, const ReesElement&) = default;
    friend auto operator<=>(const ReesElement&, const ReesElement&) = default;
};

/// Lambda-by-I sandwich matrix, indexed [lambda][i].
using SandwichMatrix = std::vector<std::vector<GroupElement>>;

struct ReesGenerator {
    std::string name;
    ReesElement value;

    friend bool operator==(const ReesGenerator&, const ReesGenerator&) = default;
};

/// Isomorphism (i, g, l) -> (i, left[i] g right[l], l) onto the component
/// with normalized sandwich matrix.
struct CoordinateChange {
    std::vector<GroupElement> left;
    std::vector<GroupElement> right;

    ReesElement apply(const GroupOracle& g, const ReesElement& a) const;
};

struct Normalization {
    SandwichMatrix matrix;
    CoordinateChange change;
};

/// P'[l][i] = P[l][1]^-1 P[l][i] P[1][i]^-1 P[1][1]; first row and column of
/// the result are the identity.
Normalization normalize_matrix(const GroupOracle& g, const SandwichMatrix& p);

/// A completely simple semigroup M[G; I, Lambda; P] with a named generating
/// set. Without explicit generators the canonical set
/// {(i,1,1)} u {(1,a,1) : a in A_G} u {(1,1,l)} is used.
class ReesComponent {
public:
    ReesComponent(std::string name, std::shared_ptr<const GroupOracle> group, std::size_t num_i,
                  std::size_t num_lambda, SandwichMatrix p, std::vector<ReesGenerator> generators = {});

    const std::string& name() const noexcept { return name_; }
    const GroupOracle& group() const noexcept { return *group_; }
    const std::shared_ptr<const GroupOracle>& group_ptr() const noexcept { return group_; }
    std::size_t num_i() const noexcept { return num_i_; }
    std::size_t num_lambda() const noexcept { return num_lambda_; }
    const SandwichMatrix& matrix() const noexcept { return p_; }
    const GroupElement& sandwich(std::size_t lambda, std::size_t i) const { return p_.at(lambda).at(i); }
    bool is_normalized() const;

    const std::vector<ReesGenerator>& generators() const noexcept { return generators_; }
    std::optional<std::size_t> find_generator(std::string_view name) const;
    std::optional<std::size_t> find_generator(const ReesElement& value) const;

    /// Canonical elements missing from the generating set; (1,1,1) is only
    /// required when G has no generators.
    std::vector<ReesElement> missing_canonical() const;

    ReesElement multiply(const ReesElement& a, const ReesElement& b) const;
    ReesElement evaluate(std::span<const std::size_t> generator_word) const;
    ReesElement generator_value(std::size_t k) const { return generators_.at(k).value; }

    /// e = (i,1,1) and f = (1,1,lambda): left and right identities on H_{i,lambda}.
    std::pair<ReesElement, ReesElement> idempotents_for_hclass(std::size_t i, std::size_t lambda) const;

    /// Nonempty generator word evaluating to `a`:
    /// (i,1,1) rep_G(g) (1,1,lambda), dropping the outer letters when their
    /// index is 1 and something else remains.
    std::vector<std::size_t> representative(const ReesElement& a) const;

    /// All elements of a component over a finite group.
    std::vector<ReesElement> elements() const;

    /// Isomorphic copy with normalized sandwich matrix; generators are
    /// rewritten through the coordinate change.
    ReesComponent normalized(CoordinateChange* change = nullptr) const;
    ReesComponent with_generator(ReesGenerator gen) const;

    void check(const ReesElement& a) const;
    std::string format(const ReesElement& a) const;

    static std::vector<ReesGenerator> canonical_generators(const std::string& prefix, const GroupOracle& g,
                                                           std::size_t num_i, std::size_t num_lambda);

    friend bool operator==(const ReesComponent& a, const ReesComponent& b);

private:
    std::string name_;
    std::shared_ptr<const GroupOracle> group_;
    std::size_t num_i_;
    std::size_t num_lambda_;
    SandwichMatrix p_;
    std::vector<ReesGenerator> generators_;
};

/// PDA over the generator names and `#` accepting u#v^rev iff u = v in the
/// component. Control tracks the outer indices of both sides; the group
/// parts, interleaved with sandwich entries, go to the group's word-problem
/// machinery (control state for finite G, stack for free G).
Pda component_wp_recognizer(const ReesComponent& c);

}  // namespace crwp
