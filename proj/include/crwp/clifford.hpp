#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crwp/automata/alphabet.hpp"
#include "crwp/hull.hpp"
#include "crwp/rees.hpp"

namespace crwp {

/// Finite meet-semilattice given by its full meet table.
class Semilattice {
public:
    Semilattice(std::vector<std::string> names, std::vector<std::vector<std::size_t>> meet);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t k) const { return names_.at(k); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
    bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return meet_; }

    friend bool operator==(const Semilattice&, const Semilattice&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> meet_;
};

struct CRElement {
    std::size_t component = 0;
    ReesElement value;

    friend bool operator==(const CRElement&, const CRElement&) = default;
    friend auto operator<=>(const CRElement&, const CRElement&) = default;
};

/// Images of the generators of `upper` in the hull of `lower`, indexed like
/// the generators of `upper`.
struct StructureMap {
    std::size_t upper = 0;
    std::size_t lower = 0;
    std::vector<Bitranslation> images;

    friend bool operator==(const StructureMap&, const StructureMap&) = default;
};

struct GlobalLetter {
    std::size_t component;
    std::size_t generator;
};

/// A semilattice of normalized Rees components glued by structure maps.
/// Maps must be present for every comparable pair upper > lower.
class CRSemigroup {
public:
    CRSemigroup(Semilattice y, std::vector<ReesComponent> components, std::vector<StructureMap> maps);

    const Semilattice& semilattice() const noexcept { return y_; }
    std::size_t num_components() const noexcept { return components_.size(); }
    const ReesComponent& component(std::size_t k) const { return components_.at(k); }
    const std::vector<ReesComponent>& components() const noexcept { return components_; }
    const std::vector<StructureMap>& maps() const noexcept { return maps_; }

    /// Generator names of all components, component by component; `#` excluded.
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const GlobalLetter& letter(Symbol s) const { return letters_.at(s); }
    Symbol symbol_of(std::size_t component, std::size_t generator) const;
    CRElement letter_value(Symbol s) const;

    const StructureMap& map(std::size_t upper, std::size_t lower) const;
    const Bitranslation& image(std::size_t upper, std::size_t generator, std::size_t lower) const;
    /// Copy with one generator image replaced.
    CRSemigroup with_image(std::size_t upper, std::size_t generator, std::size_t lower, Bitranslation t) const;

    /// Phi_{alpha,beta}(a): the product of generator images along the
    /// representative word of a; the inner bitranslation when alpha == beta.
    Bitranslation phi_apply(std::size_t alpha, std::size_t beta, const ReesElement& a) const;
    /// Image of a generator word of component alpha (no representative step).
    Bitranslation phi_word(std::size_t alpha, std::size_t beta, std::span<const std::size_t> generators) const;

    CRElement star_multiply(const CRElement& a, const CRElement& b) const;
    CRElement evaluate(std::span<const Symbol> word) const;
    CRElement evaluate_names(std::span<const std::string> word) const;

    std::string format(const CRElement& a) const;

    friend bool operator==(const CRSemigroup&, const CRSemigroup&);

private:
    std::size_t map_index(std::size_t upper, std::size_t lower) const;

    Semilattice y_;
    std::vector<ReesComponent> components_;
    std::vector<StructureMap> maps_;
    std::vector<std::size_t> map_lookup_;  // upper * n + lower -> index into maps_, or npos
    Alphabet alphabet_;
    std::vector<GlobalLetter> letters_;
    std::vector<std::vector<Symbol>> symbols_;
};

struct ValidationIssue {
    std::string condition;  ///< "linked-pair", "well-definedness", "inner-product" or "transitivity"
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
    std::string to_string() const;
};

/// Checks the gluing conditions up to a word-length bound: linked images,
/// well-definedness of the multiplicative extension (every generator word of
/// length <= bound has the image of its value), inner products and transitivity of the maps on
/// words of length <= min(bound, 3).
ValidationReport validate_structure(const CRSemigroup& s, std::size_t bound = 5);

}  // namespace crwp
