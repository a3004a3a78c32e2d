#pragma once

#include <string>
#include <vector>

#include "crwp/rees.hpp"

namespace crwp {

/// Linked pair of translations of a Rees component, stored as the triple
/// (chi_i, h, chi_lambda):
///   left:  (i, g, mu) -> (chi_i(i), f(i) g, mu)
///   right: (i, g, mu) -> (i, g h(mu), chi_lambda(mu))
/// with f(k) = p[1][chi_i(k)]^-1 h(1) p[chi_lambda(1)][k] forced by linkedness.
struct Bitranslation {
    std::vector<std::size_t> chi_i;
    std::vector<GroupElement> h;
    std::vector<std::size_t> chi_lambda;

    friend bool operator==(const Bitranslation&, const Bitranslation&) = default;
};

void check_bitranslation(const ReesComponent& c, const Bitranslation& t);

GroupElement hull_left_factor(const ReesComponent& c, const Bitranslation& t, std::size_t k);
/// h(mu) p[chi_lambda(mu)][k] == p[mu][chi_i(k)] f(k) for all mu, k.
bool is_linked(const ReesComponent& c, const Bitranslation& t);

ReesElement hull_left(const ReesComponent& c, const Bitranslation& t, const ReesElement& x);
ReesElement hull_right(const ReesComponent& c, const ReesElement& x, const Bitranslation& t);

Bitranslation hull_identity(const ReesComponent& c);
/// pi_(i,g,l) = (const i, mu -> p[mu][i] g, const l).
Bitranslation inner_bitranslation(const ReesComponent& c, const ReesElement& x);
/// Composite s.t: left part acts as s after t, right part as s then t.
/// Throws InvalidInput if an operand is not linked.
Bitranslation hull_multiply(const ReesComponent& c, const Bitranslation& s, const Bitranslation& t);

bool is_inner(const ReesComponent& c, const Bitranslation& t);
/// The element x with inner_bitranslation(x) == t; throws NotInner.
ReesElement pull_back(const ReesComponent& c, const Bitranslation& t);

/// Same bitranslation expressed in the coordinates reached through `change`.
Bitranslation transform(const ReesComponent& c, const Bitranslation& t, const CoordinateChange& change);

/// Every linked triple of a component over a finite group.
std::vector<Bitranslation> linked_triples(const ReesComponent& c);

std::string format_bitranslation(const ReesComponent& c, const Bitranslation& t);

}  // namespace crwp
