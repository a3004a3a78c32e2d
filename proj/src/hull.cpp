#include "crwp/hull.hpp"

#include "crwp/error.hpp"

namespace crwp {

void check_bitranslation(const ReesComponent& c, const Bitranslation& t) {
    if (t.chi_i.size() != c.num_i() || t.h.size() != c.num_lambda() || t.chi_lambda.size() != c.num_lambda())
        throw MixedOperands("bitranslation does not fit component '" + c.name() + "'");
    for (std::size_t v : t.chi_i)
        if (v >= c.num_i()) throw InvalidInput("chi_i value out of range");
    for (std::size_t v : t.chi_lambda)
        if (v >= c.num_lambda()) throw InvalidInput("chi_lambda value out of range");
    for (const auto& g : t.h) c.group().is_identity(g);
}

GroupElement hull_left_factor(const ReesComponent& c, const Bitranslation& t, std::size_t k) {
    const GroupOracle& g = c.group();
    return g.multiply(g.multiply(g.inverse(c.sandwich(0, t.chi_i[k])), t.h[0]), c.sandwich(t.chi_lambda[0], k));
}

bool is_linked(const ReesComponent& c, const Bitranslation& t) {
    check_bitranslation(c, t);
    const GroupOracle& g = c.group();
    for (std::size_t k = 0; k < c.num_i(); ++k) {
        const GroupElement f = hull_left_factor(c, t, k);
        for (std::size_t mu = 0; mu < c.num_lambda(); ++mu)
            if (g.multiply(t.h[mu], c.sandwich(t.chi_lambda[mu], k)) != g.multiply(c.sandwich(mu, t.chi_i[k]), f))
                return false;
    }
    return true;
}

ReesElement hull_left(const ReesComponent& c, const Bitranslation& t, const ReesElement& x) {
    check_bitranslation(c, t);
    c.check(x);
    return {t.chi_i[x.i], c.group().multiply(hull_left_factor(c, t, x.i), x.g), x.lambda};
}

ReesElement hull_right(const ReesComponent& c, const ReesElement& x, const Bitranslation& t) {
    check_bitranslation(c, t);
    c.check(x);
    return {x.i, c.group().multiply(x.g, t.h[x.lambda]), t.chi_lambda[x.lambda]};
}

Bitranslation hull_identity(const ReesComponent& c) {
    Bitranslation t;
    for (std::size_t i = 0; i < c.num_i(); ++i) t.chi_i.push_back(i);
    for (std::size_t l = 0; l < c.num_lambda(); ++l) {
        t.h.push_back(c.group().identity());
        t.chi_lambda.push_back(l);
    }
    return t;
}

Bitranslation inner_bitranslation(const ReesComponent& c, const ReesElement& x) {
    c.check(x);
    Bitranslation t;
    t.chi_i.assign(c.num_i(), x.i);
    t.chi_lambda.assign(c.num_lambda(), x.lambda);
    for (std::size_t mu = 0; mu < c.num_lambda(); ++mu) t.h.push_back(c.group().multiply(c.sandwich(mu, x.i), x.g));
    return t;
}

Bitranslation hull_multiply(const ReesComponent& c, const Bitranslation& s, const Bitranslation& t) {
    if (!is_linked(c, s) || !is_linked(c, t)) throw InvalidInput("hull product operand violates the linked-pair law");
    Bitranslation out;
    for (std::size_t i = 0; i < c.num_i(); ++i) out.chi_i.push_back(s.chi_i[t.chi_i[i]]);
    for (std::size_t mu = 0; mu < c.num_lambda(); ++mu) {
        out.h.push_back(c.group().multiply(s.h[mu], t.h[s.chi_lambda[mu]]));
        out.chi_lambda.push_back(t.chi_lambda[s.chi_lambda[mu]]);
    }
    return out;
}

bool is_inner(const ReesComponent& c, const Bitranslation& t) {
    try {
        pull_back(c, t);
        return true;
    } catch (const NotInner&) {
        return false;
    }
}

ReesElement pull_back(const ReesComponent& c, const Bitranslation& t) {
    check_bitranslation(c, t);
    const std::size_t i = t.chi_i[0];
    const std::size_t l = t.chi_lambda[0];
    for (std::size_t v : t.chi_i)
        if (v != i) throw NotInner("bitranslation of '" + c.name() + "' moves i-indices non-constantly");
    for (std::size_t v : t.chi_lambda)
        if (v != l) throw NotInner("bitranslation of '" + c.name() + "' moves lambda-indices non-constantly");
    ReesElement x{i, c.group().multiply(c.group().inverse(c.sandwich(0, i)), t.h[0]), l};
    if (inner_bitranslation(c, x) != t) throw NotInner("bitranslation of '" + c.name() + "' is not inner");
    return x;
}

Bitranslation transform(const ReesComponent& c, const Bitranslation& t, const CoordinateChange& change) {
    check_bitranslation(c, t);
    const GroupOracle& g = c.group();
    Bitranslation out = t;
    for (std::size_t mu = 0; mu < c.num_lambda(); ++mu)
        out.h[mu] = g.multiply(g.multiply(g.inverse(change.right.at(mu)), t.h[mu]), change.right.at(t.chi_lambda[mu]));
    return out;
}

std::vector<Bitranslation> linked_triples(const ReesComponent& c) {
    const auto elems = c.group().elements();
    const std::size_t ni = c.num_i(), nl = c.num_lambda(), ng = elems.size();
    std::vector<Bitranslation> out;
    std::vector<std::size_t> ci(ni, 0), hl(nl, 0), cl(nl, 0);
    auto bump = [](std::vector<std::size_t>& v, std::size_t base) {
        for (auto& d : v) {
            if (++d < base) return true;
            d = 0;
        }
        return false;
    };
    do {
        do {
            do {
                Bitranslation t{ci, {}, cl};
                for (std::size_t v : hl) t.h.push_back(elems[v]);
                if (is_linked(c, t)) out.push_back(std::move(t));
            } while (bump(cl, nl));
        } while (bump(hl, ng));
    } while (bump(ci, ni));
    return out;
}

std::string format_bitranslation(const ReesComponent& c, const Bitranslation& t) {
    std::string out = "[";
    for (std::size_t k = 0; k < t.chi_i.size(); ++k) out += (k ? " " : "") + std::to_string(t.chi_i[k] + 1);
    out += " |";
    for (const auto& g : t.h) out += " " + c.group().format(g) + ";";
    if (!t.h.empty()) out.pop_back();
    out += " |";
    for (std::size_t v : t.chi_lambda) out += " " + std::to_string(v + 1);
    return out + "]";
}

}  // namespace crwp
