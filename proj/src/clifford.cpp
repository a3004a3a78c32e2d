#include "crwp/clifford.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crwp/error.hpp"

namespace crwp {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

Semilattice::Semilattice(std::vector<std::string> names, std::vector<std::vector<std::size_t>> meet)
    : names_(std::move(names)), meet_(std::move(meet)) {
    const std::size_t n = names_.size();
    if (n == 0) throw InvalidInput("semilattice is empty");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!is_token(name)) throw InvalidInput("bad component name '" + name + "'");
        if (!seen.insert(name).second) throw InvalidInput("duplicate component name '" + name + "'");
    }
    if (meet_.size() != n) throw InvalidInput("meet table needs one row per component");
    for (const auto& row : meet_) {
        if (row.size() != n) throw InvalidInput("meet table row has wrong length");
        for (std::size_t v : row)
            if (v >= n) throw InvalidInput("meet table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (meet_[a][a] != a) throw InvalidInput("meet is not idempotent at '" + names_[a] + "'");
        for (std::size_t b = 0; b < n; ++b) {
            if (meet_[a][b] != meet_[b][a])
                throw InvalidInput("meet is not commutative at '" + names_[a] + "', '" + names_[b] + "'");
            for (std::size_t c = 0; c < n; ++c)
                if (meet_[meet_[a][b]][c] != meet_[a][meet_[b][c]])
                    throw InvalidInput("meet is not associative at '" + names_[a] + "', '" + names_[b] + "', '" +
                                       names_[c] + "'");
        }
    }
}

std::optional<std::size_t> Semilattice::find(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

std::size_t Semilattice::index(std::string_view name) const {
    if (auto k = find(name)) return *k;
    throw InvalidInput("unknown component '" + std::string(name) + "'");
}

CRSemigroup::CRSemigroup(Semilattice y, std::vector<ReesComponent> components, std::vector<StructureMap> maps)
    : y_(std::move(y)) {
    const std::size_t n = y_.size();
    if (components.size() != n) throw InvalidInput("need exactly one component per semilattice element");
    for (std::size_t k = 0; k < n; ++k) {
        auto it = std::find_if(components.begin(), components.end(),
                               [&](const ReesComponent& c) { return c.name() == y_.name(k); });
        if (it == components.end()) throw InvalidInput("component '" + y_.name(k) + "' is not defined");
        if (!it->is_normalized()) throw InvalidInput("component '" + it->name() + "' is not normalized");
        auto missing = it->missing_canonical();
        if (!missing.empty())
            throw InvalidInput("generators of '" + it->name() + "' lack canonical element " + it->format(missing[0]));
        components_.push_back(*it);
    }

    std::vector<std::string> names;
    std::set<std::string> seen;
    symbols_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& gens = components_[k].generators();
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!seen.insert(gens[g].name).second)
                throw InvalidInput("generator name '" + gens[g].name + "' is used twice");
            symbols_[k].push_back(static_cast<Symbol>(names.size()));
            names.push_back(gens[g].name);
            letters_.push_back({k, g});
        }
    }
    alphabet_ = Alphabet(std::move(names));

    map_lookup_.assign(n * n, kNone);
    for (auto& m : maps) {
        if (m.upper >= n || m.lower >= n) throw InvalidInput("structure map refers to an unknown component");
        const std::string pair = "'" + y_.name(m.upper) + "' -> '" + y_.name(m.lower) + "'";
        if (!y_.less(m.lower, m.upper)) throw InvalidInput("structure map " + pair + " is not between comparable components");
        if (map_lookup_[m.upper * n + m.lower] != kNone) throw InvalidInput("structure map " + pair + " given twice");
        if (m.images.size() != components_[m.upper].generators().size())
            throw InvalidInput("structure map " + pair + " needs one image per generator");
        for (const auto& t : m.images) check_bitranslation(components_[m.lower], t);
        map_lookup_[m.upper * n + m.lower] = maps_.size();
        maps_.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (y_.less(b, a) && map_lookup_[a * n + b] == kNone)
                throw InvalidInput("missing structure map '" + y_.name(a) + "' -> '" + y_.name(b) + "'");
}

Symbol CRSemigroup::symbol_of(std::size_t component, std::size_t generator) const {
    return symbols_.at(component).at(generator);
}

CRElement CRSemigroup::letter_value(Symbol s) const {
    const auto& l = letters_.at(s);
    return {l.component, components_[l.component].generator_value(l.generator)};
}

std::size_t CRSemigroup::map_index(std::size_t upper, std::size_t lower) const {
    std::size_t k = kNone;
    if (upper < y_.size() && lower < y_.size()) k = map_lookup_[upper * y_.size() + lower];
    if (k == kNone) throw InvalidInput("no structure map between the given components");
    return k;
}

const StructureMap& CRSemigroup::map(std::size_t upper, std::size_t lower) const {
    return maps_[map_index(upper, lower)];
}

const Bitranslation& CRSemigroup::image(std::size_t upper, std::size_t generator, std::size_t lower) const {
    return maps_[map_index(upper, lower)].images.at(generator);
}

CRSemigroup CRSemigroup::with_image(std::size_t upper, std::size_t generator, std::size_t lower,
                                    Bitranslation t) const {
    auto maps = maps_;
    maps[map_index(upper, lower)].images.at(generator) = std::move(t);
    return CRSemigroup(y_, components_, std::move(maps));
}

Bitranslation CRSemigroup::phi_word(std::size_t alpha, std::size_t beta, std::span<const std::size_t> generators) const {
    if (generators.empty()) throw InvalidInput("empty word has no image");
    if (alpha == beta) return inner_bitranslation(components_[beta], components_[alpha].evaluate(generators));
    const auto& m = map(alpha, beta);
    Bitranslation acc = m.images.at(generators[0]);
    for (std::size_t k = 1; k < generators.size(); ++k)
        acc = hull_multiply(components_[beta], acc, m.images.at(generators[k]));
    return acc;
}

Bitranslation CRSemigroup::phi_apply(std::size_t alpha, std::size_t beta, const ReesElement& a) const {
    if (alpha == beta) return inner_bitranslation(components_[beta], a);
    return phi_word(alpha, beta, components_[alpha].representative(a));
}

CRElement CRSemigroup::star_multiply(const CRElement& a, const CRElement& b) const {
    if (a.component >= y_.size() || b.component >= y_.size()) throw MixedOperands("element of an unknown component");
    if (a.component == b.component) return {a.component, components_[a.component].multiply(a.value, b.value)};
    const std::size_t g = y_.meet(a.component, b.component);
    const ReesComponent& c = components_[g];
    const Bitranslation prod =
        hull_multiply(c, phi_apply(a.component, g, a.value), phi_apply(b.component, g, b.value));
    return {g, pull_back(c, prod)};
}

CRElement CRSemigroup::evaluate(std::span<const Symbol> word) const {
    if (word.empty()) throw InvalidInput("empty word has no value in a semigroup");
    CRElement acc = letter_value(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) acc = star_multiply(acc, letter_value(word[k]));
    return acc;
}

CRElement CRSemigroup::evaluate_names(std::span<const std::string> word) const {
    return evaluate(alphabet_.encode(word));
}

std::string CRSemigroup::format(const CRElement& a) const {
    return y_.name(a.component) + ":" + components_.at(a.component).format(a.value);
}

bool operator==(const CRSemigroup& a, const CRSemigroup& b) {
    return a.y_ == b.y_ && a.components_ == b.components_ && a.maps_ == b.maps_;
}

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "ok\n";
    std::string out;
    for (const auto& i : issues) out += i.condition + ": " + i.detail + "\n";
    return out;
}

namespace {

constexpr std::size_t kWordCap = 200000;

/// Distinct values of generator words of length 1..len.
std::set<ReesElement> sample_values(const ReesComponent& c, std::size_t len) {
    std::set<ReesElement> out;
    std::vector<ReesElement> layer;
    for (const auto& gen : c.generators()) layer.push_back(gen.value);
    for (std::size_t l = 1; l <= len && !layer.empty(); ++l) {
        std::vector<ReesElement> next;
        for (const auto& v : layer) {
            if (!out.insert(v).second) continue;
            if (l < len)
                for (const auto& gen : c.generators()) next.push_back(c.multiply(v, gen.value));
        }
        layer = std::move(next);
    }
    return out;
}

std::string word_string(const ReesComponent& c, const std::vector<std::size_t>& w) {
    std::string out;
    for (std::size_t g : w) out += (out.empty() ? "" : " ") + c.generators()[g].name;
    return out;
}

void check_well_defined(const CRSemigroup& s, const StructureMap& m, std::size_t bound, ValidationReport& report) {
    const ReesComponent& up = s.component(m.upper);
    const ReesComponent& low = s.component(m.lower);
    const std::string pair = s.semilattice().name(m.upper) + " -> " + s.semilattice().name(m.lower);
    std::map<ReesElement, Bitranslation> expected;
    struct Entry {
        std::vector<std::size_t> word;
        ReesElement value;
        Bitranslation image;
    };
    std::vector<Entry> layer;
    for (std::size_t g = 0; g < up.generators().size(); ++g)
        layer.push_back({{g}, up.generator_value(g), m.images[g]});
    std::size_t visited = 0;
    for (std::size_t len = 1; len <= bound && !layer.empty(); ++len) {
        std::vector<Entry> next;
        for (auto& e : layer) {
            auto it = expected.find(e.value);
            if (it == expected.end()) it = expected.emplace(e.value, s.phi_apply(m.upper, m.lower, e.value)).first;
            if (it->second != e.image) {
                report.issues.push_back({"well-definedness", pair + ": word '" + word_string(up, e.word) + "' has image " +
                                                                 format_bitranslation(low, e.image) + " but its value " +
                                                                 up.format(e.value) + " maps to " +
                                                                 format_bitranslation(low, it->second)});
                return;
            }
            if (++visited >= kWordCap) return;
            if (len == bound) continue;
            for (std::size_t g = 0; g < up.generators().size(); ++g) {
                Entry n{e.word, up.multiply(e.value, up.generator_value(g)), hull_multiply(low, e.image, m.images[g])};
                n.word.push_back(g);
                next.push_back(std::move(n));
            }
        }
        layer = std::move(next);
    }
}

}  // namespace

ValidationReport validate_structure(const CRSemigroup& s, std::size_t bound) {
    ValidationReport report;
    const Semilattice& y = s.semilattice();
    const std::size_t n = y.size();

    std::vector<bool> map_ok(s.maps().size(), true);
    for (std::size_t k = 0; k < s.maps().size(); ++k) {
        const auto& m = s.maps()[k];
        const ReesComponent& low = s.component(m.lower);
        for (std::size_t g = 0; g < m.images.size(); ++g) {
            if (!is_linked(low, m.images[g])) {
                map_ok[k] = false;
                report.issues.push_back({"linked-pair", y.name(m.upper) + " -> " + y.name(m.lower) + ": image of '" +
                                                            s.component(m.upper).generators()[g].name + "' " +
                                                            format_bitranslation(low, m.images[g])});
            }
        }
    }
    if (!report.ok()) return report;

    for (const auto& m : s.maps()) {
        try {
            check_well_defined(s, m, bound, report);
        } catch (const Error& e) {
            report.issues.push_back({"well-definedness", y.name(m.upper) + " -> " + y.name(m.lower) + ": " + e.what()});
        }
    }
    if (!report.ok()) return report;

    const std::size_t depth = std::min<std::size_t>(bound, 3);
    std::vector<std::set<ReesElement>> samples;
    for (std::size_t k = 0; k < n; ++k) samples.push_back(sample_values(s.component(k), depth));

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = y.meet(a, b);
            for (const auto& va : samples[a]) {
                for (const auto& vb : samples[b]) {
                    const CRElement ea{a, va}, eb{b, vb};
                    CRElement prod;
                    try {
                        prod = s.star_multiply(ea, eb);
                    } catch (const NotInner& e) {
                        report.issues.push_back({"inner-product", s.format(ea) + " * " + s.format(eb) + ": " + e.what()});
                        continue;
                    }
                    for (std::size_t g = 0; g < n; ++g) {
                        if (!y.less(g, ab)) continue;
                        const ReesComponent& c = s.component(g);
                        Bitranslation lhs = s.phi_apply(ab, g, prod.value);
                        Bitranslation rhs = hull_multiply(c, s.phi_apply(a, g, va), s.phi_apply(b, g, vb));
                        if (lhs != rhs)
                            report.issues.push_back({"transitivity", s.format(ea) + " * " + s.format(eb) + " into " + y.name(g) +
                                                                  ": " + format_bitranslation(c, lhs) +
                                                                  " != " + format_bitranslation(c, rhs)});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace crwp
