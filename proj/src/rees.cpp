#include "crwp/rees.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "crwp/error.hpp"

namespace crwp {

ReesElement CoordinateChange::apply(const GroupOracle& g, const ReesElement& a) const {
    return {a.i, g.multiply(g.multiply(left.at(a.i), a.g), right.at(a.lambda)), a.lambda};
}

Normalization normalize_matrix(const GroupOracle& g, const SandwichMatrix& p) {
    if (p.empty() || p[0].empty()) throw InvalidInput("sandwich matrix is empty");
    const std::size_t nl = p.size();
    const std::size_t ni = p[0].size();
    const GroupElement p11 = p[0][0];
    const GroupElement p11_inv = g.inverse(p11);

    Normalization out;
    out.matrix.assign(nl, std::vector<GroupElement>(ni));
    for (std::size_t l = 0; l < nl; ++l) {
        if (p[l].size() != ni) throw InvalidInput("sandwich matrix rows differ in length");
        const GroupElement row_inv = g.inverse(p[l][0]);
        for (std::size_t i = 0; i < ni; ++i)
            out.matrix[l][i] = g.multiply(g.multiply(row_inv, p[l][i]), g.multiply(g.inverse(p[0][i]), p11));
    }
    for (std::size_t i = 0; i < ni; ++i) out.change.left.push_back(g.multiply(p11_inv, p[0][i]));
    for (std::size_t l = 0; l < nl; ++l) out.change.right.push_back(p[l][0]);
    return out;
}

ReesComponent::ReesComponent(std::string name, std::shared_ptr<const GroupOracle> group, std::size_t num_i,
                             std::size_t num_lambda, SandwichMatrix p, std::vector<ReesGenerator> generators)
    : name_(std::move(name)),
      group_(std::move(group)),
      num_i_(num_i),
      num_lambda_(num_lambda),
      p_(std::move(p)),
      generators_(std::move(generators)) {
    if (!group_) throw InvalidInput("component '" + name_ + "' has no group");
    if (num_i_ == 0 || num_lambda_ == 0) throw InvalidInput("component '" + name_ + "' has an empty index set");
    if (p_.size() != num_lambda_) throw InvalidInput("component '" + name_ + "': sandwich matrix needs one row per lambda");
    for (const auto& row : p_) {
        if (row.size() != num_i_) throw InvalidInput("component '" + name_ + "': sandwich row needs one entry per i");
        for (const auto& e : row) group_->is_identity(e);
    }
    if (generators_.empty()) generators_ = canonical_generators(name_, *group_, num_i_, num_lambda_);
    std::map<std::string, std::size_t, std::less<>> seen;
    for (const auto& gen : generators_) {
        if (!is_token(gen.name) || gen.name == kSeparator)
            throw InvalidInput("bad generator name '" + gen.name + "'");
        if (!seen.emplace(gen.name, 0).second) throw InvalidInput("duplicate generator name '" + gen.name + "'");
        check(gen.value);
    }
}

std::vector<ReesGenerator> ReesComponent::canonical_generators(const std::string& prefix, const GroupOracle& g,
                                                               std::size_t num_i, std::size_t num_lambda) {
    std::vector<ReesGenerator> out;
    const GroupElement one = g.identity();
    if (g.letters().empty()) out.push_back({prefix + ".1", {0, one, 0}});
    for (std::size_t i = 1; i < num_i; ++i) out.push_back({prefix + ".i" + std::to_string(i + 1), {i, one, 0}});
    for (GroupLetter a = 0; a < g.letters().size(); ++a)
        out.push_back({prefix + "." + g.letters()[a], {0, g.letter_element(a), 0}});
    for (std::size_t l = 1; l < num_lambda; ++l)
        out.push_back({prefix + ".l" + std::to_string(l + 1), {0, one, l}});
    return out;
}

bool ReesComponent::is_normalized() const {
    for (std::size_t l = 0; l < num_lambda_; ++l)
        if (!group_->is_identity(p_[l][0])) return false;
    for (std::size_t i = 0; i < num_i_; ++i)
        if (!group_->is_identity(p_[0][i])) return false;
    return true;
}

std::optional<std::size_t> ReesComponent::find_generator(std::string_view name) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k].name == name) return k;
    return std::nullopt;
}

std::optional<std::size_t> ReesComponent::find_generator(const ReesElement& value) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k].value == value) return k;
    return std::nullopt;
}

std::vector<ReesElement> ReesComponent::missing_canonical() const {
    std::vector<ReesElement> out;
    const GroupElement one = group_->identity();
    auto need = [&](ReesElement e) {
        if (!find_generator(e)) out.push_back(std::move(e));
    };
    if (group_->letters().empty()) need({0, one, 0});
    for (std::size_t i = 1; i < num_i_; ++i) need({i, one, 0});
    for (GroupLetter a = 0; a < group_->letters().size(); ++a) need({0, group_->letter_element(a), 0});
    for (std::size_t l = 1; l < num_lambda_; ++l) need({0, one, l});
    return out;
}

void ReesComponent::check(const ReesElement& a) const {
    if (a.i >= num_i_ || a.lambda >= num_lambda_)
        throw MixedOperands("index out of range for component '" + name_ + "'");
    group_->is_identity(a.g);
}

ReesElement ReesComponent::multiply(const ReesElement& a, const ReesElement& b) const {
    check(a);
    check(b);
    return {a.i, group_->multiply(group_->multiply(a.g, p_[a.lambda][b.i]), b.g), b.lambda};
}

ReesElement ReesComponent::evaluate(std::span<const std::size_t> generator_word) const {
    if (generator_word.empty()) throw InvalidInput("empty word has no value in a semigroup");
    ReesElement acc = generators_.at(generator_word[0]).value;
    for (std::size_t k = 1; k < generator_word.size(); ++k) acc = multiply(acc, generators_.at(generator_word[k]).value);
    return acc;
}

std::pair<ReesElement, ReesElement> ReesComponent::idempotents_for_hclass(std::size_t i, std::size_t lambda) const {
    if (!is_normalized()) throw InvalidInput("component '" + name_ + "' is not normalized");
    const GroupElement one = group_->identity();
    ReesElement e{i, one, 0};
    ReesElement f{0, one, lambda};
    check(e);
    check(f);
    return {e, f};
}

std::vector<std::size_t> ReesComponent::representative(const ReesElement& a) const {
    check(a);
    if (!is_normalized()) throw InvalidInput("component '" + name_ + "' is not normalized");
    auto gen = [&](const ReesElement& e) {
        auto k = find_generator(e);
        if (!k) throw InvalidInput("component '" + name_ + "' lacks canonical generator " + format(e));
        return *k;
    };
    const GroupElement one = group_->identity();
    std::vector<std::size_t> out;
    if (a.i == 0 && a.lambda == 0 && group_->is_identity(a.g)) {
        if (auto k = find_generator(ReesElement{0, one, 0})) return {*k};
        for (GroupLetter l : group_->representative(a.g, true)) out.push_back(gen({0, group_->letter_element(l), 0}));
        return out;
    }
    if (a.i != 0) out.push_back(gen({a.i, one, 0}));
    for (GroupLetter l : group_->representative(a.g)) out.push_back(gen({0, group_->letter_element(l), 0}));
    if (a.lambda != 0) out.push_back(gen({0, one, a.lambda}));
    return out;
}

std::vector<ReesElement> ReesComponent::elements() const {
    std::vector<ReesElement> out;
    const auto gs = group_->elements();
    for (std::size_t i = 0; i < num_i_; ++i)
        for (const auto& g : gs)
            for (std::size_t l = 0; l < num_lambda_; ++l) out.push_back({i, g, l});
    return out;
}

ReesComponent ReesComponent::normalized(CoordinateChange* change) const {
    Normalization n = normalize_matrix(*group_, p_);
    std::vector<ReesGenerator> gens;
    for (const auto& gen : generators_) gens.push_back({gen.name, n.change.apply(*group_, gen.value)});
    if (change) *change = n.change;
    return ReesComponent(name_, group_, num_i_, num_lambda_, std::move(n.matrix), std::move(gens));
}

ReesComponent ReesComponent::with_generator(ReesGenerator gen) const {
    auto gens = generators_;
    gens.push_back(std::move(gen));
    return ReesComponent(name_, group_, num_i_, num_lambda_, p_, std::move(gens));
}

std::string ReesComponent::format(const ReesElement& a) const {
    return "(" + std::to_string(a.i + 1) + "," + group_->format(a.g) + "," + std::to_string(a.lambda + 1) + ")";
}

bool operator==(const ReesComponent& a, const ReesComponent& b) {
    return a.name_ == b.name_ && a.group_->same_structure(*b.group_) && a.num_i_ == b.num_i_ &&
           a.num_lambda_ == b.num_lambda_ && a.p_ == b.p_ && a.generators_ == b.generators_;
}

namespace {

enum Phase { kStart, kPre, kHash, kPost };

struct CtlKey {
    int phase;
    std::size_t a;
    std::size_t b;
    std::uint32_t g;
    friend auto operator<=>(const CtlKey&, const CtlKey&) = default;
};

}  // namespace

Pda component_wp_recognizer(const ReesComponent& c) {
    const GroupOracle& grp = c.group();
    const bool finite = grp.is_finite();
    std::vector<std::string> input_names;
    for (const auto& gen : c.generators()) input_names.push_back(gen.name);
    input_names.emplace_back(kSeparator);
    const Alphabet sigma(input_names);
    const Symbol hash = static_cast<Symbol>(c.generators().size());

    std::vector<std::string> stack_names{"$bot"};
    if (!finite)
        for (const auto& l : grp.letters()) stack_names.push_back(l);
    const auto stack_size = static_cast<StackSymbol>(stack_names.size());
    PdaBuilder b(sigma, Alphabet(stack_names), 0, AcceptMode::EmptyStackAndFinal);

    std::map<CtlKey, StateId> ids;
    std::deque<CtlKey> work;
    const std::uint32_t one = finite ? grp.identity().data[0] : 0;
    auto elem = [&](const GroupElement& g) { return finite ? g.data[0] : 0u; };
    auto state = [&](const CtlKey& k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        static const char* const names[] = {"start", "pre", "hash", "post"};
        std::string name = names[k.phase];
        if (k.phase != kStart) {
            name += ":" + std::to_string(k.a + 1) + ":" + std::to_string(k.b + 1);
            if (finite) name += ":" + grp.element_names()[k.g];
        }
        bool final = k.phase == kPost && k.a == k.b && k.g == one;
        StateId s = b.add_state(std::move(name), final);
        ids.emplace(k, s);
        work.push_back(k);
        return s;
    };
    auto finite_elements = finite ? grp.elements() : std::vector<GroupElement>{};

    // Multiplies the stacked free-group word on the right by `w`, reading
    // `input` on the first step.
    auto feed = [&](StateId from, Symbol input, StateId to, const GroupElement& w) {
        if (finite || w.data.empty()) {
            for (StackSymbol top = 0; top < stack_size; ++top) b.add(from, input, top, to, {top});
            return;
        }
        StateId cur = from;
        for (std::size_t k = 0; k < w.data.size(); ++k) {
            StateId next = to;
            if (k + 1 < w.data.size())
                next = b.add_state("mid:" + std::to_string(from) + ":" + std::to_string(input) + ":" + std::to_string(k + 1));
            const Symbol in = k == 0 ? input : kEpsilon;
            const StackSymbol push = w.data[k] + 1;
            const StackSymbol cancel = (w.data[k] ^ 1u) + 1;
            for (StackSymbol top = 0; top < stack_size; ++top) {
                if (top == cancel)
                    b.add(cur, in, top, next, {});
                else
                    b.add(cur, in, top, next, {push, top});
            }
            cur = next;
        }
    };

    const StateId start = state({kStart, 0, 0, 0});
    b.set_start(start);
    while (!work.empty()) {
        const CtlKey k = work.front();
        work.pop_front();
        const StateId from = ids.at(k);
        const GroupElement g = finite ? finite_elements[k.g] : grp.identity();
        for (Symbol y = 0; y < c.generators().size(); ++y) {
            const ReesElement& v = c.generators()[y].value;
            switch (k.phase) {
                case kStart:
                    feed(from, y, state({kPre, v.i, v.lambda, elem(grp.multiply(g, v.g))}), v.g);
                    break;
                case kPre: {
                    const GroupElement w = grp.multiply(c.sandwich(k.b, v.i), v.g);
                    feed(from, y, state({kPre, k.a, v.lambda, elem(grp.multiply(g, w))}), w);
                    break;
                }
                case kHash: {
                    if (v.lambda != k.b) break;
                    const GroupElement w = grp.inverse(v.g);
                    feed(from, y, state({kPost, k.a, v.i, elem(grp.multiply(g, w))}), w);
                    break;
                }
                case kPost: {
                    const GroupElement w = grp.inverse(grp.multiply(v.g, c.sandwich(v.lambda, k.b)));
                    feed(from, y, state({kPost, k.a, v.i, elem(grp.multiply(g, w))}), w);
                    break;
                }
            }
        }
        if (k.phase == kPre) {
            const StateId to = state({kHash, k.a, k.b, k.g});
            for (StackSymbol top = 0; top < stack_size; ++top) b.add(from, hash, top, to, {top});
        }
    }
    return std::move(b).build();
}

}  // namespace crwp
