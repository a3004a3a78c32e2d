#include "crwp/groups.hpp"

#include <atomic>
#include <deque>

#include "crwp/error.hpp"

namespace crwp {

namespace {

std::uint32_t next_oracle_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

}  // namespace

GroupOracle GroupOracle::finite(std::vector<std::string> element_names, std::size_t identity,
                                std::vector<std::vector<std::size_t>> table,
                                std::vector<std::size_t> generators) {
    const std::size_t n = element_names.size();
    if (n == 0) throw InvalidInput("finite group needs at least one element");
    if (identity >= n) throw InvalidInput("identity index out of range");
    if (table.size() != n) throw InvalidInput("multiplication table has wrong number of rows");

    GroupOracle g;
    g.kind_ = Kind::Finite;
    g.id_ = next_oracle_id();
    for (std::size_t k = 0; k < n; ++k) {
        if (!g.element_index_.emplace(element_names[k], k).second)
            throw InvalidInput("duplicate element name '" + element_names[k] + "'");
    }
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidInput("multiplication table row has wrong length");
        std::vector<bool> seen(n, false);
        for (std::size_t v : row) {
            if (v >= n) throw InvalidInput("multiplication table entry out of range");
            if (seen[v]) throw InvalidInput("multiplication table is not a Latin square");
            seen[v] = true;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            if (seen[table[r][c]]) throw InvalidInput("multiplication table is not a Latin square");
            seen[table[r][c]] = true;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (table[identity][k] != k || table[k][identity] != k)
            throw InvalidInput("identity element does not act trivially");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InvalidInput("multiplication table is not associative");

    g.inverses_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) g.inverses_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (g.inverses_[a] == n) throw InvalidInput("element '" + element_names[a] + "' has no inverse");

    for (std::size_t gen : generators) {
        if (gen >= n) throw InvalidInput("generator index out of range");
        g.letter_index_.emplace(element_names[gen], static_cast<GroupLetter>(g.letters_.size()));
        g.letters_.push_back(element_names[gen]);
        g.generator_names_.push_back(element_names[gen]);
    }
    g.element_names_ = std::move(element_names);
    g.identity_ = identity;
    g.table_ = std::move(table);
    g.generators_ = std::move(generators);

    // Breadth-first search over the right Cayley graph; first discovery wins,
    // so generator order breaks ties among shortest words.
    g.shortest_.assign(n, {});
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{identity};
    seen[identity] = true;
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (GroupLetter l = 0; l < g.generators_.size(); ++l) {
            std::size_t next = g.table_[cur][g.generators_[l]];
            if (seen[next]) continue;
            seen[next] = true;
            g.shortest_[next] = g.shortest_[cur];
            g.shortest_[next].push_back(l);
            queue.push_back(next);
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        if (!seen[k])
            throw InvalidInput("generators do not reach element '" + g.element_names_[k] + "'");

    // Shortest nonempty word for the identity: a generator followed by a
    // shortest word for its inverse.
    for (GroupLetter l = 0; l < g.generators_.size(); ++l) {
        GroupWord cand{l};
        const GroupWord& tail = g.shortest_[g.inverses_[g.generators_[l]]];
        cand.insert(cand.end(), tail.begin(), tail.end());
        if (g.nonempty_identity_.empty() || cand.size() < g.nonempty_identity_.size())
            g.nonempty_identity_ = std::move(cand);
    }
    return g;
}

GroupOracle GroupOracle::free(std::vector<std::string> generator_names) {
    if (generator_names.empty()) throw InvalidInput("free group needs rank at least 1");
    GroupOracle g;
    g.kind_ = Kind::Free;
    g.id_ = next_oracle_id();
    for (const auto& name : generator_names) {
        for (std::string letter : {name, name + "^-1"}) {
            if (!g.letter_index_.emplace(letter, static_cast<GroupLetter>(g.letters_.size())).second)
                throw InvalidInput("duplicate generator name '" + name + "'");
            g.letters_.push_back(std::move(letter));
        }
    }
    g.generator_names_ = std::move(generator_names);
    return g;
}

std::optional<GroupLetter> GroupOracle::find_letter(std::string_view name) const {
    auto it = letter_index_.find(std::string(name));
    if (it == letter_index_.end()) return std::nullopt;
    return it->second;
}

GroupLetter GroupOracle::letter(std::string_view name) const {
    if (auto l = find_letter(name)) return *l;
    throw UnknownLetter(std::string(name));
}

GroupLetter GroupOracle::inverse_letter(GroupLetter l) const {
    if (is_finite()) throw InvalidInput("finite-group letters have no formal inverse");
    if (l >= letters_.size()) throw UnknownLetter(std::to_string(l));
    return l ^ 1u;
}

void GroupOracle::check_owner(const GroupElement& a) const {
    if (a.owner != id_) throw MixedOperands("group element belongs to a different oracle");
}

GroupElement GroupOracle::identity() const {
    if (is_finite()) return make({static_cast<std::uint32_t>(identity_)});
    return make({});
}

GroupElement GroupOracle::letter_element(GroupLetter l) const {
    if (l >= letters_.size()) throw UnknownLetter(std::to_string(l));
    if (is_finite()) return make({static_cast<std::uint32_t>(generators_[l])});
    return make({l});
}

GroupElement GroupOracle::multiply(const GroupElement& a, const GroupElement& b) const {
    check_owner(a);
    check_owner(b);
    if (is_finite()) return make({static_cast<std::uint32_t>(table_[a.data[0]][b.data[0]])});
    std::vector<std::uint32_t> out = a.data;
    for (std::uint32_t l : b.data) {
        if (!out.empty() && out.back() == (l ^ 1u))
            out.pop_back();
        else
            out.push_back(l);
    }
    return make(std::move(out));
}

GroupElement GroupOracle::inverse(const GroupElement& a) const {
    check_owner(a);
    if (is_finite()) return make({static_cast<std::uint32_t>(inverses_[a.data[0]])});
    std::vector<std::uint32_t> out(a.data.rbegin(), a.data.rend());
    for (auto& l : out) l ^= 1u;
    return make(std::move(out));
}

bool GroupOracle::is_identity(const GroupElement& a) const {
    check_owner(a);
    return is_finite() ? a.data[0] == identity_ : a.data.empty();
}

GroupElement GroupOracle::evaluate(std::span<const GroupLetter> word) const {
    GroupElement acc = identity();
    for (GroupLetter l : word) acc = multiply(acc, letter_element(l));
    return acc;
}

GroupElement GroupOracle::evaluate_names(std::span<const std::string> word) const {
    GroupWord letters;
    letters.reserve(word.size());
    for (const auto& w : word) letters.push_back(letter(w));
    return evaluate(letters);
}

GroupWord GroupOracle::representative(const GroupElement& g, bool nonempty) const {
    check_owner(g);
    if (nonempty && is_identity(g)) {
        if (is_finite()) {
            if (nonempty_identity_.empty())
                throw InvalidInput("trivial group has no nonempty words");
            return nonempty_identity_;
        }
        return {0u, 1u};
    }
    if (is_finite()) return shortest_[g.data[0]];
    return GroupWord(g.data.begin(), g.data.end());
}

std::vector<GroupElement> GroupOracle::elements() const {
    if (!is_finite()) throw InvalidInput("free groups are infinite");
    std::vector<GroupElement> out;
    for (std::size_t k = 0; k < element_names_.size(); ++k)
        out.push_back(make({static_cast<std::uint32_t>(k)}));
    return out;
}

GroupElement GroupOracle::parse(std::span<const std::string> tokens) const {
    GroupElement acc = identity();
    for (const auto& t : tokens) {
        if (t == "1") continue;
        if (is_finite()) {
            auto it = element_index_.find(t);
            if (it == element_index_.end()) throw UnknownLetter(t);
            acc = multiply(acc, make({static_cast<std::uint32_t>(it->second)}));
        } else {
            acc = multiply(acc, letter_element(letter(t)));
        }
    }
    return acc;
}

std::string GroupOracle::format(const GroupElement& g) const {
    check_owner(g);
    if (is_finite()) return element_names_[g.data[0]];
    if (g.data.empty()) return "1";
    std::string out;
    for (std::uint32_t l : g.data) {
        if (!out.empty()) out += ' ';
        out += letters_[l];
    }
    return out;
}

bool GroupOracle::same_structure(const GroupOracle& other) const {
    return kind_ == other.kind_ && generator_names_ == other.generator_names_ &&
           element_names_ == other.element_names_ && identity_ == other.identity_ &&
           table_ == other.table_ && generators_ == other.generators_;
}

}  // namespace crwp
