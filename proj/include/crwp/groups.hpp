#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crwp {

/// Index into a group's generator alphabet A_G.
using GroupLetter = std::uint32_t;
using GroupWord = std::vector<GroupLetter>;

/// An element of a GroupOracle. For finite groups `data` holds the single
/// element index; for free groups it is a freely reduced word over A_G.
struct GroupElement {
    std::uint32_t owner = 0;
    std::vector<std::uint32_t> data;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.data == b.data; }
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.data <=> b.data; }
};

/// Arithmetic for the two instantiated group families: finite groups given by
/// a multiplication table, and free groups of finite rank.
///
/// Free groups use the letter alphabet {g, g^-1 : g a generator}; letter 2k is
/// generator k and 2k+1 is its formal inverse. Finite groups use the listed
/// generating elements as letters and have no formal inverses.
class GroupOracle {
public:
    enum class Kind { Finite, Free };

    static GroupOracle finite(std::vector<std::string> element_names, std::size_t identity,
                              std::vector<std::vector<std::size_t>> table,
                              std::vector<std::size_t> generators);
    static GroupOracle free(std::vector<std::string> generator_names);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    std::size_t rank() const noexcept { return generator_names_.size(); }
    std::size_t order() const noexcept { return element_names_.size(); }

    const std::vector<std::string>& letters() const noexcept { return letters_; }
    std::optional<GroupLetter> find_letter(std::string_view name) const;
    GroupLetter letter(std::string_view name) const;
    /// Formal inverse of a free-group letter.
    GroupLetter inverse_letter(GroupLetter l) const;

    GroupElement identity() const;
    GroupElement letter_element(GroupLetter l) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;

    GroupElement evaluate(std::span<const GroupLetter> word) const;
    GroupElement evaluate_names(std::span<const std::string> word) const;

    /// A word over A_G evaluating to `g`. Free groups return the reduced word,
    /// finite groups a shortest word (breadth-first, generator order breaks
    /// ties). With `nonempty` the identity is represented by a nonempty word.
    GroupWord representative(const GroupElement& g, bool nonempty = false) const;

    /// Finite groups only: all elements in index order.
    std::vector<GroupElement> elements() const;
    const std::vector<std::string>& element_names() const noexcept { return element_names_; }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
    const std::vector<std::size_t>& generator_elements() const noexcept { return generators_; }
    std::size_t identity_index() const noexcept { return identity_; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

    /// Element from config tokens: `1` is the identity; finite groups accept
    /// element names, free groups accept letters.
    GroupElement parse(std::span<const std::string> tokens) const;
    /// Space-separated word form accepted by `parse`.
    std::string format(const GroupElement& g) const;

    /// Structural equality (same kind, names and table), ignoring identity tags.
    bool same_structure(const GroupOracle& other) const;

private:
    GroupOracle() = default;
    void check_owner(const GroupElement& a) const;
    GroupElement make(std::vector<std::uint32_t> data) const { return GroupElement{id_, std::move(data)}; }

    Kind kind_ = Kind::Free;
    std::uint32_t id_ = 0;
    std::vector<std::string> letters_;
    std::unordered_map<std::string, GroupLetter> letter_index_;
    std::vector<std::string> generator_names_;

    // finite groups
    std::vector<std::string> element_names_;
    std::unordered_map<std::string, std::size_t> element_index_;
    std::size_t identity_ = 0;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverses_;
    std::vector<std::size_t> generators_;
    std::vector<GroupWord> shortest_;
    GroupWord nonempty_identity_;
};

}  // namespace crwp
