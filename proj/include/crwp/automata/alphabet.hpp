#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crwp {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();
/// Spelling of the empty word / epsilon in serialized machines.
inline constexpr std::string_view kEpsilonName = "_";
inline constexpr std::string_view kSeparator = "#";

/// Finite set of named letters. Names are tokens: nonempty, no whitespace, no
/// commas, and never the epsilon spelling `_`.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Symbol> find(std::string_view name) const;
    Symbol at(std::string_view name) const;

    Word encode(std::span<const std::string> letters) const;
    std::vector<std::string> decode(std::span<const Symbol> word) const;

    /// Same letters, possibly in a different order.
    bool same_letters(const Alphabet& other) const;
    /// Index of each of our letters in `other`.
    std::vector<Symbol> map_into(const Alphabet& other) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

bool is_token(std::string_view s);
std::vector<std::string> split_tokens(std::string_view text);
std::string join_tokens(std::span<const std::string> tokens, std::string_view sep = " ");

}  // namespace crwp
