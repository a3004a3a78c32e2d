#include "crwp/automata/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "crwp/error.hpp"

namespace crwp {

bool is_token(std::string_view s) {
    if (s.empty() || s == kEpsilonName) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == ','; });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (Symbol s = 0; s < names_.size(); ++s) {
        if (!is_token(names_[s])) throw InvalidInput("invalid letter name '" + names_[s] + "'");
        if (!index_.emplace(names_[s], s).second)
            throw InvalidInput("duplicate letter '" + names_[s] + "'");
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw UnknownLetter(std::string(name));
}

Word Alphabet::encode(std::span<const std::string> letters) const {
    Word out;
    out.reserve(letters.size());
    for (const auto& l : letters) out.push_back(at(l));
    return out;
}

std::vector<std::string> Alphabet::decode(std::span<const Symbol> word) const {
    std::vector<std::string> out;
    out.reserve(word.size());
    for (Symbol s : word) out.push_back(name(s));
    return out;
}

bool Alphabet::same_letters(const Alphabet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(names_.begin(), names_.end(), [&](const std::string& n) { return other.find(n).has_value(); });
}

std::vector<Symbol> Alphabet::map_into(const Alphabet& other) const {
    std::vector<Symbol> out;
    out.reserve(size());
    for (const auto& n : names_) out.push_back(other.at(n));
    return out;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        std::size_t start = k;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k > start) out.emplace_back(text.substr(start, k - start));
    }
    return out;
}

std::string join_tokens(std::span<const std::string> tokens, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k) out += sep;
        out += tokens[k];
    }
    return out;
}

}  // namespace crwp
