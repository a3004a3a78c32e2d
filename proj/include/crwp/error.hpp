#pragma once

#include <stdexcept>
#include <string>

namespace crwp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands drawn from two different oracles/components.
class MixedOperands : public Error {
public:
    using Error::Error;
};

/// A letter that is not part of the relevant alphabet.
class UnknownLetter : public Error {
public:
    explicit UnknownLetter(const std::string& letter)
        : Error("unknown letter '" + letter + "'"), letter_(letter) {}
    const std::string& letter() const noexcept { return letter_; }

private:
    std::string letter_;
};

/// Raised when a bitranslation that must be inner is not. Coming out of the
/// global product this means the structure maps violate the requirement that
/// products of images land in the inner part of the hull.
class NotInner : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent input data.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace crwp
