#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crwp/automata/pda.hpp"

namespace crwp {

// ---- transformations of Z generated by x: i -> i+1 and the constant t0 ----

struct Ex1Element {
    enum class Kind { Shift, Const };
    Kind kind = Kind::Shift;
    std::int64_t value = 0;

    static Ex1Element shift(std::int64_t k) { return {Kind::Shift, k}; }
    static Ex1Element constant(std::int64_t j) { return {Kind::Const, j}; }
    friend bool operator==(const Ex1Element&, const Ex1Element&) = default;
};

/// Letters x, x^-1, t0.
Alphabet ex1_alphabet();
/// Words act left to right: the value of a word containing t0 is the
/// constant given by the exponent sum after its last t0.
Ex1Element ex1_multiply(const Ex1Element& a, const Ex1Element& b);
Ex1Element ex1_evaluate(std::span<const Symbol> word);
Ex1Element ex1_evaluate_names(std::span<const std::string> word);
std::string ex1_format(const Ex1Element& a);

/// PDA over x, x^-1, t0, # accepting u#v^rev iff u and v have equal value.
/// States q0/q1 count exponents before/after # while no t0 has been seen;
/// t0 before # erases the stack and moves to p0, # from p0 leads to p1,
/// where t0 on an empty stack enters the all-accepting p2.
Pda ex1_pda();

// ---- free group F(x, y) acting on idempotents b_i, i in Z ----

struct Ex2Element {
    bool idempotent = false;
    std::vector<std::uint32_t> word;  ///< reduced, letters of ex2_alphabet
    std::int64_t index = 0;

    static Ex2Element idem(std::int64_t i) { return {true, {}, i}; }
    friend bool operator==(const Ex2Element&, const Ex2Element&) = default;
};

/// Letters x, x^-1, y, y^-1, b0.
Alphabet ex2_alphabet();
/// y moves b_i along ... b_-4, b_-2, b_-1, b_0, b_1, b_2, b_4, b_8 ... and
/// fixes every other b_i; x shifts indices by one.
std::int64_t ex2_act(std::uint32_t letter, std::int64_t index);
Ex2Element ex2_multiply(const Ex2Element& a, const Ex2Element& b);
Ex2Element ex2_evaluate(std::span<const Symbol> word);
Ex2Element ex2_evaluate_names(std::span<const std::string> word);
std::string ex2_format(const Ex2Element& a);

/// All words x^k b0 # b0 y^n in the word problem with k + n + 2 <= max_len,
/// ordered by n, as token lists.
std::vector<std::vector<std::string>> ex2_slice(std::size_t max_len);

struct GapReport {
    bool pass = false;
    std::vector<std::pair<std::size_t, std::size_t>> runs;  ///< (y-run n, x-run k), n >= 1
    std::string reason;
};

/// Checks that the x-run is an injective function of the y-run that doubles
/// from one y-run to the next.
GapReport ex2_gap_check(const std::vector<std::vector<std::string>>& slice);

}  // namespace crwp
