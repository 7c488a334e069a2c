#pragma once

#include "dbe/rational.hpp"

#include <cstdint>
#include <vector>

namespace dbe {

/// A finite positional expansion 0.d1 d2 d3 ... in base 2 or 3.
struct DigitString {
    unsigned base = 2;
    std::vector<std::uint8_t> digits;

    DigitString() = default;
    DigitString(unsigned b, std::vector<std::uint8_t> d);

    std::size_t size() const { return digits.size(); }
    /// sum d_i base^-i
    Rational value() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// First k digits of x in [0,1]. Where x has two expansions the terminating
/// one is used; x = 1 expands as all (base - 1) digits.
DigitString expand_digits(const Rational& x, unsigned base, std::size_t k);

} // namespace dbe
