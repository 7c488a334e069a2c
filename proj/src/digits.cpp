#include "dbe/digits.hpp"

#include <stdexcept>

namespace dbe {

DigitString::DigitString(unsigned b, std::vector<std::uint8_t> d) : base(b), digits(std::move(d)) {
    if (base != 2 && base != 3) throw std::invalid_argument("DigitString: base must be 2 or 3");
    for (auto v : digits)
        if (v >= base) throw std::invalid_argument("DigitString: digit out of range");
}

Rational DigitString::value() const {
    BigInt num = 0, den = 1;
    for (auto v : digits) {
        num = num * base + v;
        den *= base;
    }
    return Rational(num, den);
}

DigitString expand_digits(const Rational& x, unsigned base, std::size_t k) {
    if (base != 2 && base != 3) throw std::invalid_argument("expand_digits: base must be 2 or 3");
    if (x.sign() < 0 || x > Rational(1)) throw std::domain_error("expand_digits: x outside [0,1]");
    DigitString out;
    out.base = base;
    out.digits.reserve(k);
    if (x == Rational(1)) {
        out.digits.assign(k, static_cast<std::uint8_t>(base - 1));
        return out;
    }
    // Long division on the reduced fraction; floor digits give the
    // terminating expansion whenever one exists.
    BigInt rem = x.numerator();
    const BigInt den = x.denominator();
    for (std::size_t i = 0; i < k; ++i) {
        rem *= base;
        BigInt q = rem / den;
        rem -= q * den;
        out.digits.push_back(static_cast<std::uint8_t>(q.get_ui()));
    }
    return out;
}

} // namespace dbe
