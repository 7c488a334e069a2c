#pragma once

// Exact rational numbers backed by GMP. Values are always in lowest terms
// with a positive denominator, so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dbe {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(v) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(unsigned v) : value_(v) {}
    Rational(const BigInt& num, const BigInt& den = 1);
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
    /// Integer-valued gmpxx expressions such as `a << k` or `a * b`.
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : Rational(BigInt(e)) {}

    /// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Always "p/q", including integers ("2/1").
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// r^e for e >= 0.
Rational pow(const Rational& r, unsigned e);

/// 2^-k
Rational pow2_neg(unsigned k);

/// True when the reduced denominator is a power of two.
bool is_dyadic(const Rational& r);

/// Smallest k with r * 2^k integral; requires is_dyadic(r).
unsigned dyadic_order(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

} // namespace dbe
