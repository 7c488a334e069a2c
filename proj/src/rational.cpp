#include "dbe/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dbe {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_int(std::string_view s) {
    std::string tmp(s);
    if (!tmp.empty() && tmp.front() == '+') tmp.erase(0, 1);
    return BigInt(tmp, 10);
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-')
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    const BigInt d = parse_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(num), d);
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& r, unsigned e) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), r.numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.denominator().get_mpz_t(), e);
    return Rational(n, d);
}

Rational pow2_neg(unsigned k) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return Rational(1, d);
}

bool is_dyadic(const Rational& r) {
    const BigInt d = r.denominator();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

unsigned dyadic_order(const Rational& r) {
    if (!is_dyadic(r)) throw std::domain_error("dyadic_order: " + r.str() + " is not dyadic");
    return static_cast<unsigned>(mpz_sizeinbase(r.denominator().get_mpz_t(), 2) - 1);
}

BigInt floor(const Rational& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

BigInt ceil(const Rational& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

} // namespace dbe
