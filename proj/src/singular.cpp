#include "dbe/singular.hpp"

#include <map>

namespace dbe {

namespace {

void require_unit(const Rational& x, const char* what) {
    if (x.sign() < 0 || x > Rational(1))
        throw std::domain_error(std::string(what) + ": argument " + x.str() + " outside [0,1]");
}

void require_weight(const Rational& a) {
    if (a.sign() <= 0 || a >= Rational(1))
        throw std::domain_error("Riesz-Nagy weight must satisfy 0 < a < 1, got " + a.str());
}

} // namespace

Rational eval_cantor(const Rational& x) {
    require_unit(x, "eval_cantor");
    if (x == Rational(1)) return 1;

    // Walk the ternary digits of num/den. Output bit i is digit/2 until the
    // first digit 1, which contributes a final 1 bit. A repeated remainder
    // closes a cycle.
    const BigInt den = x.denominator();
    BigInt rem = x.numerator();
    std::map<BigInt, std::size_t> seen;
    BigInt bits = 0; // bits emitted so far, as an integer
    std::size_t count = 0;
    while (true) {
        if (rem == 0) return Rational(bits, BigInt(1) << count);
        auto [it, fresh] = seen.emplace(rem, count);
        if (!fresh) {
            // bits = prefix (it->second bits) followed by one period.
            const std::size_t pre = it->second;
            const std::size_t period = count - pre;
            const BigInt prefix = bits >> period;
            const BigInt cycle = bits - (prefix << period);
            // value = prefix / 2^pre + cycle / (2^pre (2^period - 1))
            const BigInt scale = (BigInt(1) << period) - 1;
            return Rational(prefix * scale + cycle, scale << pre);
        }
        rem *= 3;
        const BigInt digit = rem / den;
        rem -= digit * den;
        if (digit == 1) return Rational(bits * 2 + 1, BigInt(1) << (count + 1));
        bits = bits * 2 + (digit == 2 ? 1 : 0);
        ++count;
    }
}

Rational eval_riesz_nagy(const Rational& a, const Rational& x) {
    require_weight(a);
    require_unit(x, "eval_riesz_nagy");
    if (!is_dyadic(x)) throw NotEvaluable("R_a is evaluated exactly only at dyadic points, got " + x.str());
    if (x == Rational(1)) return 1;
    const Rational b = Rational(1) - a;
    Rational value, scale = 1;
    // x = num / 2^k; peel binary digits from the top.
    const unsigned k = dyadic_order(x);
    const BigInt num = x.numerator();
    for (unsigned i = 0; i < k; ++i) {
        if (mpz_tstbit(num.get_mpz_t(), k - 1 - i)) {
            value += scale * a;
            scale *= b;
        } else {
            scale *= a;
        }
    }
    return value;
}

Rational dyadic_increment(const Rational& a, const DigitString& prefix) {
    require_weight(a);
    if (prefix.base != 2) throw std::invalid_argument("dyadic_increment: prefix must be base 2");
    unsigned ones = 0;
    for (auto d : prefix.digits) ones += d;
    const auto zeros = static_cast<unsigned>(prefix.size()) - ones;
    return pow(a, zeros) * pow(Rational(1) - a, ones);
}

std::optional<Rational> riesz_nagy_inverse(const Rational& a, const Rational& y, unsigned max_bits) {
    require_weight(a);
    require_unit(y, "riesz_nagy_inverse");
    if (y == Rational(1)) return Rational(1);
    const Rational b = Rational(1) - a;
    Rational rest = y;
    BigInt bits = 0;
    for (unsigned i = 0; i < max_bits; ++i) {
        if (rest.sign() == 0) return Rational(bits, BigInt(1) << i);
        if (rest < a) {
            bits *= 2;
            rest /= a;
        } else {
            bits = bits * 2 + 1;
            rest = (rest - a) / b;
        }
    }
    return std::nullopt;
}

} // namespace dbe
