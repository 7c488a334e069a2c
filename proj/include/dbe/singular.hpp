#pragma once

// Exact evaluators for the two singular functions the constructions rely on:
// the Cantor function c (devil's staircase) and the Riesz-Nagy family R_a,
//
//     R_a(x) = a R_a(2x)                  on [0, 1/2]
//     R_a(x) = a + (1 - a) R_a(2x - 1)    on [1/2, 1],
//
// which is strictly increasing with zero derivative almost everywhere when
// a != 1/2.

#include "dbe/digits.hpp"
#include "dbe/rational.hpp"

#include <optional>
#include <stdexcept>

namespace dbe {

/// Raised when a descriptor cannot be evaluated exactly at the requested
/// point (e.g. R_a at a non-dyadic argument).
class NotEvaluable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// c(x) for any rational x in [0,1]. The ternary expansion of a rational is
/// eventually periodic, so the binary image is summed in closed form.
Rational eval_cantor(const Rational& x);

/// R_a(x) for dyadic x in [0,1]; requires 0 < a < 1. Throws NotEvaluable for
/// non-dyadic x.
Rational eval_riesz_nagy(const Rational& a, const Rational& x);

/// Increase of R_a over the dyadic cell addressed by a base-2 prefix:
/// a^(#zeros) (1 - a)^(#ones).
Rational dyadic_increment(const Rational& a, const DigitString& prefix);

/// x with R_a(x) = y, when that x is dyadic with at most max_bits binary
/// digits; nullopt otherwise.
std::optional<Rational> riesz_nagy_inverse(const Rational& a, const Rational& y, unsigned max_bits = 4096);

} // namespace dbe
