#pragma once

// Truncated Laurent series over exact rationals.
//
// A series lives on a lattice m in {1, 2}: exponents are powers of
// p = q^(1/m) = exp(2*pi*i*tau/m). Every series records the largest exponent
// N through which its coefficients are known; coefficients above N are
// unknown, never implicitly zero. Operations propagate the tightest N they
// can justify.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modeq/errors.hpp"

namespace modeq {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms.
Rational ratio(long num, long den);

// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Rational &x);
Rational parse_rational(const std::string &text);

class LaurentSeries {
  public:
    // Coefficients for exponents n_min, n_min + 1, ...; entries beyond `order`
    // are dropped and missing entries up to `order` are zero.
    LaurentSeries(int lattice, int n_min, int order, std::vector<Rational> coeffs);

    static LaurentSeries zero(int lattice, int order);
    static LaurentSeries constant(const Rational &c, int lattice, int order);
    static LaurentSeries monomial(const Rational &c, int exponent, int lattice, int order);

    int lattice() const { return lattice_; }
    int n_min() const { return n_min_; }
    int order() const { return order_; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    // Coefficient at exponent n. Zero below n_min; throws UnknownCoefficient
    // above order().
    Rational coeff(int n) const;

    // Smallest exponent with a nonzero coefficient, or order() + 1 if the
    // series is zero on its whole known range.
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }
    Rational leading_coefficient() const;

    LaurentSeries truncated(int order) const;

  private:
    void normalize();

    int lattice_;
    int n_min_;
    int order_;
    std::vector<Rational> coeffs_;
};

// Ring operations. Operands on different lattices are aligned first.
LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator-(const LaurentSeries &a);
LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b);

LaurentSeries operator*(const Rational &c, const LaurentSeries &a);
LaurentSeries operator*(const LaurentSeries &a, const Rational &c);
LaurentSeries operator/(const Rational &c, const LaurentSeries &a);
// Adds/subtracts a constant; requires order() >= 0.
LaurentSeries operator+(const LaurentSeries &a, const Rational &c);
LaurentSeries operator-(const LaurentSeries &a, const Rational &c);

LaurentSeries series_inv(const LaurentSeries &a);
LaurentSeries series_pow(const LaurentSeries &a, unsigned k);

// Euler operator p d/dp.
LaurentSeries theta_op(const LaurentSeries &a);
// Term-wise inverse of theta_op with zero constant of integration.
// Throws NonzeroConstantTerm if the exponent-0 coefficient is not zero.
LaurentSeries theta_antider(const LaurentSeries &a);

LaurentSeries principal_part(const LaurentSeries &a);
Rational constant_term(const LaurentSeries &a);
// Multiplies by p^k.
LaurentSeries shift(const LaurentSeries &a, int k);
// Re-expresses a on lattice m_target (a multiple of a.lattice()).
LaurentSeries lattice_align(const LaurentSeries &a, int m_target);
// p -> -p.
LaurentSeries negate_variable(const LaurentSeries &a);

// Result of comparing two series on their common known range.
struct Agreement {
    bool equal = false;
    int checked_through = 0;            // largest exponent compared
    std::optional<int> first_mismatch;  // exponent of the first differing coefficient
};

Agreement compare(const LaurentSeries &a, const LaurentSeries &b);
bool equal_to_order(const LaurentSeries &a, const LaurentSeries &b);

// Series times (i*pi)^e. Keeps every stored coefficient rational.
struct PrefactoredSeries {
    int e = 0;
    LaurentSeries body;
};

PrefactoredSeries operator+(const PrefactoredSeries &a, const PrefactoredSeries &b);
PrefactoredSeries operator-(const PrefactoredSeries &a, const PrefactoredSeries &b);
PrefactoredSeries operator*(const PrefactoredSeries &a, const PrefactoredSeries &b);

// Shared JSON format: {"m", "n_min", "N", "coeffs": {"<exp>": "num/den"}}; only
// nonzero coefficients are listed.
nlohmann::json to_json(const LaurentSeries &s);
nlohmann::json to_json(const PrefactoredSeries &s);
LaurentSeries series_from_json(const nlohmann::json &j);
PrefactoredSeries prefactored_from_json(const nlohmann::json &j);

// Text form: "c * p^n + ... + O(p^(N+1))", prefactor as "(i*pi)^e * (...)".
std::string to_text(const LaurentSeries &s);
std::string to_text(const PrefactoredSeries &s);
std::ostream &operator<<(std::ostream &os, const LaurentSeries &s);

} // namespace modeq
