#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "tropcp/rational.hpp"
#include "tropcp/tropical.hpp"

namespace tropcp {

/// One term c * t^e of a Puiseux series.
struct PuiseuxTerm {
  Rational exponent;
  Rational coefficient;

  bool operator==(const PuiseuxTerm&) const = default;
};

/**
 * Finite generalized Puiseux series with rational exponents and coefficients.
 *
 * Terms are kept sorted by strictly decreasing exponent and never store a
 * zero coefficient, so the empty term list is the zero series and the first
 * term (if any) is the leading term. The order is the one of the
 * non-archimedean field: a > b iff the leading coefficient of a - b is
 * positive, equivalently a(t) > b(t) for every large enough t.
 */
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  /// Constant series.
  PuiseuxSeries(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PuiseuxSeries(int constant) : PuiseuxSeries(Rational(constant)) {}  // NOLINT

  /// Builds from arbitrary terms: sorts, merges like exponents, drops zeros.
  static PuiseuxSeries from_terms(std::vector<PuiseuxTerm> terms);
  /// coefficient * t^exponent
  static PuiseuxSeries monomial(const Rational& coefficient, const Rational& exponent);
  /// The series t.
  static PuiseuxSeries t() { return monomial(1, 1); }

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Sign of the leading coefficient (-1, 0, +1).
  int sign() const;
  const PuiseuxTerm& leading() const;

  /// Greatest exponent of the support, -inf for the zero series.
  TropValue valuation() const;
  /// Numeric value sum c * t^e at a real t > 1 (double precision).
  double eval(double t) const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& rhs);
  PuiseuxSeries& operator-=(const PuiseuxSeries& rhs);
  PuiseuxSeries& operator*=(const PuiseuxSeries& rhs);
  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  bool operator==(const PuiseuxSeries&) const = default;
  /// Field order, decided symbolically.
  friend std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend std::strong_ordering operator<=>(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return compare(a, b);
  }

  /// Human-readable form, e.g. "2*t^(1/2) - 3".
  std::string str() const;

 private:
  std::vector<PuiseuxTerm> terms_;
};

/**
 * A real T0 such that sign(s(t)) equals s.sign() for every t >= T0.
 *
 * T0 = max(2, (1 + sum_{k>0} |c_k| / |c_0|)^(1/gap)), gap being the distance
 * between the two greatest exponents. Monomials and zero give 2.
 */
double sign_threshold(const PuiseuxSeries& s);

/// Entrywise log base t. Throws std::domain_error on non-positive entries or t <= 1.
std::vector<double> logt_map(std::span<const double> x, double t);

}  // namespace tropcp
