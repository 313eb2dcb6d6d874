#pragma once

#include <random>
#include <string>
#include <vector>

#include "tropcp/puiseux.hpp"
#include "tropcp/tropical.hpp"

namespace testing {

using tropcp::PuiseuxSeries;
using tropcp::PuiseuxTerm;
using tropcp::Rational;
using tropcp::TropValue;
using tropcp::TropVector;

inline Rational Q(const char* s) { return tropcp::parse_rational(s); }

inline TropVector TV(std::initializer_list<const char*> xs) {
  TropVector out;
  for (const char* s : xs) out.push_back(TropValue::parse(s));
  return out;
}

inline PuiseuxSeries mono(const char* coef, const char* exp) {
  return PuiseuxSeries::monomial(Q(coef), Q(exp));
}

/// Random rational num/den with |num| <= max_num, den in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return tropcp::make_rational(num(rng), den(rng));
}

/// Up to max_terms terms, exponents in [-3, 3] with denominator dividing 4,
/// nonzero integer coefficients in [-5, 5].
inline PuiseuxSeries random_series(std::mt19937_64& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> count(0, max_terms), exp(-12, 12), coef(-5, 5);
  std::vector<PuiseuxTerm> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = coef(rng);
    terms.push_back({tropcp::make_rational(exp(rng), 4), Rational(c)});
  }
  return PuiseuxSeries::from_terms(std::move(terms));
}

/// Random series with a positive leading coefficient.
inline PuiseuxSeries random_positive(std::mt19937_64& rng, int max_terms = 4) {
  PuiseuxSeries s;
  while (s.sign() <= 0) s = random_series(rng, max_terms);
  return s;
}

/// Exact value of s at t = base^4 when every exponent has denominator dividing 4.
inline Rational exact_eval_fourth_power(const PuiseuxSeries& s, const mpz_class& base) {
  Rational total = 0;
  for (const auto& term : s.terms()) {
    const Rational e4 = term.exponent * 4;
    const long p = e4.get_num().get_si();
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p < 0 ? -p : p));
    Rational factor = p < 0 ? Rational(mpz_class(1), power) : Rational(power);
    factor.canonicalize();
    total += term.coefficient * factor;
  }
  return total;
}

}  // namespace testing
