#include "tropcp/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tropcp {

PuiseuxSeries::PuiseuxSeries(const Rational& constant) {
  if (constant != 0) terms_.push_back({Rational(0), constant});
}

PuiseuxSeries PuiseuxSeries::from_terms(std::vector<PuiseuxTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent > b.exponent; });
  PuiseuxSeries out;
  for (auto& term : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == term.exponent) {
      out.terms_.back().coefficient += term.coefficient;
      if (out.terms_.back().coefficient == 0) out.terms_.pop_back();
    } else if (term.coefficient != 0) {
      out.terms_.push_back(std::move(term));
    }
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coefficient, const Rational& exponent) {
  PuiseuxSeries out;
  if (coefficient != 0) out.terms_.push_back({exponent, coefficient});
  return out;
}

int PuiseuxSeries::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coefficient); }

const PuiseuxTerm& PuiseuxSeries::leading() const {
  if (terms_.empty()) throw std::logic_error("PuiseuxSeries::leading() on zero series");
  return terms_.front();
}

TropValue PuiseuxSeries::valuation() const {
  return terms_.empty() ? TropValue::neg_inf() : TropValue(terms_.front().exponent);
}

double PuiseuxSeries::eval(double t) const {
  double acc = 0.0;
  for (const auto& term : terms_) {
    acc += term.coefficient.get_d() * std::pow(t, term.exponent.get_d());
  }
  return acc;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out = *this;
  for (auto& term : out.terms_) term.coefficient = -term.coefficient;
  return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& rhs) {
  std::vector<PuiseuxTerm> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent > b->exponent)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->exponent > a->exponent) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& rhs) { return *this += -rhs; }

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::vector<PuiseuxTerm> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      products.push_back({x.exponent + y.exponent, x.coefficient * y.coefficient});
    }
  }
  return PuiseuxSeries::from_terms(std::move(products));
}

std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string PuiseuxSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [e, c] = terms_[i];
    Rational mag = abs(c);
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && e != 0;
    if (!unit) out += to_string(mag);
    if (e != 0) {
      if (!unit) out += "*";
      out += "t";
      if (e != 1) {
        out += e.get_den() == 1 && e > 0 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
      }
    }
  }
  return out;
}

double sign_threshold(const PuiseuxSeries& s) {
  const auto& terms = s.terms();
  if (terms.size() < 2) return 2.0;
  const double gap = Rational(terms[0].exponent - terms[1].exponent).get_d();
  Rational tail = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) tail += abs(terms[i].coefficient);
  const double ratio = Rational(tail / abs(terms[0].coefficient)).get_d();
  return std::max(2.0, std::pow(1.0 + ratio, 1.0 / gap));
}

std::vector<double> logt_map(std::span<const double> x, double t) {
  if (!(t > 1.0)) throw std::domain_error("logt_map: base t must exceed 1");
  const double log_t = std::log(t);
  std::vector<double> out;
  out.reserve(x.size());
  for (const double v : x) {
    if (!(v > 0.0)) {
      throw std::domain_error("logt_map: non-positive entry (point left the nonnegative orthant)");
    }
    out.push_back(std::log(v) / log_t);
  }
  return out;
}

}  // namespace tropcp
