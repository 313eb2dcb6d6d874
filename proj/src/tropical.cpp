#include "tropcp/tropical.hpp"

#include <limits>
#include <stdexcept>

namespace tropcp {

const Rational& TropValue::value() const {
  if (!finite_) throw std::logic_error("TropValue::value() on -inf");
  return value_;
}

double TropValue::to_double() const {
  return finite_ ? value_.get_d() : -std::numeric_limits<double>::infinity();
}

bool TropValue::operator==(const TropValue& o) const {
  if (finite_ != o.finite_) return false;
  return !finite_ || value_ == o.value_;
}

std::strong_ordering TropValue::operator<=>(const TropValue& o) const {
  if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
  const int c = cmp(value_, o.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string TropValue::str() const { return finite_ ? to_string(value_) : "-inf"; }

TropValue TropValue::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  return TropValue(parse_rational(text));
}

namespace trop {

TropValue add(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue mul(const TropValue& a, const TropValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropValue::neg_inf();
  return TropValue(Rational(a.value() + b.value()));
}

TropValue sub(const TropValue& a, const Rational& b) {
  if (a.is_neg_inf()) return a;
  return TropValue(Rational(a.value() - b));
}

TropValue dot(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("trop::dot: length mismatch");
  TropValue acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i]));
  return acc;
}

TropVector combine(const TropValue& lam, const TropVector& x, const TropValue& mu,
                   const TropVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("trop::combine: length mismatch");
  if (add(lam, mu) != TropValue(0)) {
    throw std::invalid_argument("trop::combine: requires max(lam, mu) = 0");
  }
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(mul(lam, x[i]), mul(mu, y[i]));
  return out;
}

bool leq(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("trop::leq: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

TropVector from_rationals(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

std::string str(const TropVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += x[i].str();
  }
  return s + ")";
}

}  // namespace trop
}  // namespace tropcp
