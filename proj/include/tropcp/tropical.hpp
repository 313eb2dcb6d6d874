#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tropcp/rational.hpp"

namespace tropcp {

/// Element of the max-plus semifield T = R u {-inf}, with exact rational
/// finite part. -inf is the least element.
class TropValue {
 public:
  /// Defaults to the tropical zero, -inf.
  TropValue() = default;
  TropValue(const Rational& v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)
  TropValue(int v) : finite_(true), value_(v) {}               // NOLINT(google-explicit-constructor)

  static TropValue neg_inf() { return {}; }

  bool is_finite() const { return finite_; }
  bool is_neg_inf() const { return !finite_; }
  /// Finite part. Precondition: is_finite().
  const Rational& value() const;

  /// Double approximation; -inf maps to -infinity.
  double to_double() const;

  bool operator==(const TropValue& o) const;
  std::strong_ordering operator<=>(const TropValue& o) const;

  /// "p/q" or "-inf".
  std::string str() const;
  static TropValue parse(std::string_view text);

 private:
  bool finite_ = false;
  Rational value_;
};

using TropVector = std::vector<TropValue>;

namespace trop {

/// Tropical addition: max. -inf is neutral.
TropValue add(const TropValue& a, const TropValue& b);
/// Tropical multiplication: ordinary +. -inf is absorbing.
TropValue mul(const TropValue& a, const TropValue& b);
/// a - b for finite b (residuation by a finite scalar). -inf - b = -inf.
TropValue sub(const TropValue& a, const Rational& b);

/// max_i (x_i + y_i). Throws std::invalid_argument on length mismatch.
TropValue dot(const TropVector& x, const TropVector& y);

/// Entrywise (lam + x) v (mu + y). Requires lam v mu = 0 and equal lengths,
/// otherwise std::invalid_argument.
TropVector combine(const TropValue& lam, const TropVector& x, const TropValue& mu,
                   const TropVector& y);

/// Entrywise product order.
bool leq(const TropVector& x, const TropVector& y);

TropVector from_rationals(const std::vector<Rational>& v);
std::string str(const TropVector& x);

}  // namespace trop
}  // namespace tropcp
