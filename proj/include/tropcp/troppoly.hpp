#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tropcp/puiseux.hpp"
#include "tropcp/tropical.hpp"

namespace tropcp {

/// beta_0 v max_i (beta_i + x_i). Monotone nondecreasing in x.
struct TropAffineForm {
  TropValue constant;
  TropVector coeffs;

  TropValue eval(const TropVector& x) const;
  bool operator==(const TropAffineForm&) const = default;
};

/// LHS alpha_j + x_j of a decomposed constraint.
struct VarLhs {
  std::size_t index = 0;
  TropValue shift;
  bool operator==(const VarLhs&) const = default;
};

/// Constant LHS alpha_0.
struct GroundLhs {
  TropValue alpha;
  bool operator==(const GroundLhs&) const = default;
};

/// lhs <= rhs(x) with a single-term left-hand side.
struct UpperConstraint {
  std::variant<VarLhs, GroundLhs> lhs;
  TropAffineForm rhs;

  bool holds(const TropVector& x) const;
  bool operator==(const UpperConstraint&) const = default;
};

/// A general tropical inequality  lhs(x) <= rhs(x).
struct TropInequality {
  TropAffineForm lhs;
  TropAffineForm rhs;
};

/// {x in T^n : every constraint holds}.
struct TropPolyhedron {
  std::size_t dim = 0;
  std::vector<UpperConstraint> constraints;

  bool operator==(const TropPolyhedron&) const = default;
};

/// Rows A x <= b over Puiseux series, objective c.
struct PuiseuxLP {
  std::vector<std::vector<PuiseuxSeries>> A;
  std::vector<PuiseuxSeries> b;
  std::vector<PuiseuxSeries> c;
  /// Name of the generator that built this LP ("lw"), empty when user-supplied.
  std::string generator;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return c.size(); }
  /// Throws std::invalid_argument when dimensions disagree.
  void validate() const;
  bool operator==(const PuiseuxLP&) const = default;
};

struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SignUnsafeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One UpperConstraint per LHS term with coefficient > -inf.
std::vector<UpperConstraint> decompose(const TropInequality& ineq);

bool member(const TropPolyhedron& P, const TropVector& x);

/// True when the box [x - margin, x + margin] lies in P (margin > 0, x finite).
/// Each constraint is tested at its worst corner, which is exact because the
/// constraints are monotone in every variable.
bool interior_with_margin(const TropPolyhedron& P, const TropVector& x, const Rational& margin);

/**
 * Greatest element of P for the entrywise order.
 *
 * Decreasing Kleene iteration from +inf: each round sets
 * x_j <- min(x_j, min over constraints on j of rhs(x) - shift). A coordinate
 * still at +inf after dim+1 rounds is Unbounded. Values falling below a
 * lower sentinel, under which no finite fixpoint coordinate can lie, are
 * snapped to -inf. Ground constraints are checked once the iteration is
 * stable; a violation means P is empty.
 */
TropVector greatest(const TropPolyhedron& P);

/// P intersected with {x : <cval, x> <= mu}. cval must be finite entrywise.
TropPolyhedron sublevel(const TropPolyhedron& P, const TropVector& cval, const TropValue& mu);

/// greatest(sublevel(P, cval, mu)).
TropVector barycenter(const TropPolyhedron& P, const TropVector& cval, const TropValue& mu);

/// Term-wise valuation of a sign-safe Puiseux LP. Every nonzero entry of A and
/// b must be a monomial; otherwise SignUnsafeError.
TropPolyhedron naive_tropicalize(const PuiseuxLP& plp);

enum class CheckStatus { Pass, Fail, Unknown, Asserted, NotChecked };
std::string to_string(CheckStatus s);

struct AssumptionReport {
  /// P inside the nonnegative orthant and 0 in P.
  CheckStatus contains_origin_nonneg = CheckStatus::Unknown;
  /// val P regular.
  CheckStatus regular = CheckStatus::NotChecked;
  /// c positive entrywise.
  CheckStatus positive_cost = CheckStatus::Unknown;
  std::string detail;

  bool ok() const {
    return contains_origin_nonneg == CheckStatus::Pass && positive_cost == CheckStatus::Pass &&
           regular != CheckStatus::Fail;
  }
};

AssumptionReport assumption_check(const PuiseuxLP& plp);

}  // namespace tropcp
