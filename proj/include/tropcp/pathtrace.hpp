#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "tropcp/troppoly.hpp"

namespace tropcp {

/// The pathological LP family with 3r+1 inequalities in dimension 2r, its
/// tropicalization, and its tropical cost vector.
struct LWInstance {
  int r = 0;
  PuiseuxLP plp;
  TropPolyhedron trop;
  TropVector cost;

  bool operator==(const LWInstance&) const = default;
};

/// Rows, in order: x1 <= t^2, x2 <= t; for 1 <= j < r the three rows
/// x_{2j+1} <= t x_{2j-1}, x_{2j+1} <= t x_{2j}, x_{2j+2} <= t^(1-2^-j)(x_{2j-1} + x_{2j});
/// then x_{2r-1} >= 0, x_{2r} >= 0. Objective x1 + t^-1 x2 + sum_j t^-(j+1)(x_{2j+1} + x_{2j+2}).
/// Throws std::invalid_argument for r < 1.
LWInstance lw_instance(int r);

/// Closed-form recursion for the barycenter of {x in val P : x1 <= mu}.
TropVector lw_recursive(int r, const Rational& mu);

struct TableColumn {
  Rational mu;
  Rational x_odd;   // x_{2j+1}
  Rational x_even;  // x_{2j+2}
  bool operator==(const TableColumn&) const = default;
};

/// The three tabulated nondifferentiability points for block j and index k,
/// 1 <= j, 0 <= k < 2^(j-1). Throws std::out_of_range otherwise.
std::array<TableColumn, 3> lw_table(int j, int k);

struct Segment {
  Rational mu_left;
  Rational mu_right;
  TropVector value_left;
  std::vector<Rational> slope;

  TropVector value_at(const Rational& mu) const;
  TropVector value_right() const { return value_at(mu_right); }
  bool operator==(const Segment&) const = default;
};

/// mu -> x*(mu) as maximal affine pieces over [mu_lo, mu_hi].
struct PiecewisePath {
  std::vector<Segment> segments;

  /// mu_0 < ... < mu_k, the segment endpoints.
  std::vector<Rational> breakpoints() const;
  /// Evaluates the path at mu in [front, back].
  TropVector value_at(const Rational& mu) const;
};

struct NondegenerateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default minimal interval width for LW r: 2^-(2r+4).
Rational lw_min_width(int r);

/**
 * Exact breakpoints of mu -> barycenter(P, cval, mu) on [mu_lo, mu_hi].
 *
 * An interval is accepted as affine when the values at its midpoint and at
 * its 1/3 point match linear interpolation of the endpoint values exactly.
 * Failing intervals are split, first at the intersection of the left and
 * right secants when that point verifies as a kink, otherwise at the
 * midpoint. Adjacent pieces with equal slopes are merged.
 */
PiecewisePath trace(const TropPolyhedron& P, const TropVector& cval, const Rational& mu_lo,
                    const Rational& mu_hi, const Rational& min_width);

std::size_t count_pieces(const PiecewisePath& path);

/// Sum of the entries, -inf absorbing.
TropValue bary_volume(const TropVector& x);

}  // namespace tropcp
