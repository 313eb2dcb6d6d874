#include "tropcp/troppoly.hpp"

#include <algorithm>
#include <optional>

namespace tropcp {

TropValue TropAffineForm::eval(const TropVector& x) const {
  TropValue acc = constant;
  const std::size_t n = std::min(coeffs.size(), x.size());
  for (std::size_t i = 0; i < n; ++i) acc = trop::add(acc, trop::mul(coeffs[i], x[i]));
  return acc;
}

bool UpperConstraint::holds(const TropVector& x) const {
  const TropValue right = rhs.eval(x);
  if (const auto* v = std::get_if<VarLhs>(&lhs)) return trop::mul(v->shift, x[v->index]) <= right;
  return std::get<GroundLhs>(lhs).alpha <= right;
}

void PuiseuxLP::validate() const {
  if (b.size() != A.size()) throw std::invalid_argument("PuiseuxLP: b length differs from row count");
  for (const auto& row : A) {
    if (row.size() != c.size()) throw std::invalid_argument("PuiseuxLP: row length differs from c");
  }
}

std::vector<UpperConstraint> decompose(const TropInequality& ineq) {
  std::vector<UpperConstraint> out;
  if (ineq.lhs.constant.is_finite()) out.push_back({GroundLhs{ineq.lhs.constant}, ineq.rhs});
  for (std::size_t j = 0; j < ineq.lhs.coeffs.size(); ++j) {
    if (ineq.lhs.coeffs[j].is_finite()) out.push_back({VarLhs{j, ineq.lhs.coeffs[j]}, ineq.rhs});
  }
  return out;
}

bool member(const TropPolyhedron& P, const TropVector& x) {
  if (x.size() != P.dim) throw std::invalid_argument("member: dimension mismatch");
  return std::all_of(P.constraints.begin(), P.constraints.end(),
                     [&](const UpperConstraint& c) { return c.holds(x); });
}

bool interior_with_margin(const TropPolyhedron& P, const TropVector& x, const Rational& margin) {
  if (x.size() != P.dim) throw std::invalid_argument("interior_with_margin: dimension mismatch");
  TropVector low(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_neg_inf()) return false;
    low[i] = trop::sub(x[i], margin);
  }
  for (const auto& c : P.constraints) {
    if (const auto* v = std::get_if<VarLhs>(&c.lhs)) {
      TropVector corner = low;
      corner[v->index] = TropValue(Rational(x[v->index].value() + margin));
      if (!c.holds(corner)) return false;
    } else if (!c.holds(low)) {
      return false;
    }
  }
  return true;
}

namespace {

// Value of the decreasing iteration: -inf, finite, or the +inf start.
struct Ext {
  enum class Kind { NegInf, Finite, PosInf } kind = Kind::PosInf;
  Rational v;

  static Ext top() { return {}; }
  static Ext from(const TropValue& t) {
    if (t.is_neg_inf()) return {Kind::NegInf, {}};
    return {Kind::Finite, t.value()};
  }
  bool is_top() const { return kind == Kind::PosInf; }
  bool less_than(const Ext& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Kind::Finite && v < o.v;
  }
  TropValue to_trop() const { return kind == Kind::Finite ? TropValue(v) : TropValue::neg_inf(); }
};

Ext eval_ext(const TropAffineForm& f, const std::vector<Ext>& x) {
  Ext acc = Ext::from(f.constant);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_neg_inf()) continue;
    Ext term = x[i];
    if (term.kind == Ext::Kind::Finite) term.v += f.coeffs[i].value();
    if (acc.less_than(term)) acc = std::move(term);
  }
  return acc;
}

}  // namespace

TropVector greatest(const TropPolyhedron& P) {
  const std::size_t n = P.dim;
  std::vector<std::vector<const UpperConstraint*>> on_var(n);
  Rational min_const = 0;
  Rational max_abs = 0;
  bool have_const = false;
  auto track_coeff = [&](const TropValue& v) {
    if (v.is_finite()) max_abs = std::max(max_abs, Rational(abs(v.value())));
  };
  for (const auto& c : P.constraints) {
    if (c.rhs.coeffs.size() > n) throw std::invalid_argument("greatest: constraint wider than dim");
    for (const auto& b : c.rhs.coeffs) track_coeff(b);
    if (const auto* v = std::get_if<VarLhs>(&c.lhs)) {
      if (v->index >= n) throw std::invalid_argument("greatest: variable index out of range");
      if (v->shift.is_neg_inf()) continue;
      track_coeff(v->shift);
      on_var[v->index].push_back(&c);
      if (c.rhs.constant.is_finite()) {
        min_const = have_const ? std::min(min_const, c.rhs.constant.value()) : c.rhs.constant.value();
        have_const = true;
      }
    }
  }
  // Every finite coordinate of the greatest fixpoint is a constant minus a
  // shift plus at most n-1 (coefficient - shift) steps along a simple chain.
  const Rational low = min_const - 2 * Rational(static_cast<long>(n) + 1) * max_abs - 1;

  std::vector<Ext> x(n, Ext::top());
  for (std::size_t round = 1;; ++round) {
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto* c : on_var[j]) {
        Ext cand = eval_ext(c->rhs, x);
        if (cand.kind == Ext::Kind::Finite) {
          cand.v -= std::get<VarLhs>(c->lhs).shift.value();
          if (cand.v < low) cand = Ext::from(TropValue::neg_inf());
        }
        if (cand.less_than(x[j])) {
          x[j] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (round >= n + 1 && std::any_of(x.begin(), x.end(), [](const Ext& e) { return e.is_top(); })) {
      break;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_top()) {
      throw UnboundedError("greatest: coordinate " + std::to_string(j) + " has no finite upper bound");
    }
  }
  TropVector result(n);
  for (std::size_t j = 0; j < n; ++j) result[j] = x[j].to_trop();
  for (const auto& c : P.constraints) {
    if (std::holds_alternative<GroundLhs>(c.lhs) && !c.holds(result)) {
      throw EmptyError("greatest: ground constraint violated, polyhedron is empty");
    }
  }
  return result;
}

TropPolyhedron sublevel(const TropPolyhedron& P, const TropVector& cval, const TropValue& mu) {
  if (cval.size() != P.dim) throw std::invalid_argument("sublevel: cost length differs from dim");
  TropPolyhedron out = P;
  const TropAffineForm bound{mu, TropVector(P.dim)};
  for (std::size_t i = 0; i < P.dim; ++i) {
    if (cval[i].is_neg_inf()) {
      throw std::invalid_argument("sublevel: cost entry " + std::to_string(i) + " is -inf");
    }
    out.constraints.push_back({VarLhs{i, cval[i]}, bound});
  }
  return out;
}

TropVector barycenter(const TropPolyhedron& P, const TropVector& cval, const TropValue& mu) {
  return greatest(sublevel(P, cval, mu));
}

TropPolyhedron naive_tropicalize(const PuiseuxLP& plp) {
  plp.validate();
  const std::size_t n = plp.cols();
  auto monomial_val = [](const PuiseuxSeries& s, std::size_t row, const char* what) {
    if (!s.is_zero() && !s.is_monomial()) {
      throw SignUnsafeError("naive_tropicalize: row " + std::to_string(row) + " has a multi-term " +
                            what + " (" + s.str() + ")");
    }
    return s.valuation();
  };
  TropPolyhedron out{n, {}};
  for (std::size_t i = 0; i < plp.rows(); ++i) {
    TropInequality ineq{{TropValue::neg_inf(), TropVector(n)}, {TropValue::neg_inf(), TropVector(n)}};
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = plp.A[i][j];
      const TropValue v = monomial_val(a, i, "coefficient");
      if (a.sign() > 0) ineq.lhs.coeffs[j] = v;
      if (a.sign() < 0) ineq.rhs.coeffs[j] = v;
    }
    const auto& b = plp.b[i];
    const TropValue vb = monomial_val(b, i, "bound");
    if (b.sign() > 0) ineq.rhs.constant = vb;
    if (b.sign() < 0) ineq.lhs.constant = vb;
    for (auto& c : decompose(ineq)) out.constraints.push_back(std::move(c));
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
    case CheckStatus::Asserted: return "asserted";
    case CheckStatus::NotChecked: return "not-checked";
  }
  return "?";
}

AssumptionReport assumption_check(const PuiseuxLP& plp) {
  plp.validate();
  AssumptionReport report;
  const std::size_t n = plp.cols();
  const PuiseuxSeries zero;

  std::optional<std::size_t> bad_row;
  for (std::size_t i = 0; i < plp.rows() && !bad_row; ++i) {
    if (plp.b[i] < zero) bad_row = i;
  }
  if (bad_row) {
    report.contains_origin_nonneg = CheckStatus::Fail;
    report.detail += "origin violates row " + std::to_string(*bad_row) + "; ";
  } else {
    // x_j >= 0 follows from a row whose only negative entry is on j, whose
    // positive entries are on certified coordinates, and whose bound is <= 0.
    std::vector<bool> nonneg(n, false);
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < plp.rows(); ++i) {
        if (plp.b[i] > zero) continue;
        std::optional<std::size_t> neg;
        bool usable = true;
        for (std::size_t j = 0; j < n && usable; ++j) {
          const int s = plp.A[i][j].sign();
          if (s < 0) {
            usable = !neg;
            neg = j;
          } else if (s > 0 && !nonneg[j]) {
            usable = false;
          }
        }
        if (usable && neg && !nonneg[*neg]) {
          nonneg[*neg] = true;
          progress = true;
        }
      }
    }
    const auto missing = std::count(nonneg.begin(), nonneg.end(), false);
    if (missing == 0) {
      report.contains_origin_nonneg = CheckStatus::Pass;
    } else {
      report.contains_origin_nonneg = CheckStatus::Unknown;
      report.detail += std::to_string(missing) + " coordinate(s) without derivable nonnegativity; ";
    }
  }

  report.regular = plp.generator == "lw" ? CheckStatus::Asserted : CheckStatus::NotChecked;

  report.positive_cost = CheckStatus::Pass;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(plp.c[j] > zero)) {
      report.positive_cost = CheckStatus::Fail;
      report.detail += "cost entry " + std::to_string(j) + " is not positive; ";
    }
  }
  return report;
}

}  // namespace tropcp
