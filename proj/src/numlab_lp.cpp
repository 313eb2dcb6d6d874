#include <cmath>
#include <limits>

#include "numlab_internal.hpp"
#include "tropcp/numlab.hpp"

namespace tropcp {

void SamplerConfig::validate() const {
  if (chains <= 0 || burn_in <= 0 || samples_per_chain <= 0) {
    throw std::invalid_argument("SamplerConfig: chains, burn_in and samples_per_chain must be positive");
  }
}

void NewtonConfig::validate() const {
  if (!(gradient_tolerance > 0.0)) throw std::invalid_argument("NewtonConfig: tolerance must be positive");
  if (max_iterations <= 0) throw std::invalid_argument("NewtonConfig: max_iterations must be positive");
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("NewtonConfig: shrink must be in (0,1)");
  if (!(sufficient_decrease > 0.0 && sufficient_decrease < 0.5)) {
    throw std::invalid_argument("NewtonConfig: sufficient_decrease must be in (0,1/2)");
  }
}

NumericLP instantiate(const PuiseuxLP& plp, double t) {
  if (!(t >= 1.0)) throw std::invalid_argument("instantiate: t must be at least 1");
  plp.validate();
  const auto m = static_cast<Eigen::Index>(plp.rows());
  const auto n = static_cast<Eigen::Index>(plp.cols());
  NumericLP out;
  out.t = t;
  out.A.resize(m, n);
  out.b.resize(m);
  out.c.resize(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out.A(i, j) = plp.A[i][j].eval(t);
    out.b(i) = plp.b[i].eval(t);
  }
  for (Eigen::Index j = 0; j < n; ++j) out.c(j) = plp.c[j].eval(t);
  return out;
}

NumericLP with_nonnegativity(const NumericLP& nlp) {
  const Eigen::Index n = nlp.cols();
  std::vector<Eigen::Index> missing;
  for (Eigen::Index j = 0; j < n; ++j) {
    bool found = false;
    for (Eigen::Index i = 0; i < nlp.rows() && !found; ++i) {
      const bool single = (nlp.A.row(i).array() != 0.0).count() == 1;
      found = single && nlp.A(i, j) < 0.0 && nlp.b(i) == 0.0;
    }
    if (!found) missing.push_back(j);
  }
  NumericLP out = nlp;
  const auto m = nlp.rows();
  const auto extra = static_cast<Eigen::Index>(missing.size());
  out.A.conservativeResize(m + extra, n);
  out.b.conservativeResize(m + extra);
  out.A.bottomRows(extra).setZero();
  out.b.tail(extra).setZero();
  for (Eigen::Index k = 0; k < extra; ++k) out.A(m + k, missing[k]) = -1.0;
  return out;
}

bool strictly_feasible(const NumericLP& nlp, const Eigen::VectorXd& x) {
  if (x.size() != nlp.cols() || !x.allFinite()) return false;
  const Eigen::VectorXd s = nlp.slack(x);
  const Eigen::VectorXd scale = nlp.b.cwiseAbs() + nlp.A.cwiseAbs() * x.cwiseAbs();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s(i) > 1e-10 * scale(i)) || !(s(i) > 0.0)) return false;
  }
  return true;
}

namespace detail {

WorkingLP make_working(const NumericLP& nlp, const std::vector<double>& log_scale) {
  const Eigen::Index n = nlp.cols();
  if (!log_scale.empty() && static_cast<Eigen::Index>(log_scale.size()) != n) {
    throw std::invalid_argument("log_scale length differs from the number of variables");
  }
  WorkingLP w;
  w.lp.t = nlp.t;
  w.scale = Eigen::VectorXd::Ones(n);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(log_scale.size()); ++j) {
    w.scale(j) = std::pow(nlp.t, log_scale[j]);
  }
  w.lp.A = nlp.A * w.scale.asDiagonal();
  w.lp.b = nlp.b;
  w.lp.c = nlp.c.cwiseProduct(w.scale);
  for (Eigen::Index i = 0; i < w.lp.A.rows(); ++i) {
    const double norm = std::max(w.lp.A.row(i).cwiseAbs().maxCoeff(), std::abs(w.lp.b(i)));
    if (norm > 0.0) {
      w.lp.A.row(i) /= norm;
      w.lp.b(i) /= norm;
    }
  }
  return w;
}

Eigen::VectorXd seed(const NumericLP& nlp, const std::optional<std::vector<double>>& log_hint) {
  const Eigen::Index n = nlp.cols();
  if (log_hint) {
    Eigen::VectorXd x(n);
    for (Eigen::Index j = 0; j < n; ++j) x(j) = std::pow(nlp.t, (*log_hint)[j]);
    if (strictly_feasible(nlp, x)) return x;
  }
  for (const double delta : {1.0, 1.0 / nlp.t, 1.0 / (nlp.t * nlp.t)}) {
    const Eigen::VectorXd x = Eigen::VectorXd::Constant(n, delta);
    if (strictly_feasible(nlp, x)) return x;
  }
  throw NoInteriorFound("interior_seed: no strictly feasible candidate (polyhedron empty or thin?)");
}

std::optional<std::vector<double>> shifted_hint(const PathOptions& opts, Eigen::Index n) {
  if (!opts.hint) return std::nullopt;
  if (static_cast<Eigen::Index>(opts.hint->size()) != n) {
    throw std::invalid_argument("hint length differs from the number of variables");
  }
  std::vector<double> h(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const TropValue& v = (*opts.hint)[j];
    if (v.is_neg_inf()) return std::nullopt;
    h[j] = v.to_double() - (opts.log_scale.empty() ? 0.0 : opts.log_scale[j]);
  }
  return h;
}

Eigen::VectorXd working_start(const WorkingLP& w, const PathOptions& opts) {
  const Eigen::Index n = w.lp.cols();
  if (opts.start) {
    if (opts.start->size() != n) throw std::invalid_argument("start length differs from the number of variables");
    Eigen::VectorXd u = opts.start->cwiseQuotient(w.scale);
    if (!strictly_feasible(w.lp, u)) throw NoInteriorFound("supplied start point is not strictly feasible");
    return u;
  }
  return seed(w.lp, shifted_hint(opts, n));
}

}  // namespace detail

Eigen::VectorXd interior_seed(const NumericLP& nlp, const std::optional<TropVector>& hint) {
  PathOptions opts;
  opts.hint = hint;
  return detail::seed(nlp, detail::shifted_hint(opts, nlp.cols()));
}

std::optional<TropVector> ramp_hint(const TropPolyhedron& P, const TropVector& x, const Rational& eps) {
  if (x.size() != P.dim) throw std::invalid_argument("ramp_hint: dimension mismatch");
  TropVector h(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_neg_inf()) return std::nullopt;
    h[j] = trop::sub(x[j], eps * static_cast<long>(j + 1));
  }
  if (!interior_with_margin(P, h, eps / 2)) return std::nullopt;
  return h;
}

double log_barrier_value(const NumericLP& nlp, double mu, const Eigen::VectorXd& x) {
  const Eigen::VectorXd s = nlp.slack(x);
  if ((s.array() <= 0.0).any()) return std::numeric_limits<double>::infinity();
  return nlp.c.dot(x) - mu * s.array().log().sum();
}

Eigen::VectorXd log_barrier_gradient(const NumericLP& nlp, double mu, const Eigen::VectorXd& x) {
  const Eigen::VectorXd s = nlp.slack(x);
  return nlp.c + mu * (nlp.A.transpose() * s.cwiseInverse());
}

}  // namespace tropcp
