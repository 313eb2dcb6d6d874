#include <cmath>
#include <limits>

#include "numlab_internal.hpp"
#include "tropcp/numlab.hpp"

namespace tropcp {

namespace {

// <w, u> - sum log s(u); +inf outside the interior.
double working_value(const NumericLP& lp, const Eigen::VectorXd& w, const Eigen::VectorXd& u) {
  const Eigen::VectorXd s = lp.slack(u);
  if ((s.array() <= 0.0).any()) return std::numeric_limits<double>::infinity();
  return w.dot(u) - s.array().log().sum();
}

}  // namespace

LogPointResult log_point(const NumericLP& nlp, double mu_t, const NewtonConfig& cfg,
                         const PathOptions& opts) {
  cfg.validate();
  if (!(mu_t > 0.0)) throw std::invalid_argument("log_point: mu must be positive");
  const detail::WorkingLP wk = detail::make_working(nlp, opts.log_scale);
  const NumericLP& lp = wk.lp;
  const Eigen::VectorXd w = lp.c / mu_t;

  LogPointResult res;
  Eigen::VectorXd u = detail::working_start(wk, opts);
  res.iterates.push_back(u.cwiseProduct(wk.scale));

  for (int it = 0;; ++it) {
    const Eigen::VectorXd inv_s = lp.slack(u).cwiseInverse();
    const Eigen::VectorXd grad = w + lp.A.transpose() * inv_s;
    res.gradient_norm = grad.norm();
    res.iterations = it;
    if (res.gradient_norm <= cfg.gradient_tolerance) break;
    if (it >= cfg.max_iterations) {
      throw MaxIterations("log_point: no convergence after " + std::to_string(it) +
                          " Newton iterations (gradient norm " + std::to_string(res.gradient_norm) + ")");
    }
    const Eigen::MatrixXd scaled_rows = inv_s.asDiagonal() * lp.A;
    const Eigen::MatrixXd hess = scaled_rows.transpose() * scaled_rows;
    const Eigen::VectorXd delta = hess.ldlt().solve(-grad);
    const double slope = grad.dot(delta);
    if (!delta.allFinite() || !(slope < 0.0)) {
      throw LineSearchStall("log_point: Newton direction is not a descent direction");
    }
    const double decrement = std::sqrt(-slope);

    double alpha = decrement < 0.25 ? 1.0 : 1.0 / (1.0 + decrement);
    const Eigen::VectorXd a_delta = lp.A * delta;
    const Eigen::VectorXd s = lp.slack(u);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (a_delta(i) > 0.0) alpha = std::min(alpha, 0.99 * s(i) / a_delta(i));
    }
    const double f0 = working_value(lp, w, u);
    // Below this decrement the change in f is under rounding noise, and the
    // full step already lies in the Dikin ellipsoid.
    const bool tiny = -slope < 1e-14 * (1.0 + std::abs(f0));
    while (true) {
      const Eigen::VectorXd cand = u + alpha * delta;
      const double f1 = working_value(lp, w, cand);
      const bool feasible = ((lp.slack(cand)).array() > 0.0).all();
      if (feasible && (tiny || f1 <= f0 + cfg.sufficient_decrease * alpha * slope)) {
        u = cand;
        break;
      }
      alpha *= cfg.shrink;
      if (alpha < 1e-20) {
        throw LineSearchStall("log_point: backtracking line search stalled");
      }
    }
    res.iterates.push_back(u.cwiseProduct(wk.scale));
  }
  res.x = u.cwiseProduct(wk.scale);
  return res;
}

}  // namespace tropcp
