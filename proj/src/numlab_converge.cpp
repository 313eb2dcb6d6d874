#include <algorithm>
#include <cmath>

#include "tropcp/numlab.hpp"

namespace tropcp {

namespace {

double max_abs_error(const std::vector<double>& got, const std::vector<double>& want) {
  double e = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) e = std::max(e, std::abs(got[i] - want[i]));
  return e;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

ConvergenceReport converge(int r, const Rational& mu_exponent, const std::vector<double>& t_grid,
                           const SamplerConfig& scfg, const NewtonConfig& ncfg,
                           const ConvergeOptions& opts) {
  if (t_grid.empty()) throw std::invalid_argument("converge: empty t grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 1.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw std::invalid_argument("converge: t grid must be increasing and above 1");
    }
  }
  const LWInstance inst = lw_instance(r);
  const std::size_t n = inst.cost.size();

  ConvergenceReport report;
  report.r = r;
  report.mu_exponent = mu_exponent;
  report.seed = scfg.seed;
  report.target = barycenter(inst.trop, inst.cost, TropValue(mu_exponent));

  std::vector<double> target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = report.target[j].to_double();

  PathOptions popts;
  popts.hint = ramp_hint(inst.trop, report.target, Rational(1, static_cast<long>(4 * (n + 1))));
  if (opts.rescale) popts.log_scale = target;

  const double mu_exp = mu_exponent.get_d();
  for (const double t : t_grid) {
    const NumericLP nlp = with_nonnegativity(instantiate(inst.plp, t));
    const double mu_t = std::pow(t, mu_exp);
    ConvergenceRow row;
    row.t = t;
    row.target = target;
    if (opts.entropic) {
      const EntropicEstimate est = entropic_point(nlp, mu_t, scfg, popts);
      const std::vector<double> mean = to_std(est.mean);
      row.entropic = logt_map(mean, t);
      row.entropic_se.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        row.entropic_se[j] = est.standard_error(static_cast<Eigen::Index>(j)) / (mean[j] * std::log(t));
      }
      row.entropic_error = max_abs_error(row.entropic, target);
    }
    if (opts.logarithmic) {
      const LogPointResult lp = log_point(nlp, mu_t, ncfg, popts);
      row.logarithmic = logt_map(to_std(lp.x), t);
      row.log_error = max_abs_error(row.logarithmic, target);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace tropcp
