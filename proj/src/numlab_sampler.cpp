#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "numlab_internal.hpp"
#include "tropcp/numlab.hpp"

namespace tropcp {

double sample_truncated_exponential(double lo, double hi, double kappa, double u) {
  const double len = hi - lo;
  const double z = kappa * len;
  if (std::abs(z) < 1e-12) return lo + u * len;
  if (kappa > 0.0) return lo - std::log1p(u * std::expm1(-z)) / kappa;
  return hi + std::log1p(u * std::expm1(z)) / (-kappa);
}

HitAndRun::HitAndRun(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd rate,
                     Eigen::VectorXd start, std::uint64_t seed)
    : A_(std::move(A)), b_(std::move(b)), rate_(std::move(rate)), x_(std::move(start)), rng_(seed) {}

void HitAndRun::step() {
  const Eigen::Index n = x_.size();
  Eigen::VectorXd d(n);
  for (Eigen::Index j = 0; j < n; ++j) d(j) = normal_(rng_);
  d.normalize();

  const Eigen::VectorXd s = b_ - A_ * x_;
  const Eigen::VectorXd ad = A_ * d;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (ad(i) > 0.0) hi = std::min(hi, s(i) / ad(i));
    if (ad(i) < 0.0) lo = std::max(lo, s(i) / ad(i));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw NumericFailure("hit-and-run: unbounded chord, the polytope is not bounded");
  }
  const double len = hi - lo;
  if (!(len > 1e-14 * (1.0 + x_.cwiseAbs().maxCoeff()))) {
    if (++degenerate_streak_ > 100) {
      throw ChordDegeneracy("hit-and-run: repeated zero-length chords, polytope numerically thin");
    }
    return;
  }
  degenerate_streak_ = 0;
  const double kappa = rate_.dot(d);
  double lambda = sample_truncated_exponential(lo, hi, kappa, uniform_(rng_));
  lambda = std::clamp(lambda, lo + 1e-12 * len, hi - 1e-12 * len);
  const Eigen::VectorXd next = x_ + lambda * d;
  if (((b_ - A_ * next).array() > 0.0).all()) x_ = next;
}

namespace {

std::uint64_t chain_seed(std::uint64_t seed, int chain) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chain)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

EntropicEstimate entropic_point(const NumericLP& nlp, double mu_t, const SamplerConfig& cfg,
                                const PathOptions& opts) {
  return entropic_point(nlp, mu_t, cfg, opts, {});
}

EntropicEstimate entropic_point(const NumericLP& nlp, double mu_t, const SamplerConfig& cfg,
                                const PathOptions& opts, const SampleObserver& observer) {
  cfg.validate();
  if (!(mu_t > 0.0)) throw std::invalid_argument("entropic_point: mu must be positive");
  if ((nlp.c.array() <= 0.0).any()) {
    throw std::invalid_argument("entropic_point: cost must be positive entrywise");
  }
  const Eigen::Index n = nlp.cols();
  const detail::WorkingLP w = detail::make_working(nlp, opts.log_scale);
  const Eigen::VectorXd start = detail::working_start(w, opts);
  const Eigen::VectorXd rate = w.lp.c / mu_t;

  const int batches_per_chain = std::min(10, cfg.samples_per_chain);
  const int batch_len = cfg.samples_per_chain / batches_per_chain;
  std::vector<Eigen::VectorXd> batch_means;
  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
  long count = 0;

  for (int chain = 0; chain < cfg.chains; ++chain) {
    HitAndRun walk(w.lp.A, w.lp.b, rate, start, chain_seed(cfg.seed, chain));
    for (int k = 0; k < cfg.burn_in; ++k) walk.step();
    Eigen::VectorXd batch = Eigen::VectorXd::Zero(n);
    int in_batch = 0;
    for (int k = 0; k < cfg.samples_per_chain; ++k) {
      walk.step();
      const Eigen::VectorXd& u = walk.position();
      if (observer) observer(chain, u, walk.slack());
      total += u;
      ++count;
      // Trailing samples beyond the last full batch enter only the mean.
      if (k < batches_per_chain * batch_len) {
        batch += u;
        if (++in_batch == batch_len) {
          batch_means.push_back(batch / batch_len);
          batch.setZero();
          in_batch = 0;
        }
      }
    }
  }

  const Eigen::VectorXd mean_u = total / static_cast<double>(count);
  Eigen::VectorXd se_u = Eigen::VectorXd::Zero(n);
  const auto nb = static_cast<double>(batch_means.size());
  if (batch_means.size() > 1) {
    Eigen::VectorXd bm_avg = Eigen::VectorXd::Zero(n);
    for (const auto& bm : batch_means) bm_avg += bm;
    bm_avg /= nb;
    Eigen::VectorXd var = Eigen::VectorXd::Zero(n);
    for (const auto& bm : batch_means) var += (bm - bm_avg).cwiseAbs2();
    var /= (nb - 1.0);
    se_u = (var / nb).cwiseSqrt();
  }
  return {mean_u.cwiseProduct(w.scale), se_u.cwiseProduct(w.scale)};
}

}  // namespace tropcp
