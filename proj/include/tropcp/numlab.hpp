#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcp/pathtrace.hpp"
#include "tropcp/troppoly.hpp"

namespace tropcp {

/// Dense instantiation {x : A x <= b}, objective c, at parameter t.
struct NumericLP {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  double t = 0.0;

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index cols() const { return A.cols(); }
  Eigen::VectorXd slack(const Eigen::VectorXd& x) const { return b - A * x; }
};

struct SamplerConfig {
  int chains = 8;
  int burn_in = 2000;
  int samples_per_chain = 20000;
  std::uint64_t seed = 20230601;

  void validate() const;
};

struct NewtonConfig {
  double gradient_tolerance = 1e-9;
  int max_iterations = 200;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;

  void validate() const;
};

struct NoInteriorFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Numeric failure of the sampler or the Newton solver.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MaxIterations : NumericFailure {
  using NumericFailure::NumericFailure;
};
struct LineSearchStall : NumericFailure {
  using NumericFailure::NumericFailure;
};
struct ChordDegeneracy : NumericFailure {
  using NumericFailure::NumericFailure;
};

/// Entrywise evaluation of A, b, c at t >= 1 (t = 1 gives the coefficient sums).
NumericLP instantiate(const PuiseuxLP& plp, double t);

/// Appends -x_j <= 0 for every coordinate that has no such row yet.
NumericLP with_nonnegativity(const NumericLP& nlp);

/// Strictly feasible point. With a hint (an interior point of val P) returns
/// t^hint entrywise, otherwise tries delta * 1 for delta in {1, 1/t, 1/t^2}.
/// Candidates must clear every row with a relative margin.
Eigen::VectorXd interior_seed(const NumericLP& nlp, const std::optional<TropVector>& hint = {});

/// True when every slack is positive with relative margin.
bool strictly_feasible(const NumericLP& nlp, const Eigen::VectorXd& x);

/// x - eps * (1, 2, ..., n), when that point is interior to P with margin eps/2.
std::optional<TropVector> ramp_hint(const TropPolyhedron& P, const TropVector& x, const Rational& eps);

/// Shared options for the path-point oracles.
struct PathOptions {
  /// Work in u with x = t^log_scale * u (entrywise); empty means no rescaling.
  std::vector<double> log_scale;
  /// Interior point of val P used to seed the start.
  std::optional<TropVector> hint;
  /// Explicit strictly feasible start, original coordinates. Takes precedence over hint.
  std::optional<Eigen::VectorXd> start;
};

/// Hit-and-run for the density proportional to exp(-<rate, x>) on {A x <= b}.
/// Directions are uniform on the sphere; the position along each chord is drawn
/// exactly from the truncated one-dimensional exponential.
class HitAndRun {
 public:
  HitAndRun(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd rate, Eigen::VectorXd start,
            std::uint64_t seed);

  void step();
  const Eigen::VectorXd& position() const { return x_; }
  Eigen::VectorXd slack() const { return b_ - A_ * x_; }

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  Eigen::VectorXd rate_;
  Eigen::VectorXd x_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  int degenerate_streak_ = 0;
};

/// Draws lambda in [lo, hi] with density proportional to exp(-kappa * lambda),
/// from a uniform variate u in [0, 1).
double sample_truncated_exponential(double lo, double hi, double kappa, double u);

struct EntropicEstimate {
  Eigen::VectorXd mean;
  /// Batch-means standard error per coordinate.
  Eigen::VectorXd standard_error;
};

/// Mean of exp(-<c/mu_t, x>) over {A x <= b}, which is the entropic central
/// path point at mu_t.  Deterministic given cfg.seed.
EntropicEstimate entropic_point(const NumericLP& nlp, double mu_t, const SamplerConfig& cfg,
                                const PathOptions& opts = {});

/// Optional per-sample hook for diagnostics: (chain, position in working coordinates, slack).
using SampleObserver =
    std::function<void(int, const Eigen::VectorXd&, const Eigen::VectorXd&)>;
EntropicEstimate entropic_point(const NumericLP& nlp, double mu_t, const SamplerConfig& cfg,
                                const PathOptions& opts, const SampleObserver& observer);

struct BoxMoments {
  double log_integral = 0.0;
  Eigen::VectorXd mean;
};

/// log of the integral of exp(-<rate, x>) over the box, and the mean of the
/// normalized density. Throws std::invalid_argument on an empty box or rate <= 0.
BoxMoments box_oracle(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                      const Eigen::VectorXd& rate);

/// <c, x> - mu * sum_i log(b_i - A_i x); +inf outside the interior.
double log_barrier_value(const NumericLP& nlp, double mu, const Eigen::VectorXd& x);
Eigen::VectorXd log_barrier_gradient(const NumericLP& nlp, double mu, const Eigen::VectorXd& x);

struct LogPointResult {
  Eigen::VectorXd x;
  /// Euclidean norm of the working gradient (rescaled variables, objective divided by mu).
  double gradient_norm = 0.0;
  int iterations = 0;
  /// Every accepted iterate, in original coordinates, starting point first.
  std::vector<Eigen::VectorXd> iterates;
};

/// Minimizer of <c, x> - mu_t sum log(b - A x) by damped Newton with a
/// backtracking line search that keeps every iterate strictly feasible.
LogPointResult log_point(const NumericLP& nlp, double mu_t, const NewtonConfig& cfg,
                         const PathOptions& opts = {});

struct ConvergenceRow {
  double t = 0.0;
  std::vector<double> target;
  std::vector<double> entropic;
  std::vector<double> entropic_se;  // standard error of log_t, delta method
  std::vector<double> logarithmic;
  double entropic_error = 0.0;
  double log_error = 0.0;
};

struct ConvergenceReport {
  int r = 0;
  Rational mu_exponent;
  std::uint64_t seed = 0;
  TropVector target;
  std::vector<ConvergenceRow> rows;
};

struct ConvergeOptions {
  bool entropic = true;
  bool logarithmic = true;
  bool rescale = true;
};

/// For each t: instantiate LW r, take mu(t) = t^mu_exponent, compute both
/// central path points and compare their log_t images with the barycenter.
ConvergenceReport converge(int r, const Rational& mu_exponent, const std::vector<double>& t_grid,
                           const SamplerConfig& scfg, const NewtonConfig& ncfg,
                           const ConvergeOptions& opts = {});

}  // namespace tropcp
