// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tropcp/numlab.hpp"
#include "tropcp/pathtrace.hpp"
#include "tropcp/troppoly.hpp"

using namespace tropcp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", secs);
  std::cout << (out.pass ? "PASS " : "FAIL ") << name << " | " << out.detail << " | " << time << std::endl;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

std::vector<double> abs_errors(const std::vector<double>& x, const std::vector<double>& target) {
  std::vector<double> e(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) e[i] = std::abs(x[i] - target[i]);
  return e;
}

const std::vector<Rational> kMuExponents{Rational(0), Rational(1), make_rational(3, 2)};

}  // namespace

int main() {
  criterion("1 table reproduction (exact, r<=8)", [] {
    int checked = 0, bad = 0;
    for (int r = 2; r <= 8; ++r) {
      const auto L = lw_instance(r);
      for (int j = 1; j < r; ++j) {
        for (int k = 0; k < (1 << (j - 1)); ++k) {
          for (const auto& col : lw_table(j, k)) {
            const auto rec = lw_recursive(r, col.mu);
            const auto bar = barycenter(L.trop, L.cost, col.mu);
            ++checked;
            if (!(rec[2 * j] == TropValue(col.x_odd) && rec[2 * j + 1] == TropValue(col.x_even) && bar == rec)) ++bad;
          }
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " columns, " + std::to_string(bad) + " mismatches"};
  });

  criterion("2 piece count 2^(r-1) on [0,2], r=1..8", [] {
    std::ostringstream counts;
    bool ok = true;
    for (int r = 1; r <= 8; ++r) {
      const auto L = lw_instance(r);
      const auto pieces = count_pieces(trace(L.trop, L.cost, 0, 2, lw_min_width(r)));
      counts << (r > 1 ? "," : "") << pieces;
      ok = ok && pieces == (std::size_t{1} << (r - 1));
    }
    return Outcome{ok, "counts " + counts.str()};
  });

  criterion("3 fixpoint barycenter = recursion, r=1..6, 64 random mu each", [] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(0, 2 * 997), den_pick(0, 4);
    const long dens[] = {1, 3, 7, 64, 997};
    int checked = 0, bad = 0;
    for (int r = 1; r <= 6; ++r) {
      const auto L = lw_instance(r);
      for (int k = 0; k < 64; ++k) {
        const long den = dens[den_pick(rng)];
        const Rational mu = make_rational(num(rng) % (2 * den + 1), den);
        ++checked;
        if (barycenter(L.trop, L.cost, mu) != lw_recursive(r, mu)) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " points, " + std::to_string(bad) + " mismatches"};
  });

  criterion("4 brute-force grid oracle, 200 random systems", [] {
    std::mt19937_64 rng(4);
    int bad = 0, empty = 0;
    long members = 0;
    for (int k = 0; k < 200; ++k) {
      const auto v = oracles::grid_check(oracles::random_small_system(rng));
      bad += v.ok ? 0 : 1;
      empty += v.empty ? 1 : 0;
      members += v.grid_members;
    }
    return Outcome{bad == 0, std::to_string(bad) + " violations, " + std::to_string(empty) + " empty systems, " +
                                 std::to_string(members) + " grid members checked"};
  });

  criterion("5 entropic convergence, LW r=2, median decreasing and max error <= 0.25 at t=1e3", [] {
    const std::vector<double> grid{10, std::pow(10, 1.5), 100, std::pow(10, 2.5), 1000};
    ConvergeOptions opts;
    opts.logarithmic = false;
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : kMuExponents) {
      const auto rep = converge(2, e, grid, SamplerConfig{}, NewtonConfig{}, opts);
      d << "mu^" << to_string(e) << ": medians";
      double prev = INFINITY;
      for (const auto& row : rep.rows) {
        const double m = median(abs_errors(row.entropic, row.target));
        d << ' ' << fmt(m);
        ok = ok && m < prev;
        prev = m;
      }
      const double last = rep.rows.back().entropic_error;
      d << " max@1e3 " << fmt(last) << "; ";
      ok = ok && last <= 0.25;
    }
    return Outcome{ok, d.str()};
  });

  criterion("6 logarithmic path, LW r=2, non-increasing (slack 0.02) and <= 0.2 at t=1e4", [] {
    ConvergeOptions opts;
    opts.entropic = false;
    opts.rescale = true;
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : kMuExponents) {
      const auto rep = converge(2, e, {1e2, 1e3, 1e4}, SamplerConfig{}, NewtonConfig{}, opts);
      d << "mu^" << to_string(e) << ":";
      for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        d << ' ' << fmt(rep.rows[i].log_error);
        if (i > 0) ok = ok && rep.rows[i].log_error <= rep.rows[i - 1].log_error + 0.02;
      }
      d << "; ";
      ok = ok && rep.rows.back().log_error <= 0.2;
    }
    return Outcome{ok, d.str()};
  });

  // Boxes prod [0, t^u_i] with rates t^-(mu + v_i); limits sum/entrywise min(u_i, mu + v_i).
  struct BoxPattern {
    std::vector<double> u, v;
    double mu;
  };
  std::vector<BoxPattern> patterns;
  {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> q(0, 8), dim(1, 3);
    for (int k = 0; k < 24; ++k) {
      BoxPattern p;
      p.mu = q(rng) / 4.0;
      const int n = dim(rng);
      for (int i = 0; i < n; ++i) {
        p.u.push_back(q(rng) / 4.0);
        p.v.push_back(q(rng) / 4.0 - 1.0);
      }
      patterns.push_back(p);
    }
  }
  auto box_errors = [](const BoxPattern& p, double t, double& err_int, std::vector<double>& err_mean) {
    const auto n = static_cast<Eigen::Index>(p.u.size());
    Eigen::VectorXd hi(n), rate(n);
    double target = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      hi(i) = std::pow(t, p.u[i]);
      rate(i) = std::pow(t, -(p.mu + p.v[i]));
      target += std::min(p.u[i], p.mu + p.v[i]);
    }
    const auto m = box_oracle(Eigen::VectorXd::Zero(n), hi, rate);
    err_int = std::abs(m.log_integral / std::log(t) - target);
    err_mean.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      err_mean[i] = std::abs(std::log(m.mean(i)) / std::log(t) - std::min(p.u[i], p.mu + p.v[i]));
    }
  };
  // At both t values an error at rounding level counts as not increasing.
  auto improved = [](double late, double early) { return late < early || late <= 1e-12; };

  criterion("7a box integrals: log_t error <= 0.01 at t=1e6 and below t=1e2 (24 patterns)", [&] {
    int bad = 0;
    double worst = 0.0;
    for (const auto& p : patterns) {
      double e2, e6;
      std::vector<double> m;
      box_errors(p, 1e2, e2, m);
      box_errors(p, 1e6, e6, m);
      worst = std::max(worst, e6);
      if (!(e6 <= 0.01 && improved(e6, e2))) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + " patterns out of bound, worst error at 1e6 " + fmt(worst)};
  });

  criterion("7b box means: log_t error <= 0.01 at t=1e6 and below t=1e2 (24 patterns)", [&] {
    int bad = 0, coords = 0;
    double worst = 0.0;
    for (const auto& p : patterns) {
      double e;
      std::vector<double> m2, m6;
      box_errors(p, 1e2, e, m2);
      box_errors(p, 1e6, e, m6);
      for (std::size_t i = 0; i < m6.size(); ++i) {
        ++coords;
        worst = std::max(worst, m6[i]);
        if (!(m6[i] <= 0.01 && improved(m6[i], m2[i]))) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(bad) + " of " + std::to_string(coords) +
                                 " coordinates out of bound, worst error at 1e6 " + fmt(worst)};
  });

  criterion("8 sampler calibration on boxes (n<=4): within 4 SE, bit-identical repeat", [] {
    std::mt19937_64 rng(8);
    bool ok = true;
    double worst = 0.0;
    int boxes = 0;
    for (int dim = 1; dim <= 4; ++dim) {
      for (int k = 0; k < 3; ++k) {
        const auto cmp = oracles::sampler_vs_box(dim, rng, SamplerConfig{});
        worst = std::max(worst, cmp.max_deviation);
        ok = ok && cmp.max_deviation <= 4.0 && cmp.deterministic;
        ++boxes;
      }
    }
    return Outcome{ok, std::to_string(boxes) + " boxes, max deviation " + fmt(worst) + " SE"};
  });

  criterion("9 Newton: 1D closed form to 1e-8 relative, finite differences to 1e-4 on LW r=2", [] {
    double worst_closed = 0.0;
    for (const double T : {0.5, 1.0, 10.0, 100.0, 1e4}) {
      NumericLP lp;
      lp.t = 2.0;
      lp.A.resize(2, 1);
      lp.A << 1.0, -1.0;
      lp.b.resize(2);
      lp.b << T, 0.0;
      lp.c = Eigen::VectorXd::Ones(1);
      PathOptions opts;
      opts.start = Eigen::VectorXd::Constant(1, T / 2);
      const double x = log_point(lp, 1.0, NewtonConfig{}, opts).x(0);
      const double exact = (T + 2 - std::sqrt(T * T + 4)) / 2;
      worst_closed = std::max(worst_closed, std::abs(x - exact) / exact);
    }
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> logt(1.0, 3.0), lmu(-0.5, 1.5);
    double worst_fd = 0.0;
    int iterates = 0;
    for (int k = 0; k < 10; ++k) {
      const double t = std::pow(10.0, logt(rng));
      const double mu = std::pow(t, lmu(rng));
      const auto lp = with_nonnegativity(instantiate(lw_instance(2).plp, t));
      const auto res = log_point(lp, mu, NewtonConfig{});
      for (const auto& x : res.iterates) {
        worst_fd = std::max(worst_fd, oracles::gradient_fd_error(lp, mu, x));
        ++iterates;
      }
    }
    return Outcome{worst_closed <= 1e-8 && worst_fd <= 1e-4,
                   "closed form rel " + fmt(worst_closed) + ", fd rel " + fmt(worst_fd) + " over " +
                       std::to_string(iterates) + " iterates"};
  });

  criterion("10 instantiation monotonicity and interior lifting, LW r=2,3, t=1e2,1e3", [] {
    std::mt19937_64 rng(10);
    bool ok = true;
    std::ostringstream d;
    for (int r = 2; r <= 3; ++r) {
      const auto L = lw_instance(r);
      const auto mono = oracles::instantiation_monotonicity(L, {1e2, 1e3}, rng, 40);
      const auto lift = oracles::interior_lifting(L, {1e2, 1e3}, rng, 40);
      ok = ok && mono.ok() && lift.ok();
      d << "r=" << r << ": rows " << mono.tested - mono.failed << "/" << mono.tested << ", lifts "
        << lift.tested - lift.failed << "/" << lift.tested << "; ";
    }
    return Outcome{ok, d.str()};
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
