#include "tropcp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tropcp/io.hpp"
#include "tropcp/pathtrace.hpp"

namespace tropcp::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return SamplerConfig{}.seed;
}

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected a rational p or p/q, got '" + text + "'");
  }
}

// Accepts plain decimals and "base^exp", e.g. 10^2.5.
double grid_value(const std::string& token) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("--t-grid: bad entry '" + token + "'");
    return v;
  };
  const auto caret = token.find('^');
  if (caret == std::string::npos) return number(token);
  return std::pow(number(token.substr(0, caret)), number(token.substr(caret + 1)));
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (!token.empty()) grid.push_back(grid_value(token));
  }
  if (grid.empty()) throw UsageError("--t-grid: empty grid");
  return grid;
}

// Writes through `body` to the file at path, or to out when path is empty or "-".
template <typename F>
void emit(const std::string& path, std::ostream& out, F&& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::ios_base::failure("cannot write '" + path + "'");
  body(file);
  if (!file) throw std::ios_base::failure("write failed for '" + path + "'");
}

struct PathFlags {
  std::string instance;
  int r = 0;
  std::string mu_lo = "0";
  std::string mu_hi = "2";
  std::string min_width;
};

void add_path_flags(CLI::App* cmd, PathFlags& f) {
  auto* inst = cmd->add_option("--instance", f.instance, "instance JSON written by `lw`");
  auto* r = cmd->add_option("--r", f.r, "generate the LW instance of this size in memory")
                ->check(CLI::PositiveNumber);
  inst->excludes(r);
  cmd->add_option("--mu-lo", f.mu_lo, "left end of the mu range (rational)")->capture_default_str();
  cmd->add_option("--mu-hi", f.mu_hi, "right end of the mu range (rational)")->capture_default_str();
  cmd->add_option("--min-width", f.min_width, "smallest interval width before giving up (rational)");
}

PiecewisePath run_trace(const PathFlags& f) {
  if (f.instance.empty() && f.r == 0) throw UsageError("one of --instance or --r is required");
  const LWInstance inst = f.instance.empty() ? lw_instance(f.r) : io::read_instance(f.instance);
  const Rational lo = rational_flag(f.mu_lo, "--mu-lo");
  const Rational hi = rational_flag(f.mu_hi, "--mu-hi");
  if (!(lo < hi)) throw UsageError("--mu-lo must be below --mu-hi");
  Rational width;
  if (!f.min_width.empty()) {
    width = rational_flag(f.min_width, "--min-width");
    if (width <= 0) throw UsageError("--min-width must be positive");
  } else {
    width = inst.r >= 1 ? lw_min_width(inst.r) : Rational(1, 1 << 20);
  }
  return trace(inst.trop, inst.cost, lo, hi, width);
}

// Random box [l, u] with l in [-1, 1], width in [1/2, 3], rate in [1/5, 2].
NumericLP random_box(int dim, std::mt19937_64& rng, Eigen::VectorXd& lower, Eigen::VectorXd& upper) {
  std::uniform_real_distribution<double> lo(-1.0, 1.0), width(0.5, 3.0), rate(0.2, 2.0);
  lower.resize(dim);
  upper.resize(dim);
  NumericLP lp;
  lp.t = 2.0;
  lp.A = Eigen::MatrixXd::Zero(2 * dim, dim);
  lp.b.resize(2 * dim);
  lp.c.resize(dim);
  for (int i = 0; i < dim; ++i) {
    lower(i) = lo(rng);
    upper(i) = lower(i) + width(rng);
    lp.c(i) = rate(rng);
    lp.A(2 * i, i) = 1.0;
    lp.b(2 * i) = upper(i);
    lp.A(2 * i + 1, i) = -1.0;
    lp.b(2 * i + 1) = -lower(i);
  }
  return lp;
}

int cmd_lw(int r, const std::string& out_path, std::ostream& out) {
  const LWInstance inst = lw_instance(r);
  if (out_path.empty() || out_path == "-") {
    out << io::to_json(inst).dump(2) << '\n';
  } else {
    io::write_instance(inst, out_path);
  }
  return kOk;
}

int cmd_table(int r, std::ostream& out) {
  out << "j,k,mu,x_odd,x_even\n";
  for (int j = 1; j < r; ++j) {
    for (int k = 0; k < (1 << (j - 1)); ++k) {
      for (const auto& col : lw_table(j, k)) {
        out << j << ',' << k << ',' << to_string(col.mu) << ',' << to_string(col.x_odd) << ','
            << to_string(col.x_even) << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

SampleCheckResult sample_check(int dim, std::uint64_t seed, const SamplerConfig& cfg, int boxes) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("sample_check: dim must be in 1..6");
  if (boxes < 1) throw std::invalid_argument("sample_check: boxes must be positive");
  std::mt19937_64 rng(seed);
  SampleCheckResult res;
  res.boxes = boxes;
  for (int k = 0; k < boxes; ++k) {
    Eigen::VectorXd lower, upper;
    const NumericLP lp = random_box(dim, rng, lower, upper);
    SamplerConfig c = cfg;
    c.seed = seed + static_cast<std::uint64_t>(k) + 1;
    PathOptions opts;
    opts.start = (lower + upper) / 2.0;
    const EntropicEstimate est = entropic_point(lp, 1.0, c, opts);
    const BoxMoments exact = box_oracle(lower, upper, lp.c);
    for (int i = 0; i < dim; ++i) {
      const double dev = std::abs(est.mean(i) - exact.mean(i)) / est.standard_error(i);
      res.max_deviation = std::max(res.max_deviation, dev);
    }
  }
  res.passed = res.max_deviation <= 4.0;
  return res;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical central path experiments"};
  app.name("tropcp");
  app.require_subcommand(1);

  int lw_r = 0;
  std::string lw_out;
  auto* lw = app.add_subcommand("lw", "write the LW instance as JSON");
  lw->add_option("--r", lw_r, "instance size (>= 1)")->required()->check(CLI::PositiveNumber);
  lw->add_option("--out", lw_out, "output file (default stdout)");

  PathFlags path_flags, pieces_flags;
  std::string path_out;
  auto* trop_path = app.add_subcommand("trop-path", "exact tropical central path as CSV segments");
  add_path_flags(trop_path, path_flags);
  trop_path->add_option("--out", path_out, "output file (default stdout)");

  auto* pieces = app.add_subcommand("pieces", "number of affine pieces of the tropical central path");
  add_path_flags(pieces, pieces_flags);

  int table_r = 0;
  auto* table = app.add_subcommand("table", "nondifferentiability points for blocks j < r");
  table->add_option("--r", table_r, "instance size (>= 1)")->required()->check(CLI::PositiveNumber);

  SamplerConfig scfg;
  NewtonConfig ncfg;
  int conv_r = 0;
  std::string mu_exp, t_grid, config_path, conv_out, barrier = "both";
  std::uint64_t seed = 0;
  int chains = 0, samples = 0, burn_in = 0;
  bool no_rescale = false;
  auto* conv = app.add_subcommand("converge", "numeric central paths against the tropical target");
  conv->add_option("--r", conv_r, "instance size (>= 1)")->required()->check(CLI::PositiveNumber);
  conv->add_option("--mu-exp", mu_exp, "mu(t) = t^mu_exp (rational)")->required();
  conv->add_option("--t-grid", t_grid, "comma list of t values > 1, e.g. 10,10^1.5,100")->required();
  conv->add_option("--config", config_path, "JSON file with \"sampler\" and \"newton\" sections");
  conv->add_option("--barrier", barrier, "both, entropic or log")
      ->check(CLI::IsMember({"both", "entropic", "log"}))
      ->capture_default_str();
  conv->add_flag("--no-rescale", no_rescale, "solve in the original variables");
  conv->add_option("--out", conv_out, "output file (default stdout)");

  int dim = 0, boxes = 5;
  auto* check = app.add_subcommand("sample-check", "sampler self-test on random boxes");
  check->add_option("--dim", dim, "box dimension")->required()->check(CLI::Range(1, 6));
  check->add_option("--boxes", boxes, "number of random boxes")->check(CLI::PositiveNumber)->capture_default_str();

  for (auto* cmd : {conv, check}) {
    cmd->add_option("--seed", seed, std::string("sampler seed (default $") + kSeedEnv + " or " +
                                        std::to_string(SamplerConfig{}.seed) + ")");
    cmd->add_option("--chains", chains, "independent chains")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", samples, "samples per chain")->check(CLI::PositiveNumber);
    cmd->add_option("--burn-in", burn_in, "burn-in steps per chain")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto sampler_from_flags = [&](CLI::App* cmd) {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::ios_base::failure("cannot open '" + config_path + "'");
      io::json j;
      try {
        j = io::json::parse(in);
      } catch (const io::json::exception& e) {
        throw ParseError(config_path + ": " + e.what());
      }
      io::apply_config(j, scfg, ncfg);
    }
    if (cmd->count("--seed") > 0) {
      scfg.seed = seed;
    } else if (std::getenv(kSeedEnv) != nullptr || config_path.empty()) {
      scfg.seed = default_seed();
    }
    if (chains > 0) scfg.chains = chains;
    if (samples > 0) scfg.samples_per_chain = samples;
    if (burn_in > 0) scfg.burn_in = burn_in;
    scfg.validate();
    ncfg.validate();
  };

  try {
    if (*lw) return cmd_lw(lw_r, lw_out, out);
    if (*table) return cmd_table(table_r, out);
    if (*trop_path) {
      const PiecewisePath p = run_trace(path_flags);
      emit(path_out, out, [&](std::ostream& os) { io::write_segments_csv(os, p); });
      return kOk;
    }
    if (*pieces) {
      out << count_pieces(run_trace(pieces_flags)) << '\n';
      return kOk;
    }
    if (*conv) {
      const Rational e = rational_flag(mu_exp, "--mu-exp");
      const std::vector<double> grid = parse_grid(t_grid);
      sampler_from_flags(conv);
      ConvergeOptions opts;
      opts.entropic = barrier != "log";
      opts.logarithmic = barrier != "entropic";
      opts.rescale = !no_rescale;
      const ConvergenceReport report = converge(conv_r, e, grid, scfg, ncfg, opts);
      emit(conv_out, out, [&](std::ostream& os) { io::write_report_csv(os, report); });
      return kOk;
    }
    if (*check) {
      sampler_from_flags(check);
      const SampleCheckResult res = sample_check(dim, scfg.seed, scfg, boxes);
      out << "seed=" << scfg.seed << " dim=" << dim << " boxes=" << res.boxes
          << " max_deviation_se=" << io::format_double(res.max_deviation) << ' '
          << (res.passed ? "PASS" : "FAIL") << '\n';
      return res.passed ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const UnboundedError& e) {
    err << "unbounded: " << e.what() << '\n';
    return kInfeasible;
  } catch (const EmptyError& e) {
    err << "empty: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NoInteriorFound& e) {
    err << "no interior point: " << e.what() << '\n';
    return kInfeasible;
  } catch (const SignUnsafeError& e) {
    err << "sign-unsafe instance: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const NondegenerateFailure& e) {
    err << "trace failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::domain_error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tropcp::cli
