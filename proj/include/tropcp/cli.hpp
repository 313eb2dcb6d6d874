#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tropcp/numlab.hpp"

namespace tropcp::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kParse = 3,
  kInfeasible = 4,
  kNumeric = 5,
  kCheckFailed = 6,
};

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnv = "TROPCP_SEED";

/// Runs the command line `args` (without the program name). Tables and
/// reports go to `out`, diagnostics to `err`; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SampleCheckResult {
  int boxes = 0;
  /// Largest |sampler mean - exact mean| / standard error over all coordinates.
  double max_deviation = 0.0;
  bool passed = false;
};

/// Sampler self-test against the closed-form box moments: `boxes` random
/// boxes of dimension dim with random rates, 4 standard errors allowed.
SampleCheckResult sample_check(int dim, std::uint64_t seed, const SamplerConfig& cfg, int boxes = 5);

}  // namespace tropcp::cli
