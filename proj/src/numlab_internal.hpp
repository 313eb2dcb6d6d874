#pragma once

#include <optional>
#include <vector>

#include "tropcp/numlab.hpp"

namespace tropcp::detail {

/// LP in rescaled variables u = x / scale, rows normalized to unit max-norm.
struct WorkingLP {
  NumericLP lp;
  Eigen::VectorXd scale;
};

WorkingLP make_working(const NumericLP& nlp, const std::vector<double>& log_scale);

/// Strictly feasible point of nlp; log_hint gives candidate log_t coordinates.
Eigen::VectorXd seed(const NumericLP& nlp, const std::optional<std::vector<double>>& log_hint);

/// Start point in working coordinates: opts.start if given, else seed() with the shifted hint.
Eigen::VectorXd working_start(const WorkingLP& w, const PathOptions& opts);

/// opts.hint in working log-coordinates (hint - log_scale).
std::optional<std::vector<double>> shifted_hint(const PathOptions& opts, Eigen::Index n);

}  // namespace tropcp::detail
