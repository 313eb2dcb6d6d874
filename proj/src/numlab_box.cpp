#include <cmath>

#include "tropcp/numlab.hpp"

namespace tropcp {

BoxMoments box_oracle(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                      const Eigen::VectorXd& rate) {
  if (lower.size() != upper.size() || lower.size() != rate.size()) {
    throw std::invalid_argument("box_oracle: length mismatch");
  }
  BoxMoments out;
  out.mean.resize(lower.size());
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    const double len = upper(i) - lower(i);
    const double r = rate(i);
    if (!(len > 0.0)) throw std::invalid_argument("box_oracle: empty box");
    if (!(r > 0.0)) throw std::invalid_argument("box_oracle: rate must be positive");
    const double z = r * len;
    out.log_integral += -r * lower(i) + std::log(-std::expm1(-z)) - std::log(r);
    // 1/z - 1/(e^z - 1), by series near 0 where the difference cancels.
    const double g = z < 1e-3 ? 0.5 - z / 12.0 + z * z * z / 720.0 : 1.0 / z - 1.0 / std::expm1(z);
    out.mean(i) = lower(i) + len * g;
  }
  return out;
}

}  // namespace tropcp
