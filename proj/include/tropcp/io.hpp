#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tropcp/numlab.hpp"
#include "tropcp/pathtrace.hpp"
#include "tropcp/troppoly.hpp"

namespace tropcp {

/// Malformed instance or config document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

using nlohmann::json;

// Series: [{"exp": "p/q", "coef": "p/q"}, ...], exponents strictly decreasing.
json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

// "p/q" or "-inf".
json to_json(const TropValue& v);
TropValue trop_value_from_json(const json& j);
json to_json(const TropVector& v);
TropVector trop_vector_from_json(const json& j);

// {"dim": n, "constraints": [{"lhs": {"var": j, "shift": ..} | {"ground": ..},
//                             "rhs": {"const": .., "coeffs": [..]}}]}
json to_json(const TropPolyhedron& P);
TropPolyhedron polyhedron_from_json(const json& j);

// {"A": [[series..]..], "b": [series..], "c": [series..], "generator": ".."}
json to_json(const PuiseuxLP& plp);
PuiseuxLP lp_from_json(const json& j);

// {"r": r, "lp": .., "tropical": .., "cost": [..]}
json to_json(const LWInstance& inst);
LWInstance instance_from_json(const json& j);

LWInstance read_instance(const std::string& path);
void write_instance(const LWInstance& inst, const std::string& path);

/// Overrides fields present in {"sampler": {...}, "newton": {...}}.
void apply_config(const json& j, SamplerConfig& scfg, NewtonConfig& ncfg);

/// mu_left,mu_right,v1..vn,s1..sn with exact rationals.
void write_segments_csv(std::ostream& os, const PiecewisePath& path);

/// t,mu_exponent,barrier,coord,logt_value,tropical_target,abs_error;
/// preceded by a "# seed=..." header line. Floats use 17 significant digits.
void write_report_csv(std::ostream& os, const ConvergenceReport& report);

/// 17 significant digits.
std::string format_double(double v);

}  // namespace io
}  // namespace tropcp
