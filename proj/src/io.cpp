#include "tropcp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace tropcp::io {

namespace {

Rational rational_from_json(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T, typename F>
std::vector<T> array_of(const json& j, const char* what, F&& each) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(each(e));
  return out;
}

}  // namespace

json to_json(const PuiseuxSeries& s) {
  json out = json::array();
  for (const auto& term : s.terms()) {
    out.push_back({{"exp", to_string(term.exponent)}, {"coef", to_string(term.coefficient)}});
  }
  return out;
}

PuiseuxSeries series_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("series: expected an array of terms");
  std::vector<PuiseuxTerm> terms;
  for (const auto& t : j) {
    PuiseuxTerm term{rational_from_json(field(t, "exp"), "series exponent"),
                     rational_from_json(field(t, "coef"), "series coefficient")};
    if (term.coefficient == 0) throw ParseError("series: zero coefficient stored");
    if (!terms.empty() && !(term.exponent < terms.back().exponent)) {
      throw ParseError("series: exponents must be strictly decreasing");
    }
    terms.push_back(std::move(term));
  }
  return PuiseuxSeries::from_terms(std::move(terms));
}

json to_json(const TropValue& v) { return v.str(); }

TropValue trop_value_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return TropValue::neg_inf();
  return TropValue(rational_from_json(j, "tropical value"));
}

json to_json(const TropVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

TropVector trop_vector_from_json(const json& j) {
  return array_of<TropValue>(j, "tropical vector", trop_value_from_json);
}

json to_json(const TropPolyhedron& P) {
  json cons = json::array();
  for (const auto& c : P.constraints) {
    json lhs;
    if (const auto* v = std::get_if<VarLhs>(&c.lhs)) {
      lhs = {{"var", v->index}, {"shift", to_json(v->shift)}};
    } else {
      lhs = {{"ground", to_json(std::get<GroundLhs>(c.lhs).alpha)}};
    }
    cons.push_back({{"lhs", lhs}, {"rhs", {{"const", to_json(c.rhs.constant)}, {"coeffs", to_json(c.rhs.coeffs)}}}});
  }
  return {{"dim", P.dim}, {"constraints", cons}};
}

TropPolyhedron polyhedron_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw ParseError("polyhedron: 'dim' must be a nonnegative integer");
  TropPolyhedron P;
  P.dim = dim.get<std::size_t>();
  P.constraints = array_of<UpperConstraint>(field(j, "constraints"), "constraints", [&](const json& c) {
    UpperConstraint out;
    const json& lhs = field(c, "lhs");
    if (lhs.contains("var")) {
      const json& var = lhs.at("var");
      if (!var.is_number_unsigned() || var.get<std::size_t>() >= P.dim) {
        throw ParseError("constraint: 'var' must be an index below dim");
      }
      out.lhs = VarLhs{var.get<std::size_t>(), trop_value_from_json(field(lhs, "shift"))};
    } else {
      out.lhs = GroundLhs{trop_value_from_json(field(lhs, "ground"))};
    }
    const json& rhs = field(c, "rhs");
    out.rhs.constant = trop_value_from_json(field(rhs, "const"));
    out.rhs.coeffs = trop_vector_from_json(field(rhs, "coeffs"));
    if (out.rhs.coeffs.size() != P.dim) throw ParseError("constraint: 'coeffs' length must equal dim");
    return out;
  });
  return P;
}

json to_json(const PuiseuxLP& plp) {
  json A = json::array();
  for (const auto& row : plp.A) {
    json r = json::array();
    for (const auto& a : row) r.push_back(to_json(a));
    A.push_back(r);
  }
  json b = json::array();
  for (const auto& s : plp.b) b.push_back(to_json(s));
  json c = json::array();
  for (const auto& s : plp.c) c.push_back(to_json(s));
  return {{"A", A}, {"b", b}, {"c", c}, {"generator", plp.generator}};
}

PuiseuxLP lp_from_json(const json& j) {
  PuiseuxLP plp;
  plp.A = array_of<std::vector<PuiseuxSeries>>(field(j, "A"), "A", [](const json& row) {
    return array_of<PuiseuxSeries>(row, "A row", series_from_json);
  });
  plp.b = array_of<PuiseuxSeries>(field(j, "b"), "b", series_from_json);
  plp.c = array_of<PuiseuxSeries>(field(j, "c"), "c", series_from_json);
  if (j.contains("generator")) {
    if (!j.at("generator").is_string()) throw ParseError("lp: 'generator' must be a string");
    plp.generator = j.at("generator").get<std::string>();
  }
  try {
    plp.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return plp;
}

json to_json(const LWInstance& inst) {
  return {{"r", inst.r}, {"lp", to_json(inst.plp)}, {"tropical", to_json(inst.trop)}, {"cost", to_json(inst.cost)}};
}

LWInstance instance_from_json(const json& j) {
  const json& r = field(j, "r");
  if (!r.is_number_integer()) throw ParseError("instance: 'r' must be an integer");
  LWInstance inst;
  inst.r = r.get<int>();
  inst.plp = lp_from_json(field(j, "lp"));
  inst.trop = polyhedron_from_json(field(j, "tropical"));
  inst.cost = trop_vector_from_json(field(j, "cost"));
  if (inst.cost.size() != inst.trop.dim) throw ParseError("instance: 'cost' length must equal dim");
  return inst;
}

LWInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  try {
    return instance_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_instance(const LWInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  out << to_json(inst).dump(2) << '\n';
  if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

void apply_config(const json& j, SamplerConfig& scfg, NewtonConfig& ncfg) {
  try {
    if (j.contains("sampler")) {
      const json& s = j.at("sampler");
      scfg.chains = s.value("chains", scfg.chains);
      scfg.burn_in = s.value("burn_in", scfg.burn_in);
      scfg.samples_per_chain = s.value("samples_per_chain", scfg.samples_per_chain);
      scfg.seed = s.value("seed", scfg.seed);
    }
    if (j.contains("newton")) {
      const json& n = j.at("newton");
      ncfg.gradient_tolerance = n.value("gradient_tolerance", ncfg.gradient_tolerance);
      ncfg.max_iterations = n.value("max_iterations", ncfg.max_iterations);
      ncfg.shrink = n.value("shrink", ncfg.shrink);
      ncfg.sufficient_decrease = n.value("sufficient_decrease", ncfg.sufficient_decrease);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_segments_csv(std::ostream& os, const PiecewisePath& path) {
  const std::size_t n = path.segments.empty() ? 0 : path.segments.front().value_left.size();
  os << "mu_left,mu_right";
  for (std::size_t i = 1; i <= n; ++i) os << ",value_left_" << i;
  for (std::size_t i = 1; i <= n; ++i) os << ",slope_" << i;
  os << '\n';
  for (const auto& s : path.segments) {
    os << to_string(s.mu_left) << ',' << to_string(s.mu_right);
    for (const auto& v : s.value_left) os << ',' << v.str();
    for (const auto& d : s.slope) os << ',' << to_string(d);
    os << '\n';
  }
}

void write_report_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "# seed=" << report.seed << " r=" << report.r << " mu_exponent=" << to_string(report.mu_exponent)
     << '\n';
  os << "t,mu_exponent,barrier,coord,logt_value,tropical_target,abs_error\n";
  const std::string mu = to_string(report.mu_exponent);
  auto emit = [&](const ConvergenceRow& row, const char* barrier, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << format_double(row.t) << ',' << mu << ',' << barrier << ',' << i + 1 << ','
         << format_double(values[i]) << ',' << report.target[i].str() << ','
         << format_double(std::abs(values[i] - row.target[i])) << '\n';
    }
  };
  for (const auto& row : report.rows) {
    emit(row, "entropic", row.entropic);
    emit(row, "log", row.logarithmic);
  }
}

}  // namespace tropcp::io
