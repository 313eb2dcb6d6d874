#include "tropcp/pathtrace.hpp"

#include <optional>
#include <string>

namespace tropcp {

namespace {

PuiseuxSeries tpow(const Rational& e) { return PuiseuxSeries::monomial(1, e); }

Rational pow2(int e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(p);
}

}  // namespace

LWInstance lw_instance(int r) {
  if (r < 1) throw std::invalid_argument("lw_instance: r must be >= 1");
  const std::size_t n = 2 * static_cast<std::size_t>(r);
  PuiseuxLP plp;
  plp.generator = "lw";
  auto add_row = [&](std::vector<std::pair<std::size_t, PuiseuxSeries>> entries, PuiseuxSeries bound) {
    std::vector<PuiseuxSeries> row(n);
    for (auto& [j, a] : entries) row[j] = std::move(a);
    plp.A.push_back(std::move(row));
    plp.b.push_back(std::move(bound));
  };
  // 0-based: x_{2j-1} -> 2j-2, x_{2j} -> 2j-1, x_{2j+1} -> 2j, x_{2j+2} -> 2j+1.
  add_row({{0, 1}}, tpow(2));
  add_row({{1, 1}}, tpow(1));
  for (int j = 1; j < r; ++j) {
    const std::size_t lo = 2 * static_cast<std::size_t>(j) - 2;
    const PuiseuxSeries neg_t = -tpow(1);
    const PuiseuxSeries neg_damp = -tpow(1 - 1 / pow2(j));
    add_row({{lo + 2, 1}, {lo, neg_t}}, {});
    add_row({{lo + 2, 1}, {lo + 1, neg_t}}, {});
    add_row({{lo + 3, 1}, {lo, neg_damp}, {lo + 1, neg_damp}}, {});
  }
  add_row({{n - 2, -1}}, {});
  add_row({{n - 1, -1}}, {});

  plp.c.assign(n, {});
  plp.c[0] = 1;
  plp.c[1] = tpow(-1);
  for (int j = 1; j < r; ++j) {
    plp.c[2 * j] = tpow(-(j + 1));
    plp.c[2 * j + 1] = tpow(-(j + 1));
  }

  LWInstance inst;
  inst.r = r;
  inst.trop = naive_tropicalize(plp);
  inst.cost.reserve(n);
  for (const auto& cj : plp.c) inst.cost.push_back(cj.valuation());
  inst.plp = std::move(plp);
  return inst;
}

TropVector lw_recursive(int r, const Rational& mu) {
  if (r < 1) throw std::invalid_argument("lw_recursive: r must be >= 1");
  std::vector<Rational> x(2 * static_cast<std::size_t>(r));
  x[0] = std::min(mu, Rational(2));
  x[1] = 1;
  for (int j = 1; j < r; ++j) {
    const Rational& a = x[2 * j - 2];
    const Rational& b = x[2 * j - 1];
    x[2 * j] = 1 + std::min(a, b);
    x[2 * j + 1] = (1 - 1 / pow2(j)) + std::max(a, b);
  }
  return trop::from_rationals(x);
}

std::array<TableColumn, 3> lw_table(int j, int k) {
  if (j < 1 || j > 60 || k < 0 || Rational(k) >= pow2(j - 1)) {
    throw std::out_of_range("lw_table: need j >= 1 and 0 <= k < 2^(j-1), got j=" +
                            std::to_string(j) + " k=" + std::to_string(k));
  }
  const Rational h = pow2(j - 1);
  const Rational w = pow2(j);
  return {{
      {2 * k / h, j + 2 * k / w, j + (2 * k + 1) / w},
      {(2 * k + 1) / h, j + (2 * k + 2) / w, j + (2 * k + 1) / w},
      {2 * (k + 1) / h, j + (2 * k + 2) / w, j + (2 * k + 3) / w},
  }};
}

TropVector Segment::value_at(const Rational& mu) const {
  TropVector out(value_left.size());
  const Rational d = mu - mu_left;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = value_left[i].is_finite() ? TropValue(Rational(value_left[i].value() + slope[i] * d))
                                       : TropValue::neg_inf();
  }
  return out;
}

std::vector<Rational> PiecewisePath::breakpoints() const {
  std::vector<Rational> out;
  if (segments.empty()) return out;
  out.push_back(segments.front().mu_left);
  for (const auto& s : segments) out.push_back(s.mu_right);
  return out;
}

TropVector PiecewisePath::value_at(const Rational& mu) const {
  for (const auto& s : segments) {
    if (mu >= s.mu_left && mu <= s.mu_right) return s.value_at(mu);
  }
  throw std::out_of_range("PiecewisePath::value_at: mu outside the traced interval");
}

Rational lw_min_width(int r) { return 1 / pow2(2 * r + 4); }

namespace {

class Tracer {
 public:
  Tracer(const TropPolyhedron& P, const TropVector& cval, const Rational& min_width)
      : P_(P), cval_(cval), min_width_(min_width) {}

  TropVector f(const Rational& mu) const { return barycenter(P_, cval_, TropValue(mu)); }

  void run(const Rational& a, const TropVector& fa, const Rational& b, const TropVector& fb) {
    const Rational m = (a + b) / 2;
    const Rational q = a + (b - a) / 3;
    const TropVector fm = f(m);
    const TropVector fq = f(q);
    if (auto slope = affine_slope(a, fa, b, fb, {{m, &fm}, {q, &fq}})) {
      out_.push_back({a, b, fa, std::move(*slope)});
      return;
    }
    if (b - a <= min_width_) {
      throw NondegenerateFailure("trace: [" + to_string(a) + ", " + to_string(b) +
                                 "] is not affine at the minimal width");
    }
    const Rational split = kink(a, fa, q, fq, m, fm, b, fb).value_or(m);
    const TropVector fs = split == m ? fm : f(split);
    run(a, fa, split, fs);
    run(split, fs, b, fb);
  }

  std::vector<Segment> take() { return std::move(out_); }

 private:
  struct Probe {
    Rational mu;
    const TropVector* value;
  };

  static std::optional<std::vector<Rational>> affine_slope(const Rational& a, const TropVector& fa,
                                                           const Rational& b, const TropVector& fb,
                                                           std::initializer_list<Probe> probes) {
    std::vector<Rational> slope(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (fa[i].is_neg_inf() || fb[i].is_neg_inf()) {
        if (fa[i] != fb[i]) return std::nullopt;
        for (const auto& p : probes) {
          if ((*p.value)[i].is_finite()) return std::nullopt;
        }
        continue;
      }
      slope[i] = (fb[i].value() - fa[i].value()) / (b - a);
      for (const auto& p : probes) {
        const TropValue& v = (*p.value)[i];
        if (v.is_neg_inf() || v.value() != fa[i].value() + slope[i] * (p.mu - a)) return std::nullopt;
      }
    }
    return slope;
  }

  // Intersection of the secant through (a, q) with the secant through (m, b),
  // accepted only if every coordinate agrees on it and f matches there.
  std::optional<Rational> kink(const Rational& a, const TropVector& fa, const Rational& q,
                               const TropVector& fq, const Rational& m, const TropVector& fm,
                               const Rational& b, const TropVector& fb) const {
    std::optional<Rational> at;
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (!fa[i].is_finite() || !fq[i].is_finite() || !fm[i].is_finite() || !fb[i].is_finite()) {
        return std::nullopt;
      }
      const Rational sl = (fq[i].value() - fa[i].value()) / (q - a);
      const Rational sr = (fb[i].value() - fm[i].value()) / (b - m);
      if (sl == sr) {
        if (fa[i].value() + sl * (m - a) != fm[i].value()) return std::nullopt;
        continue;
      }
      const Rational k = (fm[i].value() - sr * m - fa[i].value() + sl * a) / (sl - sr);
      if (at && *at != k) return std::nullopt;
      at = k;
    }
    if (!at || *at <= a || *at >= b) return std::nullopt;
    const TropVector fk = f(*at);
    for (std::size_t i = 0; i < fa.size(); ++i) {
      const Rational sl = (fq[i].value() - fa[i].value()) / (q - a);
      if (fk[i] != TropValue(Rational(fa[i].value() + sl * (*at - a)))) return std::nullopt;
    }
    return at;
  }

  const TropPolyhedron& P_;
  const TropVector& cval_;
  Rational min_width_;
  std::vector<Segment> out_;
};

}  // namespace

PiecewisePath trace(const TropPolyhedron& P, const TropVector& cval, const Rational& mu_lo,
                    const Rational& mu_hi, const Rational& min_width) {
  if (!(mu_lo < mu_hi)) throw std::invalid_argument("trace: need mu_lo < mu_hi");
  if (!(min_width > 0)) throw std::invalid_argument("trace: min_width must be positive");
  Tracer tracer(P, cval, min_width);
  tracer.run(mu_lo, tracer.f(mu_lo), mu_hi, tracer.f(mu_hi));
  PiecewisePath path;
  for (auto& seg : tracer.take()) {
    if (!path.segments.empty() && path.segments.back().slope == seg.slope) {
      path.segments.back().mu_right = seg.mu_right;
    } else {
      path.segments.push_back(std::move(seg));
    }
  }
  return path;
}

std::size_t count_pieces(const PiecewisePath& path) { return path.segments.size(); }

TropValue bary_volume(const TropVector& x) {
  TropValue acc(0);
  for (const auto& v : x) acc = trop::mul(acc, v);
  return acc;
}

}  // namespace tropcp
