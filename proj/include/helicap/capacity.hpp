#pragma once

// Certified intervals for embedding capacities between model domains in
// (R^{2n}, ω_st):
//   c_D(T) = sup { a > 0 : (D, aω) embeds into T }.
// Units: the unit ball B has c_B(B) = 1, so c_B(Ball(r)) = r².
//
// Bounds come from a small rule base and its closure under composition:
//   INCLUSION   explicit dilations/translations (lower bounds)
//   NONSQUEEZE  Gromov's theorem, taken as an external axiom (upper bounds)
//   VOLUME      ∫ωⁿ is monotone under embeddings (upper bounds)
//   SCALING     c_{(D,s)}(T,t) = (t/s) c_D(T)
//   COMPOSE     L(D,T) >= L(D,X) L(X,T),  U(D,T) <= U(D,X)/L(T,X),  U(D,T) <= U(X,T)/L(X,D)

#include "helicap/poly_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

enum class DomainKind { Ball, Cylinder, Ellipsoid, Shell };

/// A catalog domain of dimension 2n with the form scale·ω_st.
struct ModelDomain {
  DomainKind kind = DomainKind::Ball;
  std::size_t n = 2;
  std::vector<double> params;  // Ball {r}, Cylinder {ρ}, Ellipsoid {a_1 <= .. <= a_n}, Shell {r, R}
  double scale = 1.0;

  std::size_t dim() const { return 2 * n; }

  ModelDomain scaled(double a) const {
    if (!(a > 0.0)) throw std::invalid_argument("ModelDomain: scale must be positive");
    ModelDomain d = *this;
    d.scale *= a;
    return d;
  }

  ModelDomain unscaled() const {
    ModelDomain d = *this;
    d.scale = 1.0;
    return d;
  }

  /// Scale-1 domain symplectomorphic to (this, scale·ω) via x -> sqrt(scale) x.
  ModelDomain rescaled_geometrically() const {
    ModelDomain d = *this;
    const double s = std::sqrt(scale);
    if (kind == DomainKind::Ellipsoid)
      for (auto& a : d.params) a *= scale;
    else
      for (auto& p : d.params) p *= s;
    d.scale = 1.0;
    return d;
  }

  bool same_shape(const ModelDomain& o) const { return kind == o.kind && n == o.n && params == o.params; }
  friend bool operator==(const ModelDomain&, const ModelDomain&) = default;

  std::string label() const {
    auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", v);
      return std::string(buf);
    };
    std::string s;
    switch (kind) {
      case DomainKind::Ball: s = params[0] == 1.0 ? "B" : "Ball(" + num(params[0]) + ")"; break;
      case DomainKind::Cylinder: s = params[0] == 1.0 ? "Z" : "Cylinder(" + num(params[0]) + ")"; break;
      case DomainKind::Ellipsoid: {
        s = "Ellipsoid(";
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + num(params[i]);
        s += ")";
        break;
      }
      case DomainKind::Shell: s = "Shell(" + num(params[0]) + "," + num(params[1]) + ")"; break;
    }
    if (scale != 1.0) s = "(" + s + ", " + num(scale) + "ω)";
    return s;
  }

  // Radii (scale-1 geometry).
  double rho_in() const {  // largest Euclidean ball inside, translations allowed
    switch (kind) {
      case DomainKind::Ball:
      case DomainKind::Cylinder: return params[0];
      case DomainKind::Ellipsoid: return std::sqrt(params.front() / std::numbers::pi);
      case DomainKind::Shell: return 0.5 * (params[1] - params[0]);
    }
    return 0.0;
  }
  double rho_out() const {  // smallest centered ball containing the domain (∞ for cylinders)
    switch (kind) {
      case DomainKind::Ball: return params[0];
      case DomainKind::Cylinder: return std::numeric_limits<double>::infinity();
      case DomainKind::Ellipsoid: return std::sqrt(params.back() / std::numbers::pi);
      case DomainKind::Shell: return params[1];
    }
    return 0.0;
  }
  double rho_cyl() const {  // smallest cylinder B²_ρ × R^{2n-2} containing the domain
    switch (kind) {
      case DomainKind::Ball:
      case DomainKind::Cylinder: return params[0];
      case DomainKind::Ellipsoid: return std::sqrt(params.front() / std::numbers::pi);
      case DomainKind::Shell: return params[1];
    }
    return 0.0;
  }
  /// ∫ ωⁿ relative to the unit ball (∞ for cylinders).
  double volume() const {
    const double k = 2.0 * static_cast<double>(n);
    switch (kind) {
      case DomainKind::Ball: return std::pow(params[0], k);
      case DomainKind::Cylinder: return std::numeric_limits<double>::infinity();
      case DomainKind::Ellipsoid: {
        double v = 1.0;
        for (double a : params) v *= a / std::numbers::pi;
        return v;
      }
      case DomainKind::Shell: return std::pow(params[1], k) - std::pow(params[0], k);
    }
    return 0.0;
  }
  bool bounded() const { return kind != DomainKind::Cylinder; }
};

inline void check_half_dim(std::size_t n) {
  if (n < 1) throw DimensionError("model domain: n must be positive");
}

inline ModelDomain ball(std::size_t n, double r = 1.0) {
  check_half_dim(n);
  if (!(r > 0.0)) throw std::invalid_argument("Ball: radius must be positive");
  return {DomainKind::Ball, n, {r}, 1.0};
}

inline ModelDomain cylinder(std::size_t n, double rho = 1.0) {
  check_half_dim(n);
  if (!(rho > 0.0)) throw std::invalid_argument("Cylinder: radius must be positive");
  return {DomainKind::Cylinder, n, {rho}, 1.0};
}

/// Ellipsoid {Σ π|z_i|²/a_i < 1}; widths are sorted ascending.
inline ModelDomain ellipsoid(std::vector<double> widths) {
  if (widths.empty()) throw std::invalid_argument("Ellipsoid: need at least one width");
  for (double a : widths)
    if (!(a > 0.0)) throw std::invalid_argument("Ellipsoid: widths must be positive");
  std::sort(widths.begin(), widths.end());
  const std::size_t n = widths.size();
  return {DomainKind::Ellipsoid, n, std::move(widths), 1.0};
}

inline ModelDomain shell(std::size_t n, double r, double R) {
  check_half_dim(n);
  if (!(r > 0.0) || !(R > 0.0)) throw std::invalid_argument("Shell: radii must be positive");
  if (!(r < R)) throw std::invalid_argument("Shell: inner radius must be smaller than outer radius");
  return {DomainKind::Shell, n, {r, R}, 1.0};
}

/// Parses "ball[:r]", "cylinder[:rho]", "shell:r,R", "ellipsoid:a1,..,an",
/// each optionally followed by "@a" for the form a·ω_st. `n` sets the
/// dimension 2n except for ellipsoids, whose width count fixes it.
inline ModelDomain parse_model_domain(const std::string& text, std::size_t n = 2) {
  std::string body = text;
  double scale = 1.0;
  if (auto at = body.find('@'); at != std::string::npos) {
    try {
      std::size_t used = 0;
      scale = std::stod(body.substr(at + 1), &used);
      if (used != body.size() - at - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("domain '" + text + "': bad scale");
    }
    body = body.substr(0, at);
  }
  std::string kind = body;
  std::vector<double> params;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    kind = body.substr(0, colon);
    std::string rest = body.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        params.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("domain '" + text + "': bad number '" + item + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw std::invalid_argument("domain '" + text + "': wrong number of parameters");
  };
  ModelDomain d;
  if (kind == "ball" || kind == "B") {
    need(0, 1);
    d = ball(n, params.empty() ? 1.0 : params[0]);
  } else if (kind == "cylinder" || kind == "Z") {
    need(0, 1);
    d = cylinder(n, params.empty() ? 1.0 : params[0]);
  } else if (kind == "shell") {
    need(2, 2);
    d = shell(n, params[0], params[1]);
  } else if (kind == "ellipsoid") {
    need(1, 64);
    d = ellipsoid(params);
  } else {
    throw std::invalid_argument("domain '" + text + "': unknown kind '" + kind + "'");
  }
  return scale == 1.0 ? d : d.scaled(scale);
}

struct Bound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  std::vector<std::string> lower_chain;
  std::vector<std::string> upper_chain;

  /// lower <= upper, up to 1e-12 relative rounding.
  bool consistent() const { return lower <= upper + 1e-12 * std::max(1.0, std::abs(upper)); }

  Bound scaled(double f) const {
    Bound b = *this;
    b.lower *= f;
    b.upper *= f;
    if (f != 1.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "SCALING[x%.17g]", f);
      b.lower_chain.emplace_back(buf);
      b.upper_chain.emplace_back(buf);
    }
    return b;
  }
};

namespace detail {

inline std::string rule(const char* id, const ModelDomain& d, const ModelDomain& t, const char* how) {
  return std::string(id) + "[" + d.label() + " -> " + t.label() + ": " + how + "]";
}

/// Direct rule applications for scale-1 domains.
inline Bound direct_bound(const ModelDomain& d, const ModelDomain& t) {
  Bound b;
  auto lower = [&](double v, std::string why) {
    if (v > b.lower) {
      b.lower = v;
      b.lower_chain = {std::move(why)};
    }
  };
  auto upper = [&](double v, std::string why) {
    if (v < b.upper) {
      b.upper = v;
      b.upper_chain = {std::move(why)};
    }
  };

  if (d.same_shape(t)) lower(1.0, rule("INCLUSION", d, t, "identity"));

  // dilation of a ball around the domain into a ball inside the target
  if (d.bounded()) {
    const double ro = d.rho_out();
    lower(t.rho_in() * t.rho_in() / (ro * ro), rule("INCLUSION", d, t, "dilated enclosing ball into inscribed ball"));
  }
  // dilation into an enclosing cylinder
  if (t.kind == DomainKind::Cylinder) {
    const double rc = d.rho_cyl();
    lower(t.params[0] * t.params[0] / (rc * rc), rule("INCLUSION", d, t, "dilated domain inside cylinder"));
  }
  if (d.kind == t.kind) {
    switch (d.kind) {
      case DomainKind::Ellipsoid: {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < d.n; ++i) m = std::min(m, t.params[i] / d.params[i]);
        lower(m, rule("INCLUSION", d, t, "dilation, ellipsoid widths"));
        break;
      }
      case DomainKind::Shell: {
        const double lo = (t.params[0] / d.params[0]) * (t.params[0] / d.params[0]);
        const double hi = (t.params[1] / d.params[1]) * (t.params[1] / d.params[1]);
        if (lo <= hi) lower(hi, rule("INCLUSION", d, t, "dilation, nested shells"));
        break;
      }
      default: break;
    }
  }

  // non-squeezing: a ball of radius rho_in(D) cannot be squeezed below rho_cyl(T)
  {
    const double ri = d.rho_in(), rc = t.rho_cyl();
    upper(rc * rc / (ri * ri), rule("NONSQUEEZE", d, t, "external-theorem, inscribed ball vs enclosing cylinder"));
  }
  // volume monotonicity: aⁿ vol(D) <= vol(T)
  if (t.bounded()) {
    const double vd = d.volume(), vt = t.volume();
    if (std::isinf(vd))
      upper(0.0, rule("VOLUME", d, t, "infinite volume into finite volume"));
    else
      upper(std::pow(vt / vd, 1.0 / static_cast<double>(d.n)), rule("VOLUME", d, t, "volume ratio"));
  }
  return b;
}

inline std::vector<std::string> join_chains(const std::string& head, const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
  std::vector<std::string> out{head};
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detail

struct Conflict {
  std::string domain;
  std::string target;
  Bound bound;
};

inline std::string join(const std::vector<std::string>& chain, const char* sep = " ; ") {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? sep : "") + chain[i];
  return s;
}

/// Names both derivation chains of an inconsistent bound.
inline std::string describe(const Conflict& c) {
  return c.domain + " -> " + c.target + ": lower " + std::to_string(c.bound.lower) + " from {" +
         join(c.bound.lower_chain) + "} exceeds upper " + std::to_string(c.bound.upper) + " from {" +
         join(c.bound.upper_chain) + "}";
}

/// Pairwise bounds on a finite catalog of scale-1 domains of one dimension,
/// closed under COMPOSE.
class RuleClosure {
 public:
  explicit RuleClosure(std::vector<ModelDomain> catalog) {
    for (auto& d : catalog) add_unique(d.unscaled());
    if (domains_.empty()) return;
    const std::size_t n = domains_.front().n;
    for (const auto& d : domains_)
      if (d.n != n) throw DimensionError("RuleClosure: catalog mixes dimensions");
    const std::size_t k = domains_.size();
    table_.assign(k, std::vector<Bound>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) table_[i][j] = detail::direct_bound(domains_[i], domains_[j]);
    close();
  }

  /// Catalog plus the unit ball, unit cylinder, and the inscribed/enclosing
  /// balls and enclosing cylinder of every member.
  static RuleClosure with_auxiliaries(const std::vector<ModelDomain>& members) {
    if (members.empty()) return RuleClosure({});
    const std::size_t n = members.front().n;
    std::vector<ModelDomain> all{ball(n), cylinder(n)};
    for (const auto& m0 : members) {
      const auto m = m0.unscaled();
      if (m.n != n) throw DimensionError("embedding capacity: dimension mismatch");
      all.push_back(m);
      all.push_back(ball(n, m.rho_in()));
      if (m.bounded()) all.push_back(ball(n, m.rho_out()));
      all.push_back(cylinder(n, m.rho_cyl()));
    }
    return RuleClosure(std::move(all));
  }

  const std::vector<ModelDomain>& domains() const { return domains_; }

  std::optional<std::size_t> index_of(const ModelDomain& d) const {
    for (std::size_t i = 0; i < domains_.size(); ++i)
      if (domains_[i].same_shape(d)) return i;
    return std::nullopt;
  }

  const Bound& at(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Bound for scaled domains; both shapes must be catalog members.
  Bound bound(const ModelDomain& d, const ModelDomain& t) const {
    if (d.dim() != t.dim()) throw DimensionError("embedding capacity: domain and target dimensions differ");
    auto i = index_of(d), j = index_of(t);
    if (!i || !j) throw std::invalid_argument("RuleClosure: domain not in catalog");
    return table_[*i][*j].scaled(t.scale / d.scale);
  }

  std::vector<Conflict> conflicts() const {
    std::vector<Conflict> out;
    for (std::size_t i = 0; i < domains_.size(); ++i)
      for (std::size_t j = 0; j < domains_.size(); ++j)
        if (!table_[i][j].consistent()) out.push_back({domains_[i].label(), domains_[j].label(), table_[i][j]});
    return out;
  }

 private:
  void add_unique(const ModelDomain& d) {
    for (const auto& e : domains_)
      if (e.same_shape(d)) return;
    domains_.push_back(d);
  }

  void close() {
    const std::size_t k = domains_.size();
    constexpr double rel = 1e-14;  // ignore rounding-level improvements so the loop terminates
    for (int round = 0; round < 16; ++round) {
      bool changed = false;
      for (std::size_t x = 0; x < k; ++x) {
        const std::string via = "COMPOSE[via " + domains_[x].label() + "]";
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            Bound& b = table_[i][j];
            const double l = table_[i][x].lower * table_[x][j].lower;
            if (l > b.lower * (1.0 + rel) && l > 0.0) {
              b.lower = l;
              b.lower_chain = detail::join_chains(via, table_[i][x].lower_chain, table_[x][j].lower_chain);
              changed = true;
            }
            if (table_[j][x].lower > 0.0) {
              const double u = table_[i][x].upper / table_[j][x].lower;
              if (u < b.upper * (1.0 - rel)) {
                b.upper = u;
                b.upper_chain = detail::join_chains(via, table_[i][x].upper_chain, table_[j][x].lower_chain);
                changed = true;
              }
            }
            if (table_[x][i].lower > 0.0) {
              const double u = table_[x][j].upper / table_[x][i].lower;
              if (u < b.upper * (1.0 - rel)) {
                b.upper = u;
                b.upper_chain = detail::join_chains(via, table_[x][j].upper_chain, table_[x][i].lower_chain);
                changed = true;
              }
            }
          }
        }
      }
      if (!changed) return;
    }
  }

  std::vector<ModelDomain> domains_;
  std::vector<std::vector<Bound>> table_;
};

inline Bound embedding_capacity_bounds(const ModelDomain& domain, const ModelDomain& target) {
  if (domain.dim() != target.dim()) throw DimensionError("embedding capacity: domain and target dimensions differ");
  return RuleClosure::with_auxiliaries({domain, target}).bound(domain, target);
}

inline Bound gromov_width_bounds(const ModelDomain& target) {
  return embedding_capacity_bounds(ball(target.n), target);
}

/// Componentwise max of c_base(target) and w(target).
inline Bound cbar_bounds(const ModelDomain& base, const ModelDomain& target) {
  const Bound c = embedding_capacity_bounds(base, target);
  const Bound w = gromov_width_bounds(target);
  Bound out;
  out.lower = std::max(c.lower, w.lower);
  out.lower_chain = c.lower >= w.lower ? c.lower_chain : w.lower_chain;
  out.upper = std::max(c.upper, w.upper);
  out.upper_chain = c.upper >= w.upper ? c.upper_chain : w.upper_chain;
  return out;
}

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct NormalizationVerdict {
  Verdict verdict = Verdict::Inconclusive;  // Holds = normalized, Fails = not normalized
  Bound c_of_Z;
};

/// c_base(Z) <= 1.
inline NormalizationVerdict normalization_check(const ModelDomain& base) {
  NormalizationVerdict v;
  v.c_of_Z = embedding_capacity_bounds(base, cylinder(base.n));
  if (v.c_of_Z.upper <= 1.0)
    v.verdict = Verdict::Holds;
  else if (v.c_of_Z.lower > 1.0)
    v.verdict = Verdict::Fails;
  return v;
}

struct ThinnessVerdict {
  Verdict verdict = Verdict::Inconclusive;
  Bound width;
  Bound c_of_Z;
  double product_lower = 0.0;
  double product_upper = 0.0;
};

/// w(D) · c_D(Z) < 1.
inline ThinnessVerdict thinness_check(const ModelDomain& d) {
  ThinnessVerdict v;
  v.width = gromov_width_bounds(d);
  v.c_of_Z = embedding_capacity_bounds(d, cylinder(d.n));
  v.product_lower = v.width.lower * v.c_of_Z.lower;
  v.product_upper = v.width.upper * v.c_of_Z.upper;
  if (v.product_upper < 1.0)
    v.verdict = Verdict::Holds;
  else if (v.product_lower >= 1.0)
    v.verdict = Verdict::Fails;
  return v;
}

/// A capacity evaluator: target -> Bound.
struct CapacityEvaluator {
  std::string name;
  std::function<Bound(const ModelDomain&)> eval;
};

inline CapacityEvaluator width_evaluator() { return {"w", [](const ModelDomain& t) { return gromov_width_bounds(t); }}; }

inline CapacityEvaluator embedding_evaluator(const ModelDomain& base) {
  return {"c_" + base.label(), [base](const ModelDomain& t) { return embedding_capacity_bounds(base, t); }};
}

struct AxiomViolation {
  std::string check;
  std::string detail;
  double amount = 0.0;
};

struct AxiomReport {
  double max_conformality_violation = 0.0;
  double max_monotonicity_violation = 0.0;
  std::size_t checks = 0;
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

inline constexpr double kAxiomTolerance = 1e-12;

namespace detail {

inline double rel_gap(double a, double b) {
  if (a == b) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return std::numeric_limits<double>::infinity();
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace detail

/// For every domain A and scale a: bounds of (A, aω) equal a·bounds(A) exactly,
/// and agree within 1e-12 with the bounds of the geometrically rescaled domain.
inline void conformality_check(const CapacityEvaluator& c, const std::vector<ModelDomain>& domains,
                               const std::vector<double>& scales, AxiomReport& rep) {
  for (const auto& a0 : domains) {
    const ModelDomain a = a0.unscaled();
    const Bound base = c.eval(a);
    for (double s : scales) {
      const Bound scaled = c.eval(a.scaled(s));
      const Bound geometric = c.eval(a.scaled(s).rescaled_geometrically());
      const double want_lo = s * base.lower, want_hi = s * base.upper;
      const double exact = std::max(scaled.lower == want_lo ? 0.0 : detail::rel_gap(scaled.lower, want_lo),
                                    scaled.upper == want_hi ? 0.0 : detail::rel_gap(scaled.upper, want_hi));
      const double geo = std::max(detail::rel_gap(geometric.lower, want_lo), detail::rel_gap(geometric.upper, want_hi));
      rep.checks += 2;
      rep.max_conformality_violation = std::max({rep.max_conformality_violation, exact, geo});
      if (exact != 0.0)
        rep.violations.push_back({"conformality", c.name + " on " + a.label() + " at scale " + std::to_string(s) +
                                                      " (form scaling)", exact});
      if (geo > kAxiomTolerance)
        rep.violations.push_back({"conformality", c.name + " on " + a.label() + " at scale " + std::to_string(s) +
                                                      " (geometric rescaling)", geo});
    }
  }
}

/// For every inclusion A ⊂ B: lower(c(A)) <= upper(c(B)).
inline void monotonicity_check(const CapacityEvaluator& c,
                               const std::vector<std::pair<ModelDomain, ModelDomain>>& inclusions, AxiomReport& rep) {
  for (const auto& [a, b] : inclusions) {
    const Bound ba = c.eval(a), bb = c.eval(b);
    ++rep.checks;
    double v = 0.0;
    if (ba.lower > bb.upper) v = std::isinf(ba.lower) ? ba.lower : (ba.lower - bb.upper) / std::max(1.0, bb.upper);
    rep.max_monotonicity_violation = std::max(rep.max_monotonicity_violation, v);
    if (v > kAxiomTolerance)
      rep.violations.push_back({"monotonicity", c.name + ": " + a.label() + " ⊂ " + b.label(), v});
  }
}

/// The 4-dimensional axiom catalog and its known inclusions.
inline std::vector<ModelDomain> axiom_catalog(std::size_t n = 2) {
  std::vector<ModelDomain> out{ball(n),          cylinder(n),      ball(n, 0.5),     ball(n, 2.0),
                               ball(n, 1.5),     cylinder(n, 2.0), shell(n, 1, 2),   shell(n, 1, 1.1),
                               shell(n, 1, 1.05), shell(n, 0.5, 1)};
  std::vector<double> e1(n, std::numbers::pi), e2(n, 2.0 * std::numbers::pi);
  e1.front() = 1.0;
  e2.front() = std::numbers::pi;
  out.push_back(ellipsoid(e1));
  out.push_back(ellipsoid(e2));
  return out;
}

inline std::vector<std::pair<ModelDomain, ModelDomain>> axiom_inclusions(std::size_t n = 2) {
  std::vector<double> e2(n, 2.0 * std::numbers::pi);
  e2.front() = std::numbers::pi;  // radii (1, sqrt 2, ...)
  const ModelDomain E = ellipsoid(e2);
  return {{ball(n, 0.5), ball(n)},         {ball(n), ball(n, 2.0)},        {shell(n, 1, 2), ball(n, 2.0)},
          {ball(n), cylinder(n)},          {shell(n, 1, 1.1), shell(n, 1, 2)}, {shell(n, 1, 1.05), shell(n, 1, 1.1)},
          {shell(n, 0.5, 1), ball(n)},     {ball(n), E},                   {E, cylinder(n)},
          {ball(n, 2.0), cylinder(n, 2.0)}, {cylinder(n), cylinder(n, 2.0)}, {ball(n, 1.5), ball(n, 2.0)}};
}

inline AxiomReport axiom_suite(std::size_t n = 2, const std::vector<double>& scales = {0.25, 0.5, 1.0, 2.0, 4.0}) {
  AxiomReport rep;
  const auto catalog = axiom_catalog(n);
  std::vector<CapacityEvaluator> evals{width_evaluator(), embedding_evaluator(ball(n)),
                                       embedding_evaluator(shell(n, 1, 2)), embedding_evaluator(catalog.back())};
  for (const auto& c : evals) {
    conformality_check(c, catalog, scales, rep);
    monotonicity_check(c, axiom_inclusions(n), rep);
  }
  // rule-base consistency over the whole catalog
  const RuleClosure closure = RuleClosure::with_auxiliaries(catalog);
  for (const auto& cf : closure.conflicts())
    rep.violations.push_back({"consistency", describe(cf), cf.bound.lower - cf.bound.upper});
  return rep;
}

}  // namespace helicap
