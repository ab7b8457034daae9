#pragma once

// Helicity of exact forms on closed oriented hypersurfaces:
//   h(N, σ) = ∫_N α ∧ σ^{∧(n-1)},  σ = dα a k-form on R^{kn}.

#include "helicap/geometry.hpp"
#include "helicap/poly_form.hpp"
#include "helicap/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

class ExactnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MaxipotencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// σ together with a primitive α, checked exactly: dα = σ.
class ExactFormWitness {
 public:
  ExactFormWitness(PolyForm sigma, PolyForm alpha) : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
    if (sigma_.dim() != alpha_.dim()) throw DimensionError("ExactFormWitness: dimension mismatch");
    if (sigma_.degree() == 0 || alpha_.degree() + 1 != sigma_.degree())
      throw DegreeError("ExactFormWitness: primitive must have degree deg(sigma) - 1");
    if (!(exterior_derivative(alpha_) == sigma_)) throw ExactnessError("ExactFormWitness: d(alpha) != sigma");
  }

  /// (dβ, β).
  static ExactFormWitness from_primitive(const PolyForm& beta) { return {exterior_derivative(beta), beta}; }

  /// (ω_st, λ) on R^{dim}.
  static ExactFormWitness standard(std::size_t dim) { return {omega_st(dim), liouville_form(dim)}; }

  const PolyForm& sigma() const { return sigma_; }
  const PolyForm& alpha() const { return alpha_; }
  std::size_t dim() const { return sigma_.dim(); }
  std::size_t k() const { return sigma_.degree(); }

  /// n with k·n = dim; rejects n < 2.
  std::size_t n() const {
    if (dim() % k() != 0)
      throw DimensionError("helicity: dimension " + std::to_string(dim()) + " is not a multiple of k = " +
                           std::to_string(k()));
    const std::size_t n = dim() / k();
    if (n < 2) throw DimensionError("helicity: requires n >= 2 (got n = " + std::to_string(n) + ")");
    return n;
  }

  ExactFormWitness scaled(const Rational& c) const { return {sigma_ * c, alpha_ * c}; }

 private:
  PolyForm sigma_;
  PolyForm alpha_;
};

/// α ∧ σ^{∧(n-1)}.
inline PolyForm helicity_integrand(const ExactFormWitness& w) {
  const std::size_t n = w.n();
  return wedge(w.alpha(), wedge_power(w.sigma(), n - 1));
}

inline double helicity(const Hypersurface& h, const ExactFormWitness& w, const QuadratureSpec& q = {}) {
  if (h.dim() != w.dim()) throw DimensionError("helicity: hypersurface and form dimensions differ");
  return integrate_over_hypersurface(helicity_integrand(w), h, q);
}

/// |h via α₁ − h via α₂| for two primitives of σ.
inline double primitive_independence_check(const Hypersurface& h, const PolyForm& sigma, const PolyForm& alpha1,
                                           const PolyForm& alpha2, const QuadratureSpec& q = {}) {
  const ExactFormWitness w1(sigma, alpha1), w2(sigma, alpha2);
  return std::abs(helicity(h, w1, q) - helicity(h, w2, q));
}

struct StokesResult {
  double lhs = 0.0;       // ∫_region σ^{∧n}
  double rhs = 0.0;       // Σ boundary helicities, induced orientations
  double residual = 0.0;  // |lhs - rhs|
  std::vector<double> per_component;
};

inline StokesResult stokes_helicity_check(const Region& r, const ExactFormWitness& w, const QuadratureSpec& q = {}) {
  if (r.boundary().empty())
    throw std::invalid_argument("stokes_helicity_check: region '" + r.label() + "' has no boundary data");
  if (r.dim() != w.dim()) throw DimensionError("stokes_helicity_check: region and form dimensions differ");
  const PolyForm top = wedge_power(w.sigma(), w.n());
  const PolyForm integrand = helicity_integrand(w);
  StokesResult out;
  out.lhs = integrate_over_region(top, r, q);
  CompensatedSum s;
  for (const auto& b : r.boundary()) {
    const double v = integrate_over_hypersurface(integrand, b, q);
    out.per_component.push_back(v);
    s.add(v);
  }
  out.rhs = s.value();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

struct HelicityComponent {
  std::string label;
  double h = 0.0;
  friend bool operator==(const HelicityComponent&, const HelicityComponent&) = default;
};

/// Boundary helicities of a compact region, with (k, n).
struct HelicityProfile {
  std::size_t k = 0;  // 0 when unknown (hand-written profiles)
  std::size_t n = 2;
  std::vector<HelicityComponent> components;

  HelicityProfile() = default;
  HelicityProfile(std::size_t k_, std::size_t n_, std::vector<HelicityComponent> comps)
      : k(k_), n(n_), components(std::move(comps)) {
    if (n < 2) throw DimensionError("HelicityProfile: requires n >= 2 (got n = " + std::to_string(n) + ")");
  }

  /// Profile from bare values, labeled c0, c1, ...
  static HelicityProfile from_values(std::size_t n, const std::vector<double>& values) {
    std::vector<HelicityComponent> comps;
    for (std::size_t i = 0; i < values.size(); ++i) comps.push_back({"c" + std::to_string(i), values[i]});
    return {0, n, std::move(comps)};
  }

  std::size_t size() const { return components.size(); }
  double h(std::size_t i) const { return components[i].h; }

  std::vector<std::size_t> positive() const { return select([](double v) { return v > 0.0; }); }
  std::vector<std::size_t> negative() const { return select([](double v) { return v < 0.0; }); }
  std::vector<std::size_t> zero() const { return select([](double v) { return v == 0.0; }); }

  double total() const {
    CompensatedSum s;
    for (const auto& c : components) s.add(c.h);
    return s.value();
  }
  double negative_total() const {
    CompensatedSum s;
    for (const auto& c : components)
      if (c.h < 0.0) s.add(c.h);
    return s.value();
  }

  friend bool operator==(const HelicityProfile&, const HelicityProfile&) = default;

 private:
  template <class P>
  std::vector<std::size_t> select(P pred) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (pred(components[i].h)) out.push_back(i);
    return out;
  }
};

/// Sign of σ^{∧n} at every region quadrature node; throws when it is not
/// constant (or vanishes somewhere). Returns the common sign.
inline int maxipotency_sign(const Region& r, const ExactFormWitness& w, const QuadratureSpec& q = {}) {
  const PolyForm top = wedge_power(w.sigma(), w.n());
  if (top.is_zero()) throw MaxipotencyError("maxipotency: sigma^n vanishes identically");
  const CompiledForm cf(top);
  const std::size_t m = r.dim(), stride = cf.stride();
  std::vector<double> powers(m * stride);
  int sign = 0;
  for (const auto& x : region_nodes(r, q, std::max(top.coefficient_degree(), 0))) {
    fill_powers(x, stride, powers.data());
    const double v = cf.top_coefficient(powers.data());
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign))
      throw MaxipotencyError("maxipotency: sigma^n changes sign or vanishes on region '" + r.label() + "'");
    sign = s;
  }
  return sign;
}

/// One entry per boundary component, helicity taken with the orientation
/// induced from the σ-orientation of the region.
inline HelicityProfile boundary_helicity_profile(const Region& r, const ExactFormWitness& w,
                                                 const QuadratureSpec& q = {}) {
  if (r.boundary().empty())
    throw std::invalid_argument("boundary_helicity_profile: region '" + r.label() + "' has no boundary data");
  const int sign = maxipotency_sign(r, w, q);
  const PolyForm integrand = helicity_integrand(w);
  std::vector<HelicityComponent> comps;
  for (const auto& b : r.boundary()) comps.push_back({b.label(), sign * integrate_over_hypersurface(integrand, b, q)});
  return {w.k(), w.n(), std::move(comps)};
}

struct ScalingResult {
  double scaled = 0.0;    // h(Cσ)
  double predicted = 0.0; // Cⁿ h(σ)
  double residual = 0.0;
};

inline ScalingResult scaling_check(const Hypersurface& h, const ExactFormWitness& w, double c,
                                   const QuadratureSpec& q = {}) {
  if (!(c > 0.0)) throw std::invalid_argument("scaling_check: C must be positive");
  const auto n = static_cast<double>(w.n());
  ScalingResult out;
  out.scaled = helicity(h, w.scaled(Rational(c)), q);
  out.predicted = std::pow(c, n) * helicity(h, w, q);
  out.residual = std::abs(out.scaled - out.predicted);
  return out;
}

}  // namespace helicap
