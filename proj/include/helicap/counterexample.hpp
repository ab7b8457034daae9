#pragma once

// Compactness counterexample in R⁴ with coordinates (q¹, p₁, q², p₂):
//   M  = closed ball of radius 3 about c = (0, -2, 0, 0)
//        minus the open ball of radius 1 about c
//        minus the segment [0, 1] × {0}³,
//   M' = M minus the point (2, 0, 0, 0).
// The linear Hamiltonian flow (e^t q¹, e^{-t} p₁, q², p₂, ...) stretches the
// removed segment over the puncture.

#include "helicap/poly_form.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

enum class SlitShellClass { InM, PunctureOnly, Outside };

inline const char* to_string(SlitShellClass c) {
  switch (c) {
    case SlitShellClass::InM: return "M";
    case SlitShellClass::PunctureOnly: return "M_only_excluded_from_M'";
    case SlitShellClass::Outside: return "outside";
  }
  return "?";
}

inline constexpr std::array<double, 4> kSlitShellCenter{0.0, -2.0, 0.0, 0.0};
inline constexpr std::array<double, 4> kPuncture{2.0, 0.0, 0.0, 0.0};

inline bool in_slit_shell_M(std::span<const double> x) {
  if (x.size() != 4) throw DimensionError("slit shell: points live in R^4");
  double r2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) r2 += (x[i] - kSlitShellCenter[i]) * (x[i] - kSlitShellCenter[i]);
  if (r2 > 9.0 || r2 < 1.0) return false;
  const bool on_segment = x[0] >= 0.0 && x[0] <= 1.0 && x[1] == 0.0 && x[2] == 0.0 && x[3] == 0.0;
  return !on_segment;
}

inline bool in_slit_shell_M_prime(std::span<const double> x) {
  return in_slit_shell_M(x) && !(x[0] == kPuncture[0] && x[1] == kPuncture[1] && x[2] == kPuncture[2] &&
                                 x[3] == kPuncture[3]);
}

/// M' points are "InM"; the puncture is in M but not in M'.
inline SlitShellClass slit_shell_membership(std::span<const double> x) {
  if (!in_slit_shell_M(x)) return SlitShellClass::Outside;
  return in_slit_shell_M_prime(x) ? SlitShellClass::InM : SlitShellClass::PunctureOnly;
}

/// (e^t x₀, e^{-t} x₁, x₂, ..., x_{2n-1}).
inline std::vector<double> hamiltonian_flow(double t, std::span<const double> x) {
  if (x.size() < 2 || x.size() % 2 != 0) throw DimensionError("hamiltonian_flow: dimension must be even");
  std::vector<double> y(x.begin(), x.end());
  y[0] = std::exp(t) * x[0];
  y[1] = std::exp(-t) * x[1];
  return y;
}

/// The flow's linear map with e^t replaced by an exact multiplier λ.
inline std::vector<std::vector<Rational>> flow_matrix(std::size_t dim, const Rational& lambda) {
  if (dim < 2 || dim % 2 != 0) throw DimensionError("flow_matrix: dimension must be even");
  if (lambda <= 0) throw std::invalid_argument("flow_matrix: multiplier must be positive");
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = 1;
  a[0][0] = lambda;
  a[1][1] = 1 / lambda;
  return a;
}

/// Exact: pullback of ω_st along the flow map equals ω_st.
inline bool flow_is_symplectic(std::size_t dim, const Rational& lambda) {
  return pullback_linear(omega_st(dim), flow_matrix(dim, lambda)) == omega_st(dim);
}

struct CounterexampleReport {
  bool symplectic = false;           // (a) exact symbolic identity at λ = 2
  std::vector<double> endpoint;      // flow(log 2, (1,0,0,0))
  double endpoint_error = 0.0;       // |endpoint - puncture|
  bool segment_covers_puncture = false;  // (b)
  std::size_t grid_points = 0;
  std::size_t grid_in_M = 0;
  std::size_t grid_in_M_prime = 0;
  std::size_t inclusion_violations = 0;  // (c) points of M' outside M
  bool puncture_classified = false;
  bool pass() const {
    return symplectic && segment_covers_puncture && inclusion_violations == 0 && puncture_classified &&
           grid_points >= 100000;
  }
};

/// Uniform grid with `per_axis` points per axis over [-3,3]×[-5,1]×[-3,3]².
inline std::vector<std::array<double, 4>> slit_shell_grid(std::size_t per_axis = 18) {
  const double lo[4] = {-3.0, -5.0, -3.0, -3.0}, hi[4] = {3.0, 1.0, 3.0, 3.0};
  std::vector<std::array<double, 4>> out;
  out.reserve(per_axis * per_axis * per_axis * per_axis);
  auto coord = [&](std::size_t d, std::size_t i) {
    return lo[d] + (hi[d] - lo[d]) * static_cast<double>(i) / static_cast<double>(per_axis - 1);
  };
  for (std::size_t a = 0; a < per_axis; ++a)
    for (std::size_t b = 0; b < per_axis; ++b)
      for (std::size_t c = 0; c < per_axis; ++c)
        for (std::size_t d = 0; d < per_axis; ++d) out.push_back({coord(0, a), coord(1, b), coord(2, c), coord(3, d)});
  return out;
}

inline CounterexampleReport counterexample_witness(std::size_t per_axis = 18) {
  CounterexampleReport rep;
  rep.symplectic = flow_is_symplectic(4, Rational(2));

  const std::array<double, 4> one{1.0, 0.0, 0.0, 0.0};
  rep.endpoint = hamiltonian_flow(std::log(2.0), one);
  double e2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) e2 += (rep.endpoint[i] - kPuncture[i]) * (rep.endpoint[i] - kPuncture[i]);
  rep.endpoint_error = std::sqrt(e2);
  // image of [0,1]×{0} is [0, e^t]×{0}; it covers [0,2]×{0} when e^t >= 2 up to rounding
  rep.segment_covers_puncture = rep.endpoint[0] >= 2.0 - 1e-15 && rep.endpoint[1] == 0.0 &&
                                rep.endpoint[2] == 0.0 && rep.endpoint[3] == 0.0 && rep.endpoint_error <= 1e-15;

  for (const auto& p : slit_shell_grid(per_axis)) {
    ++rep.grid_points;
    const bool m = in_slit_shell_M(p), mp = in_slit_shell_M_prime(p);
    rep.grid_in_M += m;
    rep.grid_in_M_prime += mp;
    if (mp && !m) ++rep.inclusion_violations;
  }
  rep.puncture_classified = slit_shell_membership(kPuncture) == SlitShellClass::PunctureOnly;
  return rep;
}

}  // namespace helicap
