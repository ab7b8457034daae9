#pragma once

// Oriented parametrized hypersurfaces and regions in R^m, and quadrature
// integration of polynomial forms over them.
//
// Orientation conventions:
//  * regions carry the standard orientation of R^m;
//  * boundary components carry the induced orientation, i.e. a frame
//    (v_1..v_{m-1}) is positive iff (n_out, v_1..v_{m-1}) is positive in R^m.
// Round spheres and ellipsoid boundaries use hyperspherical angles
// (θ_1..θ_{m-2} ∈ [0, π], φ ∈ [0, 2π)).

#include "helicap/linalg.hpp"
#include "helicap/poly_form.hpp"
#include "helicap/quadrature.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace helicap {

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes x(t) into `x` (length m) and ∂x/∂t into `jac` (m x q, column-major).
using ParamMap = std::function<void(std::span<const double> t, double* x, double* jac)>;

/// Per-axis bound on the degree of the pulled-back integrand, given the
/// largest coefficient degree of the form being integrated.
using DegreeBound = std::function<std::vector<int>(int coefficient_degree)>;

class Hypersurface {
 public:
  Hypersurface(std::size_t dim, std::vector<Axis> axes, ParamMap map, int orientation_sign, std::string label,
               DegreeBound bound = {})
      : dim_(dim), axes_(std::move(axes)), map_(std::move(map)), sign_(orientation_sign),
        label_(std::move(label)), bound_(std::move(bound)) {
    if (dim_ < 2) throw DimensionError("Hypersurface: ambient dimension must be at least 2");
    if (axes_.size() + 1 != dim_) throw DimensionError("Hypersurface: need dim-1 parameter axes");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("Hypersurface: orientation sign must be ±1");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Axis>& axes() const { return axes_; }
  int orientation_sign() const { return sign_; }
  const std::string& label() const { return label_; }
  void map(std::span<const double> t, double* x, double* jac) const { map_(t, x, jac); }

  std::optional<std::vector<int>> degree_bounds(int coefficient_degree) const {
    if (!bound_) return std::nullopt;
    return bound_(coefficient_degree);
  }

  Hypersurface reversed() const {
    Hypersurface h = *this;
    h.sign_ = -sign_;
    return h;
  }

  Hypersurface relabeled(std::string label) const {
    Hypersurface h = *this;
    h.label_ = std::move(label);
    return h;
  }

 private:
  std::size_t dim_;
  std::vector<Axis> axes_;
  ParamMap map_;
  int sign_;
  std::string label_;
  DegreeBound bound_;
};

class Region {
 public:
  using Membership = std::function<bool(std::span<const double>)>;

  Region(std::size_t dim, std::vector<Axis> axes, ParamMap map, int orientation_sign, std::string label,
         Membership membership, std::vector<Hypersurface> boundary, DegreeBound bound = {})
      : dim_(dim), axes_(std::move(axes)), map_(std::move(map)), sign_(orientation_sign),
        label_(std::move(label)), membership_(std::move(membership)), boundary_(std::move(boundary)),
        bound_(std::move(bound)) {
    if (axes_.size() != dim_) throw DimensionError("Region: need dim parameter axes");
    for (const auto& b : boundary_)
      if (b.dim() != dim_) throw DimensionError("Region: boundary dimension mismatch");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Axis>& axes() const { return axes_; }
  int orientation_sign() const { return sign_; }
  const std::string& label() const { return label_; }
  const std::vector<Hypersurface>& boundary() const { return boundary_; }
  bool contains(std::span<const double> x) const { return membership_ && membership_(x); }
  void map(std::span<const double> t, double* x, double* jac) const { map_(t, x, jac); }

  std::optional<std::vector<int>> degree_bounds(int coefficient_degree) const {
    if (!bound_) return std::nullopt;
    return bound_(coefficient_degree);
  }

 private:
  std::size_t dim_;
  std::vector<Axis> axes_;
  ParamMap map_;
  int sign_;
  std::string label_;
  Membership membership_;
  std::vector<Hypersurface> boundary_;
  DegreeBound bound_;
};

namespace detail {

/// Unit vector u(a) on S^{m-1} and its Jacobian (m x (m-1), column-major).
inline void unit_sphere(std::span<const double> a, std::size_t m, double* u, double* du) {
  const std::size_t q = m - 1;
  double sn[16], cs[16];
  for (std::size_t i = 0; i < q; ++i) {
    sn[i] = std::sin(a[i]);
    cs[i] = std::cos(a[i]);
  }
  // u_j = (Π_{l<j} sin a_l) g_j, with g_j = cos a_j for j < m-1 and g_{m-1} = 1
  double prefix = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double g = j < q ? cs[j] : 1.0;
    u[j] = prefix * g;
    if (j < q) prefix *= sn[j];
  }
  if (!du) return;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double v;
      if (i > j) {
        v = 0.0;
      } else if (i == j) {
        double p = 1.0;
        for (std::size_t l = 0; l < j; ++l) p *= sn[l];
        v = -p * sn[j];
      } else {
        double p = cs[i];
        for (std::size_t l = 0; l < j; ++l)
          if (l != i) p *= sn[l];
        v = p * (j < q ? cs[j] : 1.0);
      }
      du[i * m + j] = v;
    }
  }
}

inline std::vector<Axis> sphere_axes(std::size_t m) {
  std::vector<Axis> axes;
  for (std::size_t j = 0; j + 2 < m; ++j) axes.push_back({0.0, std::numbers::pi, AxisKind::Angular});
  axes.push_back({0.0, 2.0 * std::numbers::pi, AxisKind::Periodic});
  return axes;
}

/// Degree bounds for an (m-1)-form pulled back to a (linearly deformed) round
/// sphere: the integrand is (b·x) times the area element, so angle j carries
/// trigonometric degree p + 1 + (m - 2 - j) and φ carries p + 1.
inline DegreeBound sphere_degree_bound(std::size_t m) {
  return [m](int p) {
    std::vector<int> d;
    for (std::size_t j = 0; j + 2 < m; ++j) d.push_back(p + 1 + static_cast<int>(m - 2 - j));
    d.push_back(p + 1);
    return d;
  };
}

/// Degree bounds for a top form over the polar parametrization r·u(a):
/// radial degree p + m - 1, angle j degree p + (m - 2 - j), φ degree p.
inline DegreeBound polar_degree_bound(std::size_t m) {
  return [m](int p) {
    std::vector<int> d{p + static_cast<int>(m) - 1};
    for (std::size_t j = 0; j + 2 < m; ++j) d.push_back(p + static_cast<int>(m - 2 - j));
    d.push_back(p);
    return d;
  };
}

inline std::vector<double> axis_midpoint(const std::vector<Axis>& axes) {
  std::vector<double> t;
  for (const auto& a : axes) t.push_back(0.5 * (a.lo + a.hi) + 0.1234 * (a.hi - a.lo) / 4.0);
  return t;
}

inline int sign_of(double v) {
  if (v == 0.0 || !std::isfinite(v)) throw RankError("orientation: degenerate frame at reference point");
  return v > 0 ? 1 : -1;
}

}  // namespace detail

/// Ellipsoid boundary {x : Σ (x_i / r_i)² = 1} (round sphere when all radii
/// agree), oriented by the outward normal when `outward` and by the inward
/// normal otherwise.
inline Hypersurface ellipsoidal_surface(std::vector<double> radii, bool outward, std::string label) {
  const std::size_t m = radii.size();
  if (m < 2) throw DimensionError("sphere: dimension must be at least 2");
  for (double r : radii)
    if (!(r > 0.0)) throw std::invalid_argument("sphere: radii must be positive");
  ParamMap map = [radii, m](std::span<const double> t, double* x, double* jac) {
    double u[16];
    detail::unit_sphere(t, m, u, jac);
    for (std::size_t j = 0; j < m; ++j) x[j] = radii[j] * u[j];
    if (jac)
      for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j < m; ++j) jac[i * m + j] *= radii[j];
  };
  auto axes = detail::sphere_axes(m);
  // orientation: sign of det[n_out, ∂x/∂t]; x itself points outward (star-shaped)
  const auto t = detail::axis_midpoint(axes);
  std::vector<double> x(m), frame(m * m);
  map(t, x.data(), frame.data() + m);
  for (std::size_t j = 0; j < m; ++j) frame[j] = outward ? x[j] : -x[j];
  const int sign = detail::sign_of(linalg::det(frame, m));
  return Hypersurface(m, std::move(axes), std::move(map), sign, std::move(label), detail::sphere_degree_bound(m));
}

inline Hypersurface sphere(std::size_t dim, double radius, bool outward = true, std::string label = "sphere") {
  return ellipsoidal_surface(std::vector<double>(dim, radius), outward, std::move(label));
}

namespace detail {

inline Region polar_region(std::vector<double> radii, double r_in, double r_out, std::string label,
                           Region::Membership membership, std::vector<Hypersurface> boundary) {
  const std::size_t m = radii.size();
  ParamMap map = [radii, m](std::span<const double> t, double* x, double* jac) {
    double u[16], du[16 * 16];
    const double r = t[0];
    unit_sphere(t.subspan(1), m, u, du);
    for (std::size_t j = 0; j < m; ++j) {
      x[j] = radii[j] * r * u[j];
      jac[j] = radii[j] * u[j];
    }
    for (std::size_t i = 0; i + 1 < m; ++i)
      for (std::size_t j = 0; j < m; ++j) jac[(i + 1) * m + j] = radii[j] * r * du[i * m + j];
  };
  std::vector<Axis> axes{{r_in, r_out, AxisKind::Polynomial}};
  for (const auto& a : sphere_axes(m)) axes.push_back(a);
  const auto t = axis_midpoint(axes);
  std::vector<double> x(m), jac(m * m);
  map(t, x.data(), jac.data());
  const int sign = sign_of(linalg::det(jac, m));
  return Region(m, std::move(axes), std::move(map), sign, std::move(label), std::move(membership),
                std::move(boundary), polar_degree_bound(m));
}

}  // namespace detail

inline Region ball_region(std::size_t dim, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("ball: radius must be positive");
  if (dim < 2) throw DimensionError("ball: dimension must be at least 2");
  auto member = [r](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s <= r * r;
  };
  return detail::polar_region(std::vector<double>(dim, 1.0), 0.0, r, "ball", member,
                              {sphere(dim, r, true, "outer")});
}

inline Region shell_region(std::size_t dim, double r, double R) {
  if (!(r > 0.0) || !(R > 0.0)) throw std::invalid_argument("shell: radii must be positive");
  if (!(r < R)) throw std::invalid_argument("shell: inner radius must be smaller than outer radius");
  if (dim < 2) throw DimensionError("shell: dimension must be at least 2");
  auto member = [r, R](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s >= r * r && s <= R * R;
  };
  return detail::polar_region(std::vector<double>(dim, 1.0), r, R, "shell", member,
                              {sphere(dim, R, true, "outer"), sphere(dim, r, false, "inner")});
}

/// Ellipsoid {Σ_i π|z_i|²/a_i <= 1} in R^{2n}, z_i = (x_{2i-1}, x_{2i}); the
/// parameters a_i are symplectic widths, so the z_i-radius is sqrt(a_i/π).
inline Region ellipsoid_region(const std::vector<double>& widths) {
  if (widths.empty()) throw std::invalid_argument("ellipsoid: need at least one width");
  std::vector<double> radii;
  for (double a : widths) {
    if (!(a > 0.0)) throw std::invalid_argument("ellipsoid: widths must be positive");
    const double rr = std::sqrt(a / std::numbers::pi);
    radii.push_back(rr);
    radii.push_back(rr);
  }
  auto member = [radii](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] / radii[j]) * (x[j] / radii[j]);
    return s <= 1.0;
  };
  auto boundary = ellipsoidal_surface(radii, true, "outer");
  return detail::polar_region(radii, 0.0, 1.0, "ellipsoid", member, {boundary});
}

/// B²_r × [-L, L]^{m-2}. Carries no boundary data: it has corners and only
/// serves as a finite-volume surrogate of the cylinder.
inline Region truncated_cylinder_region(std::size_t dim, double r, double L) {
  if (!(r > 0.0) || !(L > 0.0)) throw std::invalid_argument("cylinder_truncated: parameters must be positive");
  if (dim < 2 || dim % 2 != 0) throw DimensionError("cylinder_truncated: dimension must be even");
  ParamMap map = [dim](std::span<const double> t, double* x, double* jac) {
    const double s = t[0], c = std::cos(t[1]), n = std::sin(t[1]);
    for (std::size_t k = 0; k < dim * dim; ++k) jac[k] = 0.0;
    x[0] = s * c;
    x[1] = s * n;
    jac[0] = c;
    jac[1] = n;
    jac[dim + 0] = -s * n;
    jac[dim + 1] = s * c;
    for (std::size_t j = 2; j < dim; ++j) {
      x[j] = t[j];
      jac[j * dim + j] = 1.0;
    }
  };
  std::vector<Axis> axes{{0.0, r, AxisKind::Polynomial}, {0.0, 2.0 * std::numbers::pi, AxisKind::Periodic}};
  for (std::size_t j = 2; j < dim; ++j) axes.push_back({-L, L, AxisKind::Polynomial});
  auto member = [r, L](std::span<const double> x) {
    if (x[0] * x[0] + x[1] * x[1] > r * r) return false;
    for (std::size_t j = 2; j < x.size(); ++j)
      if (std::abs(x[j]) > L) return false;
    return true;
  };
  DegreeBound bound = [dim](int p) {
    std::vector<int> d{p + 1, p};
    for (std::size_t j = 2; j < dim; ++j) d.push_back(p);
    return d;
  };
  return Region(dim, std::move(axes), std::move(map), 1, "cylinder_truncated", member, {}, bound);
}

/// Catalog lookup: "ball" {r}, "shell" {r, R}, "ellipsoid" {a_1..a_n},
/// "cylinder_truncated" {r, L}.
inline Region catalog_region(std::string_view name, const std::vector<double>& params, std::size_t dim) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(k) + " parameter(s)");
  };
  if (name == "ball") {
    need(1);
    return ball_region(dim, params[0]);
  }
  if (name == "shell") {
    need(2);
    return shell_region(dim, params[0], params[1]);
  }
  if (name == "ellipsoid") {
    if (params.size() * 2 != dim) throw std::invalid_argument("ellipsoid: need dim/2 widths");
    return ellipsoid_region(params);
  }
  if (name == "cylinder_truncated") {
    need(2);
    return truncated_cylinder_region(dim, params[0], params[1]);
  }
  throw std::invalid_argument("unknown catalog region '" + std::string(name) + "'");
}

namespace detail {

/// Visits every tensor node: fn(params, weight).
template <class Fn>
void for_each_node(const std::vector<std::shared_ptr<const Rule1D>>& rules, Fn&& fn) {
  const std::size_t dims = rules.size();
  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> t(dims);
  while (true) {
    double w = 1.0;
    for (std::size_t d = 0; d < dims; ++d) {
      t[d] = rules[d]->nodes[idx[d]];
      w *= rules[d]->weights[idx[d]];
    }
    fn(std::span<const double>(t), w);
    std::size_t d = dims;
    while (d > 0) {
      --d;
      if (++idx[d] < rules[d]->size()) break;
      idx[d] = 0;
      if (d == 0) return;
    }
    if (dims == 0) return;
  }
}

}  // namespace detail

/// Physical coordinates of the quadrature nodes used for a form with the given
/// coefficient degree.
inline std::vector<std::vector<double>> region_nodes(const Region& region, const QuadratureSpec& q,
                                                     int coefficient_degree) {
  const auto rules = q.rules(region.axes(), region.degree_bounds(coefficient_degree));
  const std::size_t m = region.dim();
  std::vector<std::vector<double>> out;
  std::vector<double> jac(m * m);
  detail::for_each_node(rules, [&](std::span<const double> t, double) {
    std::vector<double> x(m);
    region.map(t, x.data(), jac.data());
    out.push_back(std::move(x));
  });
  return out;
}

inline std::vector<std::vector<double>> surface_nodes(const Hypersurface& h, const QuadratureSpec& q,
                                                      int coefficient_degree) {
  const auto rules = q.rules(h.axes(), h.degree_bounds(coefficient_degree));
  const std::size_t m = h.dim();
  std::vector<std::vector<double>> out;
  std::vector<double> jac(m * (m - 1));
  detail::for_each_node(rules, [&](std::span<const double> t, double) {
    std::vector<double> x(m);
    h.map(t, x.data(), jac.data());
    out.push_back(std::move(x));
  });
  return out;
}

/// Minimum scale-free Gram ratio below which a parametrization Jacobian is
/// reported as rank deficient.
inline constexpr double kRankTolerance = 1e-12;

/// ∫_h form, for a form of degree dim-1, with the orientation carried by h.
inline double integrate_over_hypersurface(const PolyForm& form, const Hypersurface& h, const QuadratureSpec& q) {
  const std::size_t m = h.dim();
  if (form.dim() != m) throw DimensionError("integrate_over_hypersurface: ambient dimension mismatch");
  if (form.degree() + 1 != m)
    throw DegreeError("integrate_over_hypersurface: form degree must be " + std::to_string(m - 1));
  const CompiledForm cf(form);
  const auto rules = q.rules(h.axes(), h.degree_bounds(std::max(form.coefficient_degree(), 0)));
  const std::size_t stride = cf.stride();
  auto make_kernel = [&] {
    return [&, x = std::vector<double>(m), mat = std::vector<double>(m * m),
            scratch = std::vector<double>(m * m + m), powers = std::vector<double>(m * stride)](
               std::span<const double> t) mutable {
      // mat = [b | ∂x/∂t_1 .. ∂x/∂t_{m-1}]
      h.map(t, x.data(), mat.data() + m);
      if (linalg::gram_ratio(mat.data() + m, m, m - 1, scratch.data()) < kRankTolerance)
        throw RankError("integrate_over_hypersurface: rank-deficient Jacobian on '" + h.label() + "'");
      if (cf.term_count() == 0) return 0.0;
      fill_powers(x, stride, powers.data());
      cf.flux_vector(powers.data(), mat.data());
      return linalg::det_inplace(mat.data(), m);
    };
  };
  return h.orientation_sign() * tensor_sum(rules, make_kernel, q.threads);
}

/// ∫_r form, for a top-degree form, with the standard orientation of R^m.
inline double integrate_over_region(const PolyForm& form, const Region& r, const QuadratureSpec& q) {
  const std::size_t m = r.dim();
  if (form.dim() != m) throw DimensionError("integrate_over_region: ambient dimension mismatch");
  if (form.degree() != m) throw DegreeError("integrate_over_region: form degree must equal the dimension");
  if (form.is_zero()) return 0.0;
  const CompiledForm cf(form);
  const auto rules = q.rules(r.axes(), r.degree_bounds(std::max(form.coefficient_degree(), 0)));
  const std::size_t stride = cf.stride();
  auto make_kernel = [&] {
    return [&, x = std::vector<double>(m), jac = std::vector<double>(m * m),
            powers = std::vector<double>(m * stride)](std::span<const double> t) mutable {
      r.map(t, x.data(), jac.data());
      fill_powers(x, stride, powers.data());
      return cf.top_coefficient(powers.data()) * linalg::det_inplace(jac.data(), m);
    };
  };
  return r.orientation_sign() * tensor_sum(rules, make_kernel, q.threads);
}

}  // namespace helicap
