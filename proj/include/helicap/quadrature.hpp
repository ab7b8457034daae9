#pragma once

// One-dimensional rules and tensor-product summation.
//
// Three axis kinds are supported:
//   Polynomial - Gauss-Legendre, exact for polynomial degree <= 2n-1.
//   Angular    - trigonometric Gauss rule on a subinterval of length < 2π,
//                exact for trigonometric degree <= n-1 (nodes from the
//                arcsine substitution θ = c + 2 asin(sin(ω/2) u) and a Gauss
//                rule for the weight 2 sin(ω/2) / sqrt(1 - sin²(ω/2) u²)).
//   Periodic   - equispaced midpoint rule on a full period, exact for
//                trigonometric degree <= n-1.
// All rules have positive weights and nodes strictly inside the interval.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace helicap {

enum class AxisKind { Polynomial, Angular, Periodic };

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  AxisKind kind = AxisKind::Polynomial;
};

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& o) {
    add(o.sum_);
    add(o.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline Rule1D gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  if (n == 1) return Rule1D{{0.0}, {2.0}};
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

inline Rule1D gauss_legendre(std::size_t n, double lo, double hi) {
  Rule1D r = gauss_legendre(n);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

/// Trigonometric Gauss rule on [lo, hi], hi - lo < 2π.
inline Rule1D trig_gauss(std::size_t n, double lo, double hi) {
  if (n == 0) throw std::invalid_argument("trig_gauss: n must be positive");
  const double omega = 0.5 * (hi - lo);
  if (!(omega > 0.0) || omega >= std::numbers::pi)
    throw std::invalid_argument("trig_gauss: interval length must be in (0, 2π)");
  const double s = std::sin(0.5 * omega);
  const double center = 0.5 * (hi + lo);

  // discretize the weight with a Gauss-Legendre rule of ample size
  const std::size_t fine = 2 * n + 64;
  const Rule1D gl = gauss_legendre(fine);
  std::vector<double> lam(fine);
  double beta0 = 0.0;
  for (std::size_t i = 0; i < fine; ++i) {
    const double u = gl.nodes[i];
    lam[i] = gl.weights[i] * 2.0 * s / std::sqrt(1.0 - s * s * u * u);
    beta0 += lam[i];
  }

  // Stieltjes procedure with orthonormal recurrences
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
  std::vector<double> q_prev(fine, 0.0), q(fine, 1.0 / std::sqrt(beta0)), r(fine);
  double b_prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double a = 0.0;
    for (std::size_t i = 0; i < fine; ++i) a += lam[i] * gl.nodes[i] * q[i] * q[i];
    diag[static_cast<Eigen::Index>(k)] = a;
    if (k + 1 == n) break;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < fine; ++i) {
      r[i] = (gl.nodes[i] - a) * q[i] - b_prev * q_prev[i];
      norm2 += lam[i] * r[i] * r[i];
    }
    const double b = std::sqrt(norm2);
    sub[static_cast<Eigen::Index>(k)] = b;
    for (std::size_t i = 0; i < fine; ++i) {
      q_prev[i] = q[i];
      q[i] = r[i] / b;
    }
    b_prev = b;
  }

  Rule1D out;
  out.nodes.resize(n);
  out.weights.resize(n);
  if (n == 1) {
    out.nodes[0] = center + 2.0 * std::asin(s * diag[0]);
    out.weights[0] = beta0;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw std::runtime_error("trig_gauss: eigen solver failed");
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const double u = eig.eigenvalues()[jj];
    const double v0 = eig.eigenvectors()(0, jj);
    out.nodes[j] = center + 2.0 * std::asin(s * u);
    out.weights[j] = beta0 * v0 * v0;
  }
  return out;
}

/// Midpoint rule on a full period [lo, hi).
inline Rule1D periodic_midpoint(std::size_t n, double lo, double hi) {
  if (n == 0) throw std::invalid_argument("periodic_midpoint: n must be positive");
  Rule1D r;
  const double h = (hi - lo) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.nodes.push_back(lo + (static_cast<double>(i) + 0.5) * h);
    r.weights.push_back(h);
  }
  return r;
}

/// Thread-safe memo of 1D rules keyed by (kind, n, lo, hi).
class RuleCache {
 public:
  std::shared_ptr<const Rule1D> get(AxisKind kind, std::size_t n, double lo, double hi) {
    const auto key = std::make_tuple(static_cast<int>(kind), n, lo, hi);
    {
      std::lock_guard lock(mu_);
      if (auto it = rules_.find(key); it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const Rule1D>(build(kind, n, lo, hi));
    std::lock_guard lock(mu_);
    return rules_.try_emplace(key, std::move(rule)).first->second;
  }

  static Rule1D build(AxisKind kind, std::size_t n, double lo, double hi) {
    switch (kind) {
      case AxisKind::Polynomial: return gauss_legendre(n, lo, hi);
      case AxisKind::Angular: return trig_gauss(n, lo, hi);
      case AxisKind::Periodic: return periodic_midpoint(n, lo, hi);
    }
    throw std::logic_error("unknown axis kind");
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, std::size_t, double, double>, std::shared_ptr<const Rule1D>> rules_;
};

inline std::shared_ptr<RuleCache> shared_rule_cache() {
  static auto cache = std::make_shared<RuleCache>();
  return cache;
}

/// Tensor-product quadrature settings. `order` caps the node count per axis;
/// when the integrand's degree along an axis is known, the smallest exact
/// node count is used instead if it is lower.
struct QuadratureSpec {
  std::size_t order = 32;
  unsigned threads = 1;
  std::shared_ptr<RuleCache> cache = shared_rule_cache();

  std::size_t nodes_for(AxisKind kind, std::optional<int> degree) const {
    if (order == 0) throw std::invalid_argument("QuadratureSpec: order must be positive");
    if (!degree) return order;
    const int d = std::max(*degree, 0);
    const std::size_t exact = kind == AxisKind::Polynomial ? static_cast<std::size_t>(d / 2 + 1)
                                                           : static_cast<std::size_t>(d + 1);
    return std::min(order, exact);
  }

  std::vector<std::shared_ptr<const Rule1D>> rules(const std::vector<Axis>& axes,
                                                   const std::optional<std::vector<int>>& degrees) const {
    std::vector<std::shared_ptr<const Rule1D>> out;
    out.reserve(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
      std::optional<int> d;
      if (degrees) d = (*degrees)[i];
      const auto& a = axes[i];
      out.push_back(cache->get(a.kind, nodes_for(a.kind, d), a.lo, a.hi));
    }
    return out;
  }
};

/// Σ over the tensor grid of Π weights · kernel(params). `make_kernel()` is
/// called once per worker and must return a callable double(std::span<const double>).
/// Workers own contiguous slices of the first axis; partial sums are merged in
/// slice order so the result is deterministic for a fixed thread count.
template <class MakeKernel>
double tensor_sum(const std::vector<std::shared_ptr<const Rule1D>>& rules, MakeKernel&& make_kernel,
                  unsigned threads = 1) {
  const std::size_t dims = rules.size();
  if (dims == 0) return make_kernel()(std::span<const double>{});
  const std::size_t first = rules[0]->size();

  auto work = [&](std::size_t begin, std::size_t end, CompensatedSum& acc) {
    auto kernel = make_kernel();
    std::vector<std::size_t> idx(dims, 0);
    std::vector<double> params(dims);
    for (std::size_t i0 = begin; i0 < end; ++i0) {
      idx.assign(dims, 0);
      idx[0] = i0;
      while (true) {
        double w = 1.0;
        for (std::size_t d = 0; d < dims; ++d) {
          params[d] = rules[d]->nodes[idx[d]];
          w *= rules[d]->weights[idx[d]];
        }
        acc.add(w * kernel(std::span<const double>(params)));
        std::size_t d = dims - 1;
        while (d > 0) {
          if (++idx[d] < rules[d]->size()) break;
          idx[d] = 0;
          --d;
        }
        if (d == 0) break;
      }
    }
  };

  const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first)));
  std::vector<CompensatedSum> partial(nt);
  if (nt == 1) {
    work(0, first, partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (unsigned t = 0; t < nt; ++t) {
      const std::size_t b = first * t / nt, e = first * (t + 1) / nt;
      pool.emplace_back([&, t, b, e] {
        try {
          work(b, e, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  CompensatedSum total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

}  // namespace helicap
