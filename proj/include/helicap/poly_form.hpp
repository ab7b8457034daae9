#pragma once

// Differential forms on R^m with polynomial coefficients.
//
// A k-form is stored as a map from strictly increasing index lists
// I = (i_1 < ... < i_k) to coefficient polynomials, meaning
// Σ_I a_I dx_{i_1} ∧ ... ∧ dx_{i_k}. Coordinates are 0-based in code and
// 1-based in the JSON interchange format.
//
// Conventions: ω_st = Σ_i dx_{2i-1} ∧ dx_{2i} (1-based) with primitive
// λ = Σ_i x_{2i-1} dx_{2i}, so that ∫_{B²} ω_st = π with the standard orientation.

#include "helicap/linalg.hpp"
#include "helicap/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly increasing list of 0-based coordinate indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<std::size_t> idx) : MultiIndex(std::vector<std::size_t>(idx)) {}
  explicit MultiIndex(const std::vector<std::size_t>& idx) {
    idx_.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i > 0 && idx[i] <= idx[i - 1])
        throw std::invalid_argument("MultiIndex: indices must be strictly increasing");
      idx_.push_back(static_cast<std::uint8_t>(idx[i]));
    }
  }

  std::size_t size() const { return idx_.size(); }
  std::size_t operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  bool contains(std::size_t j) const {
    for (auto v : idx_)
      if (v == j) return true;
    return false;
  }
  std::size_t back() const { return idx_.back(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint8_t> idx_;
};

/// Result of concatenating two index lists: the sorted union and the sign
/// of the sorting permutation, or sign 0 when they overlap.
struct MergedIndex {
  MultiIndex index;
  int sign = 0;
};

inline MergedIndex merge_indices(const MultiIndex& a, const MultiIndex& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;  // b[j] jumps over the remaining a's
      out.push_back(b[j++]);
    } else {
      return {};
    }
  }
  return {MultiIndex(out), (inversions % 2 == 0) ? 1 : -1};
}

class PolyForm {
 public:
  using Terms = std::map<MultiIndex, Polynomial>;

  /// Zero form. Degrees above `dim` are allowed only for the zero form, which
  /// is what the exterior derivative of a top-degree form returns.
  PolyForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  PolyForm(std::size_t dim, std::size_t degree, const Terms& terms) : dim_(dim), degree_(degree) {
    for (const auto& [idx, p] : terms) add(idx, p);
  }

  static PolyForm function(const Polynomial& p) {
    PolyForm f(p.vars(), 0);
    f.add(MultiIndex{}, p);
    return f;
  }

  static PolyForm constant(std::size_t dim, const MultiIndex& idx, const Rational& c = 1) {
    PolyForm f(dim, idx.size());
    f.add(idx, Polynomial::constant(dim, c));
    return f;
  }

  /// dx_i (0-based).
  static PolyForm dx(std::size_t dim, std::size_t i) { return constant(dim, MultiIndex{i}); }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Polynomial* coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Largest total degree among the coefficients (-1 for the zero form).
  int coefficient_degree() const {
    int d = -1;
    for (const auto& [idx, p] : terms_) d = std::max(d, p.degree());
    return d;
  }

  PolyForm& operator+=(const PolyForm& o) {
    check_same_shape(o);
    for (const auto& [idx, p] : o.terms_) add(idx, p);
    return *this;
  }
  PolyForm& operator-=(const PolyForm& o) {
    check_same_shape(o);
    for (const auto& [idx, p] : o.terms_) add(idx, -p);
    return *this;
  }
  PolyForm& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, p] : terms_) p *= c;
    return *this;
  }
  /// Multiplication by a 0-form (function).
  PolyForm& operator*=(const Polynomial& f) {
    if (f.vars() != dim_) throw DimensionError("PolyForm: function dimension mismatch");
    Terms old;
    old.swap(terms_);
    for (const auto& [idx, p] : old) add(idx, p * f);
    return *this;
  }

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(PolyForm a) { return a *= Rational(-1); }
  friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }
  friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
  friend PolyForm operator*(const Polynomial& f, PolyForm a) { return a *= f; }

  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void add(const MultiIndex& idx, const Polynomial& p) {
    if (idx.size() != degree_) throw DegreeError("PolyForm: index length differs from degree");
    if (idx.size() > 0 && idx.back() >= dim_) throw DimensionError("PolyForm: index exceeds ambient dimension");
    if (p.vars() != dim_) throw DimensionError("PolyForm: coefficient variable count differs from dimension");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_same_shape(const PolyForm& o) const {
    if (o.dim_ != dim_) throw DimensionError("PolyForm: dimension mismatch");
    if (o.degree_ != degree_) throw DegreeError("PolyForm: degree mismatch");
  }

  friend PolyForm wedge(const PolyForm&, const PolyForm&);
  friend PolyForm exterior_derivative(const PolyForm&);

  std::size_t dim_;
  std::size_t degree_;
  Terms terms_;
};

/// a ∧ b. Throws DimensionError on mismatched ambient dimensions and
/// DegreeError when deg a + deg b exceeds the dimension.
inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  const std::size_t deg = a.degree() + b.degree();
  if (deg > a.dim()) throw DegreeError("wedge: degree " + std::to_string(deg) + " exceeds dimension " + std::to_string(a.dim()));
  PolyForm r(a.dim(), deg);
  for (const auto& [ia, pa] : a.terms()) {
    for (const auto& [ib, pb] : b.terms()) {
      auto merged = merge_indices(ia, ib);
      if (merged.sign == 0) continue;
      Polynomial c = pa * pb;
      if (merged.sign < 0) c *= Rational(-1);
      r.add(merged.index, c);
    }
  }
  return r;
}

/// a^{∧n}; a^{∧0} is the constant function 1.
inline PolyForm wedge_power(const PolyForm& a, std::size_t n) {
  PolyForm r = PolyForm::function(Polynomial::constant(a.dim(), 1));
  for (std::size_t i = 0; i < n; ++i) r = wedge(r, a);
  return r;
}

/// d a. On forms of degree >= dim the result is the zero form of degree k+1.
inline PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm r(a.dim(), a.degree() + 1);
  if (a.degree() >= a.dim()) return r;
  for (const auto& [idx, p] : a.terms()) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (idx.contains(j)) continue;
      Polynomial dp = p.derivative(j);
      if (dp.is_zero()) continue;
      auto merged = merge_indices(MultiIndex{j}, idx);
      if (merged.sign < 0) dp *= Rational(-1);
      r.add(merged.index, dp);
    }
  }
  return r;
}

inline PolyForm scale_form(const PolyForm& a, const Rational& c) { return a * c; }

/// Scaling by a double is exact: every finite double is a dyadic rational.
inline PolyForm scale_form(const PolyForm& a, double c) { return a * Rational(c); }

/// Pullback along the linear map y ↦ A y (A is dim x dim, rows = old coordinates).
inline PolyForm pullback_linear(const PolyForm& a, const std::vector<std::vector<Rational>>& mat) {
  const std::size_t m = a.dim();
  if (mat.size() != m) throw DimensionError("pullback_linear: matrix size mismatch");
  std::vector<PolyForm> dxs;
  dxs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (mat[i].size() != m) throw DimensionError("pullback_linear: matrix must be square");
    PolyForm d(m, 1);
    for (std::size_t l = 0; l < m; ++l)
      if (mat[i][l] != 0) d += PolyForm::dx(m, l) * mat[i][l];
    dxs.push_back(std::move(d));
  }
  PolyForm r(m, a.degree());
  for (const auto& [idx, p] : a.terms()) {
    PolyForm t = PolyForm::function(p.substitute_linear(mat));
    for (auto i : idx) t = wedge(t, dxs[i]);
    r += t;
  }
  return r;
}

/// ω_st = Σ_i dx_{2i} ∧ dx_{2i+1} (0-based) on R^{dim}, dim even.
inline PolyForm omega_st(std::size_t dim) {
  if (dim % 2 != 0) throw DimensionError("omega_st: dimension must be even");
  PolyForm w(dim, 2);
  for (std::size_t i = 0; i + 1 < dim; i += 2) w += PolyForm::constant(dim, MultiIndex{i, i + 1});
  return w;
}

/// Canonical primitive λ = Σ_i x_{2i} dx_{2i+1} (0-based) of ω_st.
inline PolyForm liouville_form(std::size_t dim) {
  if (dim % 2 != 0) throw DimensionError("liouville_form: dimension must be even");
  PolyForm l(dim, 1);
  for (std::size_t i = 0; i + 1 < dim; i += 2)
    l += Polynomial::variable(dim, i) * PolyForm::dx(dim, i + 1);
  return l;
}

/// Double-precision snapshot of a form for repeated pointwise evaluation.
class CompiledForm {
 public:
  explicit CompiledForm(const PolyForm& f) : dim_(f.dim()), degree_(f.degree()) {
    for (const auto& [idx, p] : f.terms()) {
      keys_.emplace_back(idx.begin(), idx.end());
      coefs_.emplace_back(p);
      stride_ = std::max<std::size_t>(stride_, static_cast<std::size_t>(coefs_.back().max_exponent()) + 1);
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t stride() const { return stride_; }
  std::size_t term_count() const { return keys_.size(); }
  const std::vector<std::uint8_t>& key(std::size_t t) const { return keys_[t]; }
  double coefficient(std::size_t t, const double* powers) const { return coefs_[t].eval(powers, stride_); }

  /// For a form of degree dim-1, the vector b with β(v_1..v_{m-1}) = det[b | v_1 .. v_{m-1}].
  void flux_vector(const double* powers, double* b) const {
    for (std::size_t i = 0; i < dim_; ++i) b[i] = 0.0;
    for (std::size_t t = 0; t < keys_.size(); ++t) {
      // the missing index
      std::size_t miss = dim_ - 1;
      for (std::size_t i = 0; i < keys_[t].size(); ++i)
        if (keys_[t][i] != i) {
          miss = i;
          break;
        }
      const double c = coefs_[t].eval(powers, stride_);
      b[miss] = (miss % 2 == 0) ? c : -c;
    }
  }

  /// Coefficient of the top-degree form (degree == dim).
  double top_coefficient(const double* powers) const {
    return keys_.empty() ? 0.0 : coefs_.front().eval(powers, stride_);
  }

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::size_t stride_ = 1;
  std::vector<std::vector<std::uint8_t>> keys_;
  std::vector<CompiledPolynomial> coefs_;
};

/// a(point)(v_1, ..., v_k): Σ_I a_I(point) · det(rows I of [v_1 .. v_k]).
inline double evaluate(const PolyForm& a, std::span<const double> point,
                       const std::vector<std::vector<double>>& vectors) {
  const std::size_t m = a.dim(), k = a.degree();
  if (point.size() != m) throw DimensionError("evaluate: point dimension mismatch");
  if (vectors.size() != k) throw DegreeError("evaluate: expected " + std::to_string(k) + " vectors");
  for (const auto& v : vectors)
    if (v.size() != m) throw DimensionError("evaluate: vector dimension mismatch");
  if (k > m) return 0.0;
  double s = 0.0;
  std::vector<double> minor(k * k);
  for (const auto& [idx, p] : a.terms()) {
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) minor[c * k + r] = vectors[c][idx[r]];
    s += p(point) * (k == 0 ? 1.0 : linalg::det_inplace(minor.data(), k));
  }
  return s;
}

namespace detail {

inline Rational det_exact(std::vector<Rational> a, std::size_t n) {
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[k * n + piv] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[c * n + k], a[c * n + piv]);
      det = -det;
    }
    const Rational d = a[k * n + k];
    det *= d;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[k * n + r] == 0) continue;
      const Rational f = a[k * n + r] / d;
      for (std::size_t c = k + 1; c < n; ++c) a[c * n + r] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace detail

/// Exact counterpart of evaluate() for rational points and vectors.
inline Rational evaluate_exact(const PolyForm& a, std::span<const Rational> point,
                               const std::vector<std::vector<Rational>>& vectors) {
  const std::size_t m = a.dim(), k = a.degree();
  if (point.size() != m) throw DimensionError("evaluate: point dimension mismatch");
  if (vectors.size() != k) throw DegreeError("evaluate: expected " + std::to_string(k) + " vectors");
  for (const auto& v : vectors)
    if (v.size() != m) throw DimensionError("evaluate: vector dimension mismatch");
  Rational s = 0;
  std::vector<Rational> minor(k * k);
  for (const auto& [idx, p] : a.terms()) {
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) minor[c * k + r] = vectors[c][idx[r]];
    s += p.at(point) * (k == 0 ? Rational(1) : detail::det_exact(minor, k));
  }
  return s;
}

}  // namespace helicap
