#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

using Rational = mpq_class;
using Exponents = std::vector<std::uint16_t>;

/// Polynomial in a fixed number of variables x_0 .. x_{m-1}.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t vars = 0) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c) {
    Polynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t vars, std::size_t j) {
    if (j >= vars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Exponents e(vars, 0);
    e[j] = 1;
    Polynomial p(vars);
    p.add_term(e, Rational(1));
    return p;
  }

  static Polynomial monomial(std::size_t vars, Exponents e, const Rational& c) {
    if (e.size() != vars) throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
    Polynomial p(vars);
    p.add_term(e, c);
    return p;
  }

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  /// Largest exponent of x_j over all terms.
  int degree_in(std::size_t j) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[j]);
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t j = 0; j < a.vars_; ++j) e[j] = static_cast<std::uint16_t>(ea[j] + eb[j]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t j) const {
    if (j >= vars_) throw std::invalid_argument("Polynomial::derivative: index out of range");
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponents f = e;
      --f[j];
      r.add_term(f, c * e[j]);
    }
    return r;
  }

  /// Plain double evaluation; hot loops use CompiledPolynomial instead.
  double operator()(std::span<const double> x) const {
    if (x.size() != vars_) throw std::invalid_argument("Polynomial: point dimension mismatch");
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = c.get_d();
      for (std::size_t j = 0; j < vars_; ++j)
        for (std::uint16_t k = 0; k < e[j]; ++k) t *= x[j];
      s += t;
    }
    return s;
  }

  /// Exact evaluation at a rational point.
  Rational at(std::span<const Rational> x) const {
    if (x.size() != vars_) throw std::invalid_argument("Polynomial: point dimension mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t j = 0; j < vars_; ++j)
        for (std::uint16_t k = 0; k < e[j]; ++k) t *= x[j];
      s += t;
    }
    return s;
  }

  /// Composition with a linear change of variables: returns q(y) = p(A y),
  /// where A has rows indexed by the old variables and columns by the new ones.
  Polynomial substitute_linear(const std::vector<std::vector<Rational>>& a) const {
    if (a.size() != vars_) throw std::invalid_argument("substitute_linear: row count mismatch");
    const std::size_t new_vars = vars_ == 0 ? 0 : a.front().size();
    std::vector<Polynomial> lin;
    lin.reserve(vars_);
    for (const auto& row : a) {
      if (row.size() != new_vars) throw std::invalid_argument("substitute_linear: ragged matrix");
      Polynomial l(new_vars);
      for (std::size_t c = 0; c < new_vars; ++c)
        if (row[c] != 0) l += Polynomial::variable(new_vars, c) * row[c];
      lin.push_back(std::move(l));
    }
    // powers[j][k] = lin[j]^k, filled lazily
    std::vector<std::vector<Polynomial>> powers(vars_);
    auto power = [&](std::size_t j, std::size_t k) -> const Polynomial& {
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(Polynomial::constant(new_vars, 1));
      while (pw.size() <= k) pw.push_back(pw.back() * lin[j]);
      return pw[k];
    };
    Polynomial r(new_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial t = Polynomial::constant(new_vars, c);
      for (std::size_t j = 0; j < vars_; ++j)
        if (e[j] > 0) t = t * power(j, e[j]);
      r += t;
    }
    return r;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  void check_vars(const Polynomial& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  std::size_t vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Flattened double-precision copy of a polynomial for repeated evaluation.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p) : vars_(p.vars()) {
    coefs_.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
      coefs_.push_back(c.get_d());
      exps_.insert(exps_.end(), e.begin(), e.end());
      for (auto v : e) max_exp_ = std::max<int>(max_exp_, v);
    }
  }

  int max_exponent() const { return max_exp_; }
  std::size_t vars() const { return vars_; }

  /// `powers` holds x_j^k at index j*(stride)+k with stride >= max_exponent()+1.
  double eval(const double* powers, std::size_t stride) const {
    double s = 0.0;
    const std::size_t n = coefs_.size();
    for (std::size_t t = 0; t < n; ++t) {
      double v = coefs_[t];
      const std::uint16_t* e = exps_.data() + t * vars_;
      for (std::size_t j = 0; j < vars_; ++j)
        if (e[j]) v *= powers[j * stride + e[j]];
      s += v;
    }
    return s;
  }

 private:
  std::size_t vars_ = 0;
  int max_exp_ = 0;
  std::vector<double> coefs_;
  std::vector<std::uint16_t> exps_;
};

/// Fills powers[j*stride + k] = x_j^k for k < stride.
inline void fill_powers(std::span<const double> x, std::size_t stride, double* powers) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    double* row = powers + j * stride;
    row[0] = 1.0;
    for (std::size_t k = 1; k < stride; ++k) row[k] = row[k - 1] * x[j];
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace helicap
