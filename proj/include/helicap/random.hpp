#pragma once

// Seeded random instances for property checks.

#include "helicap/helicity.hpp"
#include "helicap/poly_form.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace helicap {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Small rational p/q with |p| <= 5, 1 <= q <= 4, nonzero.
inline Rational random_rational(Rng& rng) {
  long p = 0;
  while (p == 0) p = static_cast<long>(uniform_index(rng, 0, 10)) - 5;
  const long q = static_cast<long>(uniform_index(rng, 1, 4));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Polynomial random_polynomial(Rng& rng, std::size_t vars, int max_degree, std::size_t max_terms = 3) {
  Polynomial p(vars);
  const std::size_t terms = uniform_index(rng, 1, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(vars, 0);
    const int deg = static_cast<int>(uniform_index(rng, 0, static_cast<std::size_t>(max_degree)));
    for (int d = 0; d < deg; ++d) ++e[uniform_index(rng, 0, vars - 1)];
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline MultiIndex random_multi_index(Rng& rng, std::size_t dim, std::size_t degree) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(degree);
  std::sort(all.begin(), all.end());
  return MultiIndex(all);
}

/// Random k-form with up to `max_terms` basis terms and coefficient degree <= max_degree.
inline PolyForm random_form(Rng& rng, std::size_t dim, std::size_t degree, int max_degree, std::size_t max_terms = 3) {
  PolyForm f(dim, degree);
  const std::size_t terms = uniform_index(rng, 1, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    PolyForm term = PolyForm::constant(dim, random_multi_index(rng, dim, degree));
    f += random_polynomial(rng, dim, max_degree) * term;
  }
  return f;
}

/// |I| in [1, max_size], helicities uniform in [-10, 10], n in {2, 3}.
inline HelicityProfile random_profile(Rng& rng, std::size_t max_size = 5) {
  const std::size_t size = uniform_index(rng, 1, max_size);
  const std::size_t n = uniform_index(rng, 2, 3);
  std::vector<double> h(size);
  for (auto& v : h) v = uniform_real(rng, -10.0, 10.0);
  return HelicityProfile::from_values(n, h);
}

/// Same, conditioned on a negative helicity total over I₋.
inline HelicityProfile random_profile_with_negative(Rng& rng, std::size_t max_size = 5) {
  while (true) {
    auto p = random_profile(rng, max_size);
    if (p.negative_total() < 0.0) return p;
  }
}

/// ω_st + dβ for a small random 1-form β, with primitive λ + β.
inline ExactFormWitness random_perturbed_standard(Rng& rng, std::size_t dim, const Rational& size = Rational(1, 40)) {
  PolyForm beta = random_form(rng, dim, 1, 2) * size;
  return {omega_st(dim) + exterior_derivative(beta), liouville_form(dim) + beta};
}

}  // namespace helicap
