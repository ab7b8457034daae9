#pragma once

// Seeded randomized invariant suites across all modules.

#include "helicap/capacity.hpp"
#include "helicap/geometry.hpp"
#include "helicap/helicity.hpp"
#include "helicap/random.hpp"
#include "helicap/recognition.hpp"
#include "helicap/report.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace helicap {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0.0;  // largest residual / violation seen
  std::string first_failure;

  void record(bool ok, double metric, const std::string& what) {
    ++cases;
    worst = std::max(worst, metric);
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
  bool pass() const { return failures == 0; }
};

/// Scan of the C1/C2 defining predicates on {i·step} ⊂ [0, 1], from 1 downward.
inline double scan_C_predicate(const std::function<bool(double)>& pred, double step = 1e-6) {
  const auto steps = static_cast<long>(std::llround(1.0 / step));
  for (long i = steps; i >= 0; --i) {
    const double c = static_cast<double>(i) * step;
    if (pred(c)) return c;
  }
  return 0.0;  // empty set
}

inline double scan_C1(const HelicityProfile& p, double step = 1e-6) {
  const auto pos = p.positive();
  const double n = static_cast<double>(p.n);
  return scan_C_predicate(
      [&](double c) {
        const double cn = std::pow(c, n);
        for (auto a : pos)
          for (auto b : pos)
            if (p.h(a) > p.h(b) && p.h(b) >= cn * p.h(a)) return true;
        return false;
      },
      step);
}

inline double scan_C2(const HelicityProfile& p, double step = 1e-6) {
  const auto pos = p.positive(), neg = p.negative();
  const double n = static_cast<double>(p.n);
  return scan_C_predicate(
      [&](double c) {
        const double cn = std::pow(c, n);
        for (auto a : pos)
          for (auto b : neg)
            if ((1.0 - cn) * p.h(a) >= -p.h(b)) return true;
        return false;
      },
      step);
}

namespace suites {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline SuiteResult forms_algebra(Rng& rng, std::size_t count) {
  SuiteResult s;
  s.name = "forms: graded commutativity, associativity, Leibniz, d∘d, alternation";
  for (std::size_t it = 0; it < count; ++it) {
    const std::size_t m = uniform_index(rng, 2, 6);
    const std::size_t ka = uniform_index(rng, 0, m - 1);
    const std::size_t kb = uniform_index(rng, 0, m - 1 - ka);
    const std::size_t kc = uniform_index(rng, 0, m - ka - kb);
    const auto a = random_form(rng, m, ka, 3), b = random_form(rng, m, kb, 3), c = random_form(rng, m, kc, 3);
    const Rational sign = (ka * kb) % 2 == 0 ? 1 : -1;
    s.record(wedge(a, b) == sign * wedge(b, a), 0.0, "graded commutativity, m=" + std::to_string(m));
    s.record(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), 0.0, "associativity, m=" + std::to_string(m));
    const Rational sa = ka % 2 == 0 ? 1 : -1;
    s.record(exterior_derivative(wedge(a, b)) ==
                 wedge(exterior_derivative(a), b) + sa * wedge(a, exterior_derivative(b)),
             0.0, "Leibniz, m=" + std::to_string(m));
    const auto f = random_form(rng, m, uniform_index(rng, 0, m), 3);
    s.record(exterior_derivative(exterior_derivative(f)).is_zero(), 0.0, "d∘d, m=" + std::to_string(m));
    // exact alternation at a rational point
    const std::size_t k = a.degree();
    if (k >= 2) {
      std::vector<Rational> x(m);
      for (auto& v : x) v = random_rational(rng);
      std::vector<std::vector<Rational>> vs(k, std::vector<Rational>(m));
      for (auto& v : vs)
        for (auto& e : v) e = random_rational(rng);
      const Rational before = evaluate_exact(a, x, vs);
      std::swap(vs[0], vs[k - 1]);
      s.record(evaluate_exact(a, x, vs) == -before, 0.0, "alternation, m=" + std::to_string(m));
    }
  }
  return s;
}

inline SuiteResult geometry_stokes(Rng& rng, std::size_t count, const QuadratureSpec& q, double tol) {
  SuiteResult s;
  s.name = "geometry: plain Stokes on balls and shells, orientation reversal";
  for (std::size_t it = 0; it < count; ++it) {
    const std::size_t m = uniform_index(rng, 2, 6);
    const auto beta = random_form(rng, m, m - 1, 3);
    const bool use_shell = uniform_index(rng, 0, 1) == 1;
    const double r = uniform_real(rng, 0.5, 1.5);
    const Region region = use_shell ? shell_region(m, r, r + uniform_real(rng, 0.1, 1.0)) : ball_region(m, r);
    const double lhs = integrate_over_region(exterior_derivative(beta), region, q);
    CompensatedSum rhs;
    for (const auto& b : region.boundary()) rhs.add(integrate_over_hypersurface(beta, b, q));
    const double res = std::abs(lhs - rhs.value()) / (1.0 + std::abs(lhs));
    s.record(res <= tol, res, region.label() + " m=" + std::to_string(m) + " residual " + fmt(res));
    const auto& h = region.boundary().front();
    s.record(integrate_over_hypersurface(beta, h.reversed(), q) == -integrate_over_hypersurface(beta, h, q), 0.0,
             "orientation reversal on " + h.label());
  }
  return s;
}

inline SuiteResult helicity_primitive(Rng& rng, std::size_t count, const QuadratureSpec& q, double tol) {
  SuiteResult s;
  s.name = "helicity: primitive independence under gauge shifts";
  for (std::size_t it = 0; it < count; ++it) {
    const std::size_t dim = uniform_index(rng, 0, 3) == 0 ? 6 : 4;
    const auto w = ExactFormWitness::standard(dim);
    const auto f = random_polynomial(rng, dim, 3);
    const PolyForm alpha2 = w.alpha() + exterior_derivative(PolyForm::function(f));
    const Hypersurface h = sphere(dim, uniform_real(rng, 0.5, 1.5));
    const double value = helicity(h, w, q);
    const double dev = primitive_independence_check(h, w.sigma(), w.alpha(), alpha2, q) / (1.0 + std::abs(value));
    s.record(dev <= tol, dev, "gauge shift on S^" + std::to_string(dim - 1) + " deviation " + fmt(dev));
  }
  return s;
}

inline SuiteResult helicity_stokes(Rng& rng, std::size_t count, const QuadratureSpec& q, double tol) {
  SuiteResult s;
  s.name = "helicity: Stokes for perturbed maxipotent forms, profile positivity, orientation antisymmetry";
  const std::vector<Region> regions{ball_region(4, 1.0), shell_region(4, 1.0, 2.0), ellipsoid_region({1.0, 2.0})};
  for (std::size_t it = 0; it < count; ++it) {
    const auto w = random_perturbed_standard(rng, 4);
    const Region& r = regions[it % regions.size()];
    const auto st = stokes_helicity_check(r, w, q);
    const double res = st.residual / (1.0 + std::abs(st.lhs));
    s.record(res <= tol, res, r.label() + " residual " + fmt(res));
    try {
      const auto prof = boundary_helicity_profile(r, w, q);
      s.record(prof.total() > 0.0, 0.0, r.label() + " profile total not positive");
    } catch (const MaxipotencyError& e) {
      s.record(false, 0.0, std::string("perturbation not maxipotent: ") + e.what());
    }
    const auto& b = r.boundary().front();
    s.record(helicity(b.reversed(), w, q) == -helicity(b, w, q), 0.0, "orientation antisymmetry");
  }
  return s;
}

inline SuiteResult recognition_constants(Rng& rng, std::size_t count) {
  SuiteResult s;
  s.name = "recognition: C1/C2 closed forms vs predicate scan";
  for (std::size_t it = 0; it < count; ++it) {
    const auto p = random_profile(rng);
    const double d1 = std::abs(compute_C1(p) - scan_C1(p)), d2 = std::abs(compute_C2(p) - scan_C2(p));
    s.record(std::max(d1, d2) <= 1e-5, std::max(d1, d2), "C1/C2 mismatch " + fmt(std::max(d1, d2)));
  }
  return s;
}

inline SuiteResult recognition_intervals(Rng& rng, std::size_t count, std::uint64_t cap) {
  SuiteResult s;
  s.name = "recognition: feasible intervals vs sampled block inequalities";
  for (std::size_t it = 0; it < count; ++it) {
    const auto p = random_profile(rng);
    std::size_t wrong = 0;
    enumerate_assignments(
        p, p,
        [&](const Assignment& a) {
          const CInterval iv = feasible_C_interval(a);
          for (int k = 1; k <= 1000; ++k) {
            const double c = k / 1000.0;
            bool all = true;
            for (std::size_t i = 0; i < p.size() && all; ++i) all = block_inequality(a, i, c);
            if (all != iv.contains(c)) ++wrong;
          }
        },
        cap);
    s.record(wrong == 0, static_cast<double>(wrong), std::to_string(wrong) + " misclassified samples");
  }
  return s;
}

inline SuiteResult recognition_theorems(Rng& rng, std::size_t count, std::uint64_t cap, unsigned threads) {
  SuiteResult s;
  s.name = "recognition: separation, forced C = 1, permutation claims";
  for (std::size_t it = 0; it < count; ++it) {
    const auto p = random_profile(rng);
    const auto kl = verify_key_lemma(p, cap, threads);
    s.record(kl.pass, std::max(0.0, kl.worst_violator_Cmax - kl.C0), "separation fails, worst " + fmt(kl.worst_violator_Cmax));
    if (p.negative_total() < 0.0) {
      const auto rec = verify_recognition(p, cap, threads);
      s.record(rec.pass, 0.0, "recognition fails, C0 " + fmt(rec.C0));
    }
    const double c0 = kl.C0;
    enumerate_assignments(
        p, p,
        [&](const Assignment& a) {
          if (!separates(a) || feasible_C_interval(a).sup() <= c0 + kSpectrumTolerance) return;
          try {
            extract_permutation(a);
            s.record(true, 0.0, "");
          } catch (const PermutationError& e) {
            s.record(false, 0.0, e.what());
          }
        },
        cap);
  }
  return s;
}

inline SuiteResult capacity_axioms(Rng& rng, std::size_t count) {
  SuiteResult s;
  s.name = "capacity: axioms, consistency, c̄ dominance, thinness scale invariance";
  if (count == 0) return s;
  const auto rep = axiom_suite(2);
  s.record(rep.pass(), std::max(rep.max_conformality_violation, rep.max_monotonicity_violation),
           rep.violations.empty() ? "" : rep.violations.front().check + ": " + rep.violations.front().detail);
  const auto catalog = axiom_catalog(2);
  const std::vector<double> scales{0.25, 0.5, 1.0, 2.0, 4.0};
  for (std::size_t it = 0; it < count; ++it) {
    const auto& d = catalog[uniform_index(rng, 0, catalog.size() - 1)];
    const auto& t = catalog[uniform_index(rng, 0, catalog.size() - 1)];
    const double a = scales[uniform_index(rng, 0, scales.size() - 1)];
    const auto cb = cbar_bounds(d, t), w = gromov_width_bounds(t);
    s.record(cb.lower >= w.lower, 0.0, "c̄ below w for " + d.label() + " -> " + t.label());
    if (d.bounded()) {
      const auto v1 = thinness_check(d), v2 = thinness_check(d.scaled(a));
      s.record(v1.verdict == v2.verdict, 0.0, "thinness verdict changes under scaling for " + d.label());
    }
  }
  return s;
}

}  // namespace suites

/// Runs every suite with independent streams derived from `seed`.
inline Report cmd_property_suite(std::uint64_t seed, std::size_t count, const RunConfig& cfg) {
  Report rep("suite", cfg);
  rep.inputs() = {{"seed", seed}, {"count", count}};
  const auto q = cfg.quadrature();
  std::vector<std::function<SuiteResult(Rng&)>> runs{
      [&](Rng& r) { return suites::forms_algebra(r, count); },
      [&](Rng& r) { return suites::geometry_stokes(r, count, q, cfg.tol.stokes); },
      [&](Rng& r) { return suites::helicity_primitive(r, count, q, cfg.tol.stokes); },
      [&](Rng& r) { return suites::helicity_stokes(r, std::min<std::size_t>(count, 20), q, cfg.tol.stokes); },
      [&](Rng& r) { return suites::recognition_constants(r, count); },
      [&](Rng& r) { return suites::recognition_intervals(r, count, cfg.cap); },
      [&](Rng& r) { return suites::recognition_theorems(r, count, cfg.cap, cfg.threads); },
      [&](Rng& r) { return suites::capacity_axioms(r, count); },
  };
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Rng rng(seed * 1000003ULL + i);
    const auto res = runs[i](rng);
    out.push_back({{"suite", res.name},
                   {"cases", res.cases},
                   {"failures", res.failures},
                   {"worst", res.worst},
                   {"first_failure", res.first_failure}});
    rep.check(res.name, res.pass());
  }
  rep.outputs()["suites"] = out;
  return rep;
}

}  // namespace helicap
