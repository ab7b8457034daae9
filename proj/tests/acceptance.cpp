// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "helicap/capacity.hpp"
#include "helicap/counterexample.hpp"
#include "helicap/pipeline.hpp"
#include "helicap/random.hpp"
#include "helicap/recognition.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace helicap;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<double> values(const HelicityProfile& p) {
  std::vector<double> v;
  for (const auto& c : p.components) v.push_back(c.h);
  return v;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome sphere_helicity() {
  const auto t0 = Clock::now();
  const double h = helicity(sphere(4, 1.0), ExactFormWitness::standard(4));
  const double t = seconds_since(t0);
  const double oracle_value = oracle::omega_power_integral(2, oracle::ball_volume(4, 1.0));
  const double published = 9.8696044;
  std::ostringstream d;
  d.precision(12);
  d << "h=" << h << " oracle=" << oracle_value << " rel=" << rel(h, oracle_value) << " t=" << t << "s";
  return {rel(h, oracle_value) <= 1e-6 && std::abs(h - published) <= 1e-6 * published && t < 5.0, d.str()};
}

Outcome stokes() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t cases = 0;
  std::vector<Region> regions;
  for (std::size_t m : {4, 8}) {
    regions.push_back(ball_region(m, 1.0));
    regions.push_back(shell_region(m, 1.0, 2.0));
    regions.push_back(shell_region(m, 1.0, 1.02));
  }
  for (const auto& r : regions) {
    const auto res = stokes_helicity_check(r, ExactFormWitness::standard(r.dim()));
    worst = std::max(worst, res.residual / (1.0 + std::abs(res.lhs)));
    ++cases;
  }
  Rng rng(2024);
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& r = regions[i % regions.size()];
    const auto w = random_perturbed_standard(rng, r.dim());
    maxipotency_sign(r, w);
    const auto res = stokes_helicity_check(r, w);
    worst = std::max(worst, res.residual / (1.0 + std::abs(res.lhs)));
    ++cases;
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << cases << " cases, worst rel residual=" << worst << " t=" << t << "s";
  return {worst <= 1e-6 && t < 120.0, d.str()};
}

Outcome scaling() {
  std::vector<Hypersurface> surfaces{sphere(4, 1.0), sphere(4, 2.0, false, "inner"),
                                     ellipsoid_region({1.0, 2.0}).boundary()[0], sphere(6, 1.0), sphere(8, 1.0)};
  double worst = 0.0;
  std::size_t cases = 0;
  Rng rng(77);
  for (const auto& s : surfaces) {
    std::vector<ExactFormWitness> ws{ExactFormWitness::standard(s.dim())};
    if (s.dim() <= 6) ws.push_back(random_perturbed_standard(rng, s.dim()));
    for (const auto& w : ws)
      for (double c : {0.5, 2.0, 10.0}) {
        const auto r = scaling_check(s, w, c);
        worst = std::max(worst, r.residual / (1.0 + std::abs(r.predicted)));
        ++cases;
      }
  }
  std::ostringstream d;
  d << cases << " cases, worst rel residual=" << worst;
  return {worst <= 1e-9, d.str()};
}

Outcome constants() {
  Rng rng(4);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p = random_profile(rng);
    worst = std::max(worst, std::abs(compute_C1(p) - oracle::C1_grid(values(p), p.n)));
    worst = std::max(worst, std::abs(compute_C2(p) - oracle::C2_grid(values(p), p.n)));
  }
  const double c0 = compute_C0(HelicityProfile::from_values(2, {2.0, 1.0, -0.5}));
  std::ostringstream d;
  d.precision(9);
  d << "200 profiles, worst |closed form - grid|=" << worst << ", worked C0=" << c0;
  return {worst <= 1e-5 && std::abs(c0 - 0.866025) <= 1e-6, d.str()};
}

Outcome key_lemma() {
  Rng rng(5);
  Rng sampler(55);
  std::size_t failures = 0, non_sep = 0, sampled_violations = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = random_profile(rng);
    const auto rep = verify_key_lemma(p);
    failures += !rep.pass;
    non_sep += rep.non_separating;
    // independent route: pointwise block inequalities above C0
    const double lo = rep.C0 + kSpectrumTolerance;
    if (lo >= 1.0) continue;
    enumerate_assignments(p, p, [&](const Assignment& a) {
      if (separates(a)) return;
      for (int s = 0; s < 16; ++s) {
        const double c = s == 0 ? 1.0 : uniform_real(sampler, lo, 1.0);
        bool all = true;
        for (std::size_t b = 0; b < p.size() && all; ++b) all = block_inequality(a, b, c);
        sampled_violations += all;
      }
    });
  }
  std::ostringstream d;
  d << "200 profiles, " << non_sep << " non-separating assignments, counterexamples=" << failures
    << ", sampled counterexamples=" << sampled_violations;
  return {failures == 0 && sampled_violations == 0, d.str()};
}

Outcome recognition() {
  const auto t0 = Clock::now();
  Rng rng(6);
  Rng sampler(66);
  std::size_t failures = 0, sampled = 0, identity_misses = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = random_profile_with_negative(rng);
    const auto rep = verify_recognition(p);
    failures += !(rep.pass && rep.forced_C == 1.0);
    // independent route: no assignment admits a sampled C strictly between C0 and 1
    const double lo = rep.C0 + kSpectrumTolerance, hi = 1.0 - kSpectrumTolerance;
    std::vector<double> cs;
    for (int s = 0; s < 8 && lo < hi; ++s) cs.push_back(uniform_real(sampler, lo, hi));
    std::vector<std::size_t> id(p.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    enumerate_assignments(p, p, [&](const Assignment& a) {
      for (double c : cs) {
        bool all = true;
        for (std::size_t b = 0; b < p.size() && all; ++b) all = block_inequality(a, b, c);
        sampled += all;
      }
      if (a.map() == id) {
        bool all = true;
        for (std::size_t b = 0; b < p.size() && all; ++b) all = block_inequality(a, b, 1.0);
        identity_misses += !all;
      }
    });
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "200 profiles, failures=" << failures << ", sampled C in gap admitted=" << sampled
    << ", identity infeasible at 1=" << identity_misses << " t=" << t << "s";
  return {failures == 0 && sampled == 0 && identity_misses == 0 && t < 60.0, d.str()};
}

Outcome capacity() {
  std::size_t violations = 0, checks = 0;
  for (std::size_t n : {2, 3}) {
    const auto rep = axiom_suite(n);
    violations += rep.violations.size();
    checks += rep.checks;
  }
  const auto bz = embedding_capacity_bounds(ball(2), cylinder(2));
  std::vector<ModelDomain> cat = axiom_catalog(2);
  const auto closure = RuleClosure::with_auxiliaries(cat);
  std::size_t inconsistent = closure.conflicts().size();
  for (const auto& d : cat)
    for (const auto& t : cat) inconsistent += !closure.bound(d, t).consistent();
  std::ostringstream d;
  d << checks << " axiom checks, violations=" << violations << ", c_B(Z)=[" << bz.lower << ", " << bz.upper
    << "], inconsistent bounds=" << inconsistent;
  return {violations == 0 && bz.lower == 1.0 && bz.upper == 1.0 && inconsistent == 0, d.str()};
}

Outcome counterexample() {
  const auto t0 = Clock::now();
  const auto rep = counterexample_witness();
  const PolyForm residual = pullback_linear(omega_st(4), flow_matrix(4, Rational(2))) - omega_st(4);
  std::size_t disagreements = 0;
  for (const auto& p : slit_shell_grid()) {
    const auto got = slit_shell_membership(p);
    const auto want = oracle::slit_shell(p[0], p[1], p[2], p[3]);
    disagreements += !((got == SlitShellClass::InM && want == oracle::Slit::M) ||
                       (got == SlitShellClass::PunctureOnly && want == oracle::Slit::Puncture) ||
                       (got == SlitShellClass::Outside && want == oracle::Slit::Outside));
  }
  const bool puncture = oracle::slit_shell(2, 0, 0, 0) == oracle::Slit::Puncture &&
                        slit_shell_membership(std::vector<double>{2, 0, 0, 0}) == SlitShellClass::PunctureOnly;
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "symbolic residual terms=" << residual.terms().size() << ", endpoint=(" << rep.endpoint[0] << ","
    << rep.endpoint[1] << "," << rep.endpoint[2] << "," << rep.endpoint[3] << "), grid=" << rep.grid_points
    << " disagreements=" << disagreements << " t=" << t << "s";
  return {rep.pass() && residual.is_zero() &&
              rep.grid_points >= 100000 && disagreements == 0 && puncture && t < 10.0,
          d.str()};
}

Outcome pipeline() {
  const auto res = run_pipeline_shell(1.0, 2.0, 2, RunConfig{});
  const double outer = res.profile.h(0), inner = res.profile.h(1);
  std::ostringstream d;
  d.precision(12);
  d << "profile={" << outer << ", " << inner << "} forced_C=" << res.recognition.forced_C
    << " residual volume=" << res.residual_volume;
  const bool profile_ok = rel(outer, 16 * pi * pi) <= 1e-6 && rel(inner, -pi * pi) <= 1e-6;
  return {profile_ok && res.key_lemma.pass && res.recognition.forced_C == 1.0 && res.residual_volume == 0.0,
          d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"helicity of the unit 3-sphere", sphere_helicity},
      {"Stokes for helicity", stokes},
      {"scaling law", scaling},
      {"C1/C2/C0 closed forms", constants},
      {"separation above C0", key_lemma},
      {"forced rescaling C = 1", recognition},
      {"capacity axioms", capacity},
      {"compactness counterexample witness", counterexample},
      {"shell pipeline", pipeline},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
