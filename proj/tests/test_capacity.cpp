#include "helicap/capacity.hpp"
#include "helicap/counterexample.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace helicap;
using std::numbers::pi;

namespace {

void expect_exact(const Bound& b, double v) {
  EXPECT_DOUBLE_EQ(b.lower, v);
  EXPECT_DOUBLE_EQ(b.upper, v);
  EXPECT_FALSE(b.lower_chain.empty());
  EXPECT_FALSE(b.upper_chain.empty());
}

bool chain_mentions(const std::vector<std::string>& chain, const std::string& id) {
  for (const auto& s : chain)
    if (s.find(id) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(ModelDomain, ConstructionAndParsing) {
  EXPECT_THROW(ball(2, 0.0), std::invalid_argument);
  EXPECT_THROW(shell(2, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(ellipsoid({1.0, -1.0}), std::invalid_argument);
  EXPECT_EQ(ellipsoid({3.0, 1.0}).params, (std::vector<double>{1.0, 3.0}));
  EXPECT_EQ(parse_model_domain("ball"), ball(2));
  EXPECT_EQ(parse_model_domain("ball:2"), ball(2, 2.0));
  EXPECT_EQ(parse_model_domain("cylinder"), cylinder(2));
  EXPECT_EQ(parse_model_domain("shell:1,2", 3), shell(3, 1, 2));
  EXPECT_EQ(parse_model_domain("ellipsoid:1,2"), ellipsoid({1.0, 2.0}));
  EXPECT_EQ(parse_model_domain("ball@2"), ball(2).scaled(2.0));
  EXPECT_THROW(parse_model_domain("torus"), std::invalid_argument);
  EXPECT_THROW(parse_model_domain("shell:1"), std::invalid_argument);
  EXPECT_EQ(ball(2).label(), "B");
  EXPECT_EQ(cylinder(2).label(), "Z");
}

TEST(ModelDomain, VolumesMatchLebesgueOracle) {
  // volume() is ∫ωⁿ relative to the unit ball.
  const double unit = oracle::ball_volume(4, 1.0);
  EXPECT_NEAR(shell(2, 1, 2).volume(), (oracle::ball_volume(4, 2.0) - oracle::ball_volume(4, 1.0)) / unit, 1e-12);
  // {Σπ|z|²/a < 1} is a product-like ellipsoid with radii sqrt(a/π); Lebesgue volume a₁a₂/2.
  EXPECT_NEAR(ellipsoid({1.0, 2.0}).volume(), (1.0 * 2.0 / 2.0) / unit, 1e-12);
}

TEST(EmbeddingCapacity, Examples) {
  expect_exact(embedding_capacity_bounds(ball(2), ball(2)), 1.0);
  const auto bz = embedding_capacity_bounds(ball(2), cylinder(2));
  expect_exact(bz, 1.0);
  EXPECT_TRUE(chain_mentions(bz.upper_chain, "NONSQUEEZE"));
  for (double r : {0.5, 1.5, 3.0}) expect_exact(embedding_capacity_bounds(ball(2), ball(2, r)), r * r);
  EXPECT_THROW(embedding_capacity_bounds(ball(2), ball(3)), DimensionError);
}

TEST(GromovWidth, Examples) {
  expect_exact(gromov_width_bounds(ball(2)), 1.0);
  expect_exact(gromov_width_bounds(cylinder(2)), 1.0);
  const auto s = gromov_width_bounds(shell(2, 1.0, 1.1));
  EXPECT_NEAR(s.lower, 0.0025, 1e-12);
  EXPECT_LE(s.upper, std::min(1.21, std::sqrt(std::pow(1.1, 4) - 1.0)) + 1e-12);
  EXPECT_TRUE(s.consistent());
  // symplectic widths of ellipsoids
  expect_exact(gromov_width_bounds(ellipsoid({1.0, 2.0})), 1.0 / pi);
  expect_exact(gromov_width_bounds(ellipsoid({pi, 2 * pi})), 1.0);
}

TEST(Conformality, Examples) {
  AxiomReport rep;
  conformality_check(width_evaluator(), {ball(2, 1.5)}, {1.0}, rep);
  EXPECT_EQ(rep.max_conformality_violation, 0.0);
  for (double r : {0.5, 2.0}) {
    const auto b = embedding_capacity_bounds(ball(2).scaled(2.0), ball(2, r));
    EXPECT_DOUBLE_EQ(b.lower, r * r / 2.0);
    EXPECT_DOUBLE_EQ(b.upper, r * r / 2.0);
  }
  for (double a : {0.25, 4.0}) {
    const auto scaled = gromov_width_bounds(ball(2, 1.5).scaled(a));
    const auto geometric = gromov_width_bounds(ball(2, 1.5 * std::sqrt(a)));
    EXPECT_NEAR(scaled.lower, a * 2.25, 1e-12);
    EXPECT_NEAR(geometric.lower, scaled.lower, 1e-12 * scaled.lower);
    EXPECT_NEAR(geometric.upper, scaled.upper, 1e-12 * scaled.upper);
  }
}

TEST(Monotonicity, Examples) {
  AxiomReport rep;
  monotonicity_check(width_evaluator(), {{ball(2, 0.5), ball(2)}, {shell(2, 1, 2), ball(2, 2.0)}, {ball(2), cylinder(2)}},
                     rep);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.max_monotonicity_violation, 0.0);
  EXPECT_EQ(gromov_width_bounds(ball(2)).upper, gromov_width_bounds(cylinder(2)).lower);
}

TEST(Axioms, FullSuiteHasNoViolations) {
  for (std::size_t n : {2, 3}) {
    const auto rep = axiom_suite(n);
    for (const auto& v : rep.violations) ADD_FAILURE() << v.check << ": " << v.detail << " (" << v.amount << ")";
    EXPECT_GT(rep.checks, 100u);
  }
}

TEST(Axioms, InjectedViolationIsDetected) {
  CapacityEvaluator broken{"broken", [](const ModelDomain& t) {
                             Bound b = gromov_width_bounds(t);
                             if (t.scale != 1.0) b.lower *= 1.01;
                             return b;
                           }};
  AxiomReport rep;
  conformality_check(broken, {ball(2)}, {2.0}, rep);
  EXPECT_FALSE(rep.pass());
  CapacityEvaluator flipped{"flipped", [](const ModelDomain& t) {
                              Bound b;
                              b.lower = b.upper = 1.0 / gromov_width_bounds(t).lower;
                              return b;
                            }};
  AxiomReport rep2;
  monotonicity_check(flipped, {{ball(2, 0.5), ball(2)}}, rep2);
  EXPECT_FALSE(rep2.pass());
}

TEST(Consistency, FullCatalogPairwise) {
  std::vector<ModelDomain> cat = axiom_catalog(2);
  cat.push_back(ball(2).scaled(2.0));
  cat.push_back(shell(2, 1, 1.02));
  const auto closure = RuleClosure::with_auxiliaries(cat);
  for (const auto& c : closure.conflicts()) ADD_FAILURE() << describe(c);
  for (const auto& d : cat)
    for (const auto& t : cat) EXPECT_TRUE(closure.bound(d, t).consistent()) << d.label() << " -> " << t.label();
}

TEST(Cbar, Examples) {
  const auto bb = cbar_bounds(ball(2), ball(2));
  EXPECT_DOUBLE_EQ(bb.lower, 1.0);
  EXPECT_DOUBLE_EQ(bb.upper, 1.0);
  EXPECT_GE(cbar_bounds(shell(2, 1, 2), cylinder(2)).lower, gromov_width_bounds(cylinder(2)).lower);
  EXPECT_THROW(cbar_bounds(ball(2), ball(2, 0.0)), std::invalid_argument);
  for (const auto& base : axiom_catalog(2))
    for (const auto& t : axiom_catalog(2)) EXPECT_GE(cbar_bounds(base, t).lower, gromov_width_bounds(t).lower);
}

TEST(Normalization, Examples) {
  const auto b = normalization_check(ball(2));
  EXPECT_EQ(b.verdict, Verdict::Holds);
  EXPECT_DOUBLE_EQ(b.c_of_Z.upper, 1.0);
  const auto b2 = normalization_check(ball(2, 2.0));
  EXPECT_EQ(b2.verdict, Verdict::Holds);
  EXPECT_DOUBLE_EQ(b2.c_of_Z.lower, 0.25);
  EXPECT_DOUBLE_EQ(b2.c_of_Z.upper, 0.25);
  // rescaling the base by A = c_base(Z) makes the value exactly 1
  const auto eq = normalization_check(ball(2, 2.0).scaled(0.25));
  EXPECT_EQ(eq.verdict, Verdict::Holds);
  EXPECT_DOUBLE_EQ(eq.c_of_Z.upper, 1.0);
  EXPECT_EQ(normalization_check(ball(2, 0.5)).verdict, Verdict::Fails);
}

TEST(Thinness, Examples) {
  EXPECT_EQ(thinness_check(ball(2)).verdict, Verdict::Fails);
  const auto thin = thinness_check(shell(2, 1, 1.05));
  EXPECT_NE(thin.verdict, Verdict::Fails);
  EXPECT_LE(thin.product_lower, thin.product_upper);
  for (const auto& d : axiom_catalog(2))
    for (double a : {0.25, 0.5, 2.0, 4.0}) {
      const auto v0 = thinness_check(d), v1 = thinness_check(d.scaled(a));
      EXPECT_EQ(v0.verdict, v1.verdict) << d.label();
      EXPECT_NEAR(v0.product_upper, v1.product_upper, 1e-12 * std::max(1.0, v0.product_upper));
    }
}

TEST(Counterexample, Membership) {
  const std::vector<double> puncture{2, 0, 0, 0}, segment{0.5, 0, 0, 0}, center{0, -2, 0, 0};
  EXPECT_EQ(slit_shell_membership(puncture), SlitShellClass::PunctureOnly);
  EXPECT_TRUE(in_slit_shell_M(puncture));
  EXPECT_FALSE(in_slit_shell_M_prime(puncture));
  EXPECT_EQ(slit_shell_membership(segment), SlitShellClass::Outside);
  EXPECT_EQ(slit_shell_membership(center), SlitShellClass::Outside);
  EXPECT_EQ(slit_shell_membership(std::vector<double>{1.5, 0, 0, 0}), SlitShellClass::InM);
  EXPECT_THROW(slit_shell_membership(std::vector<double>{0, 0}), DimensionError);
}

TEST(Counterexample, Flow) {
  const std::vector<double> x{1, 0, 0, 0};
  const auto y = hamiltonian_flow(std::log(2.0), x);
  EXPECT_EQ(y, (std::vector<double>{2, 0, 0, 0}));
  const std::vector<double> z{0.3, -0.7, 1.1, 2.0};
  EXPECT_EQ(hamiltonian_flow(0.0, z), z);
  const auto back = hamiltonian_flow(-std::log(2.0), hamiltonian_flow(std::log(2.0), z));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(back[i], z[i], 1e-15);
  for (int k : {1, 2, 7}) EXPECT_TRUE(flow_is_symplectic(4, Rational(k, 3)));
  EXPECT_TRUE(flow_is_symplectic(6, Rational(2)));
}

TEST(Counterexample, WitnessAndGridOracle) {
  const auto rep = counterexample_witness();
  EXPECT_TRUE(rep.pass());
  EXPECT_GE(rep.grid_points, 100000u);
  EXPECT_EQ(rep.inclusion_violations, 0u);
  EXPECT_EQ(rep.endpoint_error, 0.0);
  std::size_t disagreements = 0, in_m = 0;
  for (const auto& p : slit_shell_grid()) {
    const auto got = slit_shell_membership(p);
    const auto want = oracle::slit_shell(p[0], p[1], p[2], p[3]);
    const bool same = (got == SlitShellClass::InM && want == oracle::Slit::M) ||
                      (got == SlitShellClass::PunctureOnly && want == oracle::Slit::Puncture) ||
                      (got == SlitShellClass::Outside && want == oracle::Slit::Outside);
    disagreements += !same;
    in_m += want == oracle::Slit::M;
  }
  EXPECT_EQ(disagreements, 0u);
  EXPECT_EQ(in_m, rep.grid_in_M_prime);
}
