#include "helicap/random.hpp"
#include "helicap/recognition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <set>
#include <tuple>

using namespace helicap;
using std::numbers::pi;

namespace {

std::vector<double> values(const HelicityProfile& p) {
  std::vector<double> v;
  for (const auto& c : p.components) v.push_back(c.h);
  return v;
}

HelicityProfile shell_profile() {
  return HelicityProfile(2, 2, {{"outer", 16 * pi * pi}, {"inner", -pi * pi}});
}

}  // namespace

TEST(Constants, WorkedExamples) {
  const auto p = HelicityProfile::from_values(2, {2.0, 1.0});
  EXPECT_NEAR(compute_C1(p), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(compute_C1(HelicityProfile::from_values(2, {3.0, 3.0})), 0.0);
  EXPECT_EQ(compute_C1(HelicityProfile::from_values(2, {-1.0})), 0.0);

  const auto q = HelicityProfile::from_values(2, {2.0, 1.0, -0.5});
  EXPECT_NEAR(compute_C2(q), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(compute_C0(q), 0.866025, 1e-6);
  EXPECT_EQ(compute_C2(HelicityProfile::from_values(2, {2.0, 1.0})), 0.0);
  EXPECT_EQ(compute_C2(HelicityProfile::from_values(2, {1.0, -3.0})), 0.0);

  EXPECT_EQ(compute_C0(HelicityProfile::from_values(2, {})), 0.0);
  EXPECT_EQ(compute_C0(HelicityProfile::from_values(2, {1.0, -1.0})), 0.0);
}

TEST(Constants, AgreeWithGridSearchOfDefiningPredicates) {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto p = random_profile(rng);
    EXPECT_NEAR(compute_C1(p), oracle::C1_grid(values(p), p.n), 1e-5);
    EXPECT_NEAR(compute_C2(p), oracle::C2_grid(values(p), p.n), 1e-5);
    EXPECT_LT(compute_C0(p), 1.0);
  }
}

TEST(BlockInequality, Examples) {
  const auto p = HelicityProfile::from_values(2, {1.0});
  EXPECT_TRUE(block_inequality(Assignment(p, p, {0}), 0, 1.0));
  const auto d = HelicityProfile::from_values(2, {1.0});
  const auto t = HelicityProfile::from_values(2, {0.5});
  EXPECT_FALSE(block_inequality(Assignment(d, t, {0}), 0, 0.8));
  const auto neg = HelicityProfile::from_values(2, {-1.0});
  const auto none = HelicityProfile::from_values(2, {});
  for (double c : {0.1, 0.5, 1.0}) EXPECT_TRUE(block_inequality(Assignment(neg, none, {}), 0, c));
  EXPECT_THROW(block_inequality(Assignment(p, p, {0}), 0, 0.0), std::invalid_argument);
}

TEST(FeasibleInterval, Examples) {
  const auto p = HelicityProfile::from_values(2, {2.0, 1.0, -0.5});
  EXPECT_TRUE(feasible_C_interval(Assignment(p, p, {0, 1, 2})).contains(1.0));

  const auto d = HelicityProfile::from_values(2, {2.0});
  const auto t = HelicityProfile::from_values(2, {1.0});
  const auto iv = feasible_C_interval(Assignment(d, t, {0}));
  EXPECT_FALSE(iv.empty);
  EXPECT_EQ(iv.lo, 0.0);
  EXPECT_FALSE(iv.lo_closed);
  EXPECT_NEAR(iv.hi, std::sqrt(0.5), 1e-12);

  const auto d1 = HelicityProfile::from_values(2, {1.0});
  const auto t1 = HelicityProfile::from_values(2, {-0.5});
  EXPECT_TRUE(feasible_C_interval(Assignment(d1, t1, {0})).empty);
}

TEST(FeasibleInterval, BlockShapes) {
  EXPECT_TRUE(block_interval(1.0, -0.5, 2).empty);
  const auto neg = block_interval(-4.0, -1.0, 2);
  EXPECT_TRUE(neg.lo_closed);
  EXPECT_NEAR(neg.lo, 0.5, 1e-12);
  EXPECT_EQ(neg.hi, 1.0);
  EXPECT_TRUE(block_interval(-1.0, -4.0, 2).empty);
  EXPECT_FALSE(block_interval(-1.0, 0.5, 2).empty);
  EXPECT_FALSE(block_interval(0.0, 0.0, 2).empty);
  EXPECT_TRUE(block_interval(0.0, -1.0, 2).empty);
}

TEST(FeasibleInterval, AgreesWithPointwiseEvaluation) {
  Rng rng(32);
  std::size_t checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_profile(rng, 4);
    enumerate_assignments(p, p, [&](const Assignment& a) {
      const auto iv = feasible_C_interval(a);
      for (int s = 0; s < 1000; ++s) {
        const double c = uniform_real(rng, 1e-9, 1.0);
        bool direct = true;
        for (std::size_t b = 0; b < p.size(); ++b) direct = direct && block_inequality(a, b, c);
        ASSERT_EQ(iv.contains(c), direct) << "C=" << c;
        ++checked;
      }
    });
  }
  EXPECT_GT(checked, 0u);
}

TEST(Enumeration, CountsAndUniqueness) {
  for (auto [d, t, expected] : std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>{
           {2, 2, 4}, {3, 3, 27}, {1, 4, 1}, {4, 0, 1}}) {
    std::vector<double> dv(d, 1.0), tv(t, 1.0);
    const auto dp = HelicityProfile::from_values(2, dv), tp = HelicityProfile::from_values(2, tv);
    std::set<std::vector<std::size_t>> seen;
    enumerate_assignments(dp, tp, [&](const Assignment& a) { seen.insert(a.map()); });
    EXPECT_EQ(seen.size(), expected);
    EXPECT_EQ(assignment_count(d, t), expected);
  }
}

TEST(Enumeration, CapErrorNamesCount) {
  const auto p = HelicityProfile::from_values(2, {1, 2, 3, 4, 5});
  try {
    verify_key_lemma(p, 100);
    FAIL();
  } catch (const CapExceededError& e) {
    EXPECT_NE(std::string(e.what()).find("3125"), std::string::npos);
  }
  EXPECT_THROW(assignment_count(20, 20), CapExceededError);
}

TEST(Separation, Examples) {
  const auto p = HelicityProfile::from_values(2, {2.0, -1.0});
  EXPECT_TRUE(separates(Assignment(p, p, {0, 1})));
  EXPECT_FALSE(separates(Assignment(p, p, {0, 0})));
  const auto pos = HelicityProfile::from_values(2, {2.0, 1.0});
  enumerate_assignments(pos, pos, [](const Assignment& a) { EXPECT_TRUE(separates(a)); });
}

TEST(KeyLemma, Examples) {
  const auto sh = verify_key_lemma(shell_profile());
  EXPECT_TRUE(sh.pass);
  EXPECT_EQ(sh.assignments, 4u);
  const auto q = verify_key_lemma(HelicityProfile::from_values(2, {2.0, 1.0, -0.5}));
  EXPECT_TRUE(q.pass);
  EXPECT_EQ(q.assignments, 27u);
  EXPECT_LE(q.worst_violator_Cmax, 0.86603);
  const auto none = verify_key_lemma(HelicityProfile::from_values(2, {2.0, 1.0}));
  EXPECT_TRUE(none.pass);
  EXPECT_EQ(none.worst_violator_Cmax, -std::numeric_limits<double>::infinity());
}

TEST(KeyLemma, HoldsOnRandomProfilesAndIsThreadIndependent) {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_profile(rng);
    const auto r1 = verify_key_lemma(p);
    EXPECT_TRUE(r1.pass) << "C0=" << r1.C0 << " worst=" << r1.worst_violator_Cmax;
    const auto r4 = verify_key_lemma(p, kDefaultAssignmentCap, 4);
    EXPECT_EQ(r1.worst_violator_Cmax, r4.worst_violator_Cmax);
    EXPECT_EQ(r1.non_separating, r4.non_separating);
  }
}

TEST(Permutation, Examples) {
  const auto p = HelicityProfile::from_values(2, {2.0, 1.0, -0.5});
  const auto id = extract_permutation(Assignment(p, p, {0, 1, 2}));
  EXPECT_EQ(id, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}}));

  const auto eq = HelicityProfile::from_values(2, {3.0, 3.0});
  const Assignment swap(eq, eq, {1, 0});
  EXPECT_TRUE(feasible_C_interval(swap).contains(1.0));
  EXPECT_EQ(extract_permutation(swap), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));

  EXPECT_THROW(extract_permutation(Assignment(p, p, {0, 0, 2})), PermutationError);
  const auto diff = HelicityProfile::from_values(2, {3.0, 2.0});
  EXPECT_THROW(extract_permutation(Assignment(diff, diff, {1, 0})), PermutationError);
}

TEST(Permutation, SucceedsForEverySeparatingAssignmentAboveC0) {
  Rng rng(34);
  std::size_t extracted = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = random_profile(rng);
    const double c0 = compute_C0(p);
    enumerate_assignments(p, p, [&](const Assignment& a) {
      if (!separates(a)) return;
      if (!feasible_C_interval(a).meets_open(c0 + kSpectrumTolerance, 1.0 + kSpectrumTolerance)) return;
      EXPECT_NO_THROW(extract_permutation(a));
      ++extracted;
    });
  }
  EXPECT_GT(extracted, 0u);
}

TEST(Recognition, Examples) {
  const auto sh = verify_recognition(shell_profile());
  EXPECT_TRUE(sh.pass);
  EXPECT_EQ(sh.forced_C, 1.0);
  EXPECT_TRUE(verify_recognition(HelicityProfile::from_values(2, {2.0, 1.0, -0.5})).pass);
  EXPECT_THROW(verify_recognition(HelicityProfile::from_values(2, {1.0})), HypothesisError);
}

TEST(Recognition, HoldsOnRandomProfilesWithNegativeSum) {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_profile_with_negative(rng);
    const auto r = verify_recognition(p);
    EXPECT_TRUE(r.pass) << "C0=" << r.C0;
    EXPECT_EQ(r.forced_C, 1.0);
  }
}

TEST(Recognition, ConcludingInequality) {
  // (1 - Cⁿ) Σ_{I₋} h >= 0 together with Σ_{I₋} h < 0 leaves only C = 1 in (0, 1].
  const auto p = HelicityProfile::from_values(3, {5.0, -1.0, -2.0});
  for (double c : {0.3, 0.9, 0.999}) EXPECT_LT((1.0 - std::pow(c, 3)) * p.negative_total(), 0.0);
  EXPECT_EQ((1.0 - std::pow(verify_recognition(p).forced_C, 3)) * p.negative_total(), 0.0);
}
