// Certified bounds for the ball-embedding capacity and the Gromov width on a few domains.
#include "helicap/capacity.hpp"

#include <cstdio>

using namespace helicap;

namespace {

void row(const char* what, const ModelDomain& t, const Bound& b) {
  std::printf("%-8s %-22s [%.6g, %.6g]\n", what, t.label().c_str(), b.lower, b.upper);
  for (const auto& step : b.lower_chain) std::printf("         lower: %s\n", step.c_str());
  for (const auto& step : b.upper_chain) std::printf("         upper: %s\n", step.c_str());
}

}  // namespace

int main() {
  const std::vector<ModelDomain> targets{ball(2), cylinder(2), ball(2, 2.0), shell(2, 1.0, 1.1),
                                         ellipsoid({1.0, 2.0})};
  for (const auto& t : targets) {
    row("c_B", t, embedding_capacity_bounds(ball(2), t));
    row("w", t, gromov_width_bounds(t));
  }
  const auto rep = axiom_suite(2);
  std::printf("axiom checks: %zu, violations: %zu\n", rep.checks, rep.violations.size());
}
