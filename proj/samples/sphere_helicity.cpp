// Helicity of round spheres under the standard witness, plus the scaling law.
#include "helicap/helicity.hpp"

#include <cstdio>

using namespace helicap;

int main() {
  for (std::size_t n : {2, 3, 4}) {
    const auto w = ExactFormWitness::standard(2 * n);
    const double h = helicity(sphere(2 * n, 1.0), w);
    std::printf("S^%zu  h = %.12f\n", 2 * n - 1, h);
  }
  const auto w = ExactFormWitness::standard(4);
  for (double c : {0.5, 2.0, 10.0}) {
    const auto r = scaling_check(sphere(4, 1.0), w, c);
    std::printf("C = %-4g h(C sigma) = %.10f  C^2 h = %.10f\n", c, r.scaled, r.predicted);
  }
}
