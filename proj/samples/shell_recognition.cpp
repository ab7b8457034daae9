// Shell boundary profile, separation constant and forced rescaling.
#include "helicap/pipeline.hpp"

#include <cstdio>

using namespace helicap;

int main(int argc, char** argv) {
  const double r = argc > 1 ? std::atof(argv[1]) : 1.0;
  const double R = argc > 2 ? std::atof(argv[2]) : 2.0;
  const auto res = run_pipeline_shell(r, R, 2, RunConfig{});
  for (const auto& c : res.profile.components) std::printf("%-6s h = %.10f\n", c.label.c_str(), c.h);
  std::printf("C0 = %.10f\n", res.recognition.C0);
  std::printf("key lemma: %s (%llu assignments)\n", res.key_lemma.pass ? "holds" : "FAILS",
              static_cast<unsigned long long>(res.key_lemma.assignments));
  std::printf("forced C = %g, residual volume = %g\n", res.recognition.forced_C, res.residual_volume);
  return res.recognition.pass ? 0 : 1;
}
