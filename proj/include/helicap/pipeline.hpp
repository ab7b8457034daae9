#pragma once

// Shell pipeline: boundary-helicity profile by quadrature, then C0, the
// separation check, and the recognition verdict on that profile.

#include "helicap/geometry.hpp"
#include "helicap/helicity.hpp"
#include "helicap/profile_io.hpp"
#include "helicap/recognition.hpp"
#include "helicap/report.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace helicap {

struct PipelineResult {
  HelicityProfile profile;
  double volume = 0.0;  // ∫ ωⁿ over the shell
  KeyLemmaReport key_lemma;
  RecognitionReport recognition;
  double residual_volume = 0.0;  // (Cⁿ - 1)|h(inner)| at the forced C
};

/// Shell Sh(r, R) in R^{2n} with ω_st.
inline PipelineResult run_pipeline_shell(double r, double R, std::size_t n, const RunConfig& cfg) {
  if (!(r > 0.0) || !(r < R)) throw std::invalid_argument("pipeline: need 0 < r < R");
  if (n < 2) throw DimensionError("pipeline: helicity requires n >= 2");
  const std::size_t dim = 2 * n;
  const auto q = cfg.quadrature();
  const Region region = shell_region(dim, r, R);
  const auto w = ExactFormWitness::standard(dim);
  PipelineResult out;
  out.profile = boundary_helicity_profile(region, w, q);
  out.volume = integrate_over_region(wedge_power(w.sigma(), n), region, q);
  out.key_lemma = verify_key_lemma(out.profile, cfg.cap, cfg.threads);
  out.recognition = verify_recognition(out.profile, cfg.cap, cfg.threads);
  double inner = 0.0;
  for (const auto& c : out.profile.components)
    if (c.label == "inner") inner = c.h;
  const double cn = std::pow(out.recognition.forced_C, static_cast<double>(n));
  out.residual_volume = (cn - 1.0) * std::abs(inner);
  return out;
}

inline Report cmd_pipeline_shell(double r, double R, std::size_t n, const RunConfig& cfg) {
  Report rep("pipeline shell", cfg);
  rep.inputs() = {{"r", r}, {"R", R}, {"n", n}};
  const auto res = run_pipeline_shell(r, R, n, cfg);
  const double expected = std::pow(std::numbers::pi, static_cast<double>(n)) *
                          (std::pow(R, 2.0 * n) - std::pow(r, 2.0 * n));
  rep.outputs()["profile"] = to_json(res.profile);
  rep.outputs()["volume"] = res.volume;
  rep.outputs()["C0"] = res.key_lemma.C0;
  rep.outputs()["worst_violator_Cmax"] =
      std::isfinite(res.key_lemma.worst_violator_Cmax) ? nlohmann::json(res.key_lemma.worst_violator_Cmax) : nlohmann::json(nullptr);
  rep.outputs()["forced_C"] = std::isnan(res.recognition.forced_C) ? nlohmann::json(nullptr)
                                                                   : nlohmann::json(res.recognition.forced_C);
  rep.outputs()["residual_volume"] = res.residual_volume;
  const double total = res.profile.total();
  rep.check("volume matches closed form",
            std::abs(res.volume - expected) <= cfg.tol.reference * (1.0 + std::abs(expected)),
            {{"value", res.volume}, {"expected", expected}});
  rep.check("profile sums to volume", std::abs(total - res.volume) <= cfg.tol.stokes * (1.0 + std::abs(res.volume)),
            {{"sum", total}});
  rep.check("key lemma", res.key_lemma.pass);
  rep.check("recognition", res.recognition.pass);
  rep.check("residual volume vanishes at forced C", res.residual_volume == 0.0);
  return rep;
}

}  // namespace helicap
