// helicap: helicity, Stokes, recognition and capacity checks from the command line.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include "helicap/capacity.hpp"
#include "helicap/counterexample.hpp"
#include "helicap/form_json.hpp"
#include "helicap/geometry.hpp"
#include "helicap/helicity.hpp"
#include "helicap/pipeline.hpp"
#include "helicap/profile_io.hpp"
#include "helicap/property_suite.hpp"
#include "helicap/recognition.hpp"
#include "helicap/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace helicap;
using nlohmann::json;

struct RegionOptions {
  std::string name = "ball";
  double r = 1.0;
  double R = 2.0;
  double L = 1.0;
  std::vector<double> widths;
  std::size_t dim = 4;
  std::string alpha_path;  // optional primitive α (JSON form); default λ

  void add(CLI::App* cmd) {
    cmd->add_option("--region", name, "ball | shell | ellipsoid | cylinder_truncated")->capture_default_str();
    cmd->add_option("--r", r, "radius (inner radius for shells)")->capture_default_str();
    cmd->add_option("--R", R, "outer radius for shells")->capture_default_str();
    cmd->add_option("--L", L, "half-length for cylinder_truncated")->capture_default_str();
    cmd->add_option("--widths", widths, "ellipsoid widths a_1 .. a_n");
    cmd->add_option("--dim", dim, "ambient dimension")->capture_default_str();
    cmd->add_option("--alpha", alpha_path, "JSON file with a primitive α; σ = dα (default: λ, σ = ω_st)");
  }

  Region region() const {
    if (name == "ball") return catalog_region("ball", {r}, dim);
    if (name == "shell") return catalog_region("shell", {r, R}, dim);
    if (name == "ellipsoid") return catalog_region("ellipsoid", widths, dim);
    if (name == "cylinder_truncated") return catalog_region("cylinder_truncated", {r, L}, dim);
    throw std::invalid_argument("unknown region '" + name + "'");
  }

  ExactFormWitness witness() const {
    if (alpha_path.empty()) return ExactFormWitness::standard(dim);
    std::ifstream in(alpha_path);
    if (!in) throw std::invalid_argument("cannot open '" + alpha_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed form JSON: ") + e.what());
    }
    const PolyForm alpha = form_from_json(j);
    if (alpha.dim() != dim) throw std::invalid_argument("primitive dimension differs from --dim");
    return ExactFormWitness::from_primitive(alpha);
  }

  json echo() const {
    json j{{"region", name}, {"dim", dim}};
    if (name == "ellipsoid")
      j["widths"] = widths;
    else
      j["r"] = r;
    if (name == "shell") j["R"] = R;
    if (name == "cylinder_truncated") j["L"] = L;
    if (!alpha_path.empty()) j["alpha"] = alpha_path;
    return j;
  }
};

json bound_json(const Bound& b) {
  return {{"lower", b.lower},
          {"upper", std::isinf(b.upper) ? json("inf") : json(b.upper)},
          {"derivation", {{"lower", b.lower_chain}, {"upper", b.upper_chain}}}};
}

void write_csv(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string interval_text(const CInterval& iv) {
  std::ostringstream s;
  s.precision(17);
  s << (iv.lo_closed ? "[" : "(") << iv.lo << ", " << iv.hi << "]";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"helicap: helicity of exact forms, recognition constants and capacity bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cli_cfg;
  std::string config_path, csv_path;
  auto* o_order = app.add_option("--quad-order", cli_cfg.quad_order, "max quadrature nodes per axis");
  auto* o_cap = app.add_option("--cap", cli_cfg.cap, "assignment enumeration cap");
  auto* o_seed = app.add_option("--seed", cli_cfg.seed, "seed for randomized suites");
  auto* o_threads = app.add_option("--threads", cli_cfg.threads, "worker threads");
  auto* o_out = app.add_option("--out", cli_cfg.out, "append the JSON report to this file");
  app.add_option("--emit-csv", csv_path, "write a CSV table (spectrum, bounds)");
  app.add_option("--config", config_path, "JSON run configuration");

  RegionOptions hel_opts, stokes_opts;
  auto* helicity_cmd = app.add_subcommand("helicity", "boundary helicities of a catalog region");
  auto* hel_compute = helicity_cmd->add_subcommand("compute", "boundary helicity profile");
  helicity_cmd->require_subcommand(1);
  hel_opts.add(hel_compute);
  std::string profile_out;
  hel_compute->add_option("--profile-out", profile_out, "write the profile JSON here");

  auto* stokes_cmd = app.add_subcommand("stokes", "Stokes theorem for helicity on a catalog region");
  stokes_opts.add(stokes_cmd);

  auto* rec_cmd = app.add_subcommand("recognition", "recognition constants and verifications");
  rec_cmd->require_subcommand(1);
  std::string profile_path;
  std::vector<CLI::App*> rec_subs;
  for (const char* name : {"c0", "keylemma", "verify", "spectrum"}) {
    auto* s = rec_cmd->add_subcommand(name);
    s->add_option("--profile", profile_path, "profile JSON {k?, n, components: [{label, h}]}")->required();
    rec_subs.push_back(s);
  }
  rec_subs[0]->description("C1, C2 and C0");
  rec_subs[1]->description("separation of positive and negative components");
  rec_subs[2]->description("forced rescaling C = 1");
  rec_subs[3]->description("feasible-C spectrum above C0");

  auto* cap_cmd = app.add_subcommand("capacity", "capacity bounds and axioms");
  cap_cmd->require_subcommand(1);
  std::string from = "ball", to = "cylinder", of = "ball", suite_name = "full";
  std::size_t cap_n = 2;
  auto* cap_bounds = cap_cmd->add_subcommand("bounds", "certified interval for c_from(to)");
  cap_bounds->add_option("--from", from, "domain, e.g. ball:1, shell:1,2, ellipsoid:1,2, cylinder, ball:1@2")
      ->capture_default_str();
  cap_bounds->add_option("--to", to, "target domain")->capture_default_str();
  cap_bounds->add_option("--n", cap_n, "half dimension")->capture_default_str();
  auto* cap_width = cap_cmd->add_subcommand("width", "Gromov width bounds");
  cap_width->add_option("--of", of, "target domain")->capture_default_str();
  cap_width->add_option("--n", cap_n, "half dimension")->capture_default_str();
  auto* cap_thin = cap_cmd->add_subcommand("thinness", "w(D) c_D(Z) < 1");
  cap_thin->add_option("--of", of, "domain")->capture_default_str();
  cap_thin->add_option("--n", cap_n, "half dimension")->capture_default_str();
  auto* cap_norm = cap_cmd->add_subcommand("normalization", "c_base(Z) <= 1");
  cap_norm->add_option("--base", of, "base domain")->capture_default_str();
  cap_norm->add_option("--n", cap_n, "half dimension")->capture_default_str();
  auto* cap_axioms = cap_cmd->add_subcommand("axioms", "conformality, monotonicity, consistency");
  cap_axioms->add_option("--suite", suite_name, "full | quick")->capture_default_str();
  cap_axioms->add_option("--n", cap_n, "half dimension")->capture_default_str();
  auto* cap_counter = cap_cmd->add_subcommand("counterexample", "slit shell and linear Hamiltonian flow");

  double pr = 1.0, pR = 2.0;
  std::size_t pn = 2;
  auto* pipe_cmd = app.add_subcommand("pipeline", "shell profile -> C0 -> separation -> recognition");
  pipe_cmd->add_option("--r", pr, "inner radius")->capture_default_str();
  pipe_cmd->add_option("--R", pR, "outer radius")->capture_default_str();
  pipe_cmd->add_option("--n", pn, "half dimension")->capture_default_str();

  std::size_t count = 100;
  auto* suite_cmd = app.add_subcommand("suite", "seeded randomized invariant suites");
  suite_cmd->add_option("--count", count, "instances per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (o_order->count()) cfg.quad_order = cli_cfg.quad_order;
    if (o_cap->count()) cfg.cap = cli_cfg.cap;
    if (o_seed->count()) cfg.seed = cli_cfg.seed;
    if (o_threads->count()) cfg.threads = cli_cfg.threads;
    if (o_out->count()) cfg.out = cli_cfg.out;
    cfg.validate();
    const auto q = cfg.quadrature();

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    Report rep(command, cfg);

    if (*hel_compute) {
      rep.inputs() = hel_opts.echo();
      const Region region = hel_opts.region();
      const auto w = hel_opts.witness();
      const auto prof = boundary_helicity_profile(region, w, q);
      rep.outputs()["profile"] = to_json(prof);
      rep.check("profile total positive", prof.total() > 0.0, {{"total", prof.total()}});
      if (!profile_out.empty()) {
        std::ofstream out(profile_out);
        if (!out) throw std::runtime_error("cannot write '" + profile_out + "'");
        out << emit_profile(prof);
      }
    } else if (*stokes_cmd) {
      rep.inputs() = stokes_opts.echo();
      const auto st = stokes_helicity_check(stokes_opts.region(), stokes_opts.witness(), q);
      rep.outputs() = {{"lhs", st.lhs}, {"rhs", st.rhs}, {"residual", st.residual}, {"per_component", st.per_component}};
      rep.check("stokes residual", st.residual <= cfg.tol.stokes * (1.0 + std::abs(st.lhs)));
    } else if (*rec_cmd) {
      const auto p = load_profile(profile_path);
      rep.inputs() = {{"profile", to_json(p)}};
      if (*rec_subs[0]) {
        rep.outputs() = {{"C1", compute_C1(p)}, {"C2", compute_C2(p)}, {"C0", compute_C0(p)}};
        rep.check("C0 < 1", compute_C0(p) < 1.0);
      } else if (*rec_subs[1]) {
        const auto kl = verify_key_lemma(p, cfg.cap, cfg.threads);
        rep.outputs() = {{"C0", kl.C0},
                         {"worst_violator_Cmax", std::isfinite(kl.worst_violator_Cmax) ? json(kl.worst_violator_Cmax)
                                                                                       : json("-inf")},
                         {"assignments", kl.assignments},
                         {"non_separating", kl.non_separating}};
        if (kl.worst_violator) rep.outputs()["worst_violator"] = *kl.worst_violator;
        rep.check("separation above C0", kl.pass);
      } else if (*rec_subs[2]) {
        const auto rr = verify_recognition(p, cfg.cap, cfg.threads);
        rep.outputs() = {{"C0", rr.C0},
                         {"forced_C", std::isnan(rr.forced_C) ? json(nullptr) : json(rr.forced_C)},
                         {"contains_one", rr.contains_one},
                         {"gap_empty", rr.gap_empty},
                         {"spectrum_entries", rr.spectrum_entries}};
        rep.check("forced C = 1", rr.pass);
      } else {
        const auto spectrum = feasible_spectrum(p, cfg.cap, cfg.threads);
        json entries = json::array();
        std::ostringstream csv;
        csv.precision(17);
        csv << "assignment,lo,lo_closed,hi,separating\n";
        for (const auto& e : spectrum) {
          std::string m;
          for (std::size_t i = 0; i < e.map.size(); ++i) m += (i ? "-" : "") + std::to_string(e.map[i]);
          entries.push_back({{"assignment", e.map}, {"interval", interval_text(e.interval)}, {"separating", e.separating}});
          csv << m << "," << e.interval.lo << "," << (e.interval.lo_closed ? 1 : 0) << "," << e.interval.hi << ","
              << (e.separating ? 1 : 0) << "\n";
        }
        rep.outputs() = {{"C0", compute_C0(p)}, {"spectrum", entries}};
        if (!csv_path.empty()) write_csv(csv_path, csv.str());
      }
    } else if (*cap_cmd) {
      if (*cap_bounds) {
        const auto d = parse_model_domain(from, cap_n), t = parse_model_domain(to, cap_n);
        rep.inputs() = {{"from", d.label()}, {"to", t.label()}};
        const auto b = embedding_capacity_bounds(d, t);
        rep.outputs() = bound_json(b);
        rep.check("lower <= upper", b.consistent());
        if (!csv_path.empty()) {
          std::ostringstream csv;
          csv.precision(17);
          csv << "domain,target,lower,upper\n" << d.label() << "," << t.label() << "," << b.lower << "," << b.upper << "\n";
          write_csv(csv_path, csv.str());
        }
      } else if (*cap_width) {
        const auto t = parse_model_domain(of, cap_n);
        rep.inputs() = {{"of", t.label()}};
        const auto b = gromov_width_bounds(t);
        rep.outputs() = bound_json(b);
        rep.check("lower <= upper", b.consistent());
      } else if (*cap_thin) {
        const auto d = parse_model_domain(of, cap_n);
        rep.inputs() = {{"of", d.label()}};
        const auto v = thinness_check(d);
        rep.outputs() = {{"verdict", to_string(v.verdict)},
                         {"width", bound_json(v.width)},
                         {"c_of_Z", bound_json(v.c_of_Z)},
                         {"product", {v.product_lower, v.product_upper}}};
      } else if (*cap_norm) {
        const auto d = parse_model_domain(of, cap_n);
        rep.inputs() = {{"base", d.label()}};
        const auto v = normalization_check(d);
        const char* verdict = v.verdict == Verdict::Holds   ? "normalized"
                              : v.verdict == Verdict::Fails ? "not-normalized"
                                                            : "inconclusive";
        rep.outputs() = {{"verdict", verdict}, {"c_of_Z", bound_json(v.c_of_Z)}};
      } else if (*cap_axioms) {
        if (suite_name != "full" && suite_name != "quick")
          throw std::invalid_argument("--suite must be full or quick");
        const std::vector<double> scales = suite_name == "full" ? std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0}
                                                                : std::vector<double>{0.5, 2.0};
        const auto ar = axiom_suite(cap_n, scales);
        json viol = json::array();
        for (const auto& v : ar.violations) viol.push_back({{"check", v.check}, {"detail", v.detail}, {"amount", v.amount}});
        rep.outputs() = {{"checks", ar.checks},
                         {"max_conformality_violation", ar.max_conformality_violation},
                         {"max_monotonicity_violation", ar.max_monotonicity_violation},
                         {"violations", viol}};
        const auto bz = embedding_capacity_bounds(ball(cap_n), cylinder(cap_n));
        rep.outputs()["c_B(Z)"] = bound_json(bz);
        rep.check("axioms", ar.pass());
        rep.check("c_B(Z) = [1, 1]", bz.lower == 1.0 && bz.upper == 1.0);
      } else if (*cap_counter) {
        const auto cr = counterexample_witness();
        rep.outputs() = {{"symplectic", cr.symplectic},
                         {"endpoint", cr.endpoint},
                         {"endpoint_error", cr.endpoint_error},
                         {"segment_covers_puncture", cr.segment_covers_puncture},
                         {"grid_points", cr.grid_points},
                         {"grid_in_M", cr.grid_in_M},
                         {"grid_in_M_prime", cr.grid_in_M_prime},
                         {"inclusion_violations", cr.inclusion_violations}};
        rep.check("counterexample witness", cr.pass());
      }
    } else if (*pipe_cmd) {
      rep = cmd_pipeline_shell(pr, pR, pn, cfg);
    } else if (*suite_cmd) {
      rep = cmd_property_suite(cfg.seed, count, cfg);
    }

    const json out = rep.finish();
    std::cout << out.dump(2) << "\n";
    if (!cfg.out.empty()) append_report(cfg.out, out);
    return rep.pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
