#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "zstab/fibration.hpp"
#include "zstab/grr.hpp"
#include "zstab/io.hpp"
#include "zstab/pluecker.hpp"
#include "zstab/selftest.hpp"
#include "zstab/sl2.hpp"
#include "zstab/stability.hpp"
#include "zstab/surface.hpp"

namespace {

using zstab::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitInputError = 2;

void emit(const Json& report, const std::string& json_out) {
  std::string text = report.dump(2);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw zstab::Error("cannot write " + json_out);
    out << text << "\n";
  }
  std::cout << text << "\n";
}

Json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zstab::Error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw zstab::Error(std::string("json parse error: ") + ex.what());
  }
  return j;
}

zstab::ChargeFamily parse_family(const zstab::io::ProblemSpec& prob,
                                 const Json& wj, bool weak_rho) {
  zstab::ChargeFamily fam;
  if (wj.contains("base_charge")) {
    fam.base = zstab::io::parse_charge(prob.ring, wj.at("base_charge"), true);
  } else {
    if (!prob.charge) throw zstab::Error("walls need a charge block");
    fam.base = *prob.charge;
  }
  std::string pencil = wj.value("pencil", "b_field");
  if (pencil == "b_field") {
    fam.kind = zstab::ChargeFamily::Kind::BFieldPencil;
    fam.b_direction =
        zstab::io::parse_class(prob.ring, wj.at("direction").get<std::string>());
  } else if (pencil == "rho") {
    fam.kind = zstab::ChargeFamily::Kind::RhoPencil;
    fam.rho_index = wj.at("index").get<size_t>();
    fam.rho_direction = zstab::parse_gaussian(wj.at("direction").get<std::string>());
  } else {
    throw zstab::Error("unknown pencil kind '" + pencil + "'");
  }
  (void)weak_rho;
  return fam;
}

int cmd_charge(const std::string& input, const zstab::Rat& at_k, bool weak_rho,
               const std::string& json_out) {
  auto prob = zstab::io::parse_problem(load_input(input), weak_rho);
  if (!prob.charge) throw zstab::Error("input needs a charge block");
  std::string name = prob.raw.value("charge_at", "E");
  zstab::ChargePolynomial z = central_charge(*prob.charge, prob.bundle(name));
  Json report = zstab::io::charge_to_json(z);
  report["bundle"] = name;
  auto sp = slope_phase(z, at_k);
  report["at_k"] = zstab::io::rat_str(at_k);
  switch (sp.kind) {
    case zstab::SlopeKind::Finite:
      report["slope"] = zstab::io::rat_str(sp.slope);
      break;
    case zstab::SlopeKind::PlusInfinity: report["slope"] = "+inf"; break;
    case zstab::SlopeKind::MinusInfinity: report["slope"] = "-inf"; break;
  }
  report["re_sign"] = sp.re_sign;
  report["im_sign"] = sp.im_sign;
  emit(report, json_out);
  return kExitOk;
}

int cmd_stability(const std::string& input, bool weak_rho,
                  const std::string& json_out) {
  auto prob = zstab::io::parse_problem(load_input(input), weak_rho);
  if (!prob.charge) throw zstab::Error("input needs a charge block");
  const Json& sj = prob.raw.at("stability");
  std::string name = sj.at("bundle").get<std::string>();
  std::vector<zstab::BundleData> subs;
  std::vector<std::string> names;
  for (const auto& s : sj.at("subobjects")) {
    names.push_back(s.get<std::string>());
    subs.push_back(prob.bundle(names.back()));
  }
  auto report = asym_stable(*prob.charge, prob.bundle(name), subs, names);
  Json j = zstab::io::report_to_json(report);
  j["bundle"] = name;
  emit(j, json_out);
  return report.aggregate == zstab::Aggregate::Stable ||
                 report.aggregate == zstab::Aggregate::VacuouslyStable
             ? kExitOk
             : kExitUnstable;
}

int cmd_walls(const std::string& input, bool weak_rho,
              const std::string& json_out) {
  auto prob = zstab::io::parse_problem(load_input(input), weak_rho);
  const Json& wj = prob.raw.at("walls");
  zstab::ChargeFamily fam = parse_family(prob, wj, weak_rho);
  std::string name = wj.at("bundle").get<std::string>();
  std::vector<zstab::BundleData> subs;
  std::vector<std::string> names;
  for (const auto& s : wj.at("subobjects")) {
    names.push_back(s.get<std::string>());
    subs.push_back(prob.bundle(names.back()));
  }
  zstab::Rat lo = zstab::parse_rat(wj.at("range").at(0).get<std::string>());
  zstab::Rat hi = zstab::parse_rat(wj.at("range").at(1).get<std::string>());
  auto walls = wall_scan(fam, prob.bundle(name), subs, lo, hi, names);
  emit(zstab::io::walls_to_json(walls), json_out);
  return kExitOk;
}

int cmd_surface(const std::string& input, const zstab::Rat& at_k, bool weak_rho,
                const std::string& json_out) {
  auto prob = zstab::io::parse_problem(load_input(input), weak_rho);
  if (!prob.charge) throw zstab::Error("input needs a charge block");
  const Json& sj = prob.raw.at("surface");
  std::string lname = sj.at("line_bundle").get<std::string>();
  std::vector<zstab::GradedClass> curves;
  std::vector<std::string> names;
  if (sj.contains("curves")) {
    for (const auto& cj : sj.at("curves")) {
      curves.push_back(zstab::io::parse_class(prob.ring, cj.get<std::string>()));
      names.push_back(cj.get<std::string>());
    }
  }
  auto report =
      surface_report(*prob.charge, prob.bundle(lname), curves, names, at_k);
  Json j = zstab::io::surface_to_json(report);
  emit(j, json_out);
  return report.hypothesis == zstab::VolumeHypothesis::Holds ? kExitOk
                                                             : kExitUnstable;
}

int cmd_grr(const std::string& input, const zstab::Rat& at_k, bool weak_rho,
            const std::string& json_out) {
  auto prob = zstab::io::parse_problem(load_input(input), weak_rho);
  if (!prob.charge) throw zstab::Error("input needs a charge block");
  const Json& gj = prob.raw.at("grr");
  std::string name = gj.at("bundle").get<std::string>();
  auto sub = zstab::io::parse_submanifold(prob.ring, gj.at("submanifold"));
  std::string ambient = gj.value("ambient", "cy_surface");
  Json j;
  bool ok = true;
  if (ambient == "cy_surface" || ambient == "cy_threefold_curve") {
    auto kind = ambient == "cy_surface" ? zstab::CyAmbient::Surface
                                        : zstab::CyAmbient::ThreefoldCurve;
    auto rep = cy_anomaly_check(*prob.charge, prob.bundle(name), sub, kind);
    j["lhs"] = zstab::io::charge_to_json(rep.lhs);
    j["rhs"] = zstab::io::charge_to_json(rep.rhs);
    j["equal"] = rep.equal;
    ok = rep.equal;
  } else if (ambient == "cy_threefold_divisor") {
    auto rep = cy_divisor_discrepancy(*prob.charge, prob.bundle(name), sub, at_k);
    j["universal_coefficient"] = zstab::io::rat_str(rep.universal_coefficient);
    j["discrepancy"] = zstab::io::rat_str(rep.discrepancy);
    j["mismatch_at_k"] = zstab::io::gaussian_str(rep.mismatch_at_k);
  } else {
    throw zstab::Error("unknown ambient kind '" + ambient + "'");
  }
  emit(j, json_out);
  return ok ? kExitOk : kExitUnstable;
}

int cmd_sl2(const std::string& expr, const std::string& json_out) {
  // Grammar: rep literal | tensor(a,b) | sym2(a) | wedge2(a) | gl(m) | sl(m).
  std::string t;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  zstab::Sl2Rep result;
  auto paren = t.find('(');
  if (paren == std::string::npos) {
    result = zstab::parse_rep(t);
  } else {
    std::string fn = t.substr(0, paren);
    if (t.back() != ')') throw zstab::Error("unbalanced parentheses");
    std::string args = t.substr(paren + 1, t.size() - paren - 2);
    if (fn == "tensor") {
      auto comma = args.find(',');
      if (comma == std::string::npos) throw zstab::Error("tensor needs two arguments");
      result = tensor(zstab::parse_rep(args.substr(0, comma)),
                      zstab::parse_rep(args.substr(comma + 1)));
    } else if (fn == "sym2") {
      result = sym2(zstab::parse_rep(args));
    } else if (fn == "wedge2") {
      result = wedge2(zstab::parse_rep(args));
    } else if (fn == "gl") {
      result = zstab::gl_of(static_cast<unsigned>(std::stoul(args)));
    } else if (fn == "sl") {
      result = zstab::sl_of(static_cast<unsigned>(std::stoul(args)));
    } else {
      throw zstab::Error("unknown sl2 operation '" + fn + "'");
    }
  }
  Json j{{"expression", expr},
         {"decomposition", result.str()},
         {"dimension", result.dimension()}};
  emit(j, json_out);
  std::cout << result.str() << "\n";
  return kExitOk;
}

int cmd_pluecker_verify(unsigned samples, std::uint64_t seed,
                        const std::string& json_out) {
  zstab::PlueckerModel model = zstab::build_model();
  Json j;
  j["basis_rank"] = model.basis.joint_rank;
  unsigned printed_in = 0;
  for (bool b : model.printed_generator_in_span)
    if (b) ++printed_in;
  j["printed_ideal_match"] =
      Json{{"generators_in_regenerated_span", printed_in},
           {"generators_total", model.printed_ideal.size()},
           {"spans_equal", model.printed_ideal_spans_equal}};
  Json constraints = Json::array();
  for (const auto& cc : model.constraints) {
    constraints.push_back(Json{
        {"printed_in_regenerated_span", cc.printed_in_regenerated_span}});
  }
  j["constraints"] = constraints;
  j["embedding_mismatches"] = model.embedding_mismatches;
  Json fps = Json::array();
  for (const auto& fp : fixed_point_weights(model)) {
    fps.push_back(Json{{"name", fp.name},
                       {"weight", fp.cstar_weight},
                       {"jacobian_rank", fp.jacobian_rank}});
  }
  j["fixed_points"] = fps;
  auto sample = generic_rank(model, samples, seed);
  j["generic_rank"] = sample.max_rank;
  j["samples"] = sample.valid_samples;
  j["seed"] = sample.seed;
  emit(j, json_out);
  return kExitOk;
}

int cmd_fibration_check(unsigned rE, unsigned rF, const std::string& json_out) {
  auto r = zstab::a_identity_check({1, rE, rF});
  Json j;
  j["rE"] = rE;
  j["rF"] = rF;
  j["A"] = r.calculus.str();
  j["closed_form"] = r.closed_form.str();
  j["B"] = zstab::io::rat_str(r.b);
  j["match"] = r.match;
  if (r.proportional) j["ratio"] = zstab::io::rat_str(r.ratio);
  j["vanishes_on_equal_slopes"] = r.vanishes_on_equal_slopes;
  emit(j, json_out);
  return r.match || r.proportional ? kExitOk : kExitUnstable;
}

int cmd_fibration_sweep(unsigned max_rE, const std::string& json_out) {
  Json rows = Json::array();
  bool all_documented = true;
  for (unsigned re = 2; re <= max_rE; ++re) {
    for (unsigned rf = 1; rf < re; ++rf) {
      auto r = zstab::a_identity_check({1, re, rf});
      Json row{{"rE", re},
               {"rF", rf},
               {"A", r.calculus.str()},
               {"closed_form", r.closed_form.str()},
               {"B", zstab::io::rat_str(r.b)},
               {"match", r.match}};
      if (r.proportional) row["ratio"] = zstab::io::rat_str(r.ratio);
      all_documented = all_documented && (r.match || r.proportional);
      rows.push_back(row);
    }
  }
  emit(Json{{"table", rows}}, json_out);
  return all_documented ? kExitOk : kExitUnstable;
}

int cmd_selftest(const std::string& data_dir, const std::string& json_out) {
  auto results = zstab::run_selftest(data_dir);
  Json rows = Json::array();
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
              << r.description << " (" << r.elapsed_ms << " ms)\n";
    rows.push_back(Json{{"id", r.id},
                        {"description", r.description},
                        {"pass", r.pass},
                        {"detail", r.detail}});
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << Json{{"criteria", rows}}.dump(2) << "\n";
  }
  return zstab::all_pass(results) ? kExitOk : kExitUnstable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for polynomial central charges, asymptotic "
               "Z-stability, wall-crossing, and related invariants"};
  app.require_subcommand(1);

  std::string input, json_out, at_k_str = "1";
  bool weak_rho = false;
  unsigned samples = 50;
  std::uint64_t seed = 0x5eed;

  app.add_option("--json-out", json_out, "Write the JSON report to a file");
  app.add_option("--at-k", at_k_str, "Evaluation scale k (rational, default 1)");
  app.add_flag("--weak-rho", weak_rho,
               "Accept stability vectors that only satisfy the weak check");
  app.add_option("--seed", seed, "Seed for randomized sampling");
  app.add_option("--samples", samples, "Sample count for randomized sampling");

  auto* charge = app.add_subcommand("charge", "Central charge polynomial");
  charge->add_option("input", input)->required();
  auto* stability = app.add_subcommand("stability", "Asymptotic Z-stability verdicts");
  stability->add_option("input", input)->required();
  auto* walls = app.add_subcommand("walls", "Wall-crossing scan");
  walls->add_option("input", input)->required();
  auto* surface = app.add_subcommand("surface", "Surface reduction and volume hypothesis");
  surface->add_option("input", input)->required();
  auto* grr = app.add_subcommand("grr", "Riemann-Roch pushforward identities");
  grr->add_option("input", input)->required();
  std::string sl2_expr;
  auto* sl2 = app.add_subcommand("sl2", "SL(2,C) representation calculus");
  sl2->add_option("expr", sl2_expr)->required();
  auto* pluecker = app.add_subcommand("pluecker", "Singular V14 threefold model");
  std::string pl_action;
  pluecker->add_option("action", pl_action)->required();
  auto* fibration = app.add_subcommand("fibration", "Fibration stability identities");
  std::string fib_action;
  unsigned rE = 2, rF = 1, max_rE = 8;
  fibration->add_option("action", fib_action)->required();
  fibration->add_option("--rE", rE);
  fibration->add_option("--rF", rF);
  fibration->add_option("--max-rE", max_rE);
  std::string data_dir = "inputs";
  auto* selftest = app.add_subcommand("selftest", "Run the golden-value suite");
  selftest->add_option("--data", data_dir, "Directory with the shipped example files");

  CLI11_PARSE(app, argc, argv);

  try {
    zstab::Rat at_k = zstab::parse_rat(at_k_str);
    if (charge->parsed()) return cmd_charge(input, at_k, weak_rho, json_out);
    if (stability->parsed()) return cmd_stability(input, weak_rho, json_out);
    if (walls->parsed()) return cmd_walls(input, weak_rho, json_out);
    if (surface->parsed()) return cmd_surface(input, at_k, weak_rho, json_out);
    if (grr->parsed()) return cmd_grr(input, at_k, weak_rho, json_out);
    if (sl2->parsed()) return cmd_sl2(sl2_expr, json_out);
    if (pluecker->parsed()) {
      if (pl_action != "verify")
        throw zstab::Error("unknown pluecker action '" + pl_action + "'");
      return cmd_pluecker_verify(samples, seed, json_out);
    }
    if (fibration->parsed()) {
      if (fib_action == "check") return cmd_fibration_check(rE, rF, json_out);
      if (fib_action == "sweep") return cmd_fibration_sweep(max_rE, json_out);
      throw zstab::Error("unknown fibration action '" + fib_action + "'");
    }
    if (selftest->parsed()) return cmd_selftest(data_dir, json_out);
  } catch (const zstab::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
