#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatquot/group_action.hpp"
#include "quatquot/joyce.hpp"
#include "quatquot/json_io.hpp"
#include "quatquot/moment.hpp"
#include "quatquot/quotient.hpp"
#include "quatquot/sampling.hpp"
#include "quatquot/toric.hpp"
#include "quatquot/twistor.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qq;

enum class Format { text, json, csv };

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

ordered_json issue_list(const std::vector<CheckIssue>& a, const std::vector<CheckIssue>& b) {
  ordered_json out = ordered_json::array();
  for (const auto* list : {&a, &b}) {
    for (const CheckIssue& c : *list) {
      ordered_json e;
      e["check"] = c.check;
      if (c.index >= 0) {
        e["index"] = c.index;
      }
      e["message"] = c.message;
      out.push_back(std::move(e));
    }
  }
  return out;
}

// Walks the report into "a.b: value" lines for terminal reading.
void text_lines(const ordered_json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      text_lines(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), out);
    }
    return;
  }
  out += prefix + ": " + j.dump() + "\n";
}

void emit(const ordered_json& report, Format fmt) {
  if (fmt == Format::json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::string out;
  text_lines(report, "", out);
  std::cout << out;
}

ordered_json report_validate(const InputData& in) {
  const SValidation sv = validate_s(in.s);
  const RValidation rv = validate_r(in.r);
  ordered_json rep;
  rep["k"] = in.s.k();
  rep["checks"]["sector_normalized"] = sv.sector_normalized;
  rep["checks"]["consecutive_independent"] = sv.consecutive_independent;
  rep["checks"]["generates_lattice"] = sv.generates_lattice;
  rep["checks"]["angles_ok"] = rv.ok;
  rep["sublattice_index"] = sv.sublattice_index;
  rep["quotient_is_F"] = quotient_is_f(in.s);
  rep["convex"] = is_convex(in.s);
  rep["issues"] = issue_list(sv.issues, rv.issues);
  rep["verdict"] = verdict(sv.ok() && rv.ok);
  return rep;
}

ordered_json report_derive(const InputData& in, int bound) {
  const DerivedData t = derive(in.s);
  const IMat kernel = kernel_basis(build_omega(t));
  const LocallyFreeReport lf = locally_free_screen(t, bound);
  const bool qf = quotient_is_f(in.s);
  ordered_json rep;
  rep["difference_data"] = json_rows(t.v);
  rep["kernel_basis"] = json_rows(kernel);
  rep["quotient_is_F"] = qf;
  rep["locally_free"] = verdict(lf.locally_free);
  ordered_json wits = ordered_json::array();
  for (const PatternWitness& w : lf.witnesses) {
    ordered_json e;
    e["m"] = w.m;
    e["d"] = w.d;
    wits.push_back(std::move(e));
  }
  rep["witnesses"] = std::move(wits);
  rep["dependent_positions"] = lf.dependent_positions;
  rep["verdict"] = verdict(qf && lf.locally_free);
  return rep;
}

ordered_json report_scan(const InputData& in, int grid, double tol, ScanResult* grid_out) {
  ScanResult res = scan_transversality(in.s, in.r, grid);
  ordered_json rep;
  rep["samples"] = res.samples;
  rep["sign_changes"] = res.sign_changes;
  rep["min_abs_det"] = res.min_abs_det;
  rep["verdict"] = verdict(res.sign_changes == 0 && res.min_abs_det > tol);
  if (grid_out != nullptr) {
    *grid_out = std::move(res);
  }
  return rep;
}

ordered_json report_joyce(const InputData& in, int grid, double tol,
                          const std::vector<double>& eps, JoyceScan* grid_out) {
  const DerivedData t = derive(in.s);
  JoyceScan scan = nondegeneracy_scan(t, in.r, grid, eps);
  const CorrespondenceResult corr = correspondence_check(in.s, in.r, grid, tol);
  ordered_json rep;
  rep["scan"]["samples"] = scan.samples;
  rep["scan"]["sign_changes"] = scan.sign_changes;
  rep["scan"]["min_abs_det"] = scan.min_abs_det;
  rep["scan"]["trivial"] = scan.trivial;
  rep["scan"]["boundary_eps"] = eps;
  rep["correspondence"]["samples"] = corr.samples;
  rep["correspondence"]["accepted"] = corr.accepted;
  rep["correspondence"]["coherent"] = corr.coherent;
  rep["correspondence"]["sign_constant"] = corr.sign_constant;
  rep["correspondence"]["min_joyce"] = corr.min_joyce;
  rep["correspondence"]["min_cleared"] = corr.min_cleared;
  rep["verdict"] = verdict(scan.sign_changes == 0 && corr.sign_constant);
  if (grid_out != nullptr) {
    *grid_out = std::move(scan);
  }
  return rep;
}

ordered_json report_descend(const InputData& in, int samples, unsigned long long seed,
                            double tol) {
  const MomentSetup spec = build_setup(in.s, in.r);
  std::mt19937_64 rng(seed);
  std::vector<double> residuals;
  int skipped = 0;
  for (int i = 0; i < samples; ++i) {
    const UPoint p = random_zero_level_point(in.r, rng);
    try {
      residuals.push_back(descend_structures(p, spec).relation_residual);
    } catch (const std::domain_error&) {
      ++skipped;
    }
  }
  double max_residual = 0.0;
  for (double r : residuals) {
    max_residual = std::max(max_residual, r);
  }
  ordered_json rep;
  rep["samples"] = samples;
  rep["accepted"] = static_cast<int>(residuals.size());
  rep["skipped"] = skipped;
  rep["max_residual"] = max_residual;
  rep["residuals"] = residuals;
  rep["verdict"] = verdict(!residuals.empty() && max_residual <= tol);
  return rep;
}

ordered_json report_classify(const InputData& in) {
  const ClassificationReport rep = classification_report(in.s, in.r);
  ordered_json out;
  out["difference_data"] = json_rows(rep.v);
  out["z"] = json_complex_list(rep.z);
  out["zeta"] = json_complex_list(rep.zeta);
  out["convex"] = rep.convex;
  out["ordering_ok"] = rep.ordering_ok;
  out["round_trip_ok"] = rep.round_trip_ok;
  out["real_structure"] = rep.real_structure;
  out["max_involution_residual"] = rep.max_involution_residual;
  out["max_pushforward_residual"] = rep.max_pushforward_residual;
  out["warning"] = rep.warning;
  const bool pass = rep.ordering_ok && rep.round_trip_ok && rep.real_structure != "neither" &&
                    rep.max_involution_residual <= 1e-9 && rep.max_pushforward_residual <= 1e-12;
  out["verdict"] = verdict(pass);
  return out;
}

ordered_json report_deform(const InputData& in) {
  const DeformabilityReport rep = deformability(derive(in.s));
  ordered_json out;
  out["tk_invariant_dim"] = rep.tk_invariant_dim;
  out["extra_weights"] = rep.extra_weights;
  out["extra_dim"] = rep.extra_dim;
  out["verdict"] = "PASS";
  return out;
}

struct PipelineOpts {
  int grid = 50;
  int samples = 200;
  unsigned long long seed = 1;
  double tol = 1e-9;
  double descent_tol = 1e-6;
  std::vector<double> eps{1e-5, 1e-3};
  int bound = 8;
};

ordered_json report_pipeline(const InputData& in, const PipelineOpts& opt) {
  ordered_json rep;
  bool all_pass = true;
  const auto stage = [&](const char* name, const std::function<ordered_json()>& fn) {
    ordered_json r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r["error"] = e.what();
      r["verdict"] = "FAIL";
    }
    all_pass = all_pass && r["verdict"] == "PASS";
    rep[name] = std::move(r);
  };
  stage("validation", [&] { return report_validate(in); });
  stage("derivation", [&] { return report_derive(in, opt.bound); });
  stage("transversality", [&] { return report_scan(in, opt.grid, opt.tol, nullptr); });
  stage("joyce", [&] { return report_joyce(in, opt.grid, opt.tol, opt.eps, nullptr); });
  stage("descent", [&] { return report_descend(in, opt.samples, opt.seed, opt.descent_tol); });
  stage("classification", [&] { return report_classify(in); });
  stage("deformability", [&] { return report_deform(in); });
  rep["verdict"] = verdict(all_pass);
  return rep;
}

int exit_from(const ordered_json& rep) { return rep["verdict"] == "PASS" ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic torus quotient toolkit"};
  app.require_subcommand(1);

  std::string input;
  bool want_json = false, want_text = false, want_csv = false;
  PipelineOpts opt;

  const auto add_common = [&](CLI::App* sub, bool with_csv) {
    sub->add_option("input", input, "input JSON file")->required();
    CLI::Option* oj = sub->add_flag("--json", want_json, "machine readable report");
    CLI::Option* ot = sub->add_flag("--text", want_text, "line oriented report (default)");
    oj->excludes(ot);
    if (with_csv) {
      CLI::Option* oc = sub->add_flag("--csv", want_csv, "grid triples x,y,det");
      oc->excludes(oj);
      oc->excludes(ot);
    }
    return sub;
  };

  CLI::App* c_validate = add_common(app.add_subcommand("validate", "check the input data"), false);
  CLI::App* c_derive =
      add_common(app.add_subcommand("derive", "difference data, kernel, freeness"), false);
  c_derive->add_option("--bound", opt.bound, "search bound for the stabilizer patterns");
  CLI::App* c_scan = add_common(
      app.add_subcommand("scan-transversality", "cleared determinant over the orbit grid"), true);
  c_scan->add_option("--grid", opt.grid, "grid resolution per axis");
  c_scan->add_option("--tol", opt.tol, "acceptance threshold on the normalized determinant");
  CLI::App* c_joyce = add_common(
      app.add_subcommand("joyce-check", "matrix nondegeneracy and determinant sign match"), true);
  c_joyce->add_option("--grid", opt.grid, "grid resolution per axis");
  c_joyce->add_option("--tol", opt.tol, "acceptance threshold on normalized determinants");
  c_joyce->add_option("--eps", opt.eps, "boundary strip heights")->expected(-1);
  CLI::App* c_descend =
      add_common(app.add_subcommand("descend", "sampled descent of the three structures"), false);
  c_descend->add_option("--samples", opt.samples, "zero level sample count");
  c_descend->add_option("--seed", opt.seed, "sampling seed");
  double descend_tol = 1e-6;
  c_descend->add_option("--tol", descend_tol, "bound on the relation residuals");
  CLI::App* c_classify =
      add_common(app.add_subcommand("classify", "meromorphic classification data"), false);
  CLI::App* c_deform =
      add_common(app.add_subcommand("deform", "invariant quadratic monomial count"), false);
  CLI::App* c_pipeline = add_common(app.add_subcommand("pipeline", "all stages in order"), false);
  c_pipeline->add_option("--grid", opt.grid, "grid resolution per axis");
  c_pipeline->add_option("--samples", opt.samples, "zero level sample count");
  c_pipeline->add_option("--seed", opt.seed, "sampling seed");
  c_pipeline->add_option("--tol", opt.tol, "determinant threshold");
  c_pipeline->add_option("--eps", opt.eps, "boundary strip heights")->expected(-1);
  c_pipeline->add_option("--bound", opt.bound, "stabilizer pattern bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = want_csv ? Format::csv : (want_json ? Format::json : Format::text);

  try {
    const InputData in = load_input(input);
    if (app.got_subcommand(c_validate)) {
      const ordered_json rep = report_validate(in);
      emit(rep, fmt);
      return exit_from(rep);
    }
    if (app.got_subcommand(c_derive)) {
      const ordered_json rep = report_derive(in, opt.bound);
      emit(rep, fmt);
      return exit_from(rep);
    }
    if (app.got_subcommand(c_scan)) {
      ScanResult grid_data;
      const ordered_json rep = report_scan(in, opt.grid, opt.tol, &grid_data);
      if (fmt == Format::csv) {
        std::cout << csv_grid(grid_data.xt, grid_data.yt, grid_data.det);
      } else {
        emit(rep, fmt);
      }
      return exit_from(rep);
    }
    if (app.got_subcommand(c_joyce)) {
      JoyceScan grid_data;
      const ordered_json rep = report_joyce(in, opt.grid, opt.tol, opt.eps, &grid_data);
      if (fmt == Format::csv) {
        std::cout << csv_grid(grid_data.xt, grid_data.yt, grid_data.det);
      } else {
        emit(rep, fmt);
      }
      return exit_from(rep);
    }
    if (app.got_subcommand(c_descend)) {
      const ordered_json rep = report_descend(in, opt.samples, opt.seed, descend_tol);
      emit(rep, fmt);
      return exit_from(rep);
    }
    if (app.got_subcommand(c_classify)) {
      const ordered_json rep = report_classify(in);
      emit(rep, fmt);
      return exit_from(rep);
    }
    if (app.got_subcommand(c_deform)) {
      const ordered_json rep = report_deform(in);
      emit(rep, fmt);
      return exit_from(rep);
    }
    if (app.got_subcommand(c_pipeline)) {
      const ordered_json rep = report_pipeline(in, opt);
      emit(rep, fmt);
      return exit_from(rep);
    }
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "degenerate configuration: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
