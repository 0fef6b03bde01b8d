// command-line front end: load or generate bodies, evaluate the inequality
// chain, emit profile tables, certificates, and family sweeps.
//
// exit codes: 0 all checks pass, 1 a check failed or a solver gave up,
// 2 bad input.  errors go to stderr as one-line JSON.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "makai/errors.hpp"
#include "makai/families.hpp"
#include "makai/fem.hpp"
#include "makai/geometry.hpp"
#include "makai/io.hpp"
#include "makai/lab.hpp"
#include "makai/profile.hpp"
#include "makai/version.hpp"

namespace {

using namespace makai;
using ojson = nlohmann::ordered_json;

struct Options {
  std::string family, input, out, format = "json";
  std::string mesh_h = "auto", k, ell, n_range;
  int dim = 2;
  int refine = -1;
  int grid_m = 0;
  double cg_tol = 1e-10;
  std::uint64_t seed = 1;
};

double parse_number(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + ": '" + text + "'");
  }
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const size_t end = (comma == std::string::npos) ? text.size() : comma;
    out.push_back(parse_number(text.substr(start, end - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InputError(what + " list is empty");
  return out;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const size_t dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = static_cast<int>(parse_number(text, "--n-range"));
  } else {
    lo = static_cast<int>(parse_number(text.substr(0, dots), "--n-range"));
    hi = static_cast<int>(parse_number(text.substr(dots + 2), "--n-range"));
  }
  if (lo < 2 || hi < lo || hi > 64)
    throw InputError("--n-range must satisfy 2 <= lo <= hi <= 64");
  return {lo, hi};
}

lab::SolverConfig solver_config(const Options& opt) {
  lab::SolverConfig cfg;
  if (opt.mesh_h != "auto") {
    cfg.mesh_h = parse_number(opt.mesh_h, "--mesh-h");
    if (cfg.mesh_h <= 0) throw InputError("--mesh-h must be positive");
  }
  cfg.refinements = opt.refine;
  cfg.cg_tol = opt.cg_tol;
  return cfg;
}

families::FamilySpec spec_from_flags(const Options& opt) {
  if (opt.family.empty()) throw InputError("need --input or --family");
  families::FamilySpec s;
  s.family = families::family_from_name(opt.family);
  s.dim = opt.dim;
  s.seed = opt.seed;
  if (!opt.k.empty()) {
    const auto ks = parse_number_list(opt.k, "--k");
    if (ks.size() != 1) throw InputError("this command takes a single --k");
    s.k = ks[0];
  }
  if (!opt.ell.empty()) {
    const auto ls = parse_number_list(opt.ell, "--ell");
    if (ls.size() != 1) throw InputError("this command takes a single --ell");
    s.ell = ls[0];
  }
  return s;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    io::write_file(out, text);
}

int run_verify(const Options& opt) {
  const lab::SolverConfig cfg = solver_config(opt);
  lab::InequalityReport rep;
  if (!opt.input.empty()) {
    rep = lab::evaluate(io::load_body(opt.input), cfg, opt.input);
  } else {
    const families::FamilySpec spec = spec_from_flags(opt);
    if (spec.dim <= 3)
      rep = lab::evaluate(families::make_body(spec), cfg, spec.id());
    else
      rep = lab::evaluate_analytic(spec);  // closed-form path for high dim
  }
  emit(opt.format == "csv" ? io::checks_to_csv(rep)
                           : io::report_to_json(rep, cfg),
       opt.out);
  return rep.all_pass ? 0 : 1;
}

int run_profile(const Options& opt) {
  geo::ConvexBody body = opt.input.empty()
                             ? families::make_body(spec_from_flags(opt))
                             : io::load_body(opt.input);
  const std::string id =
      opt.input.empty() ? spec_from_flags(opt).id() : opt.input;
  const int grid = opt.grid_m > 0 ? opt.grid_m : 256;
  const auto table = profile::profile_table(body, grid);
  const auto chain = profile::verify_profile_chain(table);
  emit(opt.format == "csv" ? io::profile_to_csv(table)
                           : io::chain_to_json(table, chain, id),
       opt.out);
  return chain.all_pass ? 0 : 1;
}

int run_certify(const Options& opt) {
  const auto [lo, hi] = parse_n_range(opt.n_range.empty() ? "2..10"
                                                          : opt.n_range);
  const long grid = opt.grid_m > 0 ? opt.grid_m : 10000;
  bool all = true;
  std::string csv = "n,grid,pass,min_contact_slack,min_monotone_slack,ztilde\n";
  ojson reports = ojson::array();
  for (int n = lo; n <= hi; ++n) {
    const auto rep = cert::certify_control_polynomial(n, grid);
    all = all && rep.pass;
    reports.push_back(ojson::parse(io::certificate_to_json(rep)));
    char row[160];
    std::snprintf(row, sizeof row, "%d,%ld,%d,%.17g,%.17g,%.17g\n", rep.n,
                  rep.grid, rep.pass ? 1 : 0, rep.min_contact_slack,
                  rep.min_monotone_slack, rep.ztilde);
    csv += row;
  }
  if (opt.format == "csv") {
    emit(csv, opt.out);
  } else {
    const ojson j = {{"n_lo", lo},       {"n_hi", hi},
                     {"grid", grid},     {"reports", reports},
                     {"all_pass", all},  {"version", std::string(kVersion)}};
    emit(j.dump(2) + "\n", opt.out);
  }
  return all ? 0 : 1;
}

int run_sweep(const Options& opt) {
  families::FamilySpec base;
  if (opt.family.empty()) throw InputError("sweep needs --family");
  base.family = families::family_from_name(opt.family);
  base.dim = opt.dim;
  base.seed = opt.seed;

  std::vector<double> params;
  if (base.family == families::Family::cone)
    params = opt.k.empty() ? std::vector<double>{10, 100, 1000}
                           : parse_number_list(opt.k, "--k");
  else if (base.family == families::Family::cylinder)
    params = opt.ell.empty() ? std::vector<double>{10, 100}
                             : parse_number_list(opt.ell, "--ell");
  else
    throw InputError("sweep supports cone and cylinder families");

  const auto rep = lab::sweep(base, params);
  emit(opt.format == "csv" ? io::sweep_to_csv(rep) : io::sweep_to_json(rep),
       opt.out);
  bool rows_ok = true;
  for (const auto& row : rep.rows) rows_ok = rows_ok && row.report.all_pass;
  return rows_ok ? 0 : 1;
}

// quick self-check against closed forms: FEM vs the disk and square series
// oracles, a tangential body's exactly-linear profile, and the integer
// certificates.  A few seconds end to end.
int run_validate() {
  struct Item {
    std::string name;
    bool ok;
  };
  std::vector<Item> items;

  {
    families::FamilySpec disk;
    disk.family = families::Family::regular_polygon;
    disk.dim = 2;
    disk.count = 128;
    const auto rep = lab::evaluate(families::make_body(disk), {}, disk.id());
    const double exact = fem::analytic_torsion_ball(2, 1.0);
    // the polygon sits inside the disk, so even extrapolated T stays below
    const bool ok = rep.all_pass && rep.T_lower < exact &&
                    exact - rep.T_extrap < 0.01 * exact &&
                    std::abs(rep.F_extrap - 0.5) < 0.01;
    items.push_back({"disk torsion oracle", ok});
  }
  {
    const auto body = geo::build_body(
        std::vector<Vec>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, 2);
    const auto rep = lab::evaluate(body, {}, "unit_square");
    const double exact = fem::analytic_torsion_rectangle(1.0, 1.0);
    const bool ok = rep.all_pass && rep.T_lower < exact &&
                    std::abs(rep.T_extrap - exact) < 0.01 * exact;
    items.push_back({"square torsion oracle", ok});
  }
  {
    families::FamilySpec tang;
    tang.family = families::Family::tangential_random;
    tang.dim = 2;
    tang.seed = 1;
    auto table = profile::profile_table(families::make_body(tang), 128);
    const auto chain = profile::verify_profile_chain(table);
    const bool ok = chain.all_pass && chain.equality_profile &&
                    std::abs(table.z) <= 1e-10 &&
                    table.gamma_tilde <= 1e-10;
    items.push_back({"tangential body: linear profile, z = 0", ok});
  }
  {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
      ok = ok && cert::certify_control_polynomial(n, 4000).pass;
    items.push_back({"polynomial certificates n = 2..6", ok});
  }

  bool all = true;
  for (const auto& it : items) {
    std::printf("%s - %s\n", it.ok ? "ok" : "FAIL", it.name.c_str());
    all = all && it.ok;
  }
  std::printf("%s\n", all ? "all validations passed" : "validation FAILED");
  return all ? 0 : 1;
}

bool input_class_error(std::string_view code) {
  return code == "InputError" || code == "DegenerateBody" ||
         code == "Unbounded" || code == "DimensionUnsupported" ||
         code == "NoClosedForm";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsional rigidity / perimeter / volume inequality toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_body_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--family", opt.family,
                    "cone|cylinder|box|simplex|regular_polygon|"
                    "tangential_random|random_hull");
    cmd->add_option("--input", opt.input, "polytope JSON file");
    cmd->add_option("--dim", opt.dim, "ambient dimension");
    cmd->add_option("--k", opt.k, "cone parameter (height 1/k)");
    cmd->add_option("--ell", opt.ell, "cylinder parameter (height 1/ell)");
    cmd->add_option("--seed", opt.seed, "random family seed");
  };
  auto add_out_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    cmd->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  app.add_subcommand("validate", "run the closed-form self-check suite");

  auto* vcmd = app.add_subcommand("verify", "evaluate one body");
  add_body_flags(vcmd);
  vcmd->add_option("--mesh-h", opt.mesh_h, "target mesh size or 'auto'");
  vcmd->add_option("--refine", opt.refine, "refinement levels (-1 = auto)");
  vcmd->add_option("--cg-tol", opt.cg_tol, "CG relative tolerance");
  add_out_flags(vcmd);

  auto* pcmd = app.add_subcommand("profile",
                                  "inner-parallel profile table + chain");
  add_body_flags(pcmd);
  pcmd->add_option("--grid-m", opt.grid_m, "profile grid size (default 256)");
  add_out_flags(pcmd);

  auto* ccmd = app.add_subcommand("certify", "integer polynomial certificates");
  ccmd->add_option("--n-range", opt.n_range, "dimensions, e.g. 2..10");
  ccmd->add_option("--grid-m", opt.grid_m, "rational grid size (default 10^4)");
  add_out_flags(ccmd);

  auto* scmd = app.add_subcommand("sweep", "family sweep toward the constants");
  scmd->add_option("--family", opt.family, "cone|cylinder");
  scmd->add_option("--dim", opt.dim, "ambient dimension");
  scmd->add_option("--k", opt.k, "comma-separated cone parameters");
  scmd->add_option("--ell", opt.ell, "comma-separated cylinder parameters");
  scmd->add_option("--seed", opt.seed, "unused for deterministic families");
  add_out_flags(scmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::fputs(io::error_json("InputError", e.what()).c_str(), stderr);
    return 2;
  }

  try {
    if (app.got_subcommand("validate")) return run_validate();
    if (app.got_subcommand("verify")) return run_verify(opt);
    if (app.got_subcommand("profile")) return run_profile(opt);
    if (app.got_subcommand("certify")) return run_certify(opt);
    return run_sweep(opt);
  } catch (const Error& e) {
    std::fputs(io::error_json(std::string(e.code()), e.what()).c_str(),
               stderr);
    return input_class_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::fputs(io::error_json("Internal", e.what()).c_str(), stderr);
    return 1;
  }
}
