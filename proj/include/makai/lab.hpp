#pragma once

#include <limits>
#include <string>
#include <vector>

#include "makai/families.hpp"
#include "makai/fem.hpp"
#include "makai/geometry.hpp"

namespace makai::lab {

struct SolverConfig {
  double mesh_h = 0.0;    // 0 = auto: diam/40 in 2-D, diam/8 in 3-D
  int refinements = -1;   // -1 = auto: 2 in 2-D, 1 in 3-D
  double cg_tol = 1e-10;
  int node_cap = 0;       // 0 = environment override or default
  double d2_h = 0.0;      // 0 = auto: diam/24 in 2-D, diam/12 in 3-D
  int d2_depth = 4;
  bool strict = true;     // throw InconsistentBounds if a certified-side
                          // check fails (always a build bug)
};

struct BoundCheck {
  std::string name;
  double lhs = 0.0, rhs = 0.0;  // checked as lhs <= rhs
  double margin = 0.0;          // rhs - lhs
  bool pass = false;
};

struct InequalityReport {
  std::string body_id;
  int n = 0;
  bool analytic = false;  // thin-model closed-form path (no FEM, no d2)

  double volume = 0.0, perimeter = 0.0, inradius = 0.0, diameter = 0.0;
  double minwidth = std::numeric_limits<double>::quiet_NaN();
  double minwidth_error = 0.0;

  // torsion: certified lower bound, Richardson extrapolation and its bar
  double T_lower = 0.0, T_extrap = 0.0, T_err = 0.0;
  double d2_value = 0.0, d2_error = 0.0;

  double F_lower = 0.0, F_extrap = 0.0, F_err = 0.0;
  double F_d2 = 0.0, F_d2_err = 0.0;
  double makai_const = 0.0;
  double polya_const = 1.0 / 3.0;
  double deficit_lower = 0.0;  // makai_const - F_lower
  double deficit_d2 = 0.0;     // makai_const - F_d2

  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = 0.0, gamma = 0.0;

  std::vector<BoundCheck> checks;
  bool all_pass = false;
};

InequalityReport evaluate(const geo::ConvexBody& body,
                          const SolverConfig& config = {},
                          const std::string& body_id = "body");

// closed-form path for thin families (cone / cylinder), any dimension;
// T comes from the thin-limit model with an explicit model-error allowance
InequalityReport evaluate_analytic(const families::FamilySpec& spec);

struct SweepRow {
  double param = 0.0;
  InequalityReport report;
};

struct SweepReport {
  families::Family family;
  int dim = 0;
  std::vector<SweepRow> rows;
  // log-log fits against the sweep parameter
  double deficit_slope = std::numeric_limits<double>::quiet_NaN();
  double alpha_slope = std::numeric_limits<double>::quiet_NaN();
  bool deficit_decreasing = false;  // |makai_const - F| strictly down
  bool alpha_decreasing = false;
  bool f_increasing = false;  // cone signature
  bool f_decreasing = false;  // cylinder signature
  bool gamma_increasing = false;
};

// param is k for cones, ell for cylinders; strictly increasing list
SweepReport sweep(const families::FamilySpec& base,
                  const std::vector<double>& params);

// the reproducible acceptance corpus: `count` random hulls followed by
// `count` tangential-random bodies, seeds 1..count
std::vector<families::FamilySpec> corpus_specs(int dim, int count = 100);

double gamma_deficit_constant(int n);        // (n^2+3n-4)/(n(n+1)(n+2)(n-1)^n)
double gamma_deficit_upper_constant(int n);  // 6n/((n+1)(n+2))
double flatness_beta_constant(int n);        // (n^2+n+1)/3
double polya_beta_upper_constant(int n);     // (n+1)/3
double polya_beta_lower_constant(int n);     // 1/(648 n^3)

}  // namespace makai::lab
