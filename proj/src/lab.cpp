#include "makai/lab.hpp"

#include <algorithm>
#include <cmath>

#include "makai/errors.hpp"

namespace makai::lab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// gamma^n without underflow surprises at large n
double pow_clamped(double g, int n) {
  if (g <= 0.0) return 0.0;
  return std::exp(n * std::log(g));
}

struct Fitted {
  double slope = std::numeric_limits<double>::quiet_NaN();
};

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return std::numeric_limits<double>::quiet_NaN();
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

double gamma_deficit_constant(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  return (double(n) * n + 3.0 * n - 4.0) /
         (double(n) * (n + 1.0) * (n + 2.0) * std::pow(n - 1.0, n));
}

double gamma_deficit_upper_constant(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  return 6.0 * n / ((n + 1.0) * (n + 2.0));
}

double flatness_beta_constant(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  return (double(n) * n + n + 1.0) / 3.0;
}

double polya_beta_upper_constant(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  return (n + 1.0) / 3.0;
}

double polya_beta_lower_constant(int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  return 1.0 / (648.0 * n * n * n);
}

InequalityReport evaluate(const geo::ConvexBody& body,
                          const SolverConfig& config,
                          const std::string& body_id) {
  const int n = body.dim;
  InequalityReport rep;
  rep.body_id = body_id;
  rep.n = n;

  const geo::GeometrySummary s = geo::summarize(body);
  rep.volume = s.volume;
  rep.perimeter = s.perimeter;
  rep.inradius = s.inradius;
  rep.diameter = s.diameter;
  rep.minwidth = s.minwidth;
  rep.minwidth_error = s.minwidth_error;
  rep.alpha = s.minwidth / s.diameter;
  rep.beta = std::max(0.0, s.perimeter * s.inradius / s.volume - 1.0);
  rep.gamma = std::max(0.0, n - s.perimeter * s.inradius / s.volume);
  rep.makai_const = families::makai_constant(n);

  const double scale = s.perimeter * s.perimeter /
                       (s.volume * s.volume * s.volume);

  // torsion: solve on a nested hierarchy, keep the last two levels
  const double h0 =
      config.mesh_h > 0.0 ? config.mesh_h : s.diameter / (n == 2 ? 40.0 : 8.0);
  const int refs = config.refinements >= 0 ? config.refinements : (n == 2 ? 2 : 1);
  const int cap = config.node_cap > 0 ? config.node_cap : fem::node_cap_from_env();

  fem::Mesh mesh = fem::mesh_convex(body, h0, cap);
  double T_c = 0.0, T_f = fem::solve_torsion(mesh, config.cg_tol).T;
  for (int r = 0; r < refs; ++r) {
    mesh = fem::refine_uniform(mesh, body, cap);
    T_c = T_f;
    T_f = fem::solve_torsion(mesh, config.cg_tol).T;
  }
  rep.T_lower = T_f;
  const double gap = refs > 0 ? std::max(0.0, T_f - T_c) : 0.0;
  rep.T_extrap = T_f + gap / 3.0;
  rep.T_err = 2.0 * gap / 3.0;

  const double d2h =
      config.d2_h > 0.0 ? config.d2_h : s.diameter / (n == 2 ? 24.0 : 12.0);
  const fem::Quadrature q = fem::integrate_d_squared(body, d2h, config.d2_depth);
  rep.d2_value = q.value;
  rep.d2_error = q.error;

  rep.F_lower = rep.T_lower * scale;
  rep.F_extrap = rep.T_extrap * scale;
  rep.F_err = rep.T_err * scale;
  rep.F_d2 = q.value * scale;
  rep.F_d2_err = q.error * scale;
  rep.deficit_lower = rep.makai_const - rep.F_lower;
  rep.deficit_d2 = rep.makai_const - rep.F_d2;

  const double tiny = 1e-12 * rep.makai_const;
  const double fem_gap = 2.0 * (rep.T_extrap - rep.T_lower) * scale;
  const double c1gn = gamma_deficit_constant(n) * pow_clamped(rep.gamma, n);

  auto push = [&rep](const std::string& name, double lhs, double rhs) {
    rep.checks.push_back({name, lhs, rhs, rhs - lhs, lhs <= rhs});
  };

  // certified side: T_lower <= T, so F_lower <= F <= makai_const exactly
  push("makai_upper", rep.F_lower, rep.makai_const);
  // T <= int d^2 gives F <= F_d2; Polya reads through it
  push("polya_lower", 1.0 / 3.0, rep.F_d2 + rep.F_d2_err);
  // strict separation of T from int d^2, with the pinned relative floor;
  // normalized by P^2/V^3 so margins compare across sizes
  push("torsion_below_d2", rep.T_lower * scale,
       (q.value * (1.0 - 1e-6) - q.error) * scale);
  // deficit >= C1 gamma^n, a fortiori with the certified lower bound
  push("gamma_stability", c1gn, rep.deficit_lower + tiny);
  // the sharp two-sided deficit estimate runs through int d^2
  push("gamma_sandwich_lower", c1gn, rep.deficit_d2 + rep.F_d2_err + tiny);
  push("gamma_sandwich_upper", rep.deficit_d2,
       gamma_deficit_upper_constant(n) * rep.gamma + rep.F_d2_err + tiny);
  // (int d^2 - T) P^2 / V^3 <= (n^2+n+1)/3 beta; T_lower inflates the left
  // side by the FEM gap, allowed for on the right
  push("beta_flatness", (q.value - rep.T_lower) * scale,
       flatness_beta_constant(n) * rep.beta + fem_gap + q.error * scale +
           tiny);
  push("polya_beta_upper", rep.F_d2 - 1.0 / 3.0,
       polya_beta_upper_constant(n) * rep.beta + rep.F_d2_err + tiny);
  push("polya_beta_lower",
       1.0 / 3.0 + polya_beta_lower_constant(n) * std::pow(rep.beta, 3),
       rep.F_lower + fem_gap + tiny);

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;

  if (config.strict) {
    for (const auto& c : rep.checks)
      if (!c.pass && (c.name == "makai_upper" || c.name == "torsion_below_d2"))
        throw InconsistentBounds("certified check '" + c.name +
                                 "' violated: lhs=" + std::to_string(c.lhs) +
                                 " rhs=" + std::to_string(c.rhs));
  }
  return rep;
}

InequalityReport evaluate_analytic(const families::FamilySpec& spec) {
  const families::AnalyticGeometry g = families::analytic_geometry(spec);
  const double T = fem::thin_torsion_estimate(spec);  // rejects non-thin families
  const int n = spec.dim;

  InequalityReport rep;
  rep.body_id = spec.id();
  rep.n = n;
  rep.analytic = true;
  rep.volume = g.volume;
  rep.perimeter = g.perimeter;
  rep.inradius = g.inradius;
  rep.diameter = g.diameter;
  rep.minwidth = g.minwidth_exact ? g.minwidth : kNaN;
  rep.alpha = g.minwidth_exact ? g.minwidth / g.diameter : kNaN;
  rep.beta = std::max(0.0, g.perimeter * g.inradius / g.volume - 1.0);
  rep.gamma = std::max(0.0, n - g.perimeter * g.inradius / g.volume);
  rep.makai_const = families::makai_constant(n);

  const double scale = g.perimeter * g.perimeter /
                       (g.volume * g.volume * g.volume);
  rep.T_lower = T;
  rep.T_extrap = T;
  rep.F_lower = T * scale;
  rep.F_extrap = rep.F_lower;
  rep.deficit_lower = rep.makai_const - rep.F_lower;
  rep.deficit_d2 = kNaN;

  // x = thin/base inradius controls the model error: for cones the model
  // value is makai_const (1+sqrt(1+x^2))^2/4 <= makai_const (1+x^2) exactly
  const double x = g.thin / g.base_inradius;
  const double slack = rep.makai_const * x * x + 1e-12;
  const double tiny = 1e-12;

  auto push = [&rep](const std::string& name, double lhs, double rhs) {
    rep.checks.push_back({name, lhs, rhs, rhs - lhs, lhs <= rhs});
  };
  push("makai_upper_model", rep.F_lower, rep.makai_const + slack);
  push("polya_lower_model", 1.0 / 3.0, rep.F_lower + tiny);
  push("gamma_stability_model",
       gamma_deficit_constant(n) * pow_clamped(rep.gamma, n),
       rep.deficit_lower + slack);

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

SweepReport sweep(const families::FamilySpec& base,
                  const std::vector<double>& params) {
  if (base.family != families::Family::cone &&
      base.family != families::Family::cylinder)
    throw InputError("sweep supports cone and cylinder families");
  if (params.size() < 2) throw InputError("sweep needs at least two parameters");
  for (size_t i = 1; i < params.size(); ++i)
    if (!(params[i] > params[i - 1]))
      throw InputError("sweep parameters must increase strictly");

  SweepReport rep;
  rep.family = base.family;
  rep.dim = base.dim;

  std::vector<double> defs, alphas, fs, gammas;
  for (double p : params) {
    families::FamilySpec s = base;
    if (base.family == families::Family::cone)
      s.k = p;
    else
      s.ell = p;
    SweepRow row;
    row.param = p;
    row.report = evaluate_analytic(s);
    defs.push_back(std::abs(row.report.makai_const - row.report.F_lower));
    alphas.push_back(row.report.alpha);
    fs.push_back(row.report.F_lower);
    gammas.push_back(row.report.gamma);
    rep.rows.push_back(std::move(row));
  }

  rep.deficit_slope = loglog_slope(params, defs);
  rep.alpha_slope = loglog_slope(params, alphas);
  rep.deficit_decreasing = true;
  rep.alpha_decreasing = true;
  rep.f_increasing = true;
  rep.f_decreasing = true;
  rep.gamma_increasing = true;
  for (size_t i = 1; i < params.size(); ++i) {
    rep.deficit_decreasing &= defs[i] < defs[i - 1];
    rep.alpha_decreasing &= alphas[i] < alphas[i - 1];
    rep.f_increasing &= fs[i] > fs[i - 1];
    rep.f_decreasing &= fs[i] < fs[i - 1];
    rep.gamma_increasing &= gammas[i] >= gammas[i - 1];
  }
  return rep;
}

std::vector<families::FamilySpec> corpus_specs(int dim, int count) {
  if (dim != 2 && dim != 3)
    throw DimensionUnsupported("corpus dimensions are 2 and 3");
  if (count < 1 || count > 10000) throw InputError("corpus count out of range");
  std::vector<families::FamilySpec> out;
  for (int pass = 0; pass < 2; ++pass) {
    for (int seed = 1; seed <= count; ++seed) {
      families::FamilySpec s;
      s.family = pass == 0 ? families::Family::random_hull
                           : families::Family::tangential_random;
      s.dim = dim;
      s.seed = static_cast<std::uint64_t>(seed);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace makai::lab
