#include "makai/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "makai/errors.hpp"
#include "makai/fem.hpp"

namespace makai::profile {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// int_{t0}^{t1} (c + s (t - t0))^pow * t^2 dt, Gauss-Legendre 6 point
// (exact through degree 11, so any pow <= 9 here)
double line_pow_t2(double c, double s, double t0, double t1, int pow) {
  static const double X[3] = {0.2386191860831969, 0.6612093864662645,
                              0.9324695142031521};
  static const double W[3] = {0.4679139345726910, 0.3607615730481386,
                              0.1713244923791704};
  const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (double sgn : {-1.0, 1.0}) {
      const double t = mid + sgn * half * X[i];
      acc += W[i] * std::pow(c + s * (t - t0), pow) * t * t;
    }
  }
  return acc * half;
}

// derivative at t0 of the quadratic through (tm,fm),(t0,f0),(tp,fp)
double deriv3(double tm, double t0, double tp, double fm, double f0,
              double fp) {
  return fm * (t0 - tp) / ((tm - t0) * (tm - tp)) +
         f0 * ((t0 - tm) + (t0 - tp)) / ((t0 - tm) * (t0 - tp)) +
         fp * (t0 - tm) / ((tp - tm) * (tp - t0));
}

double binom(int m, int i) {
  if (i < 0 || i > m) return 0.0;
  double r = 1.0;
  for (int k = 1; k <= i; ++k) r = r * (m - i + k) / k;
  return r;
}

}  // namespace

double lambda_t2_moment(double L0, double a, double R, int n) {
  if (n < 2) throw DimensionUnsupported("dimension must be at least 2");
  if (L0 <= 0.0 || R <= 0.0) throw InputError("moment needs L0 > 0, R > 0");
  const double y = a * R / L0;
  if (y < -1e-12 || y > 1.0 + 1e-12)
    throw InputError("slope outside the admissible range");
  // int_0^1 (1 - y s)^(n-1) s^2 ds as a power series in y: the 1/3 at y = 0
  // survives, everything else is a clean binomial combination (orders y^0
  // and y^1 of the naive bracket cancel exactly and are dropped here)
  double J = 0.0, ypow = 1.0;
  for (int i = 3; i <= n + 2; ++i) {
    const double d = (i % 2 ? 1.0 : -1.0) * (binom(n, i) / n -
                                             2.0 * binom(n + 1, i) / (n + 1) +
                                             binom(n + 2, i) / (n + 2));
    J += d * ypow;
    ypow *= y;
  }
  return R * R * R * std::pow(L0, n - 1) * J;
}

ProfileTable profile_table(const geo::ConvexBody& body, int grid_m) {
  if (grid_m < 32 || grid_m > 65536)
    throw InputError("profile grid size out of range");
  ProfileTable tab;
  tab.body = body;
  tab.dim = body.dim;
  auto [center, R] = geo::chebyshev_center(body);
  (void)center;
  tab.inradius = R;
  tab.volume0 = geo::volume(body);
  tab.perimeter0 = geo::perimeter(body);

  const int M = grid_m;
  tab.t.reserve(M + 1);
  for (int j = 0; j <= M; ++j) {
    double tj = (j == M) ? R * (1.0 - 1e-9)
                         : R * std::sin(0.5 * M_PI * j / M);
    if (j == M) {
      // the last slice can collapse in floating point; back off until the
      // eroded body still builds
      for (double f : {1e-9, 1e-7, 1e-5, 1e-3}) {
        tj = R * (1.0 - f);
        try {
          geo::erode(body, tj);
          break;
        } catch (const EmptyErosion&) {
          continue;
        }
      }
    }
    const geo::ConvexBody slice = (j == 0) ? body : geo::erode(body, tj);
    tab.t.push_back(tj);
    tab.mu.push_back(geo::volume(slice));
    tab.per.push_back(geo::perimeter(slice));
    tab.L.push_back(std::pow(tab.per.back(), 1.0 / (body.dim - 1)));
  }
  fit_lambda(tab);
  return tab;
}

std::pair<double, double> fit_lambda(ProfileTable& tab) {
  const int n = tab.dim;
  const double V = tab.volume0, P = tab.perimeter0, R = tab.inradius;
  if (!(V > 0.0) || !(P > 0.0) || !(R > 0.0))
    throw InputError("profile fit needs positive volume, perimeter, inradius");
  const double L0 = std::pow(P, 1.0 / (n - 1));

  // match int_0^R (L0 - a t)^(n-1) dt = V; in terms of z = 1 - a R / L0 the
  // condition reads (P R / n) (1 + z + ... + z^(n-1)) = V, monotone in z
  auto g = [&](double z) {
    double s = 1.0, zp = 1.0;
    for (int k = 1; k < n; ++k) {
      zp *= z;
      s += zp;
    }
    return (P * R / n) * s - V;
  };
  if (g(1.0) < -1e-6 * V)
    throw NoRoot("no admissible slope: P R < |Omega|, table inconsistent");
  if (g(0.0) > 1e-6 * V)
    throw NoRoot("no admissible slope: P R / n > |Omega|, table inconsistent");
  double z;
  if (g(0.0) >= 0.0) {
    z = 0.0;  // tangential up to rounding: the homothety profile already fits
  } else {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) >= 0.0 ? hi : lo) = mid;
    }
    z = 0.5 * (lo + hi);
  }
  tab.z = z;
  tab.a = L0 * (1.0 - z) / R;
  double gt = 0.0, zp = 1.0;
  for (int k = 1; k < n; ++k) {
    zp *= z;
    gt += zp;
  }
  tab.gamma_tilde = gt;
  return {tab.a, tab.z};
}

ChainReport verify_profile_chain(const ProfileTable& tab) {
  if (!(tab.t.size() >= 9) || std::isnan(tab.a))
    throw InputError("profile table is not fitted");
  const int n = tab.dim;
  const int M = static_cast<int>(tab.t.size()) - 1;
  const double R = tab.inradius, V = tab.volume0, P0 = tab.perimeter0;
  const double L0 = tab.L0();

  ChainReport rep;
  auto push = [&rep](const std::string& id, double lhs, double rhs,
                     double margin, bool pass) {
    rep.checks.push_back({id, lhs, rhs, margin, pass});
  };

  // --- unique crossing of D = L - lambda: signs must run + -> 0 -> - ---
  const double tol_c = 1e-9 * L0;
  std::vector<double> D(M + 1);
  std::vector<int> cls(M + 1);
  bool all_zero = true;
  for (int j = 0; j <= M; ++j) {
    D[j] = tab.L[j] - tab.lambda(tab.t[j]);
    cls[j] = (D[j] > tol_c) ? 1 : (D[j] < -tol_c ? -1 : 0);
    if (std::abs(D[j]) > 1e-8 * L0) all_zero = false;
  }
  int violations = 0;
  bool seen_neg = false;
  for (int j = 0; j <= M; ++j) {
    if (cls[j] == -1) seen_neg = true;
    else if (cls[j] == 1 && seen_neg) ++violations;
  }
  rep.equality_profile = all_zero;
  if (all_zero) {
    rep.t_cross = R;  // interval marker: the profiles coincide
  } else {
    int kp = -1;
    for (int j = 0; j <= M; ++j)
      if (cls[j] == 1) kp = j;
    int km = -1;
    for (int j = M; j >= 0; --j)
      if (cls[j] == -1) km = j;
    if (kp >= 0 && km > kp) {
      rep.t_cross = tab.t[kp] - D[kp] * (tab.t[km] - tab.t[kp]) /
                                    (D[km] - D[kp]);
    }
  }
  push("crossing_unique", static_cast<double>(violations), 0.0,
       -static_cast<double>(violations), violations == 0);

  // --- concavity of L: chord slopes nonincreasing (skip the last two
  // intervals, where the slice is thin and slopes amplify rounding) ---
  std::vector<double> slope(M);
  for (int j = 0; j < M; ++j)
    slope[j] = (tab.L[j + 1] - tab.L[j]) / (tab.t[j + 1] - tab.t[j]);
  const double tol_s = 1e-6 * L0 / R;
  double worst_s = std::numeric_limits<double>::infinity();
  for (int j = 0; j + 3 < M; ++j)
    worst_s = std::min(worst_s, slope[j] - slope[j + 1] + tol_s);
  push("concavity_L", worst_s, 0.0, worst_s / (L0 / R), worst_s >= 0.0);

  // --- coarea: three-point derivative of mu against -per; P' jumps where
  // the erosion changes combinatorics, so the tolerance tracks the local
  // perimeter increments ---
  double worst_d = std::numeric_limits<double>::infinity();
  bool coarea_ok = true;
  for (int j = 1; j < M; ++j) {
    const double dmu = deriv3(tab.t[j - 1], tab.t[j], tab.t[j + 1],
                              tab.mu[j - 1], tab.mu[j], tab.mu[j + 1]);
    const double err = std::abs(dmu + tab.per[j]);
    const double tol = 2.0 * (std::abs(tab.per[j + 1] - tab.per[j]) +
                              std::abs(tab.per[j] - tab.per[j - 1])) +
                       1e-7 * P0;
    worst_d = std::min(worst_d, (tol - err) / P0);
    if (err > tol) coarea_ok = false;
  }
  push("coarea_derivative", worst_d, 0.0, worst_d, coarea_ok);

  // --- parallel body bounds: the inball homothety gives the lower bounds,
  // monotonicity of per the upper ones ---
  double worst_b = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= M; ++j) {
    const double sh = 1.0 - tab.t[j] / R;
    const double shn = std::pow(sh, n), shm = std::pow(sh, n - 1);
    worst_b = std::min(worst_b, (tab.mu[j] - V * shn) / V + 1e-9);
    worst_b = std::min(worst_b,
                       (V - tab.t[j] * tab.per[j] - tab.mu[j]) / V + 1e-9);
    worst_b = std::min(worst_b, (tab.per[j] - P0 * shm) / P0 + 1e-9);
    worst_b = std::min(worst_b, (P0 - tab.per[j]) / P0 + 1e-9);
  }
  push("parallel_bounds", worst_b, 0.0, worst_b, worst_b >= 0.0);

  // --- the fitted slope reproduces gamma_tilde = n V / (P R) - 1 ---
  {
    const double rhs = n * V / (P0 * R) - 1.0;
    const double diff = std::abs(tab.gamma_tilde - rhs);
    const double tol = 1e-9 * std::max(1.0, std::abs(rhs));
    push("fit_consistency", tab.gamma_tilde, rhs, (tol - diff), diff <= tol);
  }

  // --- closed-form moment against straight quadrature of the same line ---
  double quad_lambda = 0.0;
  for (int p = 0; p < 8; ++p)
    quad_lambda += line_pow_t2(tab.lambda(R * p / 8.0), -tab.a, R * p / 8.0,
                               R * (p + 1) / 8.0, n - 1);
  const double closed = lambda_t2_moment(L0, tab.a, R, n);
  {
    const double rd = std::abs(quad_lambda - closed) /
                      std::max(closed, 1e-300);
    push("moment_closed_form", quad_lambda, closed, 1e-11 - rd, rd <= 1e-11);
  }

  // --- t^2-weighted comparison: int L^(n-1) t^2 <= int lambda^(n-1) t^2.
  // L is concave and decreasing, so chords underestimate it and the
  // previous interval's chord slope, carried forward, overestimates it;
  // both bounds integrate exactly. ---
  double lowerI = 0.0, upperI = 0.0;
  for (int j = 0; j < M; ++j) {
    lowerI += line_pow_t2(tab.L[j], slope[j], tab.t[j], tab.t[j + 1], n - 1);
    const double s_up = (j == 0) ? 0.0 : slope[j - 1];
    upperI += line_pow_t2(tab.L[j], s_up, tab.t[j], tab.t[j + 1], n - 1);
  }
  upperI += std::pow(tab.L[M], n - 1) *
            (R * R * R - tab.t[M] * tab.t[M] * tab.t[M]) / 3.0;
  {
    const double tol = 1e-9 * closed;
    push("t2_moment_order", lowerI, closed,
         (closed - lowerI) / std::max(closed, 1e-300),
         lowerI <= closed + tol);
  }

  // --- the same moment is int_Omega dist^2, computed independently ---
  {
    const double h = tab.body.diameter / (n == 2 ? 16.0 : 8.0);
    const fem::Quadrature q = fem::integrate_d_squared(tab.body, h, 3);
    const double grid_err = (upperI - lowerI) + 1e-7 * upperI;
    const double lo1 = lowerI - grid_err, hi1 = upperI + grid_err;
    const double lo2 = q.value - q.error - 1e-7 * q.value;
    const double hi2 = q.value + q.error + 1e-7 * q.value;
    const double overlap = std::min(hi1, hi2) - std::max(lo1, lo2);
    push("coarea_d2_consistency", q.value, 0.5 * (lowerI + upperI),
         overlap / std::max(q.value, 1e-300), overlap >= 0.0);
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

void enforce_chain(const ChainReport& report) {
  for (const auto& c : report.checks)
    if (!c.pass)
      throw CheckFailed("profile check '" + c.id +
                        "' failed with margin " + std::to_string(c.margin));
}

}  // namespace makai::profile
