#pragma once

#include <limits>
#include <string>
#include <vector>

#include "makai/geometry.hpp"

namespace makai::profile {

// Inner-parallel-set data on a grid 0 = t_0 < ... < t_M < R (sin-spaced, so
// rows cluster where the body collapses).  per = boundary measure of the
// eroded body, L = per^(1/(n-1)), mu = volume.
struct ProfileTable {
  geo::ConvexBody body;
  int dim = 2;
  double inradius = 0.0;
  double volume0 = 0.0;
  double perimeter0 = 0.0;
  std::vector<double> t, mu, per, L;

  // linear profile lambda(t) = L(0) - a t matched so that
  // int_0^R lambda^(n-1) dt = volume0; z = 1 - a R / L(0)
  double a = std::numeric_limits<double>::quiet_NaN();
  double z = std::numeric_limits<double>::quiet_NaN();
  double gamma_tilde = std::numeric_limits<double>::quiet_NaN();

  double L0() const { return L.empty() ? 0.0 : L.front(); }
  double lambda(double tt) const { return L0() - a * tt; }
};

ProfileTable profile_table(const geo::ConvexBody& body, int grid_m = 256);

// root-find the matching slope; fills a, z, gamma_tilde and returns {a, z}
std::pair<double, double> fit_lambda(ProfileTable& table);

struct ChainCheck {
  std::string id;
  double lhs = 0.0, rhs = 0.0, margin = 0.0;
  bool pass = false;
};

struct ChainReport {
  std::vector<ChainCheck> checks;
  bool all_pass = false;
  double t_cross = std::numeric_limits<double>::quiet_NaN();
  bool equality_profile = false;  // L == lambda within tolerance (tangential)
};

// verifies, on the table's grid: unique crossing of L - lambda, the
// t^2-weighted moment comparison, the closed-form moment identity, parallel
// volume/perimeter bounds, the coarea derivative mu' = -per, concavity of L,
// the fit consistency gamma_tilde = n V /(P R) - 1, and agreement of the
// profile moment with the direct distance-squared integral.
ChainReport verify_profile_chain(const ProfileTable& table);

// throws CheckFailed naming the first failing check; every chain inequality
// holds for every convex body, so a failure is a computation bug, not data
void enforce_chain(const ChainReport& report);

// int_0^R (L0 - a t)^(n-1) t^2 dt, cancellation-free for a R << L0
double lambda_t2_moment(double L0, double a, double R, int n);

}  // namespace makai::profile
