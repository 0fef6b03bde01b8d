#include <algorithm>
#include <cmath>

#include "makai/errors.hpp"
#include "makai/fem.hpp"

namespace makai::fem {

double analytic_torsion_ball(int n, double radius) {
  if (n < 2 || radius <= 0.0) throw InputError("ball torsion needs n >= 2, R > 0");
  // u = (R^2 - |x|^2) / (2n)
  return families::unit_ball_volume(n) * std::pow(radius, n + 2) / (n * (n + 2.0));
}

double analytic_torsion_rectangle(double a, double b) {
  if (a <= 0.0 || b <= 0.0) throw InputError("rectangle sides must be positive");
  if (a > b) std::swap(a, b);  // tanh argument grows with b/a
  const double pi = std::acos(-1.0);
  // T = a^3 b / 12 - (16 a^4 / pi^5) sum_{m odd} tanh(m pi b / (2a)) / m^5
  double sum = 0.0;
  const int M = 801;  // tail below 16 a^4/pi^5 * (M^-5 + M^-4/8) ~ 1e-12 a^4
  for (int m = M; m >= 1; m -= 2)
    sum += std::tanh(0.5 * m * pi * b / a) / (std::pow(m, 5));
  return a * a * a * b / 12.0 - 16.0 * std::pow(a, 4) / std::pow(pi, 5) * sum;
}

double thin_torsion_estimate(const families::FamilySpec& spec) {
  if (spec.family != families::Family::cone &&
      spec.family != families::Family::cylinder)
    throw NoClosedForm("thin torsion limit exists for cone and cylinder only");
  families::AnalyticGeometry g = families::analytic_geometry(spec);
  return g.torsion_coeff * g.thin * g.thin * g.thin;
}

}  // namespace makai::fem
