#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "makai/geometry.hpp"

namespace makai::families {

enum class Family {
  cone,             // pyramid of height 1/k over a fixed base; flattens as k grows
  cylinder,         // unit-cube base times height 1/ell
  box,              // axis-aligned box with given edge lengths
  simplex,          // regular simplex with given edge length
  regular_polygon,  // m-gon inscribed in the unit circle (dim 2)
  tangential_random,  // random unit normals, all offsets 1: inradius exactly 1
  random_hull,      // hull of uniform points in [-1,1]^dim
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct FamilySpec {
  Family family = Family::box;
  int dim = 2;
  double k = 1.0;           // cone: height = 1/k
  double ell = 1.0;         // cylinder: height = 1/ell
  int base_facets = 64;     // cone in dim 3: base polygon vertex count
  std::vector<double> edges;  // box edge lengths; defaults to all 1
  int count = 0;            // polygon vertices / halfspace count / point count
  double scale = 1.0;       // simplex edge length
  std::uint64_t seed = 1;

  int resolved_count() const;
  std::string id() const;  // deterministic label, used as body id in reports
};

// Closed-form geometry of a family member, available in any dimension >= 2
// for cone / cylinder / box / simplex (regular_polygon: dim 2 only).
struct AnalyticGeometry {
  double volume = 0.0;
  double perimeter = 0.0;
  double inradius = 0.0;
  double minwidth = 0.0;
  double diameter = 0.0;
  // T ~ torsion_coeff * thin^3 as thin -> 0 (cone: thin = 1/k, cylinder: 1/ell);
  // 0 when the family has no thin limit
  double torsion_coeff = 0.0;
  double thin = 0.0;
  // inradius of the cross-section the thin limit squashes onto (cone base /
  // cylinder section); NaN for families without one
  double base_inradius = std::numeric_limits<double>::quiet_NaN();
  bool minwidth_exact = true;
};

geo::ConvexBody make_body(const FamilySpec& spec);  // dim 2 or 3 only
AnalyticGeometry analytic_geometry(const FamilySpec& spec);
bool has_closed_form(const FamilySpec& spec);

// sharp upper bound for T |Omega|^-3 P^2 over convex bodies in dimension n
double makai_constant(int n);
inline constexpr double kPolyaConstant = 1.0 / 3.0;

double unit_ball_volume(int k);  // omega_k, k >= 0

}  // namespace makai::families
