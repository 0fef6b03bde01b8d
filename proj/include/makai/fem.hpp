#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "makai/families.hpp"
#include "makai/geometry.hpp"

namespace makai::fem {

inline constexpr std::size_t kDefaultNodeCap = 2'000'000;
std::size_t node_cap_from_env();  // MAKAI_NODE_CAP, else the default

struct Mesh {
  int dim = 2;
  std::vector<Vec> nodes;
  std::vector<std::array<int, 4>> cells;  // triangles carry -1 in slot 3
  std::vector<bool> on_boundary;
  double h_max = 0.0;
  int level = 0;  // uniform refinements applied since mesh_convex
};

// Fan triangulation from the incenter (facet centroids added in dim 3), then
// conforming longest-edge bisection until h_max <= h_target.  Bisection keeps
// the thin cells of flattened bodies well-shaped, which plain red refinement
// of the fan would not.
Mesh mesh_convex(const geo::ConvexBody& body, double h_target,
                 std::size_t node_cap = kDefaultNodeCap);

// One red refinement (1->4 triangles, 1->8 tets); nested spaces, so the
// discrete torsion value increases monotonically along refinements.
Mesh refine_uniform(const Mesh& mesh, const geo::ConvexBody& body,
                    std::size_t node_cap = kDefaultNodeCap);

double max_cell_angle(const Mesh& mesh);  // radians; shape diagnostics

struct TorsionSolution {
  double T = 0.0;         // (integral)^2 / energy at the CG iterate: a lower
                          // bound for the true torsional rigidity
  double integral = 0.0;  // \int u_h
  double energy = 0.0;    // \int |grad u_h|^2
  double residual = 0.0;  // final relative CG residual
  int iterations = 0;
  std::vector<double> u;  // nodal values, zero on the boundary
};

TorsionSolution solve_torsion(const Mesh& mesh, double cg_tol = 1e-10);

double analytic_torsion_ball(int n, double radius);
// exact series with a certified truncation bound folded in
double analytic_torsion_rectangle(double a, double b);

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
};

// \int_Omega dist(x, boundary)^2 dx.  The integrand is piecewise quadratic
// away from the ridge set, where the fixed rule is exact; cells straddling
// the ridge are subdivided and contribute the reported error bound.
Quadrature integrate_d_squared(const geo::ConvexBody& body, double h_target = 0.0,
                               int max_depth = 4);

// first-order thin-limit torsion (cone and cylinder families only)
double thin_torsion_estimate(const families::FamilySpec& spec);

}  // namespace makai::fem
