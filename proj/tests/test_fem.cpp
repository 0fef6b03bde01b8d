#include "makai/fem.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "makai/errors.hpp"
#include "makai/families.hpp"

using namespace makai;
using namespace makai::fem;
using doctest::Approx;

namespace {

const double kPi = std::acos(-1.0);

geo::ConvexBody unit_square() {
  return geo::build_body(std::vector<Vec>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 2);
}

geo::ConvexBody octahedron() {
  return geo::build_body(std::vector<Vec>{{1, 0, 0},
                                          {-1, 0, 0},
                                          {0, 1, 0},
                                          {0, -1, 0},
                                          {0, 0, 1},
                                          {0, 0, -1}},
                         3);
}

geo::ConvexBody regular_polygon(int m) {
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i) {
    double a = 2.0 * kPi * i / m;
    pts.push_back({std::cos(a), std::sin(a), 0});
  }
  return geo::build_body(pts, 2);
}

double mesh_volume(const Mesh& mesh) {
  double v = 0.0;
  for (const auto& c : mesh.cells) {
    if (mesh.dim == 2)
      v += 0.5 * std::abs(cross2(mesh.nodes[c[1]] - mesh.nodes[c[0]],
                                 mesh.nodes[c[2]] - mesh.nodes[c[0]]));
    else
      v += std::abs(dot(mesh.nodes[c[1]] - mesh.nodes[c[0]],
                        cross(mesh.nodes[c[2]] - mesh.nodes[c[0]],
                              mesh.nodes[c[3]] - mesh.nodes[c[0]]))) /
           6.0;
  }
  return v;
}

// independent reference: 5-point finite differences for -Lap u = 1 on the
// unit square, plain CG
double square_torsion_fd(int N) {
  int n = N - 1;  // interior nodes per direction
  double h = 1.0 / N;
  std::vector<double> u(n * n, 0.0), r(n * n, h * h), p = r, Ap(n * n);
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 4.0 * x[i * n + j];
        if (i > 0) s -= x[(i - 1) * n + j];
        if (i + 1 < n) s -= x[(i + 1) * n + j];
        if (j > 0) s -= x[i * n + j - 1];
        if (j + 1 < n) s -= x[i * n + j + 1];
        y[i * n + j] = s;
      }
  };
  double rr = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  double rr0 = rr;
  for (int it = 0; it < 20 * N && rr > 1e-24 * rr0; ++it) {
    apply(p, Ap);
    double alpha = rr / std::inner_product(p.begin(), p.end(), Ap.begin(), 0.0);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += alpha * p[k];
    for (std::size_t k = 0; k < u.size(); ++k) r[k] -= alpha * Ap[k];
    double rr_new = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
    double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t k = 0; k < u.size(); ++k) p[k] = r[k] + beta * p[k];
  }
  double sum = 0.0;
  for (double v : u) sum += v;
  return h * h * sum;
}

}  // namespace

TEST_CASE("square fan mesh at h=1 is four triangles") {
  Mesh mesh = mesh_convex(unit_square(), 1.0);
  CHECK(mesh.cells.size() == 4);
  CHECK(mesh.nodes.size() == 5);
  int boundary = 0;
  for (bool b : mesh.on_boundary) boundary += b;
  CHECK(boundary == 4);
  CHECK(mesh.h_max == Approx(1.0));
  CHECK(mesh_volume(mesh) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("red refinement quadruples triangles and preserves volume") {
  geo::ConvexBody sq = unit_square();
  Mesh mesh = mesh_convex(sq, 1.0);
  Mesh fine = refine_uniform(mesh, sq);
  CHECK(fine.cells.size() == 16);
  CHECK(fine.level == 1);
  CHECK(fine.h_max == Approx(0.5 * mesh.h_max));
  CHECK(mesh_volume(fine) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tet refinement is volume preserving") {
  geo::ConvexBody oct = octahedron();
  Mesh mesh = mesh_convex(oct, 2.0);
  double v0 = mesh_volume(mesh);
  CHECK(v0 == Approx(4.0 / 3.0).epsilon(1e-12));
  Mesh fine = refine_uniform(mesh, oct);
  CHECK(fine.cells.size() == 8 * mesh.cells.size());
  CHECK(mesh_volume(fine) == Approx(v0).epsilon(1e-12));
  Mesh finer = refine_uniform(fine, oct);
  CHECK(mesh_volume(finer) == Approx(v0).epsilon(1e-12));
}

TEST_CASE("bisection reaches the target size and keeps volume") {
  geo::ConvexBody poly = regular_polygon(16);
  Mesh mesh = mesh_convex(poly, 0.2);
  CHECK(mesh.h_max <= 0.2);
  CHECK(mesh_volume(mesh) == Approx(geo::volume(poly)).epsilon(1e-12));

  geo::ConvexBody oct = octahedron();
  Mesh m3 = mesh_convex(oct, 0.5);
  CHECK(m3.h_max <= 0.5);
  CHECK(mesh_volume(m3) == Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("thin bodies mesh without sliver blowup") {
  families::FamilySpec spec;
  spec.family = families::Family::cone;
  spec.dim = 2;
  spec.k = 50;
  geo::ConvexBody thin = make_body(spec);
  // the raw incenter fan of this body has angles near 179 degrees; bisection
  // must bring the worst angle down to something P1-friendly
  Mesh mesh = mesh_convex(thin, 0.05);
  CHECK(mesh.h_max <= 0.05);
  CHECK(mesh_volume(mesh) == Approx(geo::volume(thin)).epsilon(1e-12));
  CHECK(max_cell_angle(mesh) < 2.5);  // ~143 degrees
}

TEST_CASE("node cap aborts meshing") {
  CHECK_THROWS_AS(mesh_convex(unit_square(), 0.001, 100), MeshBudgetExceeded);
}

TEST_CASE("mesh construction is deterministic") {
  geo::ConvexBody poly = regular_polygon(12);
  Mesh a = mesh_convex(poly, 0.15);
  Mesh b = mesh_convex(poly, 0.15);
  REQUIRE(a.nodes.size() == b.nodes.size());
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    CHECK(dist(a.nodes[i], b.nodes[i]) == 0.0);
  for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i] == b.cells[i]);
}

TEST_CASE("analytic torsion references") {
  CHECK(analytic_torsion_ball(2, 1.0) == Approx(kPi / 8.0).epsilon(1e-14));
  CHECK(analytic_torsion_ball(3, 1.0) == Approx(4.0 * kPi / 45.0).epsilon(1e-14));
  CHECK(analytic_torsion_ball(3, 0.5) ==
        Approx(4.0 * kPi / 45.0 / 32.0).epsilon(1e-14));
  // frozen series value for the unit square
  CHECK(analytic_torsion_rectangle(1, 1) == Approx(0.035144).epsilon(3e-5));
  CHECK(analytic_torsion_rectangle(1, 2) == analytic_torsion_rectangle(2, 1));
  // slab limit: T -> a^3 b / 12 - c a^4 with c = (16/pi^5)(1 - 2^-5) zeta(5)
  CHECK(analytic_torsion_rectangle(1, 200) ==
        Approx(200.0 / 12.0 - 0.0525214).epsilon(1e-6));
}

TEST_CASE("series torsion agrees with a finite-difference solve") {
  double t64 = square_torsion_fd(64);
  double t128 = square_torsion_fd(128);
  double t_ext = t128 + (t128 - t64) / 3.0;  // h^2 extrapolation
  CHECK(analytic_torsion_rectangle(1, 1) == Approx(t_ext).epsilon(1e-5));
}

TEST_CASE("fem torsion on the square converges from below") {
  geo::ConvexBody sq = unit_square();
  double series = analytic_torsion_rectangle(1, 1);
  Mesh mesh = mesh_convex(sq, 0.25);
  std::vector<double> T;
  for (int level = 0; level < 4; ++level) {
    T.push_back(solve_torsion(mesh).T);
    if (level < 3) mesh = refine_uniform(mesh, sq);
  }
  for (std::size_t i = 0; i + 1 < T.size(); ++i) CHECK(T[i] < T[i + 1]);
  for (double t : T) CHECK(t < series);
  CHECK(T.back() > 0.995 * series);
  double richardson = T[3] + (T[3] - T[2]) / 3.0;
  CHECK(richardson == Approx(series).epsilon(1e-3));
}

TEST_CASE("fem torsion on the disk polygon") {
  geo::ConvexBody disk = regular_polygon(64);
  Mesh mesh = mesh_convex(disk, 0.35);
  mesh = refine_uniform(mesh, disk);
  mesh = refine_uniform(mesh, disk);
  TorsionSolution sol = solve_torsion(mesh);
  CHECK(sol.T < kPi / 8.0);
  CHECK(sol.T > 0.98 * kPi / 8.0);
  CHECK(sol.residual <= 1e-10);
}

TEST_CASE("rayleigh value stays a lower bound under loose solves") {
  geo::ConvexBody sq = unit_square();
  Mesh mesh = mesh_convex(sq, 0.1);
  double tight = solve_torsion(mesh, 1e-12).T;
  double loose = solve_torsion(mesh, 1e-3).T;
  CHECK(loose <= tight * (1.0 + 1e-12));
  CHECK(loose > 0.9 * tight);
}

TEST_CASE("torsion in 3d increases along refinements") {
  geo::ConvexBody oct = octahedron();
  Mesh mesh = mesh_convex(oct, 0.6);
  std::vector<double> T;
  for (int level = 0; level < 3; ++level) {
    T.push_back(solve_torsion(mesh).T);
    if (level < 2) mesh = refine_uniform(mesh, oct);
  }
  CHECK(T[0] < T[1]);
  CHECK(T[1] < T[2]);
  // caught between zero and \int d^2 (frozen: P R^3 / 30 = 2/45)
  CHECK(T[2] > 0.0);
  CHECK(T[2] < 2.0 / 45.0);
}

TEST_CASE("distance-squared integrals match closed forms") {
  // tangential bodies: fan cells align with the ridge set, rule is exact
  auto sq = integrate_d_squared(unit_square());
  CHECK(sq.value == Approx(1.0 / 24.0).epsilon(1e-12));
  CHECK(sq.error <= 1e-12);

  std::vector<Vec> cube_pts;
  for (int i = 0; i < 8; ++i)
    cube_pts.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  auto cube = integrate_d_squared(geo::build_body(cube_pts, 3));
  CHECK(cube.value == Approx(1.0 / 40.0).epsilon(1e-12));
  CHECK(cube.error <= 1e-12);

  geo::ConvexBody tri = geo::build_body(std::vector<Vec>{{0, 0}, {1, 0}, {0, 1}}, 2);
  double P = 2.0 + std::sqrt(2.0), R = 1.0 - std::sqrt(0.5);
  auto t = integrate_d_squared(tri);
  CHECK(t.value == Approx(P * R * R * R / 12.0).epsilon(1e-10));

  // non-tangential: ridge is not aligned, adaptive splitting takes over
  geo::ConvexBody rect = geo::build_body(std::vector<Vec>{{0, 0}, {2, 0}, {2, 1}, {0, 1}}, 2);
  auto r4 = integrate_d_squared(rect);
  CHECK(std::abs(r4.value - 0.125) <= r4.error + 1e-9);
  CHECK(r4.value == Approx(0.125).epsilon(1e-4));
  auto r6 = integrate_d_squared(rect, 0.0, 6);
  CHECK(r6.error < r4.error);
  CHECK(r6.value == Approx(0.125).epsilon(1e-5));
}

TEST_CASE("thin torsion estimates") {
  families::FamilySpec cone;
  cone.family = families::Family::cone;
  cone.dim = 2;
  cone.k = 50;
  CHECK(thin_torsion_estimate(cone) == Approx(1.0 / (24.0 * 125000.0)).epsilon(1e-13));
  families::FamilySpec cyl;
  cyl.family = families::Family::cylinder;
  cyl.dim = 3;
  cyl.ell = 10;
  CHECK(thin_torsion_estimate(cyl) == Approx(1e-3 / 12.0).epsilon(1e-13));
  families::FamilySpec box;
  box.family = families::Family::box;
  CHECK_THROWS_AS(thin_torsion_estimate(box), NoClosedForm);
}

TEST_CASE("fem torsion brackets the thin cone value") {
  families::FamilySpec spec;
  spec.family = families::Family::cone;
  spec.dim = 2;
  spec.k = 10;
  geo::ConvexBody body = make_body(spec);
  Mesh mesh = mesh_convex(body, 0.02);
  double T = solve_torsion(mesh).T;
  double thin = thin_torsion_estimate(spec);
  CHECK(T > 0.7 * thin);
  CHECK(T < 1.05 * thin);
}
