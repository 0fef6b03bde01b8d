#include <cmath>
#include <map>
#include <numeric>

#include "makai/errors.hpp"
#include "makai/fem.hpp"

namespace makai::fem {
namespace {

// gradients of the P1 basis and the cell measure
struct CellGeom {
  double measure;
  std::array<Vec, 4> grad;
  int nv;
};

CellGeom cell_geom(const std::vector<Vec>& nodes, const std::array<int, 4>& c,
                   int dim) {
  CellGeom g;
  g.nv = dim + 1;
  if (dim == 2) {
    Vec p0 = nodes[c[0]], p1 = nodes[c[1]], p2 = nodes[c[2]];
    double det = cross2(p1 - p0, p2 - p0);
    g.measure = 0.5 * std::abs(det);
    if (g.measure <= 0.0) throw DegenerateBody("zero-area triangle");
    // grad of barycentric i = rotated opposite edge / (2 area), signs via det
    g.grad[0] = (1.0 / det) * Vec{p1.y - p2.y, p2.x - p1.x, 0.0};
    g.grad[1] = (1.0 / det) * Vec{p2.y - p0.y, p0.x - p2.x, 0.0};
    g.grad[2] = (1.0 / det) * Vec{p0.y - p1.y, p1.x - p0.x, 0.0};
    return g;
  }
  Vec p0 = nodes[c[0]];
  Vec e1 = nodes[c[1]] - p0, e2 = nodes[c[2]] - p0, e3 = nodes[c[3]] - p0;
  double det = dot(e1, cross(e2, e3));
  g.measure = std::abs(det) / 6.0;
  if (g.measure <= 0.0) throw DegenerateBody("zero-volume tet");
  g.grad[1] = (1.0 / det) * cross(e2, e3);
  g.grad[2] = (1.0 / det) * cross(e3, e1);
  g.grad[3] = (1.0 / det) * cross(e1, e2);
  g.grad[0] = -(g.grad[1] + g.grad[2] + g.grad[3]);
  return g;
}

struct Csr {
  std::vector<int> row_start, col;
  std::vector<double> val;
  int n = 0;

  void mul(const std::vector<double>& x, std::vector<double>& y) const {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = row_start[i]; k < row_start[i + 1]; ++k) s += val[k] * x[col[k]];
      y[i] = s;
    }
  }
};

}  // namespace

TorsionSolution solve_torsion(const Mesh& mesh, double cg_tol) {
  if (cg_tol <= 0.0) throw InputError("cg tolerance must be positive");
  const int N = static_cast<int>(mesh.nodes.size());
  std::vector<int> compact(N, -1);
  int n_int = 0;
  for (int i = 0; i < N; ++i)
    if (!mesh.on_boundary[i]) compact[i] = n_int++;
  if (n_int == 0) throw DegenerateBody("mesh has no interior nodes");

  // assemble into per-row maps first (deterministic order), then flatten
  std::vector<std::map<int, double>> rows(n_int);
  std::vector<double> f(n_int, 0.0);
  for (const auto& c : mesh.cells) {
    CellGeom g = cell_geom(mesh.nodes, c, mesh.dim);
    double load = g.measure / g.nv;
    for (int i = 0; i < g.nv; ++i) {
      int gi = compact[c[i]];
      if (gi < 0) continue;
      f[gi] += load;
      for (int j = 0; j < g.nv; ++j) {
        int gj = compact[c[j]];
        if (gj < 0) continue;
        rows[gi][gj] += g.measure * dot(g.grad[i], g.grad[j]);
      }
    }
  }
  Csr K;
  K.n = n_int;
  K.row_start.assign(n_int + 1, 0);
  for (int i = 0; i < n_int; ++i)
    K.row_start[i + 1] = K.row_start[i] + static_cast<int>(rows[i].size());
  K.col.reserve(K.row_start[n_int]);
  K.val.reserve(K.row_start[n_int]);
  std::vector<double> diag(n_int, 0.0);
  for (int i = 0; i < n_int; ++i) {
    for (const auto& [j, v] : rows[i]) {
      K.col.push_back(j);
      K.val.push_back(v);
      if (j == i) diag[i] = v;
    }
  }

  // CG with Jacobi preconditioning
  std::vector<double> x(n_int, 0.0), r = f, z(n_int), p(n_int), Ap(n_int);
  double fnorm = std::sqrt(std::inner_product(f.begin(), f.end(), f.begin(), 0.0));
  if (fnorm == 0.0) throw DegenerateBody("zero load vector");
  for (int i = 0; i < n_int; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = std::inner_product(r.begin(), r.end(), z.begin(), 0.0);
  double res = 1.0;
  int it = 0;
  const int max_iter = 10 * n_int + 1000;
  for (; it < max_iter; ++it) {
    res = std::sqrt(std::inner_product(r.begin(), r.end(), r.begin(), 0.0)) / fnorm;
    if (res <= cg_tol) break;
    K.mul(p, Ap);
    double pAp = std::inner_product(p.begin(), p.end(), Ap.begin(), 0.0);
    if (pAp <= 0.0) throw SolverDiverged("stiffness matrix lost positivity");
    double alpha = rz / pAp;
    for (int i = 0; i < n_int; ++i) x[i] += alpha * p[i];
    for (int i = 0; i < n_int; ++i) r[i] -= alpha * Ap[i];
    for (int i = 0; i < n_int; ++i) z[i] = r[i] / diag[i];
    double rz_new = std::inner_product(r.begin(), r.end(), z.begin(), 0.0);
    double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n_int; ++i) p[i] = z[i] + beta * p[i];
  }
  if (res > std::max(1e-6, 1e3 * cg_tol))
    throw SolverDiverged("CG stalled above tolerance");

  TorsionSolution sol;
  sol.iterations = it;
  sol.residual = res;
  sol.u.assign(N, 0.0);
  for (int i = 0; i < N; ++i)
    if (compact[i] >= 0) sol.u[i] = x[compact[i]];
  sol.integral = std::inner_product(f.begin(), f.end(), x.begin(), 0.0);
  K.mul(x, Ap);
  sol.energy = std::inner_product(x.begin(), x.end(), Ap.begin(), 0.0);
  // Rayleigh form: a genuine lower bound for T even if CG stopped early
  sol.T = sol.energy > 0.0 ? sol.integral * sol.integral / sol.energy : 0.0;
  return sol;
}

}  // namespace makai::fem
