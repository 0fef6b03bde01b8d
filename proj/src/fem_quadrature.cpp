#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "makai/errors.hpp"
#include "makai/fem.hpp"

namespace makai::fem {
namespace {

// degree-4 rules, weights normalized to sum 1 (multiply by the cell measure)

struct RulePoint {
  double w;
  std::array<double, 4> bary;
};

// Dunavant, 6 points on the triangle
const RulePoint kTri[] = {
    {0.109951743655322, {0.816847572980459, 0.091576213509771, 0.091576213509771, 0}},
    {0.109951743655322, {0.091576213509771, 0.816847572980459, 0.091576213509771, 0}},
    {0.109951743655322, {0.091576213509771, 0.091576213509771, 0.816847572980459, 0}},
    {0.223381589678011, {0.108103018168070, 0.445948490915965, 0.445948490915965, 0}},
    {0.223381589678011, {0.445948490915965, 0.108103018168070, 0.445948490915965, 0}},
    {0.223381589678011, {0.445948490915965, 0.445948490915965, 0.108103018168070, 0}},
};

// Keast, 11 points on the tetrahedron
constexpr double kTetA = 0.0714285714285714;  // 1/14
constexpr double kTetB = 0.785714285714286;   // 11/14
constexpr double kTetC = 0.399403576166799;
constexpr double kTetD = 0.100596423833201;
const RulePoint kTet[] = {
    {-0.0789333333333333, {0.25, 0.25, 0.25, 0.25}},
    {0.0457333333333333, {kTetA, kTetA, kTetA, kTetB}},
    {0.0457333333333333, {kTetA, kTetA, kTetB, kTetA}},
    {0.0457333333333333, {kTetA, kTetB, kTetA, kTetA}},
    {0.0457333333333333, {kTetB, kTetA, kTetA, kTetA}},
    {0.149333333333333, {kTetC, kTetC, kTetD, kTetD}},
    {0.149333333333333, {kTetC, kTetD, kTetC, kTetD}},
    {0.149333333333333, {kTetC, kTetD, kTetD, kTetC}},
    {0.149333333333333, {kTetD, kTetC, kTetC, kTetD}},
    {0.149333333333333, {kTetD, kTetC, kTetD, kTetC}},
    {0.149333333333333, {kTetD, kTetD, kTetC, kTetC}},
};

struct Cell {
  std::array<Vec, 4> p;
  int nv;
};

double cell_measure(const Cell& c) {
  if (c.nv == 3) return 0.5 * std::abs(cross2(c.p[1] - c.p[0], c.p[2] - c.p[0]));
  return std::abs(dot(c.p[1] - c.p[0], cross(c.p[2] - c.p[0], c.p[3] - c.p[0]))) / 6.0;
}

class DistIntegrator {
 public:
  explicit DistIntegrator(const geo::ConvexBody& body, int max_depth)
      : body_(body), max_depth_(max_depth), tol_(1e-12 * body.diameter) {}

  double value = 0.0;
  double error = 0.0;

  void add_cell(const Cell& c, int depth) {
    // sample at corners and rule points
    samples_.clear();
    for (int i = 0; i < c.nv; ++i) samples_.push_back(c.p[i]);
    for (const RulePoint& rp : rule(c)) {
      Vec q{};
      for (int i = 0; i < c.nv; ++i) q = q + rp.bary[i] * c.p[i];
      samples_.push_back(q);
    }
    if (single_facet_covers(c) || depth >= max_depth_) {
      double vol = cell_measure(c);
      double I = 0.0;
      for (std::size_t s = c.nv; s < samples_.size(); ++s) {
        double d = dist_min(samples_[s]);
        I += rule(c)[s - c.nv].w * d * d;
      }
      value += vol * I;
      if (!single_facet_covers_cached_) {
        double lo = 1e300, hi = 0.0;
        for (const Vec& q : samples_) {
          double d = dist_min(q);
          lo = std::min(lo, d * d);
          hi = std::max(hi, d * d);
        }
        error += 1.1 * vol * (hi - lo);
      }
      return;
    }
    subdivide(c, depth);
  }

 private:
  std::span<const RulePoint> rule(const Cell& c) const {
    if (c.nv == 3) return kTri;
    return kTet;
  }

  double dist_min(Vec q) const {
    double d = 1e300;
    for (const auto& h : body_.halfspaces) d = std::min(d, h.offset - dot(h.normal, q));
    return std::max(d, 0.0);
  }

  // true if one facet's distance realizes the minimum at every sample, so the
  // integrand is a single quadratic on the cell and the rule is exact
  bool single_facet_covers(const Cell& c) {
    single_facet_covers_cached_ = false;
    for (const auto& h : body_.halfspaces) {
      bool covers = true;
      for (const Vec& q : samples_) {
        double dj = h.offset - dot(h.normal, q);
        if (dj > dist_min(q) + tol_) {
          covers = false;
          break;
        }
      }
      if (covers) {
        single_facet_covers_cached_ = true;
        return true;
      }
    }
    return false;
  }

  void subdivide(const Cell& c, int depth) {
    if (c.nv == 3) {
      Vec m01 = 0.5 * (c.p[0] + c.p[1]), m12 = 0.5 * (c.p[1] + c.p[2]),
          m02 = 0.5 * (c.p[0] + c.p[2]);
      add_cell({{c.p[0], m01, m02, {}}, 3}, depth + 1);
      add_cell({{c.p[1], m12, m01, {}}, 3}, depth + 1);
      add_cell({{c.p[2], m02, m12, {}}, 3}, depth + 1);
      add_cell({{m01, m12, m02, {}}, 3}, depth + 1);
      return;
    }
    Vec m01 = 0.5 * (c.p[0] + c.p[1]), m02 = 0.5 * (c.p[0] + c.p[2]),
        m03 = 0.5 * (c.p[0] + c.p[3]), m12 = 0.5 * (c.p[1] + c.p[2]),
        m13 = 0.5 * (c.p[1] + c.p[3]), m23 = 0.5 * (c.p[2] + c.p[3]);
    add_cell({{c.p[0], m01, m02, m03}, 4}, depth + 1);
    add_cell({{c.p[1], m01, m12, m13}, 4}, depth + 1);
    add_cell({{c.p[2], m02, m12, m23}, 4}, depth + 1);
    add_cell({{c.p[3], m03, m13, m23}, 4}, depth + 1);
    add_cell({{m01, m02, m03, m13}, 4}, depth + 1);
    add_cell({{m01, m02, m12, m13}, 4}, depth + 1);
    add_cell({{m02, m03, m13, m23}, 4}, depth + 1);
    add_cell({{m02, m12, m13, m23}, 4}, depth + 1);
  }

  const geo::ConvexBody& body_;
  int max_depth_;
  double tol_;
  std::vector<Vec> samples_;
  bool single_facet_covers_cached_ = false;
};

}  // namespace

Quadrature integrate_d_squared(const geo::ConvexBody& body, double h_target,
                               int max_depth) {
  if (max_depth < 0) throw InputError("max_depth must be nonnegative");
  if (h_target <= 0.0) h_target = body.diameter / (body.dim == 2 ? 24.0 : 12.0);
  Mesh mesh = mesh_convex(body, h_target);
  DistIntegrator integ(body, max_depth);
  for (const auto& c : mesh.cells) {
    Cell cell;
    cell.nv = body.dim + 1;
    for (int i = 0; i < cell.nv; ++i) cell.p[i] = mesh.nodes[c[i]];
    integ.add_cell(cell, 0);
  }
  return {integ.value, integ.error};
}

}  // namespace makai::fem
