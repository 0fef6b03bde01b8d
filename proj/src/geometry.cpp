#include "makai/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "makai/errors.hpp"
#include "makai/simplex_lp.hpp"

namespace makai::geo {
namespace {

double bbox_diag(const std::vector<Vec>& pts) {
  if (pts.empty()) return 0.0;
  Vec lo = pts[0], hi = pts[0];
  for (const Vec& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return dist(lo, hi);
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

// keep first occurrence in lexicographic order; quadratic but V is small
std::vector<Vec> dedupe_points(std::vector<Vec> pts, double eps) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : out)
      if (dist(p, q) <= eps) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

double max_pairwise_dist(const std::vector<Vec>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, dist(pts[i], pts[j]));
  return d;
}

// ---------------------------------------------------------------- 2-D hull

// Andrew monotone chain; returns a ccw ring without collinear points.
std::vector<Vec> hull_2d(std::vector<Vec> pts, double diag) {
  std::sort(pts.begin(), pts.end(), lex_less);
  const double eps2 = 1e-12 * diag * diag;
  auto build_half = [&](auto begin, auto end) {
    std::vector<Vec> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             cross2(h.back() - h[h.size() - 2], *it - h[h.size() - 2]) <= eps2)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Vec> lower = build_half(pts.begin(), pts.end());
  std::vector<Vec> upper = build_half(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

ConvexBody finalize_2d(const std::vector<Vec>& ring, std::string provenance) {
  if (ring.size() < 3) throw DegenerateBody("polygon needs 3 hull vertices");
  // canonical start: lexicographic minimum, ccw
  std::size_t start = 0;
  for (std::size_t i = 1; i < ring.size(); ++i)
    if (lex_less(ring[i], ring[start])) start = i;

  ConvexBody body;
  body.dim = 2;
  body.provenance = std::move(provenance);
  const std::size_t V = ring.size();
  for (std::size_t i = 0; i < V; ++i) body.vertices.push_back(ring[(start + i) % V]);
  for (std::size_t i = 0; i < V; ++i) {
    Vec a = body.vertices[i];
    Vec b = body.vertices[(i + 1) % V];
    Vec n = normalized(Vec{(b - a).y, -(b - a).x, 0.0});
    body.halfspaces.push_back({n, dot(n, a)});
    body.facets.push_back({static_cast<int>(i), static_cast<int>((i + 1) % V)});
  }
  body.diameter = max_pairwise_dist(body.vertices);
  return body;
}

// ---------------------------------------------------------------- 3-D hull

struct Tri {
  int a, b, c;
  Vec n;  // outward unit normal
  double off;
  bool alive = true;
};

Tri make_tri(const std::vector<Vec>& pts, int a, int b, int c, Vec inside) {
  Vec n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  double ln = norm(n);
  if (ln == 0.0) throw DegenerateBody("zero-area hull face");
  n = (1.0 / ln) * n;
  if (dot(n, inside) > dot(n, pts[a])) {  // flip so normal points away from inside
    std::swap(b, c);
    n = -n;
  }
  return {a, b, c, n, dot(n, pts[a])};
}

std::vector<Tri> hull_3d(const std::vector<Vec>& pts, double diag) {
  const double eps = 1e-9 * diag;
  const std::size_t N = pts.size();
  if (N < 4) throw DegenerateBody("polytope needs 4 points");

  // initial simplex: spread-out quadruple
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (lex_less(pts[i], pts[i0])) i0 = i;
  std::size_t i1 = i0;
  double best = -1.0;
  for (std::size_t i = 0; i < N; ++i)
    if (double d = dist(pts[i], pts[i0]); d > best) best = d, i1 = i;
  if (best <= eps) throw DegenerateBody("all points coincide");
  std::size_t i2 = i0;
  best = -1.0;
  for (std::size_t i = 0; i < N; ++i)
    if (double d = norm(cross(pts[i1] - pts[i0], pts[i] - pts[i0])); d > best)
      best = d, i2 = i;
  if (best <= eps * diag) throw DegenerateBody("points are collinear");
  Vec pn = normalized(cross(pts[i1] - pts[i0], pts[i2] - pts[i0]));
  std::size_t i3 = i0;
  best = -1.0;
  for (std::size_t i = 0; i < N; ++i)
    if (double d = std::abs(dot(pn, pts[i] - pts[i0])); d > best) best = d, i3 = i;
  if (best <= eps) throw DegenerateBody("points are coplanar");

  Vec inside = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
  std::vector<Tri> faces;
  int a = static_cast<int>(i0), b = static_cast<int>(i1), c = static_cast<int>(i2),
      d = static_cast<int>(i3);
  faces.push_back(make_tri(pts, a, b, c, inside));
  faces.push_back(make_tri(pts, a, b, d, inside));
  faces.push_back(make_tri(pts, a, c, d, inside));
  faces.push_back(make_tri(pts, b, c, d, inside));

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < N; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);

  for (std::size_t pi : order) {
    const Vec& p = pts[pi];
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].alive && dot(faces[f].n, p) - faces[f].off > eps)
        visible.push_back(f);
    if (visible.empty()) continue;  // inside (or on) the current hull

    // horizon: directed edges of visible faces whose reverse lies on a live
    // invisible face
    std::map<std::pair<int, int>, int> edge_count;
    for (std::size_t f : visible) {
      const Tri& t = faces[f];
      int e[3][2] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (auto& ed : e) edge_count[{ed[0], ed[1]}]++;
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [ed, cnt] : edge_count)
      if (!edge_count.count({ed.second, ed.first})) horizon.push_back(ed);
    for (std::size_t f : visible) faces[f].alive = false;
    for (auto [u, v] : horizon)
      faces.push_back(make_tri(pts, u, v, static_cast<int>(pi), inside));
  }

  std::vector<Tri> live;
  for (const Tri& t : faces)
    if (t.alive) live.push_back(t);
  return live;
}

ConvexBody finalize_3d(const std::vector<Vec>& pts, const std::vector<Tri>& tris,
                       std::string provenance, double diag) {
  // merge coplanar triangles into polygonal facets
  struct Group {
    Vec n;
    double off;
    double area;
    std::vector<int> verts;  // union of member corners (deduped later)
  };
  std::vector<Group> groups;
  for (const Tri& t : tris) {
    double area = 0.5 * norm(cross(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a]));
    bool merged = false;
    for (Group& g : groups) {
      if (dot(g.n, t.n) > 1.0 - 1e-10 && std::abs(g.off - t.off) < 1e-8 * diag) {
        g.n = normalized(g.area * g.n + area * t.n);
        g.off = (g.area * g.off + area * t.off) / (g.area + area);
        g.area += area;
        g.verts.insert(g.verts.end(), {t.a, t.b, t.c});
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({t.n, t.off, area, {t.a, t.b, t.c}});
  }

  // vertices actually on the hull, sorted for a canonical order
  std::vector<int> used;
  for (const Group& g : groups) used.insert(used.end(), g.verts.begin(), g.verts.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> order(used.begin(), used.end());
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return lex_less(pts[i], pts[j]); });
  std::vector<int> remap(pts.size(), -1);
  ConvexBody body;
  body.dim = 3;
  body.provenance = std::move(provenance);
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    body.vertices.push_back(pts[order[k]]);
  }

  struct Facet {
    Vec n;
    double off;
    std::vector<int> ring;
  };
  std::vector<Facet> facets;
  for (Group& g : groups) {
    std::sort(g.verts.begin(), g.verts.end());
    g.verts.erase(std::unique(g.verts.begin(), g.verts.end()), g.verts.end());
    // order the ring ccw as seen from outside
    Vec centroid{};
    for (int v : g.verts) centroid = centroid + pts[v];
    centroid = (1.0 / static_cast<double>(g.verts.size())) * centroid;
    Vec t1 = std::abs(g.n.x) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    t1 = normalized(t1 - dot(t1, g.n) * g.n);
    Vec t2 = cross(g.n, t1);
    std::vector<std::pair<double, int>> ang;
    for (int v : g.verts)
      ang.emplace_back(std::atan2(dot(pts[v] - centroid, t2), dot(pts[v] - centroid, t1)), v);
    std::sort(ang.begin(), ang.end());
    std::vector<int> ring;
    for (auto& [_, v] : ang) ring.push_back(remap[v]);
    // refit the plane from the ordered ring (Newell), keeping group orientation
    Vec nn{};
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vec& u = body.vertices[ring[i]];
      const Vec& w = body.vertices[ring[(i + 1) % ring.size()]];
      nn = nn + cross(u, w);
    }
    if (dot(nn, g.n) < 0.0) {
      std::reverse(ring.begin(), ring.end());
      nn = -nn;
    }
    nn = normalized(nn);
    double off = 0.0;
    for (int v : ring) off += dot(nn, body.vertices[v]);
    off /= static_cast<double>(ring.size());
    // canonical ring start: smallest vertex id
    auto mn = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), mn, ring.end());
    facets.push_back({nn, off, std::move(ring)});
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return lex_less(a.n, b.n);
  });
  for (Facet& f : facets) {
    body.halfspaces.push_back({f.n, f.off});
    body.facets.push_back(std::move(f.ring));
  }
  body.diameter = max_pairwise_dist(body.vertices);
  return body;
}

// ------------------------------------------------- halfspace boundedness

// bounded  <=>  the origin lies strictly inside conv(unit normals)
void check_bounded(const std::vector<Halfspace>& hs, int dim) {
  if (hs.size() < static_cast<std::size_t>(dim) + 1)
    throw Unbounded("fewer halfspaces than dim+1");
  if (dim == 2) {
    std::vector<double> ang;
    for (const Halfspace& h : hs) ang.push_back(std::atan2(h.normal.y, h.normal.x));
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2.0 * std::acos(-1.0) - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i)
      gap = std::max(gap, ang[i] - ang[i - 1]);
    if (gap >= std::acos(-1.0) - 1e-9)
      throw Unbounded("normals leave an open halfplane uncovered");
    return;
  }
  std::vector<Vec> ends;
  for (const Halfspace& h : hs) ends.push_back(h.normal);
  ends = dedupe_points(std::move(ends), 1e-12);
  std::vector<Tri> tris;
  try {
    tris = hull_3d(ends, 2.0);
  } catch (const DegenerateBody&) {
    throw Unbounded("normals do not span all directions");
  }
  for (const Tri& t : tris)
    if (t.off <= 1e-7) throw Unbounded("normals leave an open halfspace uncovered");
}

bool solve_square(const std::vector<const Halfspace*>& rows, int dim, Vec& out) {
  if (dim == 2) {
    const Vec& a = rows[0]->normal;
    const Vec& b = rows[1]->normal;
    double det = a.x * b.y - a.y * b.x;
    if (std::abs(det) < 1e-12) return false;
    out = {(rows[0]->offset * b.y - rows[1]->offset * a.y) / det,
           (a.x * rows[1]->offset - b.x * rows[0]->offset) / det, 0.0};
    return true;
  }
  const Vec& a = rows[0]->normal;
  const Vec& b = rows[1]->normal;
  const Vec& c = rows[2]->normal;
  double det = dot(a, cross(b, c));
  if (std::abs(det) < 1e-12) return false;
  Vec rhs{rows[0]->offset, rows[1]->offset, rows[2]->offset};
  out = (1.0 / det) * (rhs.x * cross(b, c) + rhs.y * cross(c, a) + rhs.z * cross(a, b));
  return true;
}

std::vector<Vec> enumerate_vertices(const std::vector<Halfspace>& hs, int dim) {
  double sb = 1.0;
  for (const Halfspace& h : hs) sb = std::max(sb, std::abs(h.offset));
  const double slack = 1e-11 * sb;
  const std::size_t m = hs.size();
  std::vector<Vec> cands;
  auto try_subset = [&](const std::vector<const Halfspace*>& rows) {
    Vec x;
    if (!solve_square(rows, dim, x)) return;
    for (const Halfspace& h : hs)
      if (dot(h.normal, x) > h.offset + slack) return;
    cands.push_back(x);
  };
  if (dim == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) try_subset({&hs[i], &hs[j]});
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) try_subset({&hs[i], &hs[j], &hs[k]});
  }
  return cands;
}

}  // namespace

ConvexBody build_body(std::vector<Vec> points, int dim) {
  if (dim != 2 && dim != 3) throw DimensionUnsupported("build_body needs dim 2 or 3");
  if (dim == 2)
    for (Vec& p : points) p.z = 0.0;
  double diag = bbox_diag(points);
  if (diag <= 0.0) throw DegenerateBody("point set has no extent");
  points = dedupe_points(std::move(points), 1e-9 * diag);
  if (dim == 2) return finalize_2d(hull_2d(points, diag), "explicit");
  return finalize_3d(points, hull_3d(points, diag), "explicit", diag);
}

ConvexBody build_body(std::vector<Halfspace> halfspaces, int dim) {
  if (dim != 2 && dim != 3) throw DimensionUnsupported("build_body needs dim 2 or 3");
  for (Halfspace& h : halfspaces) {
    if (dim == 2) h.normal.z = 0.0;
    double ln = norm(h.normal);
    if (ln <= 0.0) throw InputError("halfspace with zero normal");
    h.normal = (1.0 / ln) * h.normal;
    h.offset /= ln;
  }
  check_bounded(halfspaces, dim);
  std::vector<Vec> cands = enumerate_vertices(halfspaces, dim);
  if (cands.size() < static_cast<std::size_t>(dim) + 1)
    throw DegenerateBody("halfspace intersection is empty or lower-dimensional");
  return build_body(std::move(cands), dim);
}

double volume(const ConvexBody& body) {
  if (body.dim == 2) {
    double s = 0.0;
    const auto& v = body.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += cross2(v[i], v[(i + 1) % v.size()]);
    return 0.5 * s;
  }
  double s = 0.0;
  for (std::size_t f = 0; f < body.facets.size(); ++f) {
    const auto& ring = body.facets[f];
    double area = 0.0;
    for (std::size_t i = 1; i + 1 < ring.size(); ++i)
      area += 0.5 * norm(cross(body.vertices[ring[i]] - body.vertices[ring[0]],
                               body.vertices[ring[i + 1]] - body.vertices[ring[0]]));
    s += body.halfspaces[f].offset * area;
  }
  return s / 3.0;
}

double perimeter(const ConvexBody& body) {
  double s = 0.0;
  if (body.dim == 2) {
    const auto& v = body.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += dist(v[i], v[(i + 1) % v.size()]);
    return s;
  }
  for (const auto& ring : body.facets)
    for (std::size_t i = 1; i + 1 < ring.size(); ++i)
      s += 0.5 * norm(cross(body.vertices[ring[i]] - body.vertices[ring[0]],
                            body.vertices[ring[i + 1]] - body.vertices[ring[0]]));
  return s;
}

std::pair<Vec, double> chebyshev_center(const ConvexBody& body) {
  // shift by the vertex centroid (strictly interior) so every rhs is
  // positive, then maximize r s.t. a.(c0 + u - w) + r <= b, u,w,r >= 0
  Vec c0{};
  for (const Vec& v : body.vertices) c0 = c0 + v;
  c0 = (1.0 / static_cast<double>(body.vertices.size())) * c0;
  const int n = body.dim;
  std::vector<std::vector<double>> A;
  std::vector<double> rhs;
  for (const Halfspace& h : body.halfspaces) {
    double coeff[3] = {h.normal.x, h.normal.y, h.normal.z};
    std::vector<double> row;
    for (int j = 0; j < n; ++j) row.push_back(coeff[j]);
    for (int j = 0; j < n; ++j) row.push_back(-coeff[j]);
    row.push_back(1.0);
    A.push_back(std::move(row));
    double b = h.offset - dot(h.normal, c0);
    if (b < 0.0) throw LPFailure("vertex centroid escaped the polytope");
    rhs.push_back(b);
  }
  std::vector<double> obj(2 * n + 1, 0.0);
  obj[2 * n] = 1.0;
  lp::Solution sol = lp::maximize(A, rhs, obj);
  Vec center = c0;
  double* comp[3] = {&center.x, &center.y, &center.z};
  for (int j = 0; j < n; ++j) *comp[j] += sol.v[j] - sol.v[n + j];
  return {center, sol.value};
}

double support_value(const ConvexBody& body, Vec direction) {
  if (body.dim == 2) direction.z = 0.0;
  if (norm(direction) <= 0.0) throw InputError("support direction is zero");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& v : body.vertices) best = std::max(best, dot(direction, v));
  return best;
}

double distance_to_boundary(const ConvexBody& body, Vec point) {
  if (body.dim == 2) point.z = 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : body.halfspaces)
    d = std::min(d, h.offset - dot(h.normal, point));
  if (d < -body.eps()) throw OutsideBody("point lies outside the polytope");
  return std::max(d, 0.0);
}

bool contains(const ConvexBody& body, Vec point, double slack) {
  if (body.dim == 2) point.z = 0.0;
  for (const Halfspace& h : body.halfspaces)
    if (dot(h.normal, point) > h.offset + slack + body.eps()) return false;
  return true;
}

ConvexBody erode(const ConvexBody& body, double t) {
  if (t < 0.0) throw InputError("erosion distance must be nonnegative");
  std::vector<Halfspace> hs = body.halfspaces;
  for (Halfspace& h : hs) h.offset -= t;
  try {
    ConvexBody inner = build_body(std::move(hs), body.dim);
    inner.provenance = body.provenance;
    return inner;
  } catch (const DegenerateBody&) {
    throw EmptyErosion("erosion at or beyond the inradius");
  }
}

namespace {

// width of the body in (unit) direction u
double width_in(const ConvexBody& body, Vec u) {
  return support_value(body, u) + support_value(body, -u);
}

Vec sph(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

std::pair<double, double> minwidth_3d(const ConvexBody& body) {
  // candidates: facet normals (exact when a facet realizes the width) plus a
  // Fibonacci sphere sweep, then Nelder-Mead polish in spherical coordinates
  Vec best_u{0, 0, 1};
  double best = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : body.halfspaces)
    if (double w = width_in(body, h.normal); w < best) best = w, best_u = h.normal;
  const int N = 2048;
  const double golden = std::acos(-1.0) * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < N; ++i) {
    double ct = 1.0 - 2.0 * (i + 0.5) / N;
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    Vec u{st * std::cos(golden * i), st * std::sin(golden * i), ct};
    if (double w = width_in(body, u); w < best) best = w, best_u = u;
  }

  double th0 = std::acos(std::clamp(best_u.z, -1.0, 1.0));
  double ph0 = std::atan2(best_u.y, best_u.x);
  auto f = [&](double th, double ph) { return width_in(body, sph(th, ph)); };
  // Nelder-Mead on (theta, phi)
  struct P {
    double th, ph, val;
  };
  double h0 = 0.05;
  std::array<P, 3> s = {P{th0, ph0, f(th0, ph0)}, P{th0 + h0, ph0, f(th0 + h0, ph0)},
                        P{th0, ph0 + h0, f(th0, ph0 + h0)}};
  for (int it = 0; it < 120; ++it) {
    std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.val < b.val; });
    double cth = 0.5 * (s[0].th + s[1].th), cph = 0.5 * (s[0].ph + s[1].ph);
    double rth = cth + (cth - s[2].th), rph = cph + (cph - s[2].ph);
    double rv = f(rth, rph);
    if (rv < s[0].val) {
      double eth = cth + 2.0 * (cth - s[2].th), eph = cph + 2.0 * (cph - s[2].ph);
      double ev = f(eth, eph);
      s[2] = ev < rv ? P{eth, eph, ev} : P{rth, rph, rv};
    } else if (rv < s[1].val) {
      s[2] = {rth, rph, rv};
    } else {
      double kth = cth + 0.5 * (s[2].th - cth), kph = cph + 0.5 * (s[2].ph - cph);
      double kv = f(kth, kph);
      if (kv < s[2].val) {
        s[2] = {kth, kph, kv};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].th = s[0].th + 0.5 * (s[i].th - s[0].th);
          s[i].ph = s[0].ph + 0.5 * (s[i].ph - s[0].ph);
          s[i].val = f(s[i].th, s[i].ph);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.val < b.val; });
  best = std::min(best, s[0].val);
  // sampling resolution bound: covering radius ~ sqrt(pi/N), width is
  // diameter-Lipschitz in the direction; the polish typically does far better
  double cover = std::sqrt(std::acos(-1.0) / N);
  double err = body.diameter * cover * cover;
  return {best, err};
}

}  // namespace

GeometrySummary summarize(const ConvexBody& body) {
  GeometrySummary s;
  s.volume = volume(body);
  s.perimeter = perimeter(body);
  auto [center, radius] = chebyshev_center(body);
  s.incenter = center;
  s.inradius = radius;
  s.diameter = body.diameter;
  if (body.dim == 2) {
    double best = std::numeric_limits<double>::infinity();
    for (const Halfspace& h : body.halfspaces)
      best = std::min(best, width_in(body, h.normal));
    s.minwidth = best;
    s.minwidth_error = 0.0;
  } else {
    auto [w, err] = minwidth_3d(body);
    s.minwidth = w;
    s.minwidth_error = err;
  }
  s.alpha = s.minwidth / s.diameter;
  double ratio = s.perimeter * s.inradius / s.volume;
  s.beta = ratio - 1.0;
  s.gamma = static_cast<double>(body.dim) - ratio;
  return s;
}

}  // namespace makai::geo
