#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace makai {

// Points and directions live in R^3; for dim==2 the z slot is kept at 0.
struct Vec {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec operator*(double s, Vec a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec operator-(Vec a) { return {-a.x, -a.y, -a.z}; }
inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec cross(Vec a, Vec b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double cross2(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec a, Vec b) { return norm(a - b); }
inline Vec normalized(Vec a) { return (1.0 / norm(a)) * a; }

namespace geo {

// Outward halfspace {x : normal . x <= offset}, normal always unit length.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

// Bounded full-dimensional convex polytope carrying both representations.
// Canonical after build: vertices deduplicated and sorted (2-D: ccw starting
// at the lexicographic minimum), redundant halfspaces dropped, facets[i] are
// the vertex ids tight on halfspaces[i] (an ordered ring when dim == 3).
struct ConvexBody {
  int dim = 2;
  std::vector<Halfspace> halfspaces;
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> facets;
  std::string provenance = "explicit";
  double diameter = 0.0;  // cached at build; geometric tolerances scale on it

  double eps() const { return 1e-9 * diameter; }
};

struct GeometrySummary {
  double volume = 0.0;
  double perimeter = 0.0;   // (n-1)-measure of the boundary
  double inradius = 0.0;
  Vec incenter;
  double minwidth = 0.0;
  double minwidth_error = 0.0;  // 0 when exact (dim 2); sampling bound in dim 3
  double diameter = 0.0;
  double alpha = 0.0;  // minwidth / diameter
  double beta = 0.0;   // perimeter * inradius / volume - 1
  double gamma = 0.0;  // dim - perimeter * inradius / volume
};

ConvexBody build_body(std::vector<Vec> points, int dim);
ConvexBody build_body(std::vector<Halfspace> halfspaces, int dim);

GeometrySummary summarize(const ConvexBody& body);

// Cheap pieces of the summary, used in inner loops.
double volume(const ConvexBody& body);
double perimeter(const ConvexBody& body);
std::pair<Vec, double> chebyshev_center(const ConvexBody& body);

double support_value(const ConvexBody& body, Vec direction);
double distance_to_boundary(const ConvexBody& body, Vec point);
bool contains(const ConvexBody& body, Vec point, double slack = 0.0);

// Inner parallel body {x : dist(x, boundary) >= t}; throws EmptyErosion for
// t >= inradius.
ConvexBody erode(const ConvexBody& body, double t);

}  // namespace geo
}  // namespace makai
