#include "makai/families.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "makai/errors.hpp"
#include "makai/rng.hpp"

namespace makai::families {
namespace {

const double kPi = std::acos(-1.0);

// factorial for the small n we ever see
double fact(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Vec random_unit(Rng& rng, int dim) {
  if (dim == 2) {
    double a = 2.0 * kPi * rng.uniform01();
    return {std::cos(a), std::sin(a), 0.0};
  }
  double z = 2.0 * rng.uniform01() - 1.0;
  double phi = 2.0 * kPi * rng.uniform01();
  double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

// base of the dim-d cone: unit segment (d=2) or m-gon inscribed in the unit
// circle (d=3); analytic continuation for d>3 uses the unit ball
struct ConeBase {
  double measure;    // (d-1)-volume
  double boundary;   // (d-2)-measure of its relative boundary
  double inradius;
  double diam;
};

ConeBase cone_base(int dim, int m) {
  if (dim == 2) return {2.0, 2.0, 1.0, 2.0};
  if (dim == 3) {
    double area = 0.5 * m * std::sin(2.0 * kPi / m);
    double per = 2.0 * m * std::sin(kPi / m);
    double diam = (m % 2 == 0) ? 2.0 : 2.0 * std::cos(kPi / (2.0 * m));
    return {area, per, std::cos(kPi / m), diam};
  }
  int d = dim - 1;  // ball base in R^(dim-1)
  return {unit_ball_volume(d), d * unit_ball_volume(d), 1.0, 2.0};
}

}  // namespace

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"cone", Family::cone},
      {"cylinder", Family::cylinder},
      {"box", Family::box},
      {"simplex", Family::simplex},
      {"regular_polygon", Family::regular_polygon},
      {"tangential_random", Family::tangential_random},
      {"random_hull", Family::random_hull},
  };
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown family: " + name);
  return it->second;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cone: return "cone";
    case Family::cylinder: return "cylinder";
    case Family::box: return "box";
    case Family::simplex: return "simplex";
    case Family::regular_polygon: return "regular_polygon";
    case Family::tangential_random: return "tangential_random";
    case Family::random_hull: return "random_hull";
  }
  return "?";
}

int FamilySpec::resolved_count() const {
  if (count > 0) return count;
  switch (family) {
    case Family::regular_polygon: return 6;
    case Family::tangential_random: return dim == 2 ? 10 : 20;
    case Family::random_hull: return dim == 2 ? 12 : 20;
    default: return 0;
  }
}

std::string FamilySpec::id() const {
  std::ostringstream os;
  os << family_name(family) << "(dim=" << dim;
  switch (family) {
    case Family::cone:
      os << ",k=" << k;
      if (dim == 3) os << ",m=" << base_facets;
      break;
    case Family::cylinder: os << ",ell=" << ell; break;
    case Family::box:
      os << ",edges=";
      for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "x" : "") << edges[i];
      if (edges.empty()) os << "1";
      break;
    case Family::simplex: os << ",scale=" << scale; break;
    case Family::regular_polygon: os << ",m=" << resolved_count(); break;
    case Family::tangential_random:
    case Family::random_hull:
      os << ",count=" << resolved_count() << ",seed=" << seed;
      break;
  }
  os << ")";
  return os.str();
}

double unit_ball_volume(int k) {
  if (k < 0) throw InputError("ball volume needs k >= 0");
  double w0 = 1.0, w1 = 2.0;  // omega_0, omega_1
  if (k == 0) return w0;
  if (k == 1) return w1;
  double prev = w0, cur = w1;
  for (int i = 2; i <= k; ++i) {
    double next = prev * 2.0 * kPi / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

double makai_constant(int n) {
  if (n < 2) throw InputError("dimension must be >= 2");
  return 2.0 * n * n / ((n + 1.0) * (n + 2.0));
}

bool has_closed_form(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cone:
    case Family::cylinder:
    case Family::box:
    case Family::simplex:
      return true;
    case Family::regular_polygon:
      return spec.dim == 2;
    default:
      return false;
  }
}

geo::ConvexBody make_body(const FamilySpec& spec) {
  const int n = spec.dim;
  if (n != 2 && n != 3)
    throw DimensionUnsupported("bodies are realized in dim 2 or 3 only");
  geo::ConvexBody body;
  switch (spec.family) {
    case Family::cone: {
      if (spec.k <= 0.0) throw InputError("cone needs k > 0");
      double h = 1.0 / spec.k;
      std::vector<Vec> pts;
      if (n == 2) {
        pts = {{-1, 0, 0}, {1, 0, 0}, {0, h, 0}};
      } else {
        int m = spec.base_facets;
        if (m < 3) throw InputError("cone base needs >= 3 facets");
        for (int i = 0; i < m; ++i) {
          double a = 2.0 * kPi * i / m;
          pts.push_back({std::cos(a), std::sin(a), 0.0});
        }
        pts.push_back({0, 0, h});
      }
      body = geo::build_body(pts, n);
      break;
    }
    case Family::cylinder: {
      if (spec.ell <= 0.0) throw InputError("cylinder needs ell > 0");
      double h = 1.0 / spec.ell;
      std::vector<Vec> pts;
      if (n == 2) {
        pts = {{0, 0}, {1, 0}, {1, h}, {0, h}};
      } else {
        for (int i = 0; i < 8; ++i)
          pts.push_back({double(i & 1), double((i >> 1) & 1), h * ((i >> 2) & 1)});
      }
      body = geo::build_body(pts, n);
      break;
    }
    case Family::box: {
      std::vector<double> e = spec.edges;
      e.resize(n, 1.0);
      for (double v : e)
        if (v <= 0.0) throw InputError("box edges must be positive");
      std::vector<Vec> pts;
      for (int i = 0; i < (1 << n); ++i)
        pts.push_back({e[0] * (i & 1), e[1] * ((i >> 1) & 1),
                       n == 3 ? e[2] * ((i >> 2) & 1) : 0.0});
      body = geo::build_body(pts, n);
      break;
    }
    case Family::simplex: {
      double s = spec.scale;
      if (s <= 0.0) throw InputError("simplex needs scale > 0");
      std::vector<Vec> pts;
      if (n == 2) {
        pts = {{0, 0}, {s, 0}, {0.5 * s, 0.5 * std::sqrt(3.0) * s}};
      } else {
        double c = s / (2.0 * std::sqrt(2.0));
        pts = {{c, c, c}, {c, -c, -c}, {-c, c, -c}, {-c, -c, c}};
      }
      body = geo::build_body(pts, n);
      break;
    }
    case Family::regular_polygon: {
      if (n != 2) throw DimensionUnsupported("regular_polygon lives in dim 2");
      int m = spec.resolved_count();
      if (m < 3) throw InputError("polygon needs >= 3 vertices");
      std::vector<Vec> pts;
      for (int i = 0; i < m; ++i) {
        double a = 2.0 * kPi * i / m;
        pts.push_back({std::cos(a), std::sin(a), 0.0});
      }
      body = geo::build_body(pts, n);
      break;
    }
    case Family::tangential_random: {
      int m = spec.resolved_count();
      Rng rng(spec.seed);
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<geo::Halfspace> hs;
        for (int i = 0; i < m; ++i) hs.push_back({random_unit(rng, n), 1.0});
        try {
          body = geo::build_body(hs, n);
        } catch (const Unbounded&) {
          continue;  // redraw the whole set, deterministically
        }
        break;
      }
      if (body.vertices.empty())
        throw InputError("could not draw a bounded tangential body");
      break;
    }
    case Family::random_hull: {
      int cnt = spec.resolved_count();
      Rng rng(spec.seed);
      std::vector<Vec> pts;
      for (int i = 0; i < cnt; ++i)
        pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1),
                       n == 3 ? rng.uniform(-1, 1) : 0.0});
      body = geo::build_body(pts, n);
      break;
    }
  }
  body.provenance = spec.id();
  return body;
}

AnalyticGeometry analytic_geometry(const FamilySpec& spec) {
  const int n = spec.dim;
  if (n < 2) throw InputError("dimension must be >= 2");
  if (!has_closed_form(spec))
    throw NoClosedForm("family " + family_name(spec.family) + " has no closed form");
  AnalyticGeometry g;
  switch (spec.family) {
    case Family::cone: {
      if (spec.k <= 0.0) throw InputError("cone needs k > 0");
      double h = 1.0 / spec.k;
      ConeBase base = cone_base(n, spec.base_facets);
      double slant = std::sqrt(base.inradius * base.inradius + h * h);
      g.volume = base.measure * h / n;
      // each lateral face is the cone over a base facet F with the apex:
      // measure |F| * slant / (n-1)
      g.perimeter = base.measure + base.boundary * slant / (n - 1.0);
      g.inradius = base.inradius * h / (slant + base.inradius);
      g.minwidth = h;  // exact once the base is wider than the height
      g.minwidth_exact = h <= base.inradius;
      g.diameter = std::max(base.diam, std::sqrt(1.0 + h * h));
      g.torsion_coeff = base.measure / (2.0 * n * (n + 1.0) * (n + 2.0));
      g.thin = h;
      g.base_inradius = base.inradius;
      break;
    }
    case Family::cylinder: {
      if (spec.ell <= 0.0) throw InputError("cylinder needs ell > 0");
      double h = 1.0 / spec.ell;
      // base: unit (n-1)-cube
      double base_per = 2.0 * (n - 1.0);
      g.volume = h;
      g.perimeter = 2.0 + base_per * h;
      g.inradius = std::min(h, 1.0) / 2.0;
      g.minwidth = std::min(h, 1.0);
      g.diameter = std::sqrt((n - 1.0) + h * h);
      g.torsion_coeff = 1.0 / 12.0;
      g.thin = h;
      g.base_inradius = 0.5;
      break;
    }
    case Family::box: {
      std::vector<double> e = spec.edges;
      e.resize(n, 1.0);
      double vol = 1.0, d2 = 0.0, mn = e[0];
      for (double v : e) {
        if (v <= 0.0) throw InputError("box edges must be positive");
        vol *= v;
        d2 += v * v;
        mn = std::min(mn, v);
      }
      double per = 0.0;
      for (double v : e) per += 2.0 * vol / v;
      g.volume = vol;
      g.perimeter = per;
      g.inradius = mn / 2.0;
      g.minwidth = mn;
      g.diameter = std::sqrt(d2);
      break;
    }
    case Family::simplex: {
      double s = spec.scale;
      g.volume = std::pow(s, n) / fact(n) * std::sqrt((n + 1.0) / std::pow(2.0, n));
      double facet =
          std::pow(s, n - 1) / fact(n - 1) * std::sqrt(n / std::pow(2.0, n - 1));
      g.perimeter = (n + 1.0) * facet;
      g.inradius = n * g.volume / g.perimeter;
      g.diameter = s;
      if (n == 2) {
        g.minwidth = 0.5 * std::sqrt(3.0) * s;
      } else if (n == 3) {
        g.minwidth = s / std::sqrt(2.0);  // distance between opposite edges
      } else {
        g.minwidth = s / std::sqrt(2.0);
        g.minwidth_exact = false;
      }
      break;
    }
    case Family::regular_polygon: {
      int m = spec.resolved_count();
      g.volume = 0.5 * m * std::sin(2.0 * kPi / m);
      g.perimeter = 2.0 * m * std::sin(kPi / m);
      g.inradius = std::cos(kPi / m);
      g.diameter = (m % 2 == 0) ? 2.0 : 2.0 * std::cos(kPi / (2.0 * m));
      g.minwidth = (m % 2 == 0) ? 2.0 * g.inradius : 1.0 + std::cos(kPi / m);
      break;
    }
    default:
      break;
  }
  return g;
}

}  // namespace makai::families
