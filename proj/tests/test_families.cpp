#include "makai/families.hpp"

#include <cmath>

#include "doctest.h"
#include "makai/errors.hpp"

using namespace makai;
using namespace makai::families;
using doctest::Approx;

TEST_CASE("dimensional constants") {
  CHECK(makai_constant(2) == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(makai_constant(3) == Approx(0.9).epsilon(1e-15));
  CHECK(makai_constant(4) == Approx(16.0 / 15.0).epsilon(1e-15));
  CHECK(makai_constant(100) < 2.0);  // increases toward 2
  CHECK(makai_constant(100) > makai_constant(99));
  CHECK(kPolyaConstant == Approx(1.0 / 3.0));

  double pi = std::acos(-1.0);
  CHECK(unit_ball_volume(0) == Approx(1.0));
  CHECK(unit_ball_volume(1) == Approx(2.0));
  CHECK(unit_ball_volume(2) == Approx(pi).epsilon(1e-15));
  CHECK(unit_ball_volume(3) == Approx(4.0 * pi / 3.0).epsilon(1e-15));
  CHECK(unit_ball_volume(4) == Approx(pi * pi / 2.0).epsilon(1e-15));
  CHECK(unit_ball_volume(5) == Approx(8.0 * pi * pi / 15.0).epsilon(1e-15));
}

TEST_CASE("analytic geometry matches the realized bodies") {
  std::vector<FamilySpec> specs;
  FamilySpec s;
  s.family = Family::cone;
  s.dim = 2;
  s.k = 10;
  specs.push_back(s);
  s.dim = 3;
  s.base_facets = 32;
  specs.push_back(s);
  s = {};
  s.family = Family::cylinder;
  s.dim = 2;
  s.ell = 10;
  specs.push_back(s);
  s.dim = 3;
  specs.push_back(s);
  s = {};
  s.family = Family::box;
  s.dim = 2;
  s.edges = {2, 1};
  specs.push_back(s);
  s.dim = 3;
  s.edges = {1, 1, 0.1};
  specs.push_back(s);
  s = {};
  s.family = Family::simplex;
  s.dim = 2;
  s.scale = 2;
  specs.push_back(s);
  s.dim = 3;
  s.scale = 1;
  specs.push_back(s);
  s = {};
  s.family = Family::regular_polygon;
  s.dim = 2;
  s.count = 7;
  specs.push_back(s);
  s.count = 64;
  specs.push_back(s);

  for (const FamilySpec& spec : specs) {
    CAPTURE(spec.id());
    AnalyticGeometry g = analytic_geometry(spec);
    geo::ConvexBody body = make_body(spec);
    geo::GeometrySummary m = summarize(body);
    CHECK(m.volume == Approx(g.volume).epsilon(1e-12));
    CHECK(m.perimeter == Approx(g.perimeter).epsilon(1e-12));
    CHECK(m.inradius == Approx(g.inradius).epsilon(1e-7));
    CHECK(m.diameter == Approx(g.diameter).epsilon(1e-12));
    if (g.minwidth_exact) {
      double tol = m.minwidth_error + 1e-9 * g.diameter;
      CHECK(std::abs(m.minwidth - g.minwidth) <= tol);
    }
  }
}

TEST_CASE("frozen family values") {
  FamilySpec tet;
  tet.family = Family::simplex;
  tet.dim = 3;
  tet.scale = 1;
  AnalyticGeometry g = analytic_geometry(tet);
  CHECK(g.volume == Approx(1.0 / (6.0 * std::sqrt(2.0))).epsilon(1e-14));
  CHECK(g.perimeter == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g.inradius == Approx(1.0 / (2.0 * std::sqrt(6.0))).epsilon(1e-14));
  CHECK(g.minwidth == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  FamilySpec thin_box;
  thin_box.family = Family::box;
  thin_box.dim = 3;
  thin_box.edges = {1, 1, 0.1};
  g = analytic_geometry(thin_box);
  // P*R/V = 2.4*0.05/0.1 = 1.2
  CHECK(g.perimeter * g.inradius / g.volume == Approx(1.2).epsilon(1e-13));

  FamilySpec cone2;
  cone2.family = Family::cone;
  cone2.dim = 2;
  cone2.k = 50;
  g = analytic_geometry(cone2);
  CHECK(g.torsion_coeff * std::pow(g.thin, 3) ==
        Approx(1.0 / (24.0 * 50 * 50 * 50)).epsilon(1e-13));

  FamilySpec cyl;
  cyl.family = Family::cylinder;
  cyl.dim = 3;
  cyl.ell = 10;
  g = analytic_geometry(cyl);
  double ratio = g.perimeter * g.inradius / g.volume;
  CHECK(3.0 - ratio == Approx(1.8).epsilon(1e-13));  // gamma -> 2 as ell grows
}

TEST_CASE("tangential random bodies touch their inball everywhere") {
  for (int dim : {2, 3}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull}) {
      FamilySpec spec;
      spec.family = Family::tangential_random;
      spec.dim = dim;
      spec.seed = seed;
      geo::ConvexBody body = make_body(spec);
      geo::GeometrySummary s = summarize(body);
      CAPTURE(spec.id());
      CHECK(s.inradius == Approx(1.0).epsilon(1e-7));
      CHECK(std::abs(s.gamma) <= 1e-8);
      CHECK(norm(s.incenter) <= 1e-6);
    }
  }
}

TEST_CASE("random hulls are deterministic in the seed") {
  FamilySpec spec;
  spec.family = Family::random_hull;
  spec.dim = 3;
  spec.seed = 5;
  geo::ConvexBody a = make_body(spec);
  geo::ConvexBody b = make_body(spec);
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    CHECK(dist(a.vertices[i], b.vertices[i]) == 0.0);
  spec.seed = 6;
  geo::ConvexBody c = make_body(spec);
  CHECK(volume(c) != volume(a));
}

TEST_CASE("family input validation") {
  FamilySpec spec;
  spec.family = Family::cone;
  spec.k = -1;
  CHECK_THROWS_AS(make_body(spec), InputError);
  spec.k = 1;
  spec.dim = 4;
  CHECK_THROWS_AS(make_body(spec), DimensionUnsupported);
  CHECK_NOTHROW(analytic_geometry(spec));  // closed form still fine in dim 4
  FamilySpec rnd;
  rnd.family = Family::random_hull;
  CHECK_THROWS_AS(analytic_geometry(rnd), NoClosedForm);
  CHECK(family_from_name("cone") == Family::cone);
  CHECK_THROWS_AS(family_from_name("pyramid"), InputError);
}
