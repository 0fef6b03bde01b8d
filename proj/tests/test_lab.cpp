#include <cmath>

#include "doctest.h"
#include "makai/errors.hpp"
#include "makai/fem.hpp"
#include "makai/lab.hpp"

using namespace makai;

namespace {

geo::ConvexBody square_body() {
  std::vector<Vec> pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  return geo::build_body(pts, 2);
}

geo::ConvexBody family_body(families::Family f, int dim, int seed = 1) {
  families::FamilySpec s;
  s.family = f;
  s.dim = dim;
  s.seed = seed;
  return families::make_body(s);
}

}  // namespace

TEST_CASE("stability constants") {
  CHECK(lab::gamma_deficit_constant(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(lab::gamma_deficit_constant(3) ==
        doctest::Approx(14.0 / 480.0).epsilon(1e-15));
  CHECK(lab::gamma_deficit_upper_constant(2) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lab::gamma_deficit_upper_constant(3) ==
        doctest::Approx(0.9).epsilon(1e-15));
  CHECK(lab::flatness_beta_constant(2) ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(lab::polya_beta_upper_constant(2) == doctest::Approx(1.0));
  CHECK(lab::polya_beta_lower_constant(2) ==
        doctest::Approx(1.0 / 5184.0).epsilon(1e-15));
  CHECK(families::makai_constant(2) == doctest::Approx(2.0 / 3.0));
  CHECK(families::makai_constant(3) == doctest::Approx(0.9));
  CHECK_THROWS_AS(lab::gamma_deficit_constant(1), DimensionUnsupported);
}

TEST_CASE("ball functional value from the closed forms") {
  // 3-ball: F = T P^2 / V^3 = (4pi/45)(4pi)^2 / (4pi/3)^3 = 3/5
  const double T = fem::analytic_torsion_ball(3, 1.0);
  const double P = 4.0 * M_PI, V = 4.0 * M_PI / 3.0;
  CHECK(T * P * P / (V * V * V) == doctest::Approx(0.6).epsilon(1e-14));
  // 2-ball: F = (pi/8)(2pi)^2 / pi^3 = 1/2
  const double T2 = fem::analytic_torsion_ball(2, 1.0);
  CHECK(T2 * 4.0 * M_PI * M_PI / (M_PI * M_PI * M_PI) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("evaluate: unit square") {
  const auto rep = lab::evaluate(square_body(), {}, "square");
  CHECK(rep.n == 2);
  CHECK(rep.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.perimeter == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.gamma <= 1e-10);
  CHECK(rep.beta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
  // T_h certified below the truth, extrapolation within 1%
  CHECK(rep.T_lower < 0.0351448);
  CHECK(rep.T_extrap == doctest::Approx(0.03514425).epsilon(0.01));
  CHECK(rep.F_lower == doctest::Approx(0.5623).epsilon(0.01));
  CHECK(rep.F_lower < 2.0 / 3.0);
  // tangential body: int d^2 P^2/V^3 equals the sharp constant exactly
  CHECK(rep.F_d2 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(rep.d2_value == doctest::Approx(1.0 / 24.0).epsilon(1e-9));
  for (const auto& c : rep.checks) {
    INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass);
}

TEST_CASE("evaluate: disk as 256-gon") {
  families::FamilySpec s;
  s.family = families::Family::regular_polygon;
  s.dim = 2;
  s.count = 256;
  const auto body = families::make_body(s);
  const auto rep = lab::evaluate(body, {}, s.id());
  CHECK(rep.F_lower == doctest::Approx(0.5).epsilon(0.01));
  CHECK(rep.gamma <= 1e-9);
  CHECK(rep.deficit_lower == doctest::Approx(1.0 / 6.0).epsilon(0.05));
  CHECK(rep.all_pass);
}

TEST_CASE("evaluate: tangential 3-d bodies sit on the d2 equality") {
  for (auto fam : {families::Family::box, families::Family::simplex}) {
    const auto body = family_body(fam, 3);
    const auto rep = lab::evaluate(body);
    INFO("family ", families::family_name(fam));
    CHECK(rep.gamma <= 1e-9);
    CHECK(rep.F_d2 == doctest::Approx(0.9).epsilon(1e-8));
    CHECK(rep.all_pass);
  }
}

TEST_CASE("evaluate: random corpus samples pass every bound") {
  for (int dim : {2, 3}) {
    for (auto fam :
         {families::Family::random_hull, families::Family::tangential_random}) {
      const auto body = family_body(fam, dim, 13);
      const auto rep = lab::evaluate(body);
      INFO("dim=", dim, " family=", families::family_name(fam));
      for (const auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " margin=", c.margin);
        CHECK(c.pass);
      }
      CHECK(rep.F_lower <= rep.F_d2);
      CHECK(rep.beta + rep.gamma == doctest::Approx(dim - 1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("evaluate is scale invariant") {
  const auto base = family_body(families::Family::random_hull, 2, 4);
  lab::SolverConfig cfg;
  cfg.refinements = 1;
  const auto r1 = lab::evaluate(base, cfg);
  for (double s : {0.5, 3.0}) {
    std::vector<Vec> pts;
    for (const auto& v : base.vertices) pts.push_back(s * v);
    const auto scaled = geo::build_body(pts, 2);
    const auto r2 = lab::evaluate(scaled, cfg);
    INFO("scale ", s);
    CHECK(r2.F_lower == doctest::Approx(r1.F_lower).epsilon(1e-9));
    CHECK(r2.F_d2 == doctest::Approx(r1.F_d2).epsilon(1e-9));
    CHECK(r2.beta == doctest::Approx(r1.beta).epsilon(1e-9));
    CHECK(r2.gamma - r1.gamma == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r2.alpha == doctest::Approx(r1.alpha).epsilon(1e-7));
    REQUIRE(r2.checks.size() == r1.checks.size());
    for (size_t i = 0; i < r1.checks.size(); ++i)
      CHECK(std::abs(r2.checks[i].margin - r1.checks[i].margin) <=
            1e-9 * std::max(1.0, std::abs(r1.checks[i].margin)));
  }
}

TEST_CASE("evaluate is deterministic") {
  const auto body = family_body(families::Family::random_hull, 3, 8);
  const auto r1 = lab::evaluate(body);
  const auto r2 = lab::evaluate(body);
  CHECK(r1.T_lower == r2.T_lower);
  CHECK(r1.d2_value == r2.d2_value);
  for (size_t i = 0; i < r1.checks.size(); ++i)
    CHECK(r1.checks[i].margin == r2.checks[i].margin);
}

TEST_CASE("analytic cone model approaches the sharp constant") {
  for (int n : {2, 3, 4, 5}) {
    families::FamilySpec s;
    s.family = families::Family::cone;
    s.dim = n;
    s.k = 1000.0;
    const auto rep = lab::evaluate_analytic(s);
    INFO("n=", n, " F=", rep.F_lower);
    CHECK(std::abs(rep.F_lower - rep.makai_const) <= 0.02 * rep.makai_const);
    CHECK(rep.gamma <= 1e-9);
    CHECK(rep.all_pass);
  }
}

TEST_CASE("analytic cone FEM cross-check") {
  // triangle of height 1/20: the FEM torsion must match the thin model
  families::FamilySpec s;
  s.family = families::Family::cone;
  s.dim = 2;
  s.k = 20.0;
  const auto body = families::make_body(s);
  lab::SolverConfig cfg;
  cfg.mesh_h = 0.05 / 8.0;
  cfg.refinements = 1;
  const auto rep = lab::evaluate(body, cfg, s.id());
  const double model = fem::thin_torsion_estimate(s);
  CHECK(rep.T_lower == doctest::Approx(model).epsilon(0.05));
  CHECK(rep.T_lower < model);  // thin model overshoots; FEM is a lower bound
  CHECK(rep.all_pass);
}

TEST_CASE("cone sweep: flattening signature") {
  families::FamilySpec s;
  s.family = families::Family::cone;
  s.dim = 2;
  const auto sw = lab::sweep(s, {2, 5, 10, 20, 50});
  CHECK(sw.rows.size() == 5);
  CHECK(sw.deficit_decreasing);
  CHECK(sw.alpha_decreasing);
  // |makai - F| ~ k^-2 and alpha ~ k^-1 for the flattening cones
  CHECK(sw.deficit_slope == doctest::Approx(-2.0).epsilon(0.1));
  CHECK(sw.alpha_slope == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("cylinder sweep: Polya signature") {
  families::FamilySpec s;
  s.family = families::Family::cylinder;
  s.dim = 3;
  const auto sw = lab::sweep(s, {10, 100});
  CHECK(sw.f_decreasing);
  CHECK(sw.gamma_increasing);
  CHECK(sw.rows.back().report.F_lower ==
        doctest::Approx(1.0 / 3.0).epsilon(0.05));
  CHECK(sw.rows.back().report.F_lower > 1.0 / 3.0);
  CHECK(sw.rows.back().report.gamma == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("corpus specification") {
  const auto c2 = lab::corpus_specs(2);
  REQUIRE(c2.size() == 200);
  CHECK(c2.front().family == families::Family::random_hull);
  CHECK(c2.front().seed == 1);
  CHECK(c2[100].family == families::Family::tangential_random);
  CHECK(c2.back().seed == 100);
  CHECK_THROWS_AS(lab::corpus_specs(4), DimensionUnsupported);
}

TEST_CASE("lab input validation") {
  families::FamilySpec box;
  box.family = families::Family::box;
  CHECK_THROWS_AS(lab::sweep(box, {1, 2}), InputError);
  families::FamilySpec cone;
  cone.family = families::Family::cone;
  CHECK_THROWS_AS(lab::sweep(cone, {5, 2}), InputError);
  CHECK_THROWS_AS(lab::sweep(cone, {5}), InputError);
  CHECK_THROWS_AS(lab::evaluate_analytic(box), Error);
}
