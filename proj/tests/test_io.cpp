#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "json.hpp"
#include "makai/errors.hpp"
#include "makai/io.hpp"
#include "makai/lab.hpp"
#include "makai/profile.hpp"
#include "makai/version.hpp"

using namespace makai;

namespace {

geo::ConvexBody unit_square() {
  return geo::build_body(
      std::vector<Vec>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, 2);
}

}  // namespace

TEST_CASE("polytope JSON round trip") {
  const auto body = unit_square();
  const std::string text = io::body_to_json(body);
  const auto back = io::body_from_json(text);
  CHECK(back.dim == 2);
  REQUIRE(back.vertices.size() == body.vertices.size());
  REQUIRE(back.halfspaces.size() == body.halfspaces.size());
  const auto s0 = geo::summarize(body);
  const auto s1 = geo::summarize(back);
  CHECK(s1.volume == doctest::Approx(s0.volume).epsilon(1e-12));
  CHECK(s1.perimeter == doctest::Approx(s0.perimeter).epsilon(1e-12));
  CHECK(s1.inradius == doctest::Approx(s0.inradius).epsilon(1e-12));
}

TEST_CASE("either polytope key may be omitted") {
  SUBCASE("vertices only") {
    const auto body = io::body_from_json(
        R"({"dim": 2, "vertices": [[0,0],[2,0],[0,2]]})");
    CHECK(body.halfspaces.size() == 3);
    CHECK(geo::summarize(body).volume == doctest::Approx(2.0));
  }
  SUBCASE("halfspaces only") {
    const auto body = io::body_from_json(
        R"({"dim": 2, "halfspaces":
            [[-1,0,0],[0,-1,0],[1,0,1],[0,1,1]]})");
    CHECK(body.vertices.size() == 4);
    CHECK(geo::summarize(body).volume == doctest::Approx(1.0));
  }
  SUBCASE("halfspaces win when both present") {
    // vertices describe a different (bigger) square; halfspaces define
    // the unit square and take precedence
    const auto body = io::body_from_json(
        R"({"dim": 2,
            "halfspaces": [[-1,0,0],[0,-1,0],[1,0,1],[0,1,1]],
            "vertices": [[0,0],[9,0],[9,9],[0,9]]})");
    CHECK(geo::summarize(body).volume == doctest::Approx(1.0));
  }
  SUBCASE("3-D vertices") {
    const auto body = io::body_from_json(
        R"({"dim": 3, "vertices":
            [[0,0,0],[1,0,0],[0,1,0],[0,0,1],
             [1,1,0],[1,0,1],[0,1,1],[1,1,1]]})");
    CHECK(geo::summarize(body).volume == doctest::Approx(1.0));
  }
}

TEST_CASE("malformed polytope input throws InputError") {
  CHECK_THROWS_AS(io::body_from_json("not json"), InputError);
  CHECK_THROWS_AS(io::body_from_json("[1,2,3]"), InputError);
  CHECK_THROWS_AS(io::body_from_json(R"({"vertices": [[0,0]]})"), InputError);
  CHECK_THROWS_AS(io::body_from_json(R"({"dim": 4, "vertices": [[0,0]]})"),
                  InputError);
  CHECK_THROWS_AS(io::body_from_json(R"({"dim": 2})"), InputError);
  CHECK_THROWS_AS(
      io::body_from_json(R"({"dim": 2, "vertices": [[0,0,0],[1,0],[0,1]]})"),
      InputError);
  CHECK_THROWS_AS(
      io::body_from_json(R"({"dim": 2, "halfspaces": [[1,0],[0,1]]})"),
      InputError);
  CHECK_THROWS_AS(
      io::body_from_json(R"({"dim": 2, "vertices": [["a",0],[1,0],[0,1]]})"),
      InputError);
  // well-formed JSON but geometrically unbounded: propagate the build error
  CHECK_THROWS_AS(io::body_from_json(
                      R"({"dim": 2, "halfspaces": [[1,0,1],[0,1,1]]})"),
                  Unbounded);
}

TEST_CASE("family spec JSON round trip") {
  families::FamilySpec s;
  s.family = families::Family::cone;
  s.dim = 3;
  s.k = 25.0;
  s.base_facets = 48;
  s.seed = 7;
  const auto back = io::spec_from_json(io::spec_to_json(s));
  CHECK(back.family == s.family);
  CHECK(back.dim == s.dim);
  CHECK(back.k == s.k);
  CHECK(back.base_facets == s.base_facets);
  CHECK(back.seed == s.seed);

  const auto boxy = io::spec_from_json(
      R"({"family": "box", "dim": 2, "params": {"edges": [2, 0.5]}})");
  CHECK(boxy.edges == std::vector<double>{2.0, 0.5});
  CHECK(boxy.seed == 1);  // default

  CHECK_THROWS_AS(io::spec_from_json(R"({"dim": 2})"), InputError);
  CHECK_THROWS_AS(io::spec_from_json(R"({"family": "devilish"})"), InputError);
}

TEST_CASE("inequality report serialization") {
  lab::SolverConfig cfg;
  cfg.refinements = 1;
  const auto rep = lab::evaluate(unit_square(), cfg, "square");
  const std::string text = io::report_to_json(rep, cfg);

  const auto j = nlohmann::json::parse(text);
  CHECK(j["body"] == "square");
  CHECK(j["n"] == 2);
  CHECK(j["values"].contains("F_lower"));
  CHECK(j["values"].contains("makai_const"));
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("margin"));
    CHECK(c.contains("pass"));
  }
  CHECK(j["remainders"].contains("alpha"));
  CHECK(j["remainders"].contains("beta"));
  CHECK(j["remainders"].contains("gamma"));
  CHECK(j["config"]["cg_tol"] == cfg.cg_tol);
  CHECK(j["version"] == std::string(kVersion));

  // identical runs serialize byte-identically
  const auto rep2 = lab::evaluate(unit_square(), cfg, "square");
  CHECK(io::report_to_json(rep2, cfg) == text);

  const std::string csv = io::checks_to_csv(rep);
  CHECK(csv.rfind("name,lhs,rhs,margin,pass\n", 0) == 0);
}

TEST_CASE("profile CSV and chain JSON") {
  const auto tab = profile::profile_table(unit_square(), 32);
  const std::string csv = io::profile_to_csv(tab);
  CHECK(csv.rfind("t,mu,per,L,lambda\n", 0) == 0);
  size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == tab.t.size() + 1);
  CHECK(io::profile_to_csv(tab) == csv);

  const auto chain = profile::verify_profile_chain(tab);
  const auto j = nlohmann::json::parse(io::chain_to_json(tab, chain, "square"));
  CHECK(j["checks"].is_object());
  for (const auto& c : chain.checks) {
    REQUIRE(j["checks"].contains(c.id));
    CHECK(j["checks"][c.id]["pass"] == c.pass);
  }
  CHECK(j["all_pass"] == chain.all_pass);
  CHECK(j["fit"].contains("z"));
}

TEST_CASE("certificate and sweep serialization") {
  const auto cr = cert::certify_control_polynomial(3, 2000);
  const auto j = nlohmann::json::parse(io::certificate_to_json(cr));
  CHECK(j["n"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["checks"]["cubic_contact"] == true);

  families::FamilySpec base;
  base.family = families::Family::cone;
  base.dim = 2;
  const auto sw = lab::sweep(base, {10.0, 100.0, 1000.0});
  const std::string csv = io::sweep_to_csv(sw);
  CHECK(csv.rfind("param,F,makai_const,deficit,alpha,beta,gamma,all_pass\n",
                  0) == 0);
  size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == sw.rows.size() + 1);

  const auto js = nlohmann::json::parse(io::sweep_to_json(sw));
  CHECK(js["rows"].size() == sw.rows.size());
  CHECK(js["signatures"]["deficit_decreasing"] == true);
}

TEST_CASE("file round trip and error envelope") {
  const std::string path = "/tmp/makai_io_test.json";
  io::write_file(path, "{\"x\": 1}\n");
  CHECK(io::read_file(path) == "{\"x\": 1}\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file("/nonexistent/nope.json"), InputError);

  CHECK(io::error_json("InputError", "bad flag") ==
        "{\"error\":\"InputError\",\"message\":\"bad flag\"}\n");
}
