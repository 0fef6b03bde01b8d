#include "makai/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "makai/errors.hpp"
#include "makai/version.hpp"

namespace makai::io {

using json = nlohmann::ordered_json;

namespace {

// CSV cells keep full double precision so runs diff byte-for-byte
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<double> number_row(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " row is not an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError(std::string(what) + " entry is not a number");
    out.push_back(v.get<double>());
  }
  return out;
}

json check_to_json(const lab::BoundCheck& c) {
  return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs},
          {"margin", c.margin}, {"pass", c.pass}};
}

json config_to_json(const lab::SolverConfig& c) {
  return {{"mesh_h", c.mesh_h},   {"refinements", c.refinements},
          {"cg_tol", c.cg_tol},   {"node_cap", c.node_cap},
          {"d2_h", c.d2_h},       {"d2_depth", c.d2_depth},
          {"strict", c.strict}};
}

json values_to_json(const lab::InequalityReport& r) {
  return {{"volume", r.volume},
          {"perimeter", r.perimeter},
          {"inradius", r.inradius},
          {"diameter", r.diameter},
          {"minwidth", r.minwidth},
          {"minwidth_error", r.minwidth_error},
          {"T_lower", r.T_lower},
          {"T_extrap", r.T_extrap},
          {"T_err", r.T_err},
          {"d2_value", r.d2_value},
          {"d2_error", r.d2_error},
          {"F_lower", r.F_lower},
          {"F_extrap", r.F_extrap},
          {"F_err", r.F_err},
          {"F_d2", r.F_d2},
          {"F_d2_err", r.F_d2_err},
          {"makai_const", r.makai_const},
          {"polya_const", r.polya_const},
          {"deficit_lower", r.deficit_lower},
          {"deficit_d2", r.deficit_d2},
          {"analytic", r.analytic}};
}

}  // namespace

geo::ConvexBody body_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw InputError("polytope file is not a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("polytope needs an integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) throw InputError("dim must be 2 or 3");

  if (j.contains("halfspaces")) {
    if (!j["halfspaces"].is_array()) throw InputError("\"halfspaces\" is not an array");
    std::vector<geo::Halfspace> hs;
    for (const auto& row : j["halfspaces"]) {
      const auto v = number_row(row, "halfspace");
      if (static_cast<int>(v.size()) != dim + 1)
        throw InputError("halfspace rows need dim+1 numbers [a..., b]");
      geo::Halfspace h;
      h.normal = {v[0], v[1], dim == 3 ? v[2] : 0.0};
      h.offset = v[dim];
      hs.push_back(h);
    }
    auto body = geo::build_body(std::move(hs), dim);
    body.provenance = "json:halfspaces";
    return body;
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw InputError("\"vertices\" is not an array");
    std::vector<Vec> pts;
    for (const auto& row : j["vertices"]) {
      const auto v = number_row(row, "vertex");
      if (static_cast<int>(v.size()) != dim)
        throw InputError("vertex rows need dim numbers");
      pts.push_back({v[0], v[1], dim == 3 ? v[2] : 0.0});
    }
    auto body = geo::build_body(std::move(pts), dim);
    body.provenance = "json:vertices";
    return body;
  }
  throw InputError("polytope needs \"halfspaces\" or \"vertices\"");
}

std::string body_to_json(const geo::ConvexBody& body) {
  json hs = json::array();
  for (const auto& h : body.halfspaces) {
    json row = {h.normal.x, h.normal.y};
    if (body.dim == 3) row.push_back(h.normal.z);
    row.push_back(h.offset);
    hs.push_back(row);
  }
  json vs = json::array();
  for (const auto& v : body.vertices) {
    json row = {v.x, v.y};
    if (body.dim == 3) row.push_back(v.z);
    vs.push_back(row);
  }
  const json j = {{"dim", body.dim}, {"halfspaces", hs}, {"vertices", vs}};
  return j.dump(2) + "\n";
}

geo::ConvexBody load_body(const std::string& path) {
  return body_from_json(read_file(path));
}

families::FamilySpec spec_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw InputError("family spec needs a \"family\" string");
  families::FamilySpec s;
  s.family = families::family_from_name(j["family"].get<std::string>());
  if (j.contains("dim")) s.dim = j["dim"].get<int>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("params")) {
    const json& p = j["params"];
    if (!p.is_object()) throw InputError("\"params\" is not an object");
    if (p.contains("k")) s.k = p["k"].get<double>();
    if (p.contains("ell")) s.ell = p["ell"].get<double>();
    if (p.contains("base_facets")) s.base_facets = p["base_facets"].get<int>();
    if (p.contains("count")) s.count = p["count"].get<int>();
    if (p.contains("scale")) s.scale = p["scale"].get<double>();
    if (p.contains("edges")) s.edges = number_row(p["edges"], "edges");
  }
  return s;
}

std::string spec_to_json(const families::FamilySpec& spec) {
  json params = {{"k", spec.k},
                 {"ell", spec.ell},
                 {"base_facets", spec.base_facets},
                 {"count", spec.count},
                 {"scale", spec.scale},
                 {"edges", spec.edges}};
  const json j = {{"family", families::family_name(spec.family)},
                  {"dim", spec.dim},
                  {"params", params},
                  {"seed", spec.seed}};
  return j.dump(2) + "\n";
}

std::string report_to_json(const lab::InequalityReport& r,
                           const lab::SolverConfig& config) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  const json j = {{"body", r.body_id},
                  {"n", r.n},
                  {"values", values_to_json(r)},
                  {"checks", checks},
                  {"remainders",
                   {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}}},
                  {"all_pass", r.all_pass},
                  {"config", config_to_json(config)},
                  {"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

std::string checks_to_csv(const lab::InequalityReport& r) {
  std::string out = "name,lhs,rhs,margin,pass\n";
  for (const auto& c : r.checks)
    out += c.name + "," + num(c.lhs) + "," + num(c.rhs) + "," +
           num(c.margin) + "," + (c.pass ? "1" : "0") + "\n";
  return out;
}

std::string chain_to_json(const profile::ProfileTable& table,
                          const profile::ChainReport& chain,
                          const std::string& body_id) {
  json checks = json::object();
  for (const auto& c : chain.checks)
    checks[c.id] = {{"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin},
                    {"pass", c.pass}};
  const json j = {{"body", body_id},
                  {"n", table.dim},
                  {"inradius", table.inradius},
                  {"volume", table.volume0},
                  {"perimeter", table.perimeter0},
                  {"fit", {{"a", table.a}, {"z", table.z},
                           {"gamma_tilde", table.gamma_tilde}}},
                  {"t_cross", chain.t_cross},
                  {"equality_profile", chain.equality_profile},
                  {"checks", checks},
                  {"all_pass", chain.all_pass},
                  {"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

std::string profile_to_csv(const profile::ProfileTable& table) {
  std::string out = "t,mu,per,L,lambda\n";
  for (size_t i = 0; i < table.t.size(); ++i)
    out += num(table.t[i]) + "," + num(table.mu[i]) + "," +
           num(table.per[i]) + "," + num(table.L[i]) + "," +
           num(table.lambda(table.t[i])) + "\n";
  return out;
}

std::string certificate_to_json(const cert::CertificateReport& r) {
  const json j = {{"n", r.n},
                  {"grid", r.grid},
                  {"checks",
                   {{"triple_root_at_one", r.triple_root_at_one},
                    {"endpoint_values", r.endpoint_values},
                    {"d3_identity", r.d3_identity},
                    {"grid_nonpositive", r.grid_nonpositive},
                    {"cubic_contact", r.cubic_contact},
                    {"ratio_monotone", r.ratio_monotone},
                    {"d3_sign_change", r.d3_sign_change}}},
                  {"min_contact_slack", r.min_contact_slack},
                  {"min_monotone_slack", r.min_monotone_slack},
                  {"ztilde", r.ztilde},
                  {"sign_change_index", r.sign_change_index},
                  {"pass", r.pass},
                  {"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const lab::SweepReport& r) {
  std::string out =
      "param,F,makai_const,deficit,alpha,beta,gamma,all_pass\n";
  for (const auto& row : r.rows) {
    const auto& rep = row.report;
    out += num(row.param) + "," + num(rep.F_extrap) + "," +
           num(rep.makai_const) + "," +
           num(rep.makai_const - rep.F_extrap) + "," + num(rep.alpha) + "," +
           num(rep.beta) + "," + num(rep.gamma) + "," +
           (rep.all_pass ? "1" : "0") + "\n";
  }
  return out;
}

std::string sweep_to_json(const lab::SweepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    const auto& rep = row.report;
    rows.push_back({{"param", row.param},
                    {"F", rep.F_extrap},
                    {"deficit", rep.makai_const - rep.F_extrap},
                    {"alpha", rep.alpha},
                    {"beta", rep.beta},
                    {"gamma", rep.gamma},
                    {"all_pass", rep.all_pass}});
  }
  const json j = {{"family", families::family_name(r.family)},
                  {"dim", r.dim},
                  {"rows", rows},
                  {"fits",
                   {{"deficit_slope", r.deficit_slope},
                    {"alpha_slope", r.alpha_slope}}},
                  {"signatures",
                   {{"deficit_decreasing", r.deficit_decreasing},
                    {"alpha_decreasing", r.alpha_decreasing},
                    {"f_increasing", r.f_increasing},
                    {"f_decreasing", r.f_decreasing},
                    {"gamma_increasing", r.gamma_increasing}}},
                  {"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

std::string mesh_to_json(const fem::Mesh& mesh) {
  json nodes = json::array();
  for (const auto& v : mesh.nodes) {
    json row = {v.x, v.y};
    if (mesh.dim == 3) row.push_back(v.z);
    nodes.push_back(row);
  }
  json cells = json::array();
  for (const auto& c : mesh.cells) {
    json row = {c[0], c[1], c[2]};
    if (c[3] >= 0) row.push_back(c[3]);
    cells.push_back(row);
  }
  const json j = {{"dim", mesh.dim}, {"nodes", nodes}, {"cells", cells},
                  {"h_max", mesh.h_max}, {"level", mesh.level}};
  return j.dump(2) + "\n";
}

std::string error_json(const std::string& code, const std::string& message) {
  const json j = {{"error", code}, {"message", message}};
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out.good()) throw InputError("write failed: " + path);
}

}  // namespace makai::io
