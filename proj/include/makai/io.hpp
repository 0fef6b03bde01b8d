#pragma once

#include <string>

#include "makai/certificates.hpp"
#include "makai/families.hpp"
#include "makai/fem.hpp"
#include "makai/geometry.hpp"
#include "makai/lab.hpp"
#include "makai/profile.hpp"

namespace makai::io {

// Polytope JSON: {"dim": n, "halfspaces": [[a1..an, b], ...],
// "vertices": [[x1..xn], ...]}.  Either key may be omitted; the body is
// rebuilt from whichever representation is present (halfspaces win when
// both are given).  Throws InputError on malformed input, Unbounded /
// Degenerate from the rebuild.
geo::ConvexBody body_from_json(const std::string& text);
std::string body_to_json(const geo::ConvexBody& body);
geo::ConvexBody load_body(const std::string& path);

// FamilySpec JSON: {"family": "...", "dim": n, "params": {...}, "seed": s}
families::FamilySpec spec_from_json(const std::string& text);
std::string spec_to_json(const families::FamilySpec& spec);

// Inequality report: {"body", "n", "values": {...},
// "checks": [{"name","lhs","rhs","margin","pass"}],
// "remainders": {"alpha","beta","gamma"}} plus the solver config and code
// version for provenance.  Identical inputs serialize byte-identically.
std::string report_to_json(const lab::InequalityReport& report,
                           const lab::SolverConfig& config = {});
std::string checks_to_csv(const lab::InequalityReport& report);

// chain report keyed by check id
std::string chain_to_json(const profile::ProfileTable& table,
                          const profile::ChainReport& chain,
                          const std::string& body_id);
std::string profile_to_csv(const profile::ProfileTable& table);

std::string certificate_to_json(const cert::CertificateReport& report);

// one row per parameter
std::string sweep_to_csv(const lab::SweepReport& report);
std::string sweep_to_json(const lab::SweepReport& report);

std::string mesh_to_json(const fem::Mesh& mesh);  // debugging export

// machine-readable error envelope for the CLI's stderr
std::string error_json(const std::string& code, const std::string& message);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace makai::io
