#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieconf/classify.hpp"
#include "lieconf/constructions.hpp"
#include "lieconf/invform.hpp"

namespace lieconf {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("p" for integers); plain JSON integers
/// are accepted on input.
Json to_json(const Rational& r);
Json to_json(const Vector& v);
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);

/// {"label","rank","simples":[[...]],"positives":[[...]]}
Json dump_roots(const RootSystem& rs);
/// Every nonzero N(a, b) as {"alpha","beta","n"}.
Json dump_constants(const StructureConstants& sc);

/// Input of the `solve` subcommand:
///   {"system": "B3", "case": "Parabolic", "delta": [...], "alpha": [...],
///    "extra_h": [[...], ...]}
/// "alpha" is required for Case1 and Parabolic; "extra_h" is optional.
struct ConfigRequest {
  Series series = Series::A;
  int rank = 1;
  CaseTag tag = CaseTag::Parabolic;
  Vector delta;
  std::optional<Vector> alpha;
  std::vector<Vector> extra_h;
};
/// Throws Error(InvalidInput) for malformed requests.
ConfigRequest config_request_from_json(const Json& j);
/// Splits "B3", "E8", "A1xA1" into series and rank.
std::pair<Series, int> parse_system_label(std::string_view label);

/// Derives, assembles and solves a request. Inconsistent requests give
/// {"dimension":0,"feasible":false,...,"inconsistent":reason}.
Json solve_request(const ConfigRequest& req);

Json to_json(const IsotropyConfig& c);
/// {"dimension","feasible","witness","unknowns", ...}
Json to_json(const FormSystem& fs, const FormSolution& sol);
Json to_json(const CandidateVerdict& v);
Json to_json(const SurvivorEntry& s);
Json to_json(const ClassificationReport& r);
Json to_json(const SurvivorComparison& c);
Json to_json(const ConstructionVerdict& v);
Json to_json(const RelationReport& r);
Json to_json(const CycleReport& r);
Json to_json(const G2Alignment& a, const RootSystem& rs);

/// Runs the explicit constructions: "sp", "sl", "g2", "so" (the displayed
/// so(7)/so(8) relations) or "all" (sp, sl and g2). Without n, sp runs for
/// n = 1..4 and sl for n = 2..5. Returns {"ok", "results": [...]}.
Json check_examples(const std::string& construction, std::optional<int> n,
                    std::size_t trials, std::uint64_t seed);

/// Reads {"survivors":[{"system","rank","case","delta","alpha","label"}]}.
/// Throws Error(InvalidInput) on malformed files.
std::vector<ExpectedSurvivor> load_expected(const std::filesystem::path& p);
std::vector<ExpectedSurvivor> expected_from_json(const Json& j);

/// One line per verdict, sorted by (label, rank, case, alpha).
std::string render_table(const ClassificationReport& r);

} // namespace lieconf
