// JSON serialization of reports and the points-file format used by the
// defect/coplanarity commands.

#ifndef FACTO_JSON_REPORT_HPP
#define FACTO_JSON_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "construct.hpp"
#include "criteria.hpp"
#include "invariants.hpp"
#include "singularity.hpp"

namespace facto {

nlohmann::json to_json(const ProjectivePoint& pt);
nlohmann::json to_json(const SingularPointReport& rep);
nlohmann::json to_json(const AnalyzeResult& result);
nlohmann::json to_json(const Verdict& verdict, const MultiplicityProfile& profile);
nlohmann::json to_json(const DefectReport& report);
nlohmann::json to_json(const ConstructionResult& result);
nlohmann::json intersection_json(const BlowupClass& cls, int n, const mpz_class& value);

// One point per line, comma-separated rational coordinates; '#' starts a
// comment; blank lines are ignored.
std::vector<ProjectivePoint> parse_points_text(const std::string& text);

}  // namespace facto

#endif
