#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexcover/diffbody.hpp"
#include "simplexcover/lattice_cover.hpp"
#include "simplexcover/optimizer.hpp"
#include "json.hpp"

namespace simplexcover::io {

using nlohmann::json;

/// Malformed input. The message carries the file and a line/column or a
/// JSON pointer to the offending value.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_json(const std::string& text, const std::string& source);
json load_json(const std::filesystem::path& path);

/// [num, den]; integers beyond int64 are written as decimal strings.
json to_json(const Rational& q);
json to_json(const RationalPoint& p);
json to_json(const RationalMatrix& m);
json to_json(const IntegerPoint& p);
/// [num, den] plus a "decimal" rendering, as an object.
json exact_value(const Rational& q);

/// Accepts [num, den], an integer, or a "p/q" string. `where` is a JSON pointer.
Rational rational_from_json(const json& j, const std::string& where);

VPolytope polytope_from_json(const json& j, const std::string& source);
Lattice lattice_from_json(const json& j, const std::string& source);
json polytope_to_json(const VPolytope& k);
json lattice_to_json(const Lattice& lattice);

json to_json(const AuditRow& row);
json to_json(const AuditReport& report);
json to_json(const CoveringCertificate& cert);
json to_json(const MultiplicityEstimate& estimate);
json to_json(const ScaleBracket& bracket);

/// Unknown keys are rejected.
SearchConfig search_config_from_json(const json& j, const std::string& source);
json to_json(const SearchConfig& cfg);
json to_json(const SearchResult& result);
std::string history_csv(const std::vector<HistoryEntry>& history);

}  // namespace simplexcover::io
