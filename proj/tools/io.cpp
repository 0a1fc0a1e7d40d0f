#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "simplexcover/errors.hpp"

namespace simplexcover::io {

namespace {

json integer_json(const BigInt& v) {
  if (fits_int64(v)) return json(std::int64_t(v.get_si()));
  return json(v.get_str());
}

BigInt integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                                           : BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("/: expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("/: missing field \"") + key + "\"");
  return *it;
}

std::vector<RationalPoint> point_list(const json& j, const std::string& where, std::optional<std::size_t> dim) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of points");
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    const std::string at = child(where, i);
    if (!row.is_array()) throw InputError(at + ": expected an array of coordinates");
    if (dim && row.size() != *dim)
      throw InputError(at + ": expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(row.size()));
    RationalPoint p(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) p[c] = rational_from_json(row[c], child(at, c));
    if (!dim) dim = row.size();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Turn the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (byte " +
                     std::to_string(e.byte) + ")");
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

json to_json(const Rational& q) { return json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

json to_json(const RationalPoint& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const IntegerPoint& p) { return json(p); }

json exact_value(const Rational& q) { return {{"value", to_json(q)}, {"decimal", to_decimal(q)}}; }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where + ": expected a [num, den] pair");
    BigInt num = integer_from_json(j[0], child(where, std::size_t(0)));
    BigInt den = integer_from_json(j[1], child(where, std::size_t(1)));
    if (den == 0) throw InputError(where + ": zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a [num, den] pair, got " + j.dump());
}

VPolytope polytope_from_json(const json& j, const std::string& source) {
  try {
    const json& d = require(j, "dim");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw InputError("/dim: expected a positive integer");
    const std::size_t dim = d.get<std::size_t>();
    return convex_hull(point_list(require(j, "vertices"), "/vertices", dim));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

Lattice lattice_from_json(const json& j, const std::string& source) {
  std::vector<RationalPoint> rows;
  try {
    const json& b = require(j, "basis");
    std::optional<std::size_t> dim;
    if (auto it = j.find("dim"); it != j.end()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 1) throw InputError("/dim: expected a positive integer");
      dim = it->get<std::size_t>();
    }
    rows = point_list(b, "/basis", dim);
    if (rows.size() != rows.front().dim())
      throw InputError("/basis: expected a square matrix, got " + std::to_string(rows.size()) + " rows of length " +
                       std::to_string(rows.front().dim()));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  try {
    return Lattice(RationalMatrix::from_rows(rows));
  } catch (const DegenerateInput& e) {
    throw InputError(source + ": /basis: " + e.what());
  }
}

json polytope_to_json(const VPolytope& k) {
  json v = json::array();
  for (const auto& p : k.vertices()) v.push_back(to_json(p));
  return {{"dim", k.dim()}, {"vertices", v}};
}

json lattice_to_json(const Lattice& lattice) { return {{"dim", lattice.dim()}, {"basis", to_json(lattice.basis())}}; }

json to_json(const AuditRow& row) {
  auto side = [](const AuditValue& v) -> json {
    if (const auto* q = std::get_if<Rational>(&v)) return to_json(*q);
    return json(std::get<double>(v));
  };
  return {{"check", row.check},
          {"lhs", side(row.lhs)},
          {"relation", to_string(row.relation)},
          {"rhs", side(row.rhs)},
          {"lhs_decimal", to_decimal(row.lhs)},
          {"rhs_decimal", to_decimal(row.rhs)},
          {"satisfied", row.satisfied},
          {"context", row.context}};
}

json to_json(const AuditReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows()) rows.push_back(to_json(r));
  return {{"title", report.title()}, {"all_satisfied", report.all_satisfied()}, {"rows", rows}};
}

json to_json(const CoveringCertificate& cert) {
  json out{{"verdict", to_string(cert.verdict)}};
  if (cert.witness) out["witness"] = to_json(*cert.witness);
  out["depth_used"] = cert.depth_used;
  json cands = json::array();
  for (const auto& c : cert.candidate_translates) cands.push_back(to_json(c));
  out["candidates"] = cands;
  out["boxes_accepted"] = cert.boxes_accepted;
  out["cells_resolved"] = cert.cells_resolved;
  json open = json::array();
  for (const auto& b : cert.open_boxes) open.push_back({{"corner", to_json(b.corner)}, {"depth", b.depth}});
  out["open_boxes"] = open;
  return out;
}

json to_json(const MultiplicityEstimate& e) {
  return {{"samples", e.samples},
          {"mean_inverse_multiplicity", e.mean_inverse_multiplicity},
          {"estimated_det", e.estimated_det},
          {"std_error", e.std_error},
          {"histogram", e.histogram}};
}

json to_json(const ScaleBracket& b) {
  return {{"t_lo", exact_value(b.t_lo)}, {"t_hi", exact_value(b.t_hi)}, {"upper", to_json(b.upper)}};
}

SearchConfig search_config_from_json(const json& j, const std::string& source) {
  if (!j.is_object()) throw InputError(source + ": expected an object");
  SearchConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    const std::string at = source + ": /" + key;
    auto count = [&]() -> std::size_t {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InputError(at + ": expected a nonnegative integer");
      return v.get<std::size_t>();
    };
    auto real = [&]() -> double {
      if (!v.is_number()) throw InputError(at + ": expected a number");
      return v.get<double>();
    };
    if (key == "dim") cfg.dim = count();
    else if (key == "restarts") cfg.restarts = count();
    else if (key == "iterations") cfg.iterations = count();
    else if (key == "seed") cfg.seed = count();
    else if (key == "depth") cfg.depth = unsigned(count());
    else if (key == "max_denominator") cfg.max_denominator = std::int64_t(count());
    else if (key == "workers") cfg.workers = unsigned(count());
    else if (key == "scale_tolerance") {
      try {
        cfg.scale_tolerance = rational_from_json(v, "/" + key);
      } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
      }
    } else if (key == "method") {
      if (!v.is_string()) throw InputError(at + ": expected a string");
      cfg.method = v.get<std::string>();
    } else if (key == "initial_step") cfg.initial_step = real();
    else if (key == "reflection") cfg.reflection = real();
    else if (key == "expansion") cfg.expansion = real();
    else if (key == "contraction") cfg.contraction = real();
    else if (key == "shrink") cfg.shrink = real();
    else if (key == "anneal_temperature") cfg.anneal_temperature = real();
    else if (key == "anneal_cooling") cfg.anneal_cooling = real();
    else if (key == "search_tolerance") cfg.search_tolerance = real();
    else throw InputError(at + ": unknown field");
  }
  return cfg;
}

json to_json(const SearchConfig& cfg) {
  return {{"dim", cfg.dim},
          {"restarts", cfg.restarts},
          {"iterations", cfg.iterations},
          {"seed", cfg.seed},
          {"depth", cfg.depth},
          {"scale_tolerance", to_json(cfg.scale_tolerance)},
          {"max_denominator", cfg.max_denominator},
          {"method", cfg.method},
          {"initial_step", cfg.initial_step},
          {"reflection", cfg.reflection},
          {"expansion", cfg.expansion},
          {"contraction", cfg.contraction},
          {"shrink", cfg.shrink},
          {"anneal_temperature", cfg.anneal_temperature},
          {"anneal_cooling", cfg.anneal_cooling},
          {"search_tolerance", cfg.search_tolerance},
          {"workers", cfg.workers}};
}

json to_json(const SearchResult& r) {
  return {{"best_basis", to_json(r.best_basis)},
          {"best_density", exact_value(r.best_density)},
          {"best_restart", r.best_restart},
          {"t_lo", exact_value(r.t_lo)},
          {"t_hi", exact_value(r.t_hi)},
          {"certificate", to_json(r.certificate)},
          {"audits", to_json(r.audits)},
          {"evaluations", r.history.size()}};
}

std::string history_csv(const std::vector<HistoryEntry>& history) {
  std::string out = "iteration,restart,value,best\n";
  char buf[128];
  for (const auto& h : history) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", h.iteration, h.restart, h.value, h.best);
    out += buf;
  }
  return out;
}

}  // namespace simplexcover::io
