#pragma once

#include <string>
#include <variant>
#include <vector>

#include "simplexcover/rational.hpp"

namespace simplexcover {

enum class Relation { LessEqual, GreaterEqual, Equal, Less, Greater };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

/// Exact where possible; a double only where the quantity is irrational.
using AuditValue = std::variant<Rational, double>;

double to_double(const AuditValue& v);
std::string to_decimal(const AuditValue& v);

/// One inequality instance: lhs `relation` rhs.
struct AuditRow {
  std::string check;
  AuditValue lhs;
  AuditValue rhs;
  Relation relation = Relation::LessEqual;
  bool satisfied = false;
  std::string context;

  /// Recomputes `satisfied` from lhs, rhs and relation. Comparisons are exact
  /// when both sides are rational.
  bool evaluate() const;
};

class AuditReport {
 public:
  AuditReport() = default;
  explicit AuditReport(std::string title) : title_(std::move(title)) {}

  const AuditRow& add(std::string check, AuditValue lhs, Relation relation, AuditValue rhs, std::string context = {});
  void append(const AuditReport& other);

  const std::string& title() const { return title_; }
  const std::vector<AuditRow>& rows() const { return rows_; }
  bool all_satisfied() const;
  /// First row with the given check name, or nullptr.
  const AuditRow* find(const std::string& check) const;

 private:
  std::string title_;
  std::vector<AuditRow> rows_;
};

}  // namespace simplexcover
