#include "simplexcover/audit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace simplexcover {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "==";
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
  }
  return "?";
}

Relation relation_from_string(const std::string& s) {
  if (s == "<=") return Relation::LessEqual;
  if (s == ">=") return Relation::GreaterEqual;
  if (s == "==") return Relation::Equal;
  if (s == "<") return Relation::Less;
  if (s == ">") return Relation::Greater;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

double to_double(const AuditValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->get_d();
  return std::get<double>(v);
}

std::string to_decimal(const AuditValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_decimal(*r, 20);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

namespace {

template <typename T>
bool compare(const T& a, Relation r, const T& b) {
  switch (r) {
    case Relation::LessEqual: return a <= b;
    case Relation::GreaterEqual: return a >= b;
    case Relation::Equal: return a == b;
    case Relation::Less: return a < b;
    case Relation::Greater: return a > b;
  }
  return false;
}

}  // namespace

bool AuditRow::evaluate() const {
  const auto* a = std::get_if<Rational>(&lhs);
  const auto* b = std::get_if<Rational>(&rhs);
  if (a && b) return compare(*a, relation, *b);
  return compare(to_double(lhs), relation, to_double(rhs));
}

const AuditRow& AuditReport::add(std::string check, AuditValue lhs, Relation relation, AuditValue rhs,
                                 std::string context) {
  AuditRow row{std::move(check), std::move(lhs), std::move(rhs), relation, false, std::move(context)};
  row.satisfied = row.evaluate();
  rows_.push_back(std::move(row));
  return rows_.back();
}

void AuditReport::append(const AuditReport& other) { rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end()); }

bool AuditReport::all_satisfied() const {
  for (const auto& r : rows_)
    if (!r.satisfied) return false;
  return true;
}

const AuditRow* AuditReport::find(const std::string& check) const {
  for (const auto& r : rows_)
    if (r.check == check) return &r;
  return nullptr;
}

}  // namespace simplexcover
