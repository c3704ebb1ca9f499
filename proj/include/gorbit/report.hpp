#pragma once

#include <string>
#include <vector>

#include "gorbit/linalg.hpp"
#include "gorbit/rational.hpp"
#include "gorbit/subspace.hpp"
#include "json.hpp"

namespace gorbit {

using Json = nlohmann::json;

enum class ClauseStatus { Pass, PassNecessary, Fail, Skipped };

const char* to_string(ClauseStatus s);

struct AuditClause {
  std::string claim_id;
  std::string anchor;  ///< short label of the claim being checked
  ClauseStatus status = ClauseStatus::Skipped;
  std::string detail;
  Json witness;        ///< exact data, rationals as strings; null when absent
};

struct AuditReport {
  std::string audit_name;
  std::string target;
  std::string precondition;  ///< verdict the audit was run under
  bool precondition_met = true;
  bool numeric = false;
  std::vector<AuditClause> clauses;

  /// No clause failed and at least one was evaluated.
  bool passed() const;
  const AuditClause* find(const std::string& claim_id) const;
  Json to_json() const;
};

/// Clause starting as pass; fail_clause keeps the first failure only.
AuditClause make_clause(std::string id, std::string anchor);
void fail_clause(AuditClause& c, std::string detail, Json witness);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);

}  // namespace gorbit
