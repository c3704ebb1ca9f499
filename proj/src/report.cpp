#include "gorbit/report.hpp"

namespace gorbit {

const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Pass: return "pass";
    case ClauseStatus::PassNecessary: return "pass_necessary";
    case ClauseStatus::Fail: return "fail";
    case ClauseStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool AuditReport::passed() const {
  bool any = false;
  for (const auto& c : clauses) {
    if (c.status == ClauseStatus::Fail) return false;
    if (c.status != ClauseStatus::Skipped) any = true;
  }
  return any;
}

const AuditClause* AuditReport::find(const std::string& claim_id) const {
  for (const auto& c : clauses) {
    if (c.claim_id == claim_id) return &c;
  }
  return nullptr;
}

Json AuditReport::to_json() const {
  Json clauses_json = Json::array();
  for (const auto& c : clauses) {
    clauses_json.push_back({{"claim_id", c.claim_id},
                            {"anchor", c.anchor},
                            {"status", gorbit::to_string(c.status)},
                            {"detail", c.detail},
                            {"witness", c.witness}});
  }
  return {{"audit", audit_name},
          {"target", target},
          {"precondition", precondition},
          {"precondition_met", precondition_met},
          {"numeric", numeric},
          {"passed", passed()},
          {"clauses", clauses_json}};
}

AuditClause make_clause(std::string id, std::string anchor) {
  AuditClause c;
  c.claim_id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ClauseStatus::Pass;
  c.witness = nullptr;
  return c;
}

void fail_clause(AuditClause& c, std::string detail, Json witness) {
  if (c.status == ClauseStatus::Fail) return;
  c.status = ClauseStatus::Fail;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) { return to_json(s.basis_matrix()); }

}  // namespace gorbit
