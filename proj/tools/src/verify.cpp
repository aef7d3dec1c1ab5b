#include "psl2cov_cli/verify.hpp"

#include <algorithm>

#include "psl2cov/errors.hpp"

namespace psl2cov::cli {

std::string_view to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::NotRequested: return "not-requested";
    case OracleStatus::Passed: return "passed";
    case OracleStatus::Failed: return "failed";
    case OracleStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::claim_count(ClaimStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [&](const ClaimOutcome& c) { return c.status == status; }));
}

bool VerificationReport::internal_failure() const {
  return !validity.passed() || !omega_ok || !lemmas.counterexamples.empty() ||
         oracle.status == OracleStatus::Failed;
}

VerificationReport run_verification(std::uint64_t q, bool with_oracle) {
  VerificationReport report;
  report.params = group_params(q);
  const auto table = character_table(report.params);
  report.validity = validate_table(table);
  report.omega_ok = omega_identities_hold(report.params);
  report.lemmas = lemma_sweep(q, 1, kLemmaMaxT);
  report.claims = check_claims(table, stated_claims(report.params));
  if (with_oracle) {
    try {
      report.oracle.check = oracle::cross_check(table);
      report.oracle.status = report.oracle.check->passed() ? OracleStatus::Passed : OracleStatus::Failed;
    } catch (const CapExceeded& e) {
      report.oracle.status = OracleStatus::Skipped;
      report.oracle.reason = e.what();
    }
  }
  return report;
}

namespace {

json sum_json(const SumDisagreement& d) {
  return {{"kind", to_string(d.spec.kind)},
          {"t", d.spec.t},
          {"index", d.spec.index},
          {"direct", to_json(d.expected)},
          {"closed", to_json(d.actual)}};
}

json oracle_json(const OracleSection& o) {
  json j = {{"status", to_string(o.status)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  if (o.check) {
    const auto& c = *o.check;
    json columns = json::array();
    for (const auto& e : c.orthogonality.entries) {
      columns.push_back({{"class", e.label.to_string()},
                         {"size", e.explicit_size},
                         {"centralizer", e.centralizer},
                         {"column_norm", to_json(e.column_norm)},
                         {"ok", e.ok}});
    }
    j["element_count"] = c.element_count;
    j["class_count"] = c.class_count;
    j["order_ok"] = c.order_ok;
    j["class_count_ok"] = c.class_count_ok;
    j["class_sizes_ok"] = c.class_sizes_ok;
    j["matching_ok"] = c.matching_ok;
    if (!c.matching_error.empty()) j["matching_error"] = c.matching_error;
    j["second_orthogonality"] = std::move(columns);
  }
  return j;
}

}  // namespace

json to_json(const VerificationReport& report) {
  const auto& v = report.validity;
  json table = {{"row_orthogonality", v.row_orthogonality},
                {"column_orthogonality", v.column_orthogonality},
                {"degree_sum", v.degree_sum},
                {"class_sum", v.class_sum},
                {"degrees_match_identity", v.degrees_match_identity},
                {"failures", v.failures}};

  json counterexamples = json::array();
  for (const auto& d : report.lemmas.counterexamples) counterexamples.push_back(sum_json(d));
  json quoted = json::array();
  for (const auto& d : report.lemmas.quoted_discrepancies) quoted.push_back(sum_json(d));
  json lemmas = {{"t_range", {1, kLemmaMaxT}},
                 {"checked", report.lemmas.checked},
                 {"counterexamples", std::move(counterexamples)},
                 {"quoted_form_discrepancies", std::move(quoted)}};

  json findings = json::array();
  for (const auto& c : report.claims) {
    if (c.status != ClaimStatus::Mismatch) continue;
    findings.push_back({{"source", c.claim.source},
                        {"power", c.claim.power},
                        {"base", c.claim.base.to_string()},
                        {"target", c.claim.target.to_string()},
                        {"claimed", big_to_json(c.claim.claimed)},
                        {"computed", big_to_json(c.computed)}});
  }
  json claims = {{"total", report.claims.size()},
                 {"match", report.claim_count(ClaimStatus::Match)},
                 {"mismatch", report.claim_count(ClaimStatus::Mismatch)},
                 {"not_applicable", report.claim_count(ClaimStatus::NotApplicable)},
                 {"findings", std::move(findings)}};

  return {{"q", report.params.q},
          {"case", to_string(report.params.parity)},
          {"table", std::move(table)},
          {"omega_identities", report.omega_ok},
          {"lemmas", std::move(lemmas)},
          {"claims", std::move(claims)},
          {"oracle", oracle_json(report.oracle)},
          {"internal_failure", report.internal_failure()}};
}

}  // namespace psl2cov::cli
