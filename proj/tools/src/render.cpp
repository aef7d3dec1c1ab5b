#include <algorithm>
#include <sstream>

#include "psl2cov_cli/app.hpp"

namespace psl2cov::cli {

namespace {

void pad(std::ostringstream& out, const std::string& s, std::size_t width) {
  out << std::string(width - s.size(), ' ') << s;
}

std::string display(const Cyclotomic& v) {
  if (const auto n = v.as_integer()) return n->str();
  return v.to_string();
}

}  // namespace

std::string render_table(const CharacterTable& table) {
  const auto& params = table.params();
  const auto& classes = table.classes();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"class"}, sizes{"size"};
  for (const auto& c : classes) {
    header.push_back(c.label.to_string());
    sizes.push_back(std::to_string(c.size));
  }
  rows.push_back(std::move(header));
  rows.push_back(std::move(sizes));
  for (const auto& chi : table.characters()) {
    std::vector<std::string> row{chi.label.to_string()};
    for (const auto& v : chi.values) row.push_back(display(v));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(classes.size() + 1, 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }

  std::size_t total_width = widths[0];
  for (std::size_t i = 1; i < widths.size(); ++i) total_width += 2 + widths[i];

  std::ostringstream out;
  out << "PSL2(" << params.q << ")  order " << params.order << "  case " << to_string(params.parity)
      << "  conductor " << params.conductor << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << rows[r][0] << std::string(widths[0] - rows[r][0].size(), ' ');
    for (std::size_t i = 1; i < rows[r].size(); ++i) {
      out << "  ";
      pad(out, rows[r][i], widths[i]);
    }
    out << "\n";
    if (r == 1) out << std::string(total_width, '-') << "\n";
  }
  return out.str();
}

std::string render_decomposition(const DecompositionPayload& d) {
  std::ostringstream out;
  out << d.base.to_string() << "^" << d.power << " at q = " << d.q << ", degree " << d.dimension << "\n";
  std::size_t width = 0;
  for (const auto& e : d.decomposition.entries) width = std::max(width, e.label.to_string().size());
  for (const auto& e : d.decomposition.entries) {
    const auto label = e.label.to_string();
    out << "  " << label << std::string(width - label.size(), ' ') << "  " << e.multiplicity << "\n";
  }
  out << "complete: " << (d.decomposition.complete() ? "true" : "false") << "\n";
  return out.str();
}

std::string render_covering(const CoveringReport& report, const GroupParams& params) {
  std::ostringstream out;
  out << "PSL2(" << report.q << ")  case " << to_string(params.parity) << "\n";
  for (const auto& r : report.records) {
    out << "  " << r.label.to_string() << "  e=" << r.e << "  t=" << r.t << "\n";
  }
  out << "covering_number: " << report.covering_number << "\n";
  out << "theorem_expected: "
      << (report.theorem_expected ? std::to_string(*report.theorem_expected) : "not-applicable") << "\n";
  out << "matches_theorem: "
      << (report.matches_theorem ? (*report.matches_theorem ? "true" : "false") : "not-applicable") << "\n";
  return out.str();
}

std::string render_verification(const VerificationReport& report) {
  const auto pass = [](bool ok) { return ok ? "pass" : "FAIL"; };
  const auto& v = report.validity;
  std::ostringstream out;
  out << "verify q = " << report.params.q << " (" << to_string(report.params.parity) << ")\n";
  out << "table: rows " << pass(v.row_orthogonality) << ", columns " << pass(v.column_orthogonality)
      << ", degrees " << pass(v.degree_sum && v.degrees_match_identity) << ", class sizes "
      << pass(v.class_sum) << "\n";
  for (const auto& f : v.failures) out << "  failure: " << f << "\n";
  out << "omega identities: " << pass(report.omega_ok) << "\n";
  out << "root sums: " << report.lemmas.checked << " checked for t <= " << kLemmaMaxT << ", "
      << report.lemmas.counterexamples.size() << " counterexamples, "
      << report.lemmas.quoted_discrepancies.size() << " quoted-form discrepancies\n";
  for (const auto& d : report.lemmas.counterexamples) {
    out << "  counterexample: " << to_string(d.spec.kind) << " t=" << d.spec.t << " index=" << d.spec.index
        << " direct " << d.expected.to_string() << " closed " << d.actual.to_string() << "\n";
  }
  for (const auto& d : report.lemmas.quoted_discrepancies) {
    out << "  quoted form: " << to_string(d.spec.kind) << " t=" << d.spec.t << " index=" << d.spec.index
        << " sum " << d.expected.to_string() << " quoted " << d.actual.to_string() << "\n";
  }
  out << "claims: " << report.claims.size() << " total, " << report.claim_count(ClaimStatus::Match)
      << " match, " << report.claim_count(ClaimStatus::Mismatch) << " mismatch, "
      << report.claim_count(ClaimStatus::NotApplicable) << " not applicable\n";
  for (const auto& c : report.claims) {
    if (c.status != ClaimStatus::Mismatch) continue;
    out << "  mismatch [" << c.claim.source << "] <" << c.claim.base.to_string() << "^" << c.claim.power
        << ", " << c.claim.target.to_string() << "> claimed " << c.claim.claimed << " computed "
        << c.computed << "\n";
  }
  out << "oracle: " << to_string(report.oracle.status);
  if (!report.oracle.reason.empty()) out << " (" << report.oracle.reason << ")";
  if (report.oracle.check) {
    const auto& c = *report.oracle.check;
    out << " (" << c.element_count << " elements, " << c.class_count << " classes)";
    if (!c.matching_error.empty()) out << "\n  " << c.matching_error;
  }
  out << "\n";
  out << "result: " << (report.internal_failure() ? "internal failure" : "consistent") << "\n";
  return out.str();
}

}  // namespace psl2cov::cli
