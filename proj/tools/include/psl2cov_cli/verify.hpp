#ifndef PSL2COV_CLI_VERIFY_HPP_
#define PSL2COV_CLI_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "psl2cov/claims.hpp"
#include "psl2cov/explicit_oracle.hpp"
#include "psl2cov/rootsums.hpp"
#include "psl2cov/validation.hpp"
#include "psl2cov_cli/json_io.hpp"

namespace psl2cov::cli {

inline constexpr int kLemmaMaxT = 12;

enum class OracleStatus { NotRequested, Passed, Failed, Skipped };

std::string_view to_string(OracleStatus s);

struct OracleSection {
  OracleStatus status = OracleStatus::NotRequested;
  std::string reason;
  std::optional<oracle::CrossCheck> check;
};

struct VerificationReport {
  GroupParams params;
  TableValidity validity;
  bool omega_ok = false;
  LemmaSweepReport lemmas;
  std::vector<ClaimOutcome> claims;
  OracleSection oracle;

  std::size_t claim_count(ClaimStatus status) const;
  /// Table, omega, lemma or oracle failure. Claim mismatches do not count.
  bool internal_failure() const;
};

VerificationReport run_verification(std::uint64_t q, bool with_oracle);

json to_json(const VerificationReport& report);

}  // namespace psl2cov::cli

#endif  // PSL2COV_CLI_VERIFY_HPP_
