#ifndef PSL2COV_CLAIMS_HPP_
#define PSL2COV_CLAIMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "psl2cov/psl2_tables.hpp"

namespace psl2cov {

/// A published multiplicity <base^power, target>, evaluated at a concrete q.
///
/// `source` names where the statement comes from. Sources starting with
/// "grid:" are entries of the summary inner-product grids for odd q; "text:"
/// sources are values stated inline alongside the derivations.
struct Claim {
  int power = 0;
  CharacterLabel base;
  CharacterLabel target;
  BigInt claimed;
  std::string source;
};

enum class ClaimStatus { Match, Mismatch, NotApplicable };

std::string_view to_string(ClaimStatus s);

struct ClaimOutcome {
  Claim claim;
  BigInt computed;
  ClaimStatus status = ClaimStatus::NotApplicable;
};

/// Every published inner-product value for the parity case of params.
std::vector<Claim> stated_claims(const GroupParams& params);

/// Compares each claim against an exact decomposition. Claims for q < 8 are
/// reported NotApplicable with the computed value still filled in.
std::vector<ClaimOutcome> check_claims(const CharacterTable& table, const std::vector<Claim>& claims);

}  // namespace psl2cov

#endif  // PSL2COV_CLAIMS_HPP_
