#ifndef PSL2COV_VALIDATION_HPP_
#define PSL2COV_VALIDATION_HPP_

#include <string>
#include <vector>

#include "psl2cov/psl2_tables.hpp"

namespace psl2cov {

/// Internal-consistency checks of a character table, all evaluated exactly.
struct TableValidity {
  bool row_orthogonality = false;     // sum_g |g^G| chi(g) conj(psi(g)) = |G| [chi = psi]
  bool column_orthogonality = false;  // sum_chi chi(g) conj(chi(h)) = |C_G(g)| [g = h]
  bool degree_sum = false;            // sum_chi chi(1)^2 = |G|
  bool class_sum = false;             // sum of class sizes = |G|
  bool degrees_match_identity = false;
  std::vector<std::string> failures;

  bool passed() const {
    return row_orthogonality && column_orthogonality && degree_sum && class_sum &&
           degrees_match_identity;
  }
};

TableValidity validate_table(const CharacterTable& table);

/// Checks omega + omega* = 1 and omega * omega* = (1 -+ q) / 4 for odd q.
/// Returns true for even q, where there is nothing to check.
bool omega_identities_hold(const GroupParams& params);

}  // namespace psl2cov

#endif  // PSL2COV_VALIDATION_HPP_
