#ifndef PSL2COV_ROOTSUMS_HPP_
#define PSL2COV_ROOTSUMS_HPP_

#include <cstdint>
#include <vector>

#include "psl2cov/cyclotomic.hpp"
#include "psl2cov/psl2_tables.hpp"

namespace psl2cov {

/// Split sums run over powers of eps (order q - 1), nonsplit sums over eta0 (order q + 1).
enum class SumKind { Split, NonSplit };

std::string_view to_string(SumKind kind);

/// One root-of-unity sum: the summand is raised to t * index.
struct SumSpec {
  ParityCase parity = ParityCase::Even;
  SumKind kind = SumKind::Split;
  int t = 1;
  int index = 1;
  std::uint64_t q = 0;

  std::int64_t multiplier() const { return static_cast<std::int64_t>(t) * index; }
};

/// Legal k (Split) or j (NonSplit) values for the parity case of q.
std::vector<int> legal_indices(ParityCase parity, SumKind kind, std::uint64_t q);

/// Literal summation over the class parameters:
///   Even      Split    sum_{a=1}^{q/2-1}      (x^a + x^-a),  x = eps^(tk)
///   Even      NonSplit sum_{b=1}^{q/2}        (y^b + y^-b),  y = eta0^(tj)
///   ThreeMod4 Split    sum_{a=1}^{(q-3)/4}    (x^a + x^-a)
///   ThreeMod4 NonSplit sum_{b=1}^{(q-3)/4}    (y^b + y^-b)
///   OneMod4   Split    sum_{a=1}^{(q-5)/4}    (x^a + x^-a) + 2 x^((q-1)/4)
///   OneMod4   NonSplit sum_{b=1}^{(q-1)/4}    (y^b + y^-b)
/// Throws std::invalid_argument when the index is not legal or t < 1.
Cyclotomic direct_sum(const SumSpec& spec);

/// Same sums for an arbitrary exponent multiplier in place of t * index.
Cyclotomic direct_sum_for_multiplier(ParityCase parity, SumKind kind, std::uint64_t q,
                                     std::int64_t multiplier);

/// Closed form of each sum; a two-branch formula split on whether the root is 1.
Cyclotomic closed_sum(const SumSpec& spec);

/// The closed forms exactly as they are usually quoted, including their slips
/// (degenerate-branch constants and the garbled conditions for q = 1 mod 4).
/// Only used to report where the quoted form disagrees with the sum.
Cyclotomic quoted_closed_sum(const SumSpec& spec);

struct SumDisagreement {
  SumSpec spec;
  Cyclotomic expected;  // direct_sum
  Cyclotomic actual;
};

struct LemmaSweepReport {
  std::uint64_t q = 0;
  ParityCase parity = ParityCase::Even;
  std::size_t checked = 0;
  /// closed_sum != direct_sum; must be empty.
  std::vector<SumDisagreement> counterexamples;
  /// quoted_closed_sum != direct_sum; informational.
  std::vector<SumDisagreement> quoted_discrepancies;
};

/// Checks every legal (kind, t, index) with t_min <= t <= t_max.
LemmaSweepReport lemma_sweep(std::uint64_t q, int t_min, int t_max);

}  // namespace psl2cov

#endif  // PSL2COV_ROOTSUMS_HPP_
