#ifndef PSL2COV_TENSOR_COVERING_HPP_
#define PSL2COV_TENSOR_COVERING_HPP_

#include <optional>
#include <set>
#include <vector>

#include "psl2cov/cyclotomic.hpp"
#include "psl2cov/psl2_tables.hpp"

namespace psl2cov {

inline constexpr int kDefaultExponentCap = 8;

/// Values of a class function, aligned with the classes of the table it was built from.
struct ClassFunction {
  std::vector<Cyclotomic> values;

  static ClassFunction of(const Character& chi) { return {chi.values}; }
  ClassFunction& operator*=(const ClassFunction& rhs);
};

/// chi^t, one value per class.
ClassFunction pointwise_power(const Character& chi, unsigned t);

/// <f, chi> = (1/|G|) sum_g |g^G| f(g) conj(chi(g)). Throws IntegralityViolation
/// when the cyclotomic sum is not an integer multiple of |G|.
BigInt inner_product(const CharacterTable& table, const ClassFunction& f, const Character& chi);

struct Decomposition {
  struct Entry {
    CharacterLabel label;
    BigInt multiplicity;
  };
  std::vector<Entry> entries;  // table order, zero multiplicities included

  BigInt multiplicity(const CharacterLabel& label) const;
  bool complete() const;
};

/// Throws NegativeMultiplicity if f is not a character.
Decomposition decompose(const CharacterTable& table, const ClassFunction& f);

/// sum of multiplicity * chi over the decomposition.
ClassFunction reconstruct(const CharacterTable& table, const Decomposition& d);

std::set<CharacterLabel> constituents(const CharacterTable& table, const ClassFunction& f);

/// Smallest t <= tmax with c(chi^t) = Irr(G). Throws ExponentCapExceeded.
int e_number(const CharacterTable& table, const Character& chi, int tmax = kDefaultExponentCap);

/// Smallest t <= tmax with c(chi) u ... u c(chi^t) = Irr(G). Throws ExponentCapExceeded.
int t_number(const CharacterTable& table, const Character& chi, int tmax = kDefaultExponentCap);

/// completeness of c(chi^t) for t = 1..tmax.
std::vector<bool> completeness_profile(const CharacterTable& table, const Character& chi, int tmax);

struct CoveringRecord {
  CharacterLabel label;
  int e = 0;
  int t = 0;
};

struct CoveringReport {
  std::uint64_t q = 0;
  std::vector<CoveringRecord> records;  // nontrivial characters, table order
  int covering_number = 0;
  /// 4 for q = 2^(2m+1), 3 otherwise; empty below q = 8.
  std::optional<int> theorem_expected;
  std::optional<bool> matches_theorem;
};

std::optional<int> theorem_expectation(const GroupParams& params);

/// Throws ExponentCapExceeded naming the first character with no covering power <= tmax.
CoveringReport covering_report(const CharacterTable& table, int tmax = kDefaultExponentCap);

}  // namespace psl2cov

#endif  // PSL2COV_TENSOR_COVERING_HPP_
