#ifndef PSL2COV_PSL2_TABLES_HPP_
#define PSL2COV_PSL2_TABLES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psl2cov/cyclotomic.hpp"

namespace psl2cov {

enum class ParityCase { Even, OneMod4, ThreeMod4 };

std::string_view to_string(ParityCase c);

struct GroupParams {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  int m = 0;
  ParityCase parity = ParityCase::Even;
  /// |PSL_2(q)| = q(q^2 - 1) / gcd(2, q - 1)
  std::uint64_t order = 0;
  /// Every character value of the table lives in Z[zeta_conductor].
  std::uint64_t conductor = 1;

  /// The covering theorem is stated for q >= 8 only.
  bool within_theorem_range() const { return q >= 8; }
};

/// Throws NotAPrimePower for q < 4 or q not a prime power.
GroupParams group_params(std::uint64_t q);

enum class ClassKind { Identity, UnipN, UnipNPrime, Split, SplitHalf, NonSplit, NonSplitHalf };

struct ClassLabel {
  ClassKind kind = ClassKind::Identity;
  /// a for Split/SplitHalf, b for NonSplit/NonSplitHalf, 0 otherwise.
  int param = 0;

  auto operator<=>(const ClassLabel&) const = default;
  std::string to_string() const;
};

std::string_view kind_name(ClassKind kind);

struct ConjugacyClass {
  ClassLabel label;
  std::uint64_t size = 0;
};

/// Class list in table order: 1, N, [N'], S(a)..., [S((q-1)/4)], T(b)..., [T((q+1)/4)].
std::vector<ConjugacyClass> conjugacy_data(const GroupParams& params);

enum class CharKind {
  Trivial,
  Steinberg,
  Principal,   // psi_{q+1}^{(k)}
  Discrete,    // psi_{q-1}^{(j)}
  HalfMinus1,  // psi'_-  (q = 3 mod 4)
  HalfMinus2,  // psi''_-
  HalfPlus1,   // psi'_+  (q = 1 mod 4)
  HalfPlus2,   // psi''_+
};

/// Character label; text form is "triv", "st", "pp:k", "dd:j", "half-:1", ...
struct CharacterLabel {
  CharKind kind = CharKind::Trivial;
  int index = 0;

  auto operator<=>(const CharacterLabel&) const = default;
  std::string to_string() const;
  /// Parses the text form. Throws InvalidLabel. Does not check index ranges.
  static CharacterLabel parse(std::string_view text);

  static CharacterLabel trivial() { return {CharKind::Trivial, 0}; }
  static CharacterLabel steinberg() { return {CharKind::Steinberg, 0}; }
  static CharacterLabel principal(int k) { return {CharKind::Principal, k}; }
  static CharacterLabel discrete(int j) { return {CharKind::Discrete, j}; }
};

struct Character {
  CharacterLabel label;
  std::uint64_t degree = 0;
  std::vector<Cyclotomic> values;  // aligned with CharacterTable::classes
};

class CharacterTable {
 public:
  CharacterTable(GroupParams params, std::vector<ConjugacyClass> classes,
                 std::vector<Character> characters);

  const GroupParams& params() const { return params_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Character>& characters() const { return characters_; }

  std::optional<std::size_t> find(const CharacterLabel& label) const;
  std::optional<std::size_t> find(const ClassLabel& label) const;
  /// Throws InvalidLabel when the label does not name a character of this table.
  const Character& character(const CharacterLabel& label) const;
  const Cyclotomic& value(const CharacterLabel& chi, const ClassLabel& cls) const;

 private:
  GroupParams params_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Character> characters_;
};

/// Index sets of the principal (k) and discrete (j) series for the parity case.
std::vector<int> principal_indices(const GroupParams& params);
std::vector<int> discrete_indices(const GroupParams& params);

/// (omega, omega*) = ((1 + r) / 2, (1 - r) / 2) with r = sqrt(q) for q = 1 mod 4 and
/// r = sqrt(-q) for q = 3 mod 4, realized through a quadratic Gauss sum when m is odd.
/// Throws CaseMismatch for even q.
std::pair<Cyclotomic, Cyclotomic> omega_values(const GroupParams& params);

/// The quadratic Gauss sum sum_{t=1}^{p-1} (t|p) zeta_p^t, squaring to (-1)^((p-1)/2) p.
Cyclotomic quadratic_gauss_sum(std::uint64_t p);

CharacterTable character_table(const GroupParams& params);

/// Classes g with chi(g) * conj(chi(g)) = chi(1)^2.
std::vector<ClassLabel> center_classes(const Character& chi, const CharacterTable& table);

}  // namespace psl2cov

#endif  // PSL2COV_PSL2_TABLES_HPP_
