#ifndef PSL2COV_EXPLICIT_ORACLE_HPP_
#define PSL2COV_EXPLICIT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psl2cov/cyclotomic.hpp"
#include "psl2cov/psl2_tables.hpp"

namespace psl2cov::oracle {

inline constexpr std::uint64_t kDefaultOracleCap = 32;

/// Largest q the oracle accepts: PSL2COV_ORACLE_CAP if set and valid, else 32.
std::uint64_t oracle_cap();

/// GF(p^m) as F_p[x]/(modulus). An element is the integer sum c_i p^i of its
/// coefficient vector, so elements are 0..q-1 with 0 and 1 the usual constants.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField() = default;

  std::uint32_t p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, lowest degree first (m + 1 entries).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_square(Elem a) const;
  /// Image of an integer under Z -> F_p.
  Elem from_int(std::int64_t v) const;

  friend FiniteField build_field(std::uint64_t q, std::uint64_t cap);

 private:
  std::uint32_t p_ = 0;
  int m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Field with the lexicographically smallest irreducible monic modulus (coefficients
/// compared from degree m-1 down). Throws NotAPrimePower or CapExceeded.
FiniteField build_field(std::uint64_t q, std::uint64_t cap = oracle_cap());

/// GF(q^2) = GF(q)[y]/(y^2 + b y + c), elements encoded a0 + a1 q.
struct ExtFieldSpec {
  using Elem = std::uint32_t;

  FiniteField base;
  FiniteField::Elem b = 0;
  FiniteField::Elem c = 0;
  Elem tau = 0;   // generator of GF(q^2)^*
  Elem sigma = 0; // tau^(q+1), order q-1, lies in GF(q)
  Elem tau0 = 0;  // tau^(q-1), order q+1

  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t e) const;
  std::uint64_t order(Elem x) const;
  /// x + x^q; throws std::logic_error when it does not lie in GF(q).
  FiniteField::Elem trace(Elem x) const;
  static bool in_base(Elem x, std::uint32_t q) { return x < q; }
};

/// tau is the first element, in encoding order, of multiplicative order q^2 - 1.
ExtFieldSpec build_ext(std::uint64_t q, std::uint64_t cap = oracle_cap());

/// 2x2 matrix [[a, b], [c, d]] over GF(q).
struct Mat2 {
  FiniteField::Elem a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct ExplicitClass {
  Mat2 representative;  // first element of the class in enumeration order
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

/// PSL_2(q) enumerated as canonical matrices, with its conjugacy classes.
class ExplicitGroup {
 public:
  /// Throws CapExceeded when q > cap, NotAPrimePower for bad q.
  static ExplicitGroup build(std::uint64_t q, std::uint64_t cap = oracle_cap());

  const FiniteField& field() const { return field_; }
  std::uint64_t q() const { return field_.q(); }
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<ExplicitClass>& classes() const { return classes_; }

  /// The representative of {M, -M} fixed for odd q: the one whose first nonzero entry
  /// (scanning a, b, c, d) has the smaller encoding.
  Mat2 canonical(const Mat2& m) const;
  Mat2 multiply(const Mat2& x, const Mat2& y) const;
  Mat2 inverse(const Mat2& x) const;
  std::optional<std::size_t> index_of(const Mat2& m) const;
  std::size_t class_of_element(std::size_t element_index) const { return class_of_[element_index]; }
  /// Order of the image in PSL_2(q).
  std::uint64_t element_order(const Mat2& m) const;
  /// Generators used for conjugation orbits: [[1, x^i], [0, 1]] for i < m, and [[0, 1], [-1, 0]].
  const std::vector<Mat2>& generators() const { return generators_; }

 private:
  std::uint64_t key(const Mat2& m) const;
  void enumerate();
  void compute_classes();

  FiniteField field_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Mat2> generators_;
  std::vector<ExplicitClass> classes_;
  std::vector<std::size_t> class_of_;
};

std::vector<Mat2> enumerate_group(std::uint64_t q);
std::vector<ExplicitClass> explicit_classes(std::uint64_t q);

/// Matrix representative of a parametric class: 1, N, N' = [[1, eta], [0, 1]] with eta the
/// first non-square, S(a) = diag(sigma^a, sigma^-a), T(b) = [[0, -1], [1, tr(tau0^b)]].
Mat2 parametric_representative(const ClassLabel& label, const ExtFieldSpec& ext);

struct ClassMatch {
  std::size_t explicit_class;
  ClassLabel label;
};

/// One entry per explicit class, in explicit class order. Throws MatchFailure.
std::vector<ClassMatch> match_to_parametric(const ExplicitGroup& group, const ExtFieldSpec& ext,
                                            const CharacterTable& table);

struct OrthogonalityEntry {
  ClassLabel label;
  std::uint64_t explicit_size = 0;
  Cyclotomic column_norm;    // sum over chi of |chi(g)|^2 from the parametric table
  std::uint64_t centralizer; // |G| / |g^G| from the enumeration
  bool ok = false;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityEntry> entries;
  bool passed() const;
};

OrthogonalityReport second_orthogonality_check(const CharacterTable& table, const ExplicitGroup& group,
                                               const std::vector<ClassMatch>& matching);

/// Everything the enumeration can say about a parametric table.
struct CrossCheck {
  std::uint64_t q = 0;
  std::uint64_t element_count = 0;
  std::size_t class_count = 0;
  bool order_ok = false;        // element count = q(q^2 - 1) / gcd(2, q - 1)
  bool class_count_ok = false;  // q + 1 for even q, (q + 5) / 2 for odd q
  bool class_sizes_ok = false;  // equal multisets of class sizes
  bool matching_ok = false;     // every explicit class matched a distinct parametric label
  std::string matching_error;
  OrthogonalityReport orthogonality;

  bool passed() const {
    return order_ok && class_count_ok && class_sizes_ok && matching_ok && orthogonality.passed();
  }
};

/// Builds the explicit group and compares it with table. Throws CapExceeded when q > cap.
CrossCheck cross_check(const CharacterTable& table, std::uint64_t cap = oracle_cap());

}  // namespace psl2cov::oracle

#endif  // PSL2COV_EXPLICIT_ORACLE_HPP_
