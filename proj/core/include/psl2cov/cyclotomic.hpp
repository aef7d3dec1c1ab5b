#ifndef PSL2COV_CYCLOTOMIC_HPP_
#define PSL2COV_CYCLOTOMIC_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psl2cov {

using BigInt = boost::multiprecision::cpp_int;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
struct CyclotomicPolynomial {
  std::uint64_t n = 1;
  std::vector<std::int64_t> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Phi_n obtained from x^n - 1 by exact division by Phi_d for every proper divisor d of n.
CyclotomicPolynomial cyclotomic_polynomial(std::uint64_t n);

/// An element of Z[zeta_n], stored as a sparse polynomial in Z[x]/(x^n - 1).
///
/// The stored form is not canonical: several term lists denote the same
/// algebraic integer. Reduction to a canonical integral basis only happens in
/// canonical(), is_zero(), as_integer(), exact_div() and operator==.
/// Elements with different conductors are promoted to the lcm before mixing.
class Cyclotomic {
 public:
  struct Term {
    std::uint64_t exponent;
    BigInt coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclotomic() = default;
  Cyclotomic(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const BigInt& value);

  /// zeta_n^(k mod n).
  static Cyclotomic root(std::uint64_t n, std::int64_t k);

  /// Builds an element from arbitrary terms: exponents are taken mod n,
  /// repeated exponents are combined and zero coefficients dropped.
  static Cyclotomic from_terms(std::uint64_t n, std::vector<Term> terms);

  std::uint64_t conductor() const noexcept { return conductor_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Same element written over zeta_n with conductor() | n.
  Cyclotomic promoted(std::uint64_t n) const;

  Cyclotomic conjugate() const;

  /// Coordinates in the integral basis obtained as the tensor product of the
  /// power bases of Q(zeta_{p^k}) over the prime powers p^k || n.
  Cyclotomic canonical() const;

  bool is_zero() const;
  std::optional<BigInt> as_integer() const;

  /// Divides by d, requiring every canonical coefficient to be a multiple of d.
  /// Throws std::domain_error otherwise.
  Cyclotomic exact_div(const BigInt& d) const;

  Cyclotomic pow(unsigned exponent) const;

  /// Remainder of the stored polynomial modulo Phi_n by long division, in the
  /// power basis 1, x, ..., x^(phi(n)-1). Quadratic in n; meant for small n.
  std::vector<BigInt> phi_remainder() const;

  std::complex<double> approx() const;

  /// GAP-style rendering, e.g. "E(7)^2+E(7)^5" or "-3".
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const BigInt& scalar);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator*(Cyclotomic lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend Cyclotomic operator*(const BigInt& scalar, Cyclotomic rhs) { return rhs *= scalar; }
  Cyclotomic operator-() const;

  /// Equality in Q(zeta_n), not of the stored term lists.
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Equality of stored representations (same conductor and term list).
  bool same_representation(const Cyclotomic& other) const {
    return conductor_ == other.conductor_ && terms_ == other.terms_;
  }

 private:
  Cyclotomic(std::uint64_t n, std::vector<Term> sorted_terms)
      : conductor_(n), terms_(std::move(sorted_terms)) {}

  static void combine(std::vector<Term>& terms);

  std::uint64_t conductor_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients
};

/// Accumulates many scaled products before a single normalization pass.
/// Used by inner products, which sum one product per conjugacy class.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(std::uint64_t n) : conductor_(n) {}

  /// Adds scale * x * y. Both factors must have a conductor dividing n.
  void add_product(const Cyclotomic& x, const Cyclotomic& y, const BigInt& scale);
  void add(const Cyclotomic& x, const BigInt& scale);

  Cyclotomic finish() &&;

 private:
  std::uint64_t conductor_;
  std::vector<Cyclotomic::Term> terms_;
};

}  // namespace psl2cov

#endif  // PSL2COV_CYCLOTOMIC_HPP_
