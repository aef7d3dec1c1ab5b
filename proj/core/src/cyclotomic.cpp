#include "psl2cov/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "psl2cov/numtheory.hpp"

namespace psl2cov {

namespace {

using Term = Cyclotomic::Term;

// Reduction data for one prime power p^k exactly dividing n.
struct PrimePart {
  std::uint64_t prime;
  std::uint64_t prime_power;
  std::uint64_t step;  // p^(k-1)
  // shifts[b] moves the p^k-component from (p-1)*step down to b*step and
  // leaves every other CRT component untouched.
  std::vector<std::uint64_t> shifts;
};

struct ReductionPlan {
  std::vector<PrimePart> parts;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    auto quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  return mod_floor(t, m);
}

ReductionPlan make_plan(std::uint64_t n) {
  ReductionPlan plan;
  for (const auto& [p, k] : factorize(n)) {
    PrimePart part;
    part.prime = p;
    part.prime_power = ipow(p, static_cast<unsigned>(k));
    part.step = part.prime_power / p;
    const std::uint64_t cofactor = n / part.prime_power;
    // u = 1 mod p^k, u = 0 mod n / p^k
    const auto idempotent = static_cast<unsigned __int128>(cofactor) *
                            inverse_mod(cofactor % part.prime_power, part.prime_power) % n;
    part.shifts.resize(p - 1);
    for (std::uint64_t b = 0; b + 1 < p; ++b) {
      const auto delta = static_cast<unsigned __int128>((p - 1 - b) * part.step) * idempotent % n;
      part.shifts[b] = static_cast<std::uint64_t>(delta);
    }
    plan.parts.push_back(std::move(part));
  }
  return plan;
}

const ReductionPlan& plan_for(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, ReductionPlan> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_plan(n)).first;
  return it->second;
}

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace

CyclotomicPolynomial cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  thread_local std::unordered_map<std::uint64_t, CyclotomicPolynomial> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1
  std::vector<BigInt> dividend(n + 1);
  dividend[0] = -1;
  dividend[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto divisor = cyclotomic_polynomial(d).coefficients;  // monic
    const std::size_t dd = divisor.size() - 1;
    const std::size_t dn = dividend.size() - 1;
    std::vector<BigInt> quotient(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
      const BigInt lead = dividend[i];
      quotient[i - dd] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= lead * divisor[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (dividend[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    }
    dividend = std::move(quotient);
  }

  CyclotomicPolynomial result;
  result.n = n;
  result.coefficients.reserve(dividend.size());
  for (const auto& c : dividend) result.coefficients.push_back(c.convert_to<std::int64_t>());
  cache.emplace(n, result);
  return result;
}

Cyclotomic::Cyclotomic(std::int64_t value) : Cyclotomic(BigInt(value)) {}

Cyclotomic::Cyclotomic(const BigInt& value) {
  if (value != 0) terms_.push_back({0, value});
}

Cyclotomic Cyclotomic::root(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("Cyclotomic::root: n must be positive");
  return Cyclotomic(n, {{mod_floor(k, n), BigInt(1)}});
}

void Cyclotomic::combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    BigInt sum = std::move(terms[i].coefficient);
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
      sum += terms[j].coefficient;
      ++j;
    }
    if (sum != 0) {
      terms[out].exponent = terms[i].exponent;
      terms[out].coefficient = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Cyclotomic Cyclotomic::from_terms(std::uint64_t n, std::vector<Term> terms) {
  if (n == 0) throw std::invalid_argument("Cyclotomic::from_terms: n must be positive");
  for (auto& t : terms) t.exponent %= n;
  combine(terms);
  return Cyclotomic(n, std::move(terms));
}

Cyclotomic Cyclotomic::promoted(std::uint64_t n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) {
    throw std::invalid_argument("Cyclotomic::promoted: conductor does not divide target");
  }
  const std::uint64_t scale = n / conductor_;
  auto terms = terms_;
  for (auto& t : terms) t.exponent *= scale;
  return Cyclotomic(n, std::move(terms));
}

Cyclotomic Cyclotomic::conjugate() const {
  auto terms = terms_;
  for (auto& t : terms) t.exponent = (conductor_ - t.exponent) % conductor_;
  combine(terms);
  return Cyclotomic(conductor_, std::move(terms));
}

Cyclotomic Cyclotomic::canonical() const {
  const auto& plan = plan_for(conductor_);
  std::vector<Term> current = terms_;
  std::vector<Term> next;
  for (const auto& part : plan.parts) {
    next.clear();
    next.reserve(current.size());
    bool touched = false;
    for (auto& t : current) {
      const std::uint64_t digit = (t.exponent % part.prime_power) / part.step;
      if (digit != part.prime - 1) {
        next.push_back(std::move(t));
        continue;
      }
      touched = true;
      // zeta^(a + (p-1)step) = -sum_{b < p-1} zeta^(a + b step) in the p^k factor
      for (std::uint64_t b = 0; b + 1 < part.prime; ++b) {
        const std::uint64_t e = (t.exponent + conductor_ - part.shifts[b]) % conductor_;
        next.push_back({e, -t.coefficient});
      }
    }
    if (touched) combine(next);
    std::swap(current, next);
  }
  return Cyclotomic(conductor_, std::move(current));
}

bool Cyclotomic::is_zero() const { return terms_.empty() || canonical().terms_.empty(); }

std::optional<BigInt> Cyclotomic::as_integer() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_[0].exponent == 0) return terms_[0].coefficient;
  const auto c = canonical();
  if (c.terms_.empty()) return BigInt(0);
  if (c.terms_.size() == 1 && c.terms_[0].exponent == 0) return c.terms_[0].coefficient;
  return std::nullopt;
}

Cyclotomic Cyclotomic::exact_div(const BigInt& d) const {
  if (d == 0) throw std::domain_error("Cyclotomic::exact_div: division by zero");
  auto c = canonical();
  for (auto& t : c.terms_) {
    BigInt q, r;
    boost::multiprecision::divide_qr(t.coefficient, d, q, r);
    if (r != 0) throw std::domain_error("Cyclotomic::exact_div: not divisible");
    t.coefficient = std::move(q);
  }
  return c;
}

Cyclotomic Cyclotomic::pow(unsigned exponent) const {
  Cyclotomic result(1);
  result = result.promoted(conductor_);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::vector<BigInt> Cyclotomic::phi_remainder() const {
  const auto phi = cyclotomic_polynomial(conductor_).coefficients;
  const std::size_t degree = phi.size() - 1;
  std::vector<BigInt> dense(std::max<std::size_t>(conductor_, degree));
  for (const auto& t : terms_) dense[t.exponent] += t.coefficient;
  for (std::size_t i = dense.size(); i-- > degree;) {
    const BigInt lead = dense[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= degree; ++j) dense[i - degree + j] -= lead * phi[j];
  }
  dense.resize(degree);
  return dense;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& t : terms_) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(t.exponent) / static_cast<double>(conductor_);
    sum += t.coefficient.convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (t.exponent == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    const std::uint64_t g = std::gcd(t.exponent, conductor_);
    out << "E(" << conductor_ / g << ')';
    if (t.exponent / g != 1) out << '^' << t.exponent / g;
  }
  return out.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const std::uint64_t n = common_conductor(conductor_, rhs.conductor_);
  if (n != conductor_) *this = promoted(n);
  const Cyclotomic other = rhs.promoted(n);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  combine(terms_);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  const std::uint64_t n = common_conductor(lhs.conductor_, rhs.conductor_);
  const Cyclotomic a = lhs.promoted(n);
  const Cyclotomic b = rhs.promoted(n);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      std::uint64_t e = x.exponent + y.exponent;
      if (e >= n) e -= n;
      terms.push_back({e, x.coefficient * y.coefficient});
    }
  }
  Cyclotomic::combine(terms);
  return Cyclotomic(n, std::move(terms));
}

Cyclotomic Cyclotomic::operator-() const {
  auto result = *this;
  for (auto& t : result.terms_) t.coefficient = -t.coefficient;
  return result;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.same_representation(rhs)) return true;
  return (lhs - rhs).is_zero();
}

void CyclotomicAccumulator::add_product(const Cyclotomic& x, const Cyclotomic& y,
                                        const BigInt& scale) {
  if (conductor_ % x.conductor() != 0 || conductor_ % y.conductor() != 0) {
    throw std::invalid_argument("CyclotomicAccumulator: conductor mismatch");
  }
  const std::uint64_t sx = conductor_ / x.conductor();
  const std::uint64_t sy = conductor_ / y.conductor();
  for (const auto& a : x.terms()) {
    const BigInt scaled = a.coefficient * scale;
    for (const auto& b : y.terms()) {
      const std::uint64_t e = (a.exponent * sx + b.exponent * sy) % conductor_;
      terms_.push_back({e, scaled * b.coefficient});
    }
  }
}

void CyclotomicAccumulator::add(const Cyclotomic& x, const BigInt& scale) {
  if (conductor_ % x.conductor() != 0) {
    throw std::invalid_argument("CyclotomicAccumulator: conductor mismatch");
  }
  const std::uint64_t sx = conductor_ / x.conductor();
  for (const auto& a : x.terms()) terms_.push_back({a.exponent * sx % conductor_, a.coefficient * scale});
}

Cyclotomic CyclotomicAccumulator::finish() && {
  return Cyclotomic::from_terms(conductor_, std::move(terms_));
}

}  // namespace psl2cov
