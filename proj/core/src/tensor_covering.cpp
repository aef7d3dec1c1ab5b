#include "psl2cov/tensor_covering.hpp"

#include <numeric>
#include <stdexcept>

#include "psl2cov/errors.hpp"

namespace psl2cov {

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
  if (rhs.values.size() != values.size()) {
    throw std::invalid_argument("ClassFunction: class count mismatch");
  }
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= rhs.values[i];
  return *this;
}

ClassFunction pointwise_power(const Character& chi, unsigned t) {
  if (t == 0) throw std::invalid_argument("pointwise_power: t must be positive");
  ClassFunction f = ClassFunction::of(chi);
  const ClassFunction base = f;
  for (unsigned i = 1; i < t; ++i) f *= base;
  return f;
}

BigInt inner_product(const CharacterTable& table, const ClassFunction& f, const Character& chi) {
  const auto& classes = table.classes();
  if (f.values.size() != classes.size() || chi.values.size() != classes.size()) {
    throw std::invalid_argument("inner_product: class count mismatch");
  }
  std::uint64_t n = table.params().conductor;
  for (const auto& v : f.values) n = std::lcm(n, v.conductor());

  CyclotomicAccumulator acc(n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (f.values[i].terms().empty() || chi.values[i].terms().empty()) continue;
    acc.add_product(f.values[i], chi.values[i].conjugate(), BigInt(classes[i].size));
  }
  const auto sum = std::move(acc).finish().as_integer();
  if (!sum) {
    throw IntegralityViolation("<f, " + chi.label.to_string() + "> is not rational");
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(*sum, BigInt(table.params().order), quotient, remainder);
  if (remainder != 0) {
    throw IntegralityViolation("<f, " + chi.label.to_string() + "> sum " + sum->str() +
                               " is not divisible by |G|");
  }
  return quotient;
}

BigInt Decomposition::multiplicity(const CharacterLabel& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return e.multiplicity;
  }
  return 0;
}

bool Decomposition::complete() const {
  for (const auto& e : entries) {
    if (e.multiplicity == 0) return false;
  }
  return true;
}

Decomposition decompose(const CharacterTable& table, const ClassFunction& f) {
  Decomposition d;
  d.entries.reserve(table.characters().size());
  for (const auto& chi : table.characters()) {
    BigInt m = inner_product(table, f, chi);
    if (m < 0) {
      throw NegativeMultiplicity(chi.label.to_string() + " has multiplicity " + m.str());
    }
    d.entries.push_back({chi.label, std::move(m)});
  }
  return d;
}

ClassFunction reconstruct(const CharacterTable& table, const Decomposition& d) {
  ClassFunction f;
  f.values.assign(table.classes().size(), Cyclotomic(0));
  for (const auto& e : d.entries) {
    if (e.multiplicity == 0) continue;
    const auto& chi = table.character(e.label);
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += chi.values[i] * e.multiplicity;
  }
  return f;
}

std::set<CharacterLabel> constituents(const CharacterTable& table, const ClassFunction& f) {
  std::set<CharacterLabel> out;
  for (const auto& e : decompose(table, f).entries) {
    if (e.multiplicity > 0) out.insert(e.label);
  }
  return out;
}

namespace {

// Walks t = 1, 2, ... until both exponents are known or tmax is exhausted.
struct ExponentSearch {
  std::optional<int> e;
  std::optional<int> t;
};

ExponentSearch search_exponents(const CharacterTable& table, const Character& chi, int tmax) {
  ExponentSearch result;
  const std::size_t total = table.characters().size();
  std::vector<bool> seen(total, false);
  std::size_t seen_count = 0;
  ClassFunction power = ClassFunction::of(chi);
  const ClassFunction base = power;
  for (int t = 1; t <= tmax; ++t) {
    if (t > 1) power *= base;
    const auto d = decompose(table, power);
    std::size_t present = 0;
    for (std::size_t i = 0; i < total; ++i) {
      if (d.entries[i].multiplicity == 0) continue;
      ++present;
      if (!seen[i]) {
        seen[i] = true;
        ++seen_count;
      }
    }
    if (!result.t && seen_count == total) result.t = t;
    if (present == total) {
      result.e = t;
      break;
    }
  }
  return result;
}

}  // namespace

int e_number(const CharacterTable& table, const Character& chi, int tmax) {
  const auto r = search_exponents(table, chi, tmax);
  if (!r.e) throw ExponentCapExceeded(chi.label.to_string(), tmax);
  return *r.e;
}

int t_number(const CharacterTable& table, const Character& chi, int tmax) {
  const auto r = search_exponents(table, chi, tmax);
  if (!r.t) throw ExponentCapExceeded(chi.label.to_string(), tmax);
  return *r.t;
}

std::vector<bool> completeness_profile(const CharacterTable& table, const Character& chi,
                                       int tmax) {
  std::vector<bool> out;
  ClassFunction power = ClassFunction::of(chi);
  const ClassFunction base = power;
  for (int t = 1; t <= tmax; ++t) {
    if (t > 1) power *= base;
    out.push_back(decompose(table, power).complete());
  }
  return out;
}

std::optional<int> theorem_expectation(const GroupParams& params) {
  if (!params.within_theorem_range()) return std::nullopt;
  const bool odd_power_of_two = params.p == 2 && params.m % 2 == 1;
  return odd_power_of_two ? 4 : 3;
}

CoveringReport covering_report(const CharacterTable& table, int tmax) {
  CoveringReport report;
  report.q = table.params().q;
  for (const auto& chi : table.characters()) {
    if (chi.label.kind == CharKind::Trivial) continue;
    const auto r = search_exponents(table, chi, tmax);
    // t <= e always, so a missing t implies a missing e
    if (!r.e) throw ExponentCapExceeded(chi.label.to_string(), tmax);
    report.records.push_back({chi.label, *r.e, *r.t});
    report.covering_number = std::max(report.covering_number, *r.e);
  }
  report.theorem_expected = theorem_expectation(table.params());
  if (report.theorem_expected) {
    report.matches_theorem = report.covering_number == *report.theorem_expected;
  }
  return report;
}

}  // namespace psl2cov
