#include "psl2cov/rootsums.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "psl2cov/numtheory.hpp"

namespace psl2cov {

std::string_view to_string(SumKind kind) { return kind == SumKind::Split ? "split" : "nonsplit"; }

std::vector<int> legal_indices(ParityCase parity, SumKind kind, std::uint64_t q) {
  GroupParams params;
  params.q = q;
  params.parity = parity;
  return kind == SumKind::Split ? principal_indices(params) : discrete_indices(params);
}

namespace {

void validate(const SumSpec& spec) {
  if (spec.t < 1) throw std::invalid_argument("SumSpec: t must be positive");
  const auto legal = legal_indices(spec.parity, spec.kind, spec.q);
  if (std::find(legal.begin(), legal.end(), spec.index) == legal.end()) {
    throw std::invalid_argument("SumSpec: index " + std::to_string(spec.index) +
                                " is not legal for q = " + std::to_string(spec.q));
  }
}

struct SumShape {
  std::uint64_t order;        // order of the underlying root
  std::int64_t upper;         // summation runs over 1..upper
  std::int64_t half_term_at;  // 0, or the exponent of an extra 2 x^e term
};

SumShape shape(ParityCase parity, SumKind kind, std::uint64_t q) {
  const auto qi = static_cast<std::int64_t>(q);
  const bool split = kind == SumKind::Split;
  switch (parity) {
    case ParityCase::Even:
      return split ? SumShape{q - 1, qi / 2 - 1, 0} : SumShape{q + 1, qi / 2, 0};
    case ParityCase::ThreeMod4:
      return split ? SumShape{q - 1, (qi - 3) / 4, 0} : SumShape{q + 1, (qi - 3) / 4, 0};
    case ParityCase::OneMod4:
      return split ? SumShape{q - 1, (qi - 5) / 4, (qi - 1) / 4} : SumShape{q + 1, (qi - 1) / 4, 0};
  }
  throw std::logic_error("unreachable");
}

Cyclotomic integer(std::int64_t v) { return Cyclotomic(v); }

Cyclotomic minus_one_power(std::int64_t e) { return integer(e % 2 == 0 ? 1 : -1); }

}  // namespace

Cyclotomic direct_sum_for_multiplier(ParityCase parity, SumKind kind, std::uint64_t q,
                                     std::int64_t multiplier) {
  const auto s = shape(parity, kind, q);
  std::vector<Cyclotomic::Term> terms;
  for (std::int64_t a = 1; a <= s.upper; ++a) {
    terms.push_back({mod_floor(multiplier * a, s.order), BigInt(1)});
    terms.push_back({mod_floor(-multiplier * a, s.order), BigInt(1)});
  }
  if (s.half_term_at != 0) terms.push_back({mod_floor(multiplier * s.half_term_at, s.order), BigInt(2)});
  return Cyclotomic::from_terms(s.order, std::move(terms));
}

Cyclotomic direct_sum(const SumSpec& spec) {
  validate(spec);
  return direct_sum_for_multiplier(spec.parity, spec.kind, spec.q, spec.multiplier());
}

// Every legal index is even for odd q, so x = eps^M (resp. eta0^M) has order
// dividing (q-1)/2 (resp. (q+1)/2), and the summation ranges together with 0 and
// the half-class exponent form complete residue systems for that order.
Cyclotomic closed_sum(const SumSpec& spec) {
  validate(spec);
  const auto q = static_cast<std::int64_t>(spec.q);
  const std::int64_t m = spec.multiplier();
  const bool split = spec.kind == SumKind::Split;
  const bool trivial_root = m % (split ? q - 1 : q + 1) == 0;
  switch (spec.parity) {
    case ParityCase::Even:
      if (split) return integer(trivial_root ? q - 2 : -1);
      return integer(trivial_root ? q : -1);
    case ParityCase::ThreeMod4:
      if (split) return integer(trivial_root ? (q - 3) / 2 : -1);
      // the residue (q+1)/4 is missing from the range: -1 - eta0^((q+1)M/4)
      if (trivial_root) return integer((q - 3) / 2);
      return integer(-1) - Cyclotomic::root(spec.q + 1, (q + 1) / 4 * m);
    case ParityCase::OneMod4:
      // the split sum carries 2 x^((q-1)/4) = 2 (-1)^(M/2) for the half class
      if (split) return trivial_root ? integer((q - 1) / 2) : integer(-1) + minus_one_power(m / 2);
      return integer(trivial_root ? (q - 1) / 2 : -1);
  }
  throw std::logic_error("unreachable");
}

Cyclotomic quoted_closed_sum(const SumSpec& spec) {
  validate(spec);
  const auto q = static_cast<std::int64_t>(spec.q);
  const std::int64_t m = spec.multiplier();
  const bool split = spec.kind == SumKind::Split;
  switch (spec.parity) {
    case ParityCase::Even:
    case ParityCase::ThreeMod4:
      if (spec.parity == ParityCase::ThreeMod4 && !split) {
        if (m % (q + 1) == 0) return integer((q + 1) / 2);
        return integer(-1) - Cyclotomic::root(spec.q + 1, (q + 1) / 4 * m);
      }
      return closed_sum(spec);
    case ParityCase::OneMod4:
      if (split) {
        // branch test gcd(M/2, (q+1)/2) != (q-1)/2, degenerate value (q+1)/2
        if (std::gcd(m / 2, (q + 1) / 2) != (q - 1) / 2) return integer(-1) + minus_one_power(m / 2);
        return integer((q + 1) / 2);
      }
      // branch test gcd(M, q-1) != q+1, which never fails
      if (std::gcd(m, q - 1) != q + 1) return integer(-1);
      return integer((q - 1) / 2);
  }
  throw std::logic_error("unreachable");
}

LemmaSweepReport lemma_sweep(std::uint64_t q, int t_min, int t_max) {
  const auto params = group_params(q);
  LemmaSweepReport report;
  report.q = q;
  report.parity = params.parity;
  for (const SumKind kind : {SumKind::Split, SumKind::NonSplit}) {
    for (int index : legal_indices(params.parity, kind, q)) {
      for (int t = t_min; t <= t_max; ++t) {
        const SumSpec spec{params.parity, kind, t, index, q};
        const auto direct = direct_sum(spec);
        const auto closed = closed_sum(spec);
        const auto quoted = quoted_closed_sum(spec);
        ++report.checked;
        if (!(closed == direct)) report.counterexamples.push_back({spec, direct, closed});
        if (!(quoted == direct)) report.quoted_discrepancies.push_back({spec, direct, quoted});
      }
    }
  }
  return report;
}

}  // namespace psl2cov
