#include "psl2cov/claims.hpp"

#include <map>
#include <utility>

#include "psl2cov/tensor_covering.hpp"

namespace psl2cov {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return "match";
    case ClaimStatus::Mismatch: return "mismatch";
    case ClaimStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

using Label = CharacterLabel;

class ClaimList {
 public:
  explicit ClaimList(const GroupParams& params)
      : q_(static_cast<std::int64_t>(params.q)),
        ks_(principal_indices(params)),
        js_(discrete_indices(params)) {}

  std::int64_t q() const { return q_; }
  const std::vector<int>& ks() const { return ks_; }
  const std::vector<int>& js() const { return js_; }

  void add(int power, Label base, Label target, std::int64_t value, const std::string& source) {
    claims_.push_back({power, base, target, BigInt(value), source});
  }

  void for_principal(int power, Label base, std::int64_t value, const std::string& source) {
    for (int k : ks_) add(power, base, Label::principal(k), value, source);
  }

  void for_discrete(int power, Label base, std::int64_t value, const std::string& source) {
    for (int j : js_) add(power, base, Label::discrete(j), value, source);
  }

  std::vector<Claim> take() && { return std::move(claims_); }

 private:
  std::int64_t q_;
  std::vector<int> ks_;
  std::vector<int> js_;
  std::vector<Claim> claims_;
};

// x' = +-2x modulo `modulus`, the index paired with x in the square of a series character.
bool doubled_partner(std::int64_t x, std::int64_t partner, std::int64_t modulus) {
  return (2 * x + partner) % modulus == 0 || (2 * x - partner) % modulus == 0;
}

void even_claims(ClaimList& c) {
  const auto q = c.q();
  const Label st = Label::steinberg(), triv = Label::trivial();

  std::string src = "text:even:steinberg-square";
  c.add(2, st, triv, 1, src);
  c.add(2, st, st, 1, src);
  c.for_principal(2, st, 1, src);
  c.for_discrete(2, st, 1, src);

  src = "text:even:principal-square";
  for (int k : c.ks()) {
    const auto base = Label::principal(k);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 2, src);
    for (int k2 : c.ks()) c.add(2, base, Label::principal(k2), doubled_partner(k, k2, q - 1) ? 2 : 1, src);
  }

  src = "text:even:discrete-square";
  for (int j : c.js()) {
    c.add(2, Label::discrete(j), triv, 1, src);
    c.add(2, Label::discrete(j), st, 0, src);
  }

  src = "text:even:discrete-cube";
  for (int j : c.js()) {
    const auto base = Label::discrete(j);
    const bool third = 3 * j == q + 1;
    c.add(3, base, triv, third ? 0 : 1, src);
    c.add(3, base, st, third ? q - 2 : q - 3, src);
    for (int j2 : c.js()) {
      c.add(3, base, Label::discrete(j2), (3 * j + j2) % (q + 1) == 0 ? q - 3 : q - 4, src);
    }
    c.for_principal(3, base, q - 2, src);
  }

  if ((q + 1) % 3 == 0) {
    src = "text:even:discrete-fourth";
    const int j = static_cast<int>((q + 1) / 3);
    const auto base = Label::discrete(j);
    c.add(4, base, triv, q - 1, src);
    c.add(4, base, st, q * q - 4 * q + 4, src);
    c.for_principal(4, base, q * q - 3 * q + 3, src);
    for (int j2 : c.js()) {
      c.add(4, base, Label::discrete(j2), j2 == j ? q * q - 5 * q + 6 : q * q - 5 * q + 11, src);
    }
  }
}

void three_mod_four_claims(ClaimList& c) {
  const auto q = c.q();
  const Label st = Label::steinberg(), triv = Label::trivial();
  const Label h1{CharKind::HalfMinus1, 0}, h2{CharKind::HalfMinus2, 0};

  std::string src = "text:3mod4:steinberg-square";
  c.add(2, st, triv, 1, src);
  c.add(2, st, st, 2, src);
  c.add(2, st, h1, 1, src);
  c.add(2, st, h2, 1, src);
  c.for_principal(2, st, 2, src);
  c.for_discrete(2, st, 2, src);

  // Inline statement: value 3 exactly when 2k + k' = q + 1 or 2k - k' = q + 1.
  src = "text:3mod4:principal-square";
  for (int k : c.ks()) {
    for (int k2 : c.ks()) {
      const bool special = 2 * k + k2 == q + 1 || 2 * k - k2 == q + 1;
      c.add(2, Label::principal(k), Label::principal(k2), special ? 3 : 2, src);
    }
  }

  src = "text:3mod4:discrete-square-half";
  for (int j : c.js()) c.add(2, Label::discrete(j), h1, 2, src);

  src = "grid:3mod4:principal-square";
  for (int k : c.ks()) {
    const auto base = Label::principal(k);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 3, src);
    for (int k2 : c.ks()) c.add(2, base, Label::principal(k2), doubled_partner(k, k2, q - 1) ? 3 : 2, src);
    c.for_discrete(2, base, 2, src);
    c.add(2, base, h1, 1, src);
    c.add(2, base, h2, 1, src);
  }

  src = "grid:3mod4:discrete-square";
  for (int j : c.js()) {
    const auto base = Label::discrete(j);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 1, src);
    c.for_principal(2, base, 2, src);
    for (int j2 : c.js()) c.add(2, base, Label::discrete(j2), doubled_partner(j, j2, q + 1) ? 1 : 2, src);
    c.add(2, base, h1, 1, src);
    c.add(2, base, h2, 1, src);
  }

  for (const auto& [base, name] : {std::pair{h1, "half-minus-1-cube"}, std::pair{h2, "half-minus-2-cube"}}) {
    src = std::string("grid:3mod4:") + name;
    c.add(3, base, triv, 1, src);
    c.add(3, base, st, (q - 3) / 4, src);
    c.for_principal(3, base, (q + 1) / 4, src);
    c.for_discrete(3, base, (q - 7) / 4, src);
    c.add(3, base, h1, (q - 3) / 4, src);
    c.add(3, base, h2, (q - 3) / 4, src);
  }
}

void one_mod_four_claims(ClaimList& c) {
  const auto q = c.q();
  const Label st = Label::steinberg(), triv = Label::trivial();
  const Label h1{CharKind::HalfPlus1, 0}, h2{CharKind::HalfPlus2, 0};

  std::string src = "text:1mod4:steinberg-square";
  c.add(2, st, triv, 1, src);
  c.add(2, st, st, 2, src);
  c.add(2, st, h1, 1, src);
  c.add(2, st, h2, 1, src);
  c.for_principal(2, st, 2, src);
  c.for_discrete(2, st, 2, src);

  c.add(2, h1, h2, 0, "text:1mod4:half-plus-square");

  src = "text:1mod4:half-plus-cube";
  c.add(3, h1, triv, 1, src);
  c.add(3, h1, st, (q + 3) / 4, src);
  c.for_principal(3, h1, (q + 7) / 4, src);
  c.for_discrete(3, h1, (q - 1) / 4, src);
  c.add(3, h1, h1, (q + 7) / 4, src);
  c.add(3, h1, h2, 1, src);

  // Inline statement: value 3 exactly when 2k + k' = q - 1 or 2k - k' = q - 1.
  src = "text:1mod4:principal-square";
  for (int k : c.ks()) {
    const auto base = Label::principal(k);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 3, src);
    c.for_discrete(2, base, 2, src);
    c.add(2, base, h1, 1, src);
    c.add(2, base, h2, 1, src);
    for (int k2 : c.ks()) {
      const bool special = 2 * k + k2 == q - 1 || 2 * k - k2 == q - 1;
      c.add(2, base, Label::principal(k2), special ? 3 : 2, src);
    }
  }

  src = "grid:1mod4:principal-square";
  for (int k : c.ks()) {
    const auto base = Label::principal(k);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 3, src);
    for (int k2 : c.ks()) c.add(2, base, Label::principal(k2), doubled_partner(k, k2, q - 1) ? 3 : 2, src);
    c.for_discrete(2, base, 2, src);
    c.add(2, base, h1, 1, src);
    c.add(2, base, h2, 1, src);
  }

  src = "grid:1mod4:discrete-square";
  for (int j : c.js()) {
    const auto base = Label::discrete(j);
    c.add(2, base, triv, 1, src);
    c.add(2, base, st, 1, src);
    c.for_principal(2, base, 2, src);
    for (int j2 : c.js()) c.add(2, base, Label::discrete(j2), doubled_partner(j, j2, q + 1) ? 1 : 2, src);
    c.add(2, base, h1, 1, src);
    c.add(2, base, h2, 1, src);
  }

  // Both cube rows are printed with identical entries.
  for (const auto& [base, name] : {std::pair{h1, "half-plus-1-cube"}, std::pair{h2, "half-plus-2-cube"}}) {
    src = std::string("grid:1mod4:") + name;
    c.add(3, base, triv, 1, src);
    c.add(3, base, st, (q + 3) / 4, src);
    c.for_principal(3, base, (q + 7) / 4, src);
    c.for_discrete(3, base, (q - 1) / 4, src);
    c.add(3, base, h1, (q + 7) / 4, src);
    c.add(3, base, h2, 1, src);
  }
}

}  // namespace

std::vector<Claim> stated_claims(const GroupParams& params) {
  ClaimList list(params);
  switch (params.parity) {
    case ParityCase::Even: even_claims(list); break;
    case ParityCase::ThreeMod4: three_mod_four_claims(list); break;
    case ParityCase::OneMod4: one_mod_four_claims(list); break;
  }
  return std::move(list).take();
}

std::vector<ClaimOutcome> check_claims(const CharacterTable& table, const std::vector<Claim>& claims) {
  std::map<std::pair<int, CharacterLabel>, Decomposition> cache;
  std::vector<ClaimOutcome> outcomes;
  outcomes.reserve(claims.size());
  for (const auto& claim : claims) {
    const auto key = std::make_pair(claim.power, claim.base);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const auto f = pointwise_power(table.character(claim.base), static_cast<unsigned>(claim.power));
      it = cache.emplace(key, decompose(table, f)).first;
    }
    ClaimOutcome outcome{claim, it->second.multiplicity(claim.target), ClaimStatus::NotApplicable};
    if (table.params().within_theorem_range()) {
      outcome.status = outcome.computed == claim.claimed ? ClaimStatus::Match : ClaimStatus::Mismatch;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace psl2cov
