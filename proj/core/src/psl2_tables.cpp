#include "psl2cov/psl2_tables.hpp"

#include <charconv>
#include <numeric>

#include "psl2cov/errors.hpp"
#include "psl2cov/numtheory.hpp"

namespace psl2cov {

std::string_view to_string(ParityCase c) {
  switch (c) {
    case ParityCase::Even: return "even";
    case ParityCase::OneMod4: return "1mod4";
    case ParityCase::ThreeMod4: return "3mod4";
  }
  return "?";
}

GroupParams group_params(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp || q < 4) throw NotAPrimePower("q = " + std::to_string(q) + " is not a prime power >= 4");
  GroupParams params;
  params.q = q;
  params.p = pp->first;
  params.m = pp->second;
  if (params.p == 2) {
    params.parity = ParityCase::Even;
    params.order = q * (q * q - 1);
    params.conductor = std::lcm(q - 1, q + 1);
  } else {
    params.parity = q % 4 == 1 ? ParityCase::OneMod4 : ParityCase::ThreeMod4;
    params.order = q * (q * q - 1) / 2;
    params.conductor = std::lcm(std::lcm(q - 1, q + 1), params.p);
  }
  return params;
}

std::string_view kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::Identity: return "identity";
    case ClassKind::UnipN: return "unip_n";
    case ClassKind::UnipNPrime: return "unip_n_prime";
    case ClassKind::Split: return "split";
    case ClassKind::SplitHalf: return "split_half";
    case ClassKind::NonSplit: return "nonsplit";
    case ClassKind::NonSplitHalf: return "nonsplit_half";
  }
  return "?";
}

std::string ClassLabel::to_string() const {
  switch (kind) {
    case ClassKind::Identity: return "1";
    case ClassKind::UnipN: return "N";
    case ClassKind::UnipNPrime: return "N'";
    case ClassKind::Split:
    case ClassKind::SplitHalf: return "S(" + std::to_string(param) + ")";
    case ClassKind::NonSplit:
    case ClassKind::NonSplitHalf: return "T(" + std::to_string(param) + ")";
  }
  return "?";
}

std::vector<ConjugacyClass> conjugacy_data(const GroupParams& params) {
  const std::uint64_t q = params.q;
  std::vector<ConjugacyClass> classes;
  classes.push_back({{ClassKind::Identity, 0}, 1});
  auto add_range = [&](ClassKind kind, std::uint64_t last, std::uint64_t size) {
    for (std::uint64_t i = 1; i <= last; ++i) classes.push_back({{kind, static_cast<int>(i)}, size});
  };
  switch (params.parity) {
    case ParityCase::Even:
      classes.push_back({{ClassKind::UnipN, 0}, q * q - 1});
      add_range(ClassKind::Split, q / 2 - 1, q * (q + 1));
      add_range(ClassKind::NonSplit, q / 2, q * (q - 1));
      break;
    case ParityCase::ThreeMod4:
      classes.push_back({{ClassKind::UnipN, 0}, (q * q - 1) / 2});
      classes.push_back({{ClassKind::UnipNPrime, 0}, (q * q - 1) / 2});
      add_range(ClassKind::Split, (q - 3) / 4, q * (q + 1));
      add_range(ClassKind::NonSplit, (q - 3) / 4, q * (q - 1));
      classes.push_back({{ClassKind::NonSplitHalf, static_cast<int>((q + 1) / 4)}, q * (q - 1) / 2});
      break;
    case ParityCase::OneMod4:
      classes.push_back({{ClassKind::UnipN, 0}, (q * q - 1) / 2});
      classes.push_back({{ClassKind::UnipNPrime, 0}, (q * q - 1) / 2});
      add_range(ClassKind::Split, (q - 5) / 4, q * (q + 1));
      classes.push_back({{ClassKind::SplitHalf, static_cast<int>((q - 1) / 4)}, q * (q + 1) / 2});
      add_range(ClassKind::NonSplit, (q - 1) / 4, q * (q - 1));
      break;
  }
  return classes;
}

std::string CharacterLabel::to_string() const {
  switch (kind) {
    case CharKind::Trivial: return "triv";
    case CharKind::Steinberg: return "st";
    case CharKind::Principal: return "pp:" + std::to_string(index);
    case CharKind::Discrete: return "dd:" + std::to_string(index);
    case CharKind::HalfMinus1: return "half-:1";
    case CharKind::HalfMinus2: return "half-:2";
    case CharKind::HalfPlus1: return "half+:1";
    case CharKind::HalfPlus2: return "half+:2";
  }
  return "?";
}

CharacterLabel CharacterLabel::parse(std::string_view text) {
  if (text == "triv") return trivial();
  if (text == "st") return steinberg();
  if (text == "half-:1") return {CharKind::HalfMinus1, 0};
  if (text == "half-:2") return {CharKind::HalfMinus2, 0};
  if (text == "half+:1") return {CharKind::HalfPlus1, 0};
  if (text == "half+:2") return {CharKind::HalfPlus2, 0};
  if (text.size() > 3 && (text.starts_with("pp:") || text.starts_with("dd:"))) {
    int index = 0;
    const auto digits = text.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
      return text[0] == 'p' ? principal(index) : discrete(index);
    }
  }
  throw InvalidLabel("unknown character label '" + std::string(text) + "'");
}

CharacterTable::CharacterTable(GroupParams params, std::vector<ConjugacyClass> classes,
                               std::vector<Character> characters)
    : params_(params), classes_(std::move(classes)), characters_(std::move(characters)) {}

std::optional<std::size_t> CharacterTable::find(const CharacterLabel& label) const {
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    if (characters_[i].label == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> CharacterTable::find(const ClassLabel& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label) return i;
  }
  return std::nullopt;
}

const Character& CharacterTable::character(const CharacterLabel& label) const {
  const auto i = find(label);
  if (!i) {
    throw InvalidLabel(label.to_string() + " is not a character of PSL2(" +
                       std::to_string(params_.q) + ")");
  }
  return characters_[*i];
}

const Cyclotomic& CharacterTable::value(const CharacterLabel& chi, const ClassLabel& cls) const {
  const auto c = find(cls);
  if (!c) throw InvalidLabel(cls.to_string() + " is not a class of this table");
  return character(chi).values[*c];
}

std::vector<int> principal_indices(const GroupParams& params) {
  const auto q = static_cast<int>(params.q);
  std::vector<int> out;
  switch (params.parity) {
    case ParityCase::Even:
      for (int k = 1; k <= q / 2 - 1; ++k) out.push_back(k);
      break;
    case ParityCase::ThreeMod4:
      for (int k = 2; k <= (q - 3) / 2; k += 2) out.push_back(k);
      break;
    case ParityCase::OneMod4:
      for (int k = 2; k <= (q - 5) / 2; k += 2) out.push_back(k);
      break;
  }
  return out;
}

std::vector<int> discrete_indices(const GroupParams& params) {
  const auto q = static_cast<int>(params.q);
  std::vector<int> out;
  switch (params.parity) {
    case ParityCase::Even:
      for (int j = 1; j <= q / 2; ++j) out.push_back(j);
      break;
    case ParityCase::ThreeMod4:
      for (int j = 2; j <= (q - 3) / 2; j += 2) out.push_back(j);
      break;
    case ParityCase::OneMod4:
      for (int j = 2; j <= (q - 1) / 2; j += 2) out.push_back(j);
      break;
  }
  return out;
}

Cyclotomic quadratic_gauss_sum(std::uint64_t p) {
  std::vector<Cyclotomic::Term> terms;
  for (std::uint64_t t = 1; t < p; ++t) {
    // Euler's criterion
    std::uint64_t power = 1;
    for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) power = power * t % p;
    terms.push_back({t, BigInt(power == 1 ? 1 : -1)});
  }
  return Cyclotomic::from_terms(p, std::move(terms));
}

std::pair<Cyclotomic, Cyclotomic> omega_values(const GroupParams& params) {
  if (params.parity == ParityCase::Even) {
    throw CaseMismatch("omega values are only defined for odd q");
  }
  Cyclotomic root_term;
  if (params.m % 2 == 0) {
    root_term = Cyclotomic(static_cast<std::int64_t>(ipow(params.p, params.m / 2)));
  } else {
    const auto scale = static_cast<std::int64_t>(ipow(params.p, (params.m - 1) / 2));
    root_term = quadratic_gauss_sum(params.p) * BigInt(scale);
  }
  // Halve inside Q(zeta_p) so the stored form stays a short sum of p-th roots.
  const Cyclotomic one = Cyclotomic(1).promoted(root_term.conductor());
  Cyclotomic omega = (one + root_term).exact_div(2).promoted(params.conductor);
  Cyclotomic omega_star = (one - root_term).exact_div(2).promoted(params.conductor);
  return {std::move(omega), std::move(omega_star)};
}

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(const GroupParams& params)
      : params_(params), classes_(conjugacy_data(params)), n_(params.conductor) {}

  Cyclotomic integer(std::int64_t v) const { return Cyclotomic(v).promoted(n_); }
  Cyclotomic sign(std::int64_t exponent) const { return integer(exponent % 2 == 0 ? 1 : -1); }

  // eps^x, eps a primitive (q-1)-th root of unity
  Cyclotomic eps(std::int64_t x) const {
    const std::uint64_t order = params_.q - 1;
    return Cyclotomic::root(n_, static_cast<std::int64_t>(mod_floor(x, order) * (n_ / order)));
  }

  // eta0^x, eta0 a primitive (q+1)-th root of unity
  Cyclotomic eta(std::int64_t x) const {
    const std::uint64_t order = params_.q + 1;
    return Cyclotomic::root(n_, static_cast<std::int64_t>(mod_floor(x, order) * (n_ / order)));
  }

  template <typename ValueAt>
  void add(CharacterLabel label, std::uint64_t degree, ValueAt&& value_at) {
    Character chi{label, degree, {}};
    chi.values.reserve(classes_.size());
    for (const auto& c : classes_) chi.values.push_back(value_at(c.label).promoted(n_));
    characters_.push_back(std::move(chi));
  }

  CharacterTable finish() && {
    return CharacterTable(params_, std::move(classes_), std::move(characters_));
  }

 private:
  GroupParams params_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Character> characters_;
  std::uint64_t n_;
};

}  // namespace

CharacterTable character_table(const GroupParams& params) {
  TableBuilder b(params);
  const auto q = static_cast<std::int64_t>(params.q);
  using K = ClassKind;

  b.add(CharacterLabel::trivial(), 1, [&](const ClassLabel&) { return b.integer(1); });

  b.add(CharacterLabel::steinberg(), params.q, [&](const ClassLabel& c) {
    switch (c.kind) {
      case K::Identity: return b.integer(q);
      case K::Split:
      case K::SplitHalf: return b.integer(1);
      case K::NonSplit:
      case K::NonSplitHalf: return b.integer(-1);
      default: return b.integer(0);
    }
  });

  for (int k : principal_indices(params)) {
    b.add(CharacterLabel::principal(k), params.q + 1, [&](const ClassLabel& c) {
      switch (c.kind) {
        case K::Identity: return b.integer(q + 1);
        case K::UnipN:
        case K::UnipNPrime: return b.integer(1);
        case K::Split: return b.eps(c.param * k) + b.eps(-c.param * k);
        case K::SplitHalf: return b.eps((q - 1) * k / 4) * BigInt(2);
        default: return b.integer(0);
      }
    });
  }

  for (int j : discrete_indices(params)) {
    b.add(CharacterLabel::discrete(j), params.q - 1, [&](const ClassLabel& c) {
      switch (c.kind) {
        case K::Identity: return b.integer(q - 1);
        case K::UnipN:
        case K::UnipNPrime: return b.integer(-1);
        case K::NonSplit: return -(b.eta(c.param * j) + b.eta(-c.param * j));
        case K::NonSplitHalf: return -(b.eta((q + 1) * j / 4) * BigInt(2));
        default: return b.integer(0);
      }
    });
  }

  if (params.parity == ParityCase::ThreeMod4) {
    const auto [omega, omega_star] = omega_values(params);
    for (const bool first : {true, false}) {
      const auto label = CharacterLabel{first ? CharKind::HalfMinus1 : CharKind::HalfMinus2, 0};
      b.add(label, (params.q - 1) / 2, [&](const ClassLabel& c) {
        switch (c.kind) {
          case K::Identity: return b.integer((q - 1) / 2);
          case K::UnipN: return -(first ? omega_star : omega);
          case K::UnipNPrime: return -(first ? omega : omega_star);
          case K::NonSplit: return b.sign(c.param + 1);
          case K::NonSplitHalf: return b.sign((q + 5) / 4);
          default: return b.integer(0);
        }
      });
    }
  } else if (params.parity == ParityCase::OneMod4) {
    const auto [omega, omega_star] = omega_values(params);
    for (const bool first : {true, false}) {
      const auto label = CharacterLabel{first ? CharKind::HalfPlus1 : CharKind::HalfPlus2, 0};
      b.add(label, (params.q + 1) / 2, [&](const ClassLabel& c) {
        switch (c.kind) {
          case K::Identity: return b.integer((q + 1) / 2);
          case K::UnipN: return first ? omega : omega_star;
          case K::UnipNPrime: return first ? omega_star : omega;
          case K::Split: return b.sign(c.param);
          case K::SplitHalf: return b.sign((q - 1) / 4);
          default: return b.integer(0);
        }
      });
    }
  }
  return std::move(b).finish();
}

std::vector<ClassLabel> center_classes(const Character& chi, const CharacterTable& table) {
  const Cyclotomic degree_squared{BigInt(chi.degree) * chi.degree};
  std::vector<ClassLabel> out;
  for (std::size_t i = 0; i < table.classes().size(); ++i) {
    const auto& v = chi.values[i];
    if (v * v.conjugate() == degree_squared) out.push_back(table.classes()[i].label);
  }
  return out;
}

}  // namespace psl2cov
