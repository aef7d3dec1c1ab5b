#include "psl2cov/explicit_oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "psl2cov/errors.hpp"
#include "psl2cov/numtheory.hpp"

namespace psl2cov::oracle {

std::uint64_t oracle_cap() {
  const char* env = std::getenv("PSL2COV_ORACLE_CAP");
  if (env == nullptr) return kDefaultOracleCap;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultOracleCap;
  return value;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, lowest degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of code.
Poly monic_from_code(std::uint64_t code, int degree, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly digits(std::uint32_t value, int m, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    f[i] = value % p;
    value /= p;
  }
  return f;
}

std::uint32_t encode(const Poly& f, std::uint32_t p) {
  std::uint32_t value = 0;
  for (std::size_t i = f.size(); i-- > 0;) value = value * p + f[i];
  return value;
}

void check_q(std::uint64_t q, std::uint64_t cap) {
  if (!prime_power(q)) throw NotAPrimePower("q = " + std::to_string(q));
  if (q > cap) {
    throw CapExceeded("q = " + std::to_string(q) + " exceeds oracle cap " + std::to_string(cap));
  }
  if (q > 255) throw CapExceeded("explicit oracle supports q <= 255");
}

}  // namespace

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool FiniteField::is_square(Elem a) const {
  if (a == 0 || p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  return static_cast<Elem>(mod_floor(v, p_));
}

FiniteField build_field(std::uint64_t q, std::uint64_t cap) {
  check_q(q, cap);
  const auto [p64, m] = *prime_power(q);
  const auto p = static_cast<std::uint32_t>(p64);

  FiniteField field;
  field.p_ = p;
  field.m_ = m;
  field.q_ = static_cast<std::uint32_t>(q);
  for (std::uint64_t code = 0;; ++code) {
    auto f = monic_from_code(code, m, p);
    if (is_irreducible(f, p)) {
      field.modulus_ = std::move(f);
      break;
    }
  }

  const auto n = field.q_;
  field.add_.resize(static_cast<std::size_t>(n) * n);
  field.mul_.resize(static_cast<std::size_t>(n) * n);
  field.neg_.resize(n);
  field.inv_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto fa = digits(a, m, p);
    Poly neg(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) neg[i] = (p - fa[i]) % p;
    field.neg_[a] = encode(neg, p);
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto fb = digits(b, m, p);
      Poly sum(fa.size());
      for (std::size_t i = 0; i < fa.size(); ++i) sum[i] = (fa[i] + fb[i]) % p;
      field.add_[a * n + b] = encode(sum, p);
      Poly product(2 * static_cast<std::size_t>(m), 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) product[i + j] = (product[i + j] + fa[i] * fb[j]) % p;
      }
      auto reduced = poly_mod(product, field.modulus_, p);
      reduced.resize(static_cast<std::size_t>(m), 0);
      field.mul_[a * n + b] = encode(reduced, p);
    }
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = 1; b < n; ++b) {
      if (field.mul_[a * n + b] == 1) {
        field.inv_[a] = b;
        break;
      }
    }
  }
  return field;
}

ExtFieldSpec::Elem ExtFieldSpec::mul(Elem x, Elem y) const {
  const std::uint32_t q = base.q();
  const auto x0 = x % q, x1 = x / q, y0 = y % q, y1 = y / q;
  const auto top = base.mul(x1, y1);  // coefficient of y^2 = -b y - c
  const auto r0 = base.sub(base.mul(x0, y0), base.mul(c, top));
  const auto r1 = base.sub(base.add(base.mul(x0, y1), base.mul(x1, y0)), base.mul(b, top));
  return r0 + r1 * q;
}

ExtFieldSpec::Elem ExtFieldSpec::pow(Elem x, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::uint64_t ExtFieldSpec::order(Elem x) const {
  if (x == 0) throw std::domain_error("ExtFieldSpec::order: zero");
  const std::uint64_t q = base.q();
  std::uint64_t order = q * q - 1;
  for (const auto& [r, e] : factorize(order)) {
    while (order % r == 0 && pow(x, order / r) == 1) order /= r;
  }
  return order;
}

FiniteField::Elem ExtFieldSpec::trace(Elem x) const {
  const std::uint32_t q = base.q();
  const Elem xq = pow(x, q);
  const auto r0 = base.add(x % q, xq % q);
  const auto r1 = base.add(x / q, xq / q);
  if (r1 != 0) throw std::logic_error("ExtFieldSpec::trace: result outside GF(q)");
  return r0;
}

ExtFieldSpec build_ext(std::uint64_t q, std::uint64_t cap) {
  ExtFieldSpec ext;
  ext.base = build_field(q, cap);
  const auto& f = ext.base;
  const auto n = f.q();
  bool found = false;
  // smallest code c + b q with y^2 + b y + c free of roots in GF(q)
  for (std::uint32_t code = 0; code < n * n && !found; ++code) {
    const std::uint32_t c = code % n, b = code / n;
    bool has_root = false;
    for (std::uint32_t x = 0; x < n && !has_root; ++x) {
      has_root = f.add(f.add(f.mul(x, x), f.mul(b, x)), c) == 0;
    }
    if (!has_root) {
      ext.b = b;
      ext.c = c;
      found = true;
    }
  }
  if (!found) throw std::logic_error("build_ext: no irreducible quadratic");

  const std::uint64_t group_order = static_cast<std::uint64_t>(n) * n - 1;
  for (ExtFieldSpec::Elem x = 1; x < n * n; ++x) {
    if (ext.order(x) == group_order) {
      ext.tau = x;
      break;
    }
  }
  ext.sigma = ext.pow(ext.tau, n + 1);
  ext.tau0 = ext.pow(ext.tau, n - 1);
  if (!ExtFieldSpec::in_base(ext.sigma, n)) throw std::logic_error("build_ext: sigma outside GF(q)");
  return ext;
}

ExplicitGroup ExplicitGroup::build(std::uint64_t q, std::uint64_t cap) {
  ExplicitGroup g;
  g.field_ = build_field(q, cap);
  const auto& f = g.field_;
  for (int i = 0; i < f.m(); ++i) {
    g.generators_.push_back({1, static_cast<FiniteField::Elem>(ipow(f.p(), i)), 0, 1});
  }
  g.generators_.push_back({0, 1, f.neg(1), 0});
  g.enumerate();
  g.compute_classes();
  return g;
}

std::uint64_t ExplicitGroup::key(const Mat2& m) const {
  const std::uint64_t q = field_.q();
  return m.a + q * (m.b + q * (m.c + q * static_cast<std::uint64_t>(m.d)));
}

Mat2 ExplicitGroup::canonical(const Mat2& m) const {
  if (field_.p() == 2) return m;
  const Mat2 neg{field_.neg(m.a), field_.neg(m.b), field_.neg(m.c), field_.neg(m.d)};
  for (const auto [x, y] : {std::pair{m.a, neg.a}, std::pair{m.b, neg.b}, std::pair{m.c, neg.c},
                            std::pair{m.d, neg.d}}) {
    if (x != 0) return x < y ? m : neg;
  }
  return m;
}

Mat2 ExplicitGroup::multiply(const Mat2& x, const Mat2& y) const {
  const auto& f = field_;
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Mat2 ExplicitGroup::inverse(const Mat2& x) const {
  // determinant one
  return {x.d, field_.neg(x.b), field_.neg(x.c), x.a};
}

std::optional<std::size_t> ExplicitGroup::index_of(const Mat2& m) const {
  const auto it = index_.find(key(canonical(m)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t ExplicitGroup::element_order(const Mat2& m) const {
  const Mat2 identity{1, 0, 0, 1};
  Mat2 power = canonical(m);
  std::uint64_t order = 1;
  while (!(power == identity)) {
    power = canonical(multiply(power, m));
    ++order;
  }
  return order;
}

void ExplicitGroup::enumerate() {
  const auto& f = field_;
  const std::uint32_t q = f.q();
  auto add = [&](const Mat2& m) {
    if (!(canonical(m) == m)) return;
    index_.emplace(key(m), elements_.size());
    elements_.push_back(m);
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        if (a != 0) {
          add({a, b, c, f.mul(f.inv(a), f.add(1, f.mul(b, c)))});
        } else if (b != 0 && c == f.neg(f.inv(b))) {
          for (std::uint32_t d = 0; d < q; ++d) add({a, b, c, d});
        }
      }
    }
  }
}

void ExplicitGroup::compute_classes() {
  constexpr auto kUnassigned = std::numeric_limits<std::size_t>::max();
  class_of_.assign(elements_.size(), kUnassigned);
  std::vector<Mat2> inverses;
  for (const auto& g : generators_) inverses.push_back(inverse(g));
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] != kUnassigned) continue;
    const std::size_t id = classes_.size();
    ExplicitClass cls{elements_[start], 0, element_order(elements_[start])};
    class_of_[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const Mat2 x = elements_[queue.front()];
      queue.pop_front();
      ++cls.size;
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto y = index_of(multiply(multiply(generators_[i], x), inverses[i]));
        if (!y) throw std::logic_error("ExplicitGroup: conjugate left the group");
        if (class_of_[*y] == kUnassigned) {
          class_of_[*y] = id;
          queue.push_back(*y);
        }
      }
    }
    classes_.push_back(cls);
  }
}

std::vector<Mat2> enumerate_group(std::uint64_t q) { return ExplicitGroup::build(q).elements(); }

std::vector<ExplicitClass> explicit_classes(std::uint64_t q) { return ExplicitGroup::build(q).classes(); }

Mat2 parametric_representative(const ClassLabel& label, const ExtFieldSpec& ext) {
  const auto& f = ext.base;
  switch (label.kind) {
    case ClassKind::Identity: return {1, 0, 0, 1};
    case ClassKind::UnipN: return {1, 1, 0, 1};
    case ClassKind::UnipNPrime:
      for (FiniteField::Elem eta = 1; eta < f.q(); ++eta) {
        if (!f.is_square(eta)) return {1, eta, 0, 1};
      }
      throw std::logic_error("parametric_representative: no non-square in GF(q)");
    case ClassKind::Split:
    case ClassKind::SplitHalf: {
      const auto s = f.pow(ext.sigma, static_cast<std::uint64_t>(label.param));
      return {s, 0, 0, f.inv(s)};
    }
    case ClassKind::NonSplit:
    case ClassKind::NonSplitHalf: {
      const auto t = ext.trace(ext.pow(ext.tau0, static_cast<std::uint64_t>(label.param)));
      return {0, f.neg(1), 1, t};
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string signature(const ExplicitGroup& group, std::size_t cls) {
  const auto& c = group.classes()[cls];
  const auto& f = group.field();
  const auto trace = f.add(c.representative.a, c.representative.d);
  std::ostringstream out;
  out << "(size " << c.size << ", order " << c.element_order << ", trace +-" << trace << ")";
  return out.str();
}

}  // namespace

std::vector<ClassMatch> match_to_parametric(const ExplicitGroup& group, const ExtFieldSpec& ext,
                                            const CharacterTable& table) {
  if (group.q() != table.params().q || ext.base.q() != table.params().q) {
    throw MatchFailure("explicit group and table are for different q");
  }
  constexpr auto kUnmatched = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label_of(group.classes().size(), kUnmatched);
  const auto& classes = table.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto rep = parametric_representative(classes[i].label, ext);
    const auto idx = group.index_of(rep);
    if (!idx) throw MatchFailure(classes[i].label.to_string() + " representative is not in PSL2(q)");
    const std::size_t cls = group.class_of_element(*idx);
    if (label_of[cls] != kUnmatched) {
      throw MatchFailure(classes[i].label.to_string() + " and " +
                         classes[label_of[cls]].label.to_string() + " fall in the same class " +
                         signature(group, cls));
    }
    if (group.classes()[cls].size != classes[i].size) {
      throw MatchFailure(classes[i].label.to_string() + " has size " + std::to_string(classes[i].size) +
                         " but its class is " + signature(group, cls));
    }
    label_of[cls] = i;
  }
  std::vector<ClassMatch> matching;
  for (std::size_t cls = 0; cls < label_of.size(); ++cls) {
    if (label_of[cls] == kUnmatched) throw MatchFailure("unmatched explicit class " + signature(group, cls));
    matching.push_back({cls, classes[label_of[cls]].label});
  }
  return matching;
}

bool OrthogonalityReport::passed() const {
  for (const auto& e : entries) {
    if (!e.ok) return false;
  }
  return !entries.empty();
}

OrthogonalityReport second_orthogonality_check(const CharacterTable& table, const ExplicitGroup& group,
                                               const std::vector<ClassMatch>& matching) {
  OrthogonalityReport report;
  const std::uint64_t order = group.elements().size();
  for (const auto& m : matching) {
    OrthogonalityEntry entry;
    entry.label = m.label;
    entry.explicit_size = group.classes()[m.explicit_class].size;
    entry.centralizer = order / entry.explicit_size;
    const auto column = table.find(m.label);
    Cyclotomic norm(0);
    if (column) {
      for (const auto& chi : table.characters()) norm += chi.values[*column] * chi.values[*column].conjugate();
    }
    entry.ok = column.has_value() && order % entry.explicit_size == 0 &&
               norm == Cyclotomic(static_cast<std::int64_t>(entry.centralizer));
    entry.column_norm = std::move(norm);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

CrossCheck cross_check(const CharacterTable& table, std::uint64_t cap) {
  const auto& params = table.params();
  const auto group = ExplicitGroup::build(params.q, cap);
  const auto ext = build_ext(params.q, cap);
  CrossCheck check;
  check.q = params.q;
  check.element_count = group.elements().size();
  check.class_count = group.classes().size();
  const std::uint64_t gcd = params.q % 2 == 0 ? 1 : 2;
  check.order_ok = check.element_count == params.q * (params.q * params.q - 1) / gcd;
  check.class_count_ok = check.class_count == (params.q % 2 == 0 ? params.q + 1 : (params.q + 5) / 2);

  std::vector<std::uint64_t> explicit_sizes, parametric_sizes;
  for (const auto& c : group.classes()) explicit_sizes.push_back(c.size);
  for (const auto& c : table.classes()) parametric_sizes.push_back(c.size);
  std::sort(explicit_sizes.begin(), explicit_sizes.end());
  std::sort(parametric_sizes.begin(), parametric_sizes.end());
  check.class_sizes_ok = explicit_sizes == parametric_sizes;

  try {
    const auto matching = match_to_parametric(group, ext, table);
    check.matching_ok = true;
    check.orthogonality = second_orthogonality_check(table, group, matching);
  } catch (const MatchFailure& e) {
    check.matching_error = e.what();
  }
  return check;
}

}  // namespace psl2cov::oracle
