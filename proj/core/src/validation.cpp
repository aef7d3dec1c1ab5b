#include "psl2cov/validation.hpp"

#include "psl2cov/cyclotomic.hpp"

namespace psl2cov {

namespace {

Cyclotomic column_product(const CharacterTable& table, std::size_t i, std::size_t j) {
  CyclotomicAccumulator acc(table.params().conductor);
  for (const auto& chi : table.characters()) {
    acc.add_product(chi.values[i], chi.values[j].conjugate(), BigInt(1));
  }
  return std::move(acc).finish();
}

Cyclotomic row_product(const CharacterTable& table, const Character& a, const Character& b) {
  CyclotomicAccumulator acc(table.params().conductor);
  const auto& classes = table.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    acc.add_product(a.values[i], b.values[i].conjugate(), BigInt(classes[i].size));
  }
  return std::move(acc).finish();
}

}  // namespace

TableValidity validate_table(const CharacterTable& table) {
  TableValidity v;
  const auto& params = table.params();
  const auto& classes = table.classes();
  const auto& chars = table.characters();
  const BigInt order(params.order);

  v.row_orthogonality = true;
  for (std::size_t a = 0; a < chars.size(); ++a) {
    for (std::size_t b = a; b < chars.size(); ++b) {
      const Cyclotomic expected(a == b ? order : BigInt(0));
      if (!(row_product(table, chars[a], chars[b]) == expected)) {
        v.row_orthogonality = false;
        v.failures.push_back("row " + chars[a].label.to_string() + " x " + chars[b].label.to_string());
      }
    }
  }

  v.column_orthogonality = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      const Cyclotomic expected(i == j ? BigInt(params.order / classes[i].size) : BigInt(0));
      if (!(column_product(table, i, j) == expected)) {
        v.column_orthogonality = false;
        v.failures.push_back("column " + classes[i].label.to_string() + " x " +
                             classes[j].label.to_string());
      }
    }
  }

  BigInt degrees = 0;
  v.degrees_match_identity = true;
  for (const auto& chi : chars) {
    degrees += BigInt(chi.degree) * chi.degree;
    if (!(chi.values.front() == Cyclotomic(BigInt(chi.degree)))) {
      v.degrees_match_identity = false;
      v.failures.push_back("degree " + chi.label.to_string());
    }
  }
  v.degree_sum = degrees == order;
  if (!v.degree_sum) v.failures.push_back("sum of squared degrees " + degrees.str());

  std::uint64_t sizes = 0;
  for (const auto& c : classes) sizes += c.size;
  v.class_sum = sizes == params.order;
  if (!v.class_sum) v.failures.push_back("sum of class sizes " + std::to_string(sizes));
  return v;
}

bool omega_identities_hold(const GroupParams& params) {
  if (params.parity == ParityCase::Even) return true;
  const auto [w, ws] = omega_values(params);
  const auto q = static_cast<std::int64_t>(params.q);
  const std::int64_t product = params.parity == ParityCase::OneMod4 ? (1 - q) / 4 : (1 + q) / 4;
  return w + ws == Cyclotomic(1) && w * ws == Cyclotomic(product);
}

}  // namespace psl2cov
