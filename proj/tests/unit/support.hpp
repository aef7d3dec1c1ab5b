#ifndef PSL2COV_TESTS_SUPPORT_HPP_
#define PSL2COV_TESTS_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "psl2cov/psl2_tables.hpp"

namespace psl2cov::testing {

using Complex = std::complex<double>;

inline Complex unit_root(std::uint64_t n, std::int64_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

/// Floating-point table for even q written directly from the defining formulas,
/// in the same class and character order as the exact table.
struct NumericTable {
  std::vector<double> sizes;
  std::vector<std::vector<Complex>> rows;
  double order = 0;
};

inline NumericTable numeric_even_table(std::uint64_t q) {
  NumericTable t;
  const auto qd = static_cast<double>(q);
  t.order = qd * (qd * qd - 1);
  t.sizes.push_back(1);
  t.sizes.push_back(qd * qd - 1);
  const int half = static_cast<int>(q / 2);
  for (int a = 1; a <= half - 1; ++a) t.sizes.push_back(qd * (qd + 1));
  for (int b = 1; b <= half; ++b) t.sizes.push_back(qd * (qd - 1));

  const auto row = [&](double id, double n, auto split, auto nonsplit) {
    std::vector<Complex> r{id, n};
    for (int a = 1; a <= half - 1; ++a) r.push_back(split(a));
    for (int b = 1; b <= half; ++b) r.push_back(nonsplit(b));
    t.rows.push_back(std::move(r));
  };
  row(1, 1, [](int) { return Complex(1); }, [](int) { return Complex(1); });
  row(qd, 0, [](int) { return Complex(1); }, [](int) { return Complex(-1); });
  for (int k = 1; k <= half - 1; ++k) {
    row(qd + 1, 1, [&](int a) { return unit_root(q - 1, k * a) + unit_root(q - 1, -k * a); },
        [](int) { return Complex(0); });
  }
  for (int j = 1; j <= half; ++j) {
    row(qd - 1, -1, [](int) { return Complex(0); },
        [&](int b) { return -(unit_root(q + 1, j * b) + unit_root(q + 1, -j * b)); });
  }
  return t;
}

/// <f, chi> in floating point.
inline double numeric_inner(const std::vector<double>& sizes, double order, const std::vector<Complex>& f,
                            const std::vector<Complex>& chi) {
  Complex s = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += sizes[i] * f[i] * std::conj(chi[i]);
  return s.real() / order;
}

inline std::vector<Complex> numeric_power(const std::vector<Complex>& chi, int t) {
  std::vector<Complex> out(chi.size(), 1.0);
  for (int i = 0; i < t; ++i) {
    for (std::size_t c = 0; c < chi.size(); ++c) out[c] *= chi[c];
  }
  return out;
}

inline std::vector<Complex> approx_row(const Character& chi) {
  std::vector<Complex> out;
  for (const auto& v : chi.values) out.push_back(v.approx());
  return out;
}

inline std::vector<double> class_sizes(const CharacterTable& table) {
  std::vector<double> out;
  for (const auto& c : table.classes()) out.push_back(static_cast<double>(c.size));
  return out;
}

/// Prime powers q with lo <= q <= hi and q >= 4.
std::vector<std::uint64_t> prime_powers(std::uint64_t lo, std::uint64_t hi);

}  // namespace psl2cov::testing

#endif  // PSL2COV_TESTS_SUPPORT_HPP_
