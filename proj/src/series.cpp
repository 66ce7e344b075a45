#include "grassperm/series.hpp"

#include <algorithm>

namespace grassperm {

namespace {

// Bivariate series: coefficient [x^n t^i] at terms[n][i].
using Series = std::vector<std::vector<CountValue>>;

void add_at(std::vector<CountValue>& row, std::size_t i, const CountValue& v) {
  if (row.size() <= i) row.resize(i + 1, 0);
  row[i] += v;
}

// s * x / (1 - x t^r), truncated at x^max_n.
Series times_factor(const Series& s, std::size_t r, std::size_t max_n) {
  Series out(max_n + 1);
  // Multiply by x.
  for (std::size_t n = 0; n < max_n; ++n) out[n + 1] = s[n];
  // Divide by (1 - x t^r): out[n] += t^r * out[n-1], ascending in n.
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto prev = out[n - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (prev[i] != 0) add_at(out[n], i + r, prev[i]);
    }
  }
  return out;
}

}  // namespace

CoefficientTable::CoefficientTable(std::size_t max_n, std::vector<std::vector<CountValue>> rows)
    : max_n_(max_n), rows_(std::move(rows)) {}

CountValue CoefficientTable::at(std::size_t n, std::size_t inversions) const {
  if (n > max_n_ || inversions >= rows_[n].size()) return 0;
  return rows_[n][inversions];
}

CoefficientTable inversion_gf_table(std::size_t max_n) {
  Series sum(max_n + 1);
  sum[0] = {1};
  Series product(max_n + 1);
  product[0] = {1};
  // Each factor carries at least one x, so terms with k > max_n vanish.
  for (std::size_t k = 1; k <= max_n; ++k) {
    product = times_factor(product, k, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t i = 0; i < product[n].size(); ++i) add_at(sum[n], i, product[n][i]);
    }
  }
  // Multiply by 1/(1 - x): prefix sums in n.
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t i = 0; i < sum[n - 1].size(); ++i) add_at(sum[n], i, sum[n - 1][i]);
  }
  // Subtract x/(1-x)^2 = sum_n n x^n from the t^0 column.
  for (std::size_t n = 1; n <= max_n; ++n) {
    add_at(sum[n], 0, -CountValue(n));
    if (sum[n][0] < 0) throw ConsistencyError("negative coefficient after identity correction");
  }
  for (auto& row : sum) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  return CoefficientTable(max_n, std::move(sum));
}

}  // namespace grassperm
