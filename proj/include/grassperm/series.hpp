#pragma once

#include <cstddef>
#include <vector>

#include "grassperm/count_value.hpp"

namespace grassperm {

// Coefficients [x^n t^i] of the bivariate generating function of Grassmannian
// permutations by size (x) and inversions (t), truncated at x^max_n.
class CoefficientTable {
 public:
  CoefficientTable(std::size_t max_n, std::vector<std::vector<CountValue>> rows);

  std::size_t max_n() const { return max_n_; }
  // Zero outside the stored range.
  CountValue at(std::size_t n, std::size_t inversions) const;
  const std::vector<CountValue>& row(std::size_t n) const { return rows_.at(n); }

 private:
  std::size_t max_n_;
  std::vector<std::vector<CountValue>> rows_;
};

// Expands
//   1/(1-x) [1 + sum_{k>=1} prod_{r=1}^{k} x/(1 - x t^r)] - x/(1-x)^2
// as exact power series in x up to degree max_n.
CoefficientTable inversion_gf_table(std::size_t max_n);

}  // namespace grassperm
