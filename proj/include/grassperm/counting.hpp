#pragma once

// Exact closed forms and recurrences for Grassmannian permutations avoiding
// id_k, the avoider words B(k, m), and the Dyck path statistics behind them.

#include <cstddef>
#include <string>
#include <vector>

#include "grassperm/count_value.hpp"

namespace grassperm {

// C(n, k), zero whenever k < 0, k > n or n < 0.
CountValue binomial(long n, long k);

// C_n for n >= 0, zero for negative n.
CountValue catalan(long n);
// C_{numerator/denominator}; zero unless the index is a nonnegative integer.
CountValue catalan_or_zero(long numerator, long denominator);

// Ballot number T(n, k) = (n - k + 1) / (n + 1) * C(n + k, n); zero when
// n < 0, k < 0 or k > n + 1.
CountValue ballot(long n, long k);

// |G_n(w)| for any non-identity Grassmannian pattern G(w) of length k >= 2.
CountValue count_avoiders_nonidentity(long n, long k);

// The alternating Catalan sum
//   sum_{j=1}^{2k-m} (-1)^{j-1} j C(2k-m-j, j) C_{k-j},
// which equals B(k, m) for every k, m >= 0.
CountValue avoider_count_closed_form(long k, long m);

// B(k, m) from its defining recurrence. Memoized in a process-wide table.
CountValue avoider_count_recursive(long k, long m);

// B(k, m) = sum_{a=1}^{2k-m-1} [C(m, k-a) - C(m, k)], for k, m >= 1.
CountValue avoider_count_binomial(long k, long m);

// Row-major table of B(k, m) for 0 <= k <= k_max, 0 <= m <= 2 k_max, filled
// once by the recurrence and read-only afterwards.
class AvoiderTable {
 public:
  explicit AvoiderTable(long k_max);

  long k_max() const { return k_max_; }
  // Zero outside the stored range in m (recurrence item (ii)); throws
  // DomainError for k outside [0, k_max].
  CountValue at(long k, long m) const;

 private:
  long k_max_;
  long m_max_;
  std::vector<CountValue> cells_;
};

// Dyck paths of semilength n + 1 with first peak a and last peak b (a + b <= 2n).
CountValue dyck_peak_pair_count(long n, long a, long b);

// Dyck paths of semilength n whose first and last peak heights sum to s
// (s <= 2n - 2).
CountValue dyck_peak_sum_count(long n, long s);

// Grassmannian permutations of [n] with exactly k fixed points.
CountValue fixed_point_count(long n, long k);

// Avoider words of every length for a fixed k: C_{k+1} - 1.
CountValue total_avoider_words(long k);
// Grassmannian permutations of every size avoiding id_k: C_{k+1} - C(k,2) - 1.
CountValue total_avoider_perms(long k);
// Avoider words of every length with exactly j zeros: T(k, j + 1).
CountValue avoider_words_with_zeros(long k, long j);

// T(a, b) == sum_{j=0}^{a-b} (-1)^j C(a-b-j, j) C_{a-j}. Requires a >= 0 and
// b in [-a, a]; throws DomainError otherwise.
bool verify_ballot_catalan_identity(long a, long b);

struct IdentityCase {
  std::string identity;  // "i" or "ii"
  long k;
  long m;  // -1 when the case has no m parameter
  CountValue expected;
  CountValue actual;
  bool pass;
};

struct IdentityReport {
  std::vector<IdentityCase> cases;
  bool all_passed() const;
};

// Checks, for 1 <= k <= k_max,
//   (i)  sum_{j=1}^{k} (-1)^{j-1} j C(2k-m-j, j) C_{k-j} = 2^m  for 0 <= m < k,
//   (ii) sum_{j=1}^{k} (-1)^{j-1} j C(k-j, j) C_{k-j}   = 2^k - k - 1.
IdentityReport verify_concluding_identities(long k_max);

}  // namespace grassperm
