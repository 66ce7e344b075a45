#include "grassperm/parity.hpp"

#include <string>

#include "grassperm/counting.hpp"

namespace grassperm {

namespace {

CountValue avoiders(long k, long m) { return avoider_count_recursive(k, m); }

bool even(long v) { return v % 2 == 0; }

}  // namespace

CountValue odd_count(long k, long m) {
  if (k < 0 || m < 0) throw DomainError("odd count needs k, m >= 0");
  if (m == 0 || k == 0) return 0;
  CountValue twice;
  if (even(k) && even(m)) {
    twice = avoiders(k, m) + avoiders(k / 2, (m - 2) / 2) - avoiders(k / 2, m / 2) -
            avoiders((k - 2) / 2, (m - 2) / 2);
  } else {
    twice = avoiders(k, m) - 2 * avoiders(k / 2, (m - 1) / 2);
  }
  return exact_half(twice, "odd_count");
}

CountValue even_count(long k, long m) { return avoiders(k, m) - odd_count(k, m); }

CountValue odd_count_at_max_length(long k) {
  if (k < 2) throw DomainError("odd count at m = 2k - 2 needs k >= 2");
  const auto value = exact_half(catalan(k - 1) + catalan_or_zero(k - 2, 2), "odd_count_at_max_length");
  const auto even_top = avoiders(k, 2 * k - 2) - value;
  if (odd_count(k, 2 * k - 3) != 2 * even_top) {
    throw ConsistencyError("O(k, 2k-3) != 2 E(k, 2k-2) at k = " + std::to_string(k));
  }
  if (!even(k) && value != even_top) {
    throw ConsistencyError("O(k, 2k-2) != E(k, 2k-2) at odd k = " + std::to_string(k));
  }
  return value;
}

CountValue all_odd_extrema_count(long n) {
  if (n < 1) throw DomainError("all-odd-extrema count needs n >= 1");
  return catalan_or_zero(n - 1, 2);
}

CountValue odd_avoider_words_with_zeros(long k, long j) {
  if (k < 1 || j < 0) throw DomainError("odd avoider words needs k >= 1, j >= 0");
  CountValue twice;
  if (even(k) && even(j)) {
    twice = ballot(k, j + 1) - 2 * ballot(k / 2, (j + 2) / 2);
  } else if (!even(k) && even(j)) {
    twice = ballot(k, j + 1) - 2 * ballot((k - 1) / 2, (j + 2) / 2) - ballot((k - 1) / 2, j / 2);
  } else {
    // j odd here, so (j + 1) / 2 is exact; (k - 1) / 2 floors.
    twice = ballot(k, j + 1) - ballot((k - 1) / 2, (j + 1) / 2);
  }
  return exact_half(twice, "odd_avoider_words_with_zeros");
}

CountValue total_odd_avoiders(long k) {
  if (k < 1) throw DomainError("total odd avoiders needs k >= 1");
  if (!even(k)) {
    return exact_half(catalan(k + 1), "total_odd_avoiders") - 2 * catalan((k + 1) / 2) + 1;
  }
  return exact_half(catalan(k + 1) - catalan(k / 2), "total_odd_avoiders") -
         catalan((k + 2) / 2) + 1;
}

}  // namespace grassperm
