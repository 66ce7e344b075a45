#include "grassperm/classes.hpp"

#include "grassperm/counting.hpp"

namespace grassperm {

namespace {

void require_grassmannian(const Permutation& p) {
  if (!is_grassmannian(p)) throw DomainError("permutation " + p.str() + " is not Grassmannian");
}

void require_k(long k) {
  if (k < 2) throw DomainError("id_k avoidance counts need k >= 2");
}

// Shared shape of the two odd-avoider formulas.
template <typename Odd>
CountValue odd_avoiders(long k, long m, Odd odd) {
  require_k(k);
  if (m < 0) throw DomainError("size must be nonnegative");
  if (m <= k) return odd(m);
  if (m >= 2 * k) return 0;
  return (m - k) % 2 == 0 ? odd(2 * k - m) : odd(2 * k - m - 2);
}

}  // namespace

bool is_bigrassmannian(const Permutation& p) {
  require_grassmannian(p);
  return is_grassmannian(p.inverse());
}

bool is_grassmannian_involution(const Permutation& p) {
  require_grassmannian(p);
  return p.compose(p).is_identity();
}

bool has_involution_word_form(const BinaryWord& w) {
  std::size_t i = 0;
  const auto n = w.size();
  while (i < n && w[i] == 0) ++i;
  std::size_t ones = 0;
  while (i < n && w[i] == 1) ++i, ++ones;
  std::size_t zeros = 0;
  while (i < n && w[i] == 0) ++i, ++zeros;
  while (i < n && w[i] == 1) ++i;
  if (i != n) return false;
  // With no middle zero block the word is 0^a 1^b, read as k2 = 0.
  return zeros == 0 || zeros == ones;
}

CountValue bigrass_count(long m) {
  if (m < 0) throw DomainError("size must be nonnegative");
  return 1 + binomial(m + 1, 3);
}

CountValue bigrass_avoiders(long k, long m) {
  require_k(k);
  if (m < 0) throw DomainError("size must be nonnegative");
  if (m < k) return bigrass_count(m);
  if (m < 2 * k) return binomial(2 * k - m + 1, 3);
  return 0;
}

CountValue odd_bigrass_count(long m) {
  if (m < 0) return 0;
  if (m % 2 == 0) return exact_divide(binomial(m + 2, 3), 4, "a(m)");
  return exact_divide(CountValue(m - 1) * (m + 1) * (m + 3), 24, "a(m)");
}

CountValue odd_bigrass_avoiders(long k, long m) { return odd_avoiders(k, m, odd_bigrass_count); }

CountValue involution_count(long m) {
  if (m < 0) throw DomainError("size must be nonnegative");
  return (CountValue(m) * m + 4) / 4;
}

CountValue involution_avoiders(long k, long m) {
  require_k(k);
  if (m < 0) throw DomainError("size must be nonnegative");
  if (m < k) return involution_count(m);
  if (m < 2 * k) return CountValue(2 * k - m) * (2 * k - m) / 4;
  return 0;
}

CountValue odd_involution_count(long m) {
  if (m < 0) return 0;
  return CountValue(m + 1) * (m + 1) / 8;
}

CountValue odd_involution_avoiders(long k, long m) {
  return odd_avoiders(k, m, odd_involution_count);
}

}  // namespace grassperm
