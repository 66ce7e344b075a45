#include "grassperm/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace grassperm {

namespace {

// For pattern position t, the earlier positions holding the nearest smaller
// and nearest larger value. -1 when none.
struct Neighbours {
  std::vector<int> below;
  std::vector<int> above;
};

Neighbours value_neighbours(std::span<const int> pi) {
  Neighbours nb{std::vector<int>(pi.size(), -1), std::vector<int>(pi.size(), -1)};
  for (std::size_t t = 0; t < pi.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (pi[s] < pi[t] && (nb.below[t] < 0 || pi[s] > pi[nb.below[t]])) nb.below[t] = static_cast<int>(s);
      if (pi[s] > pi[t] && (nb.above[t] < 0 || pi[s] < pi[nb.above[t]])) nb.above[t] = static_cast<int>(s);
    }
  }
  return nb;
}

bool embed(std::span<const int> host, std::span<const int> pi, const Neighbours& nb,
           std::vector<int>& chosen, std::size_t t, std::size_t from) {
  if (t == pi.size()) return true;
  const std::size_t remaining = pi.size() - t;
  for (std::size_t h = from; h + remaining <= host.size(); ++h) {
    const int v = host[h];
    if (nb.below[t] >= 0 && v < chosen[nb.below[t]]) continue;
    if (nb.above[t] >= 0 && v > chosen[nb.above[t]]) continue;
    chosen[t] = v;
    if (embed(host, pi, nb, chosen, t + 1, h + 1)) return true;
  }
  return false;
}

bool is_zeros_then_ones(const BinaryWord& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == 0) ++i;
  while (i < w.size() && w[i] == 1) ++i;
  return i == w.size();
}

void extend_avoiders(std::size_t k, std::size_t m, std::vector<std::uint8_t>& prefix,
                     std::size_t zeros, std::size_t longest, std::vector<BinaryWord>& out) {
  if (prefix.size() == m) {
    out.emplace_back(prefix);
    return;
  }
  if (std::max(longest, zeros + 1) < k) {
    prefix.push_back(0);
    extend_avoiders(k, m, prefix, zeros + 1, std::max(longest, zeros + 1), out);
    prefix.pop_back();
  }
  if (longest + 1 < k) {
    prefix.push_back(1);
    extend_avoiders(k, m, prefix, zeros, longest + 1, out);
    prefix.pop_back();
  }
}

}  // namespace

bool permutation_contains(const Permutation& sigma, const Permutation& pi) {
  if (pi.size() > sigma.size()) return false;
  const auto nb = value_neighbours(pi.entries());
  std::vector<int> chosen(pi.size());
  return embed(sigma.entries(), pi.entries(), nb, chosen, 0, 0);
}

bool word_contains(const BinaryWord& haystack, const BinaryWord& needle) {
  std::size_t matched = 0;
  for (std::size_t i = 0; i < haystack.size() && matched < needle.size(); ++i) {
    if (haystack[i] == needle[matched]) ++matched;
  }
  return matched == needle.size();
}

std::size_t longest_zeros_then_ones(const BinaryWord& w) {
  std::size_t zeros = 0, longest = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      ++zeros;
      longest = std::max(longest, zeros);
    } else {
      ++longest;
    }
  }
  return longest;
}

bool grassmannian_contains(const BinaryWord& haystack, const BinaryWord& needle) {
  if (is_zeros_then_ones(needle)) return longest_zeros_then_ones(haystack) >= needle.size();
  return word_contains(haystack, needle);
}

bool avoids_all_increasing(const BinaryWord& w, std::size_t k) {
  return k > 0 && longest_zeros_then_ones(w) < k;
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& pattern,
                                            std::size_t max_n) {
  if (!is_grassmannian(pattern)) {
    throw DomainError("pattern " + pattern.str() + " is not Grassmannian");
  }
  if (n > max_n) {
    throw CapExceeded("enumerate_avoiders: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_n));
  }
  const auto needle = canonical_word(pattern);
  std::vector<Permutation> out;
  bool identity_done = false;
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1;
    BinaryWord w(bits);
    if (is_zeros_then_ones(w)) {
      if (identity_done) continue;
      identity_done = true;
    }
    if (!grassmannian_contains(w, needle)) out.push_back(grassmannian_of_word(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryWord> enumerate_B(std::size_t k, std::size_t m) {
  std::vector<BinaryWord> out;
  if (k == 0) return out;
  std::vector<std::uint8_t> prefix;
  prefix.reserve(m);
  extend_avoiders(k, m, prefix, 0, 0, out);
  return out;
}

}  // namespace grassperm
