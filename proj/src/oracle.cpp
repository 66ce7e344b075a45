#include "grassperm/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace grassperm::oracle {

namespace {

void check_cap(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw CapExceeded(std::string("oracle refuses ") + what + " = " + std::to_string(value) +
                      " above cap " + std::to_string(cap));
  }
}

std::size_t descents(std::span<const int> e) {
  std::size_t d = 0;
  for (std::size_t i = 1; i < e.size(); ++i) d += e[i - 1] > e[i];
  return d;
}

std::uint64_t inversions(std::span<const int> e) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) c += e[i] > e[j];
  }
  return c;
}

std::vector<int> inverse_of(std::span<const int> e) {
  std::vector<int> inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[e[i] - 1] = static_cast<int>(i + 1);
  return inv;
}

bool self_inverse(std::span<const int> e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[e[i] - 1] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

bool passes_parity(std::uint64_t inv, ParityFilter f) {
  switch (f) {
    case ParityFilter::All:
      return true;
    case ParityFilter::Odd:
      return inv % 2 == 1;
    case ParityFilter::Even:
      return inv % 2 == 0;
  }
  return false;
}

// Is `needle` a subsequence of the bit string `w`?
bool has_subsequence(const std::vector<int>& w, const std::vector<int>& needle) {
  std::size_t t = 0;
  for (int b : w) {
    if (t == needle.size()) break;
    if (b == needle[t]) ++t;
  }
  return t == needle.size();
}

}  // namespace

const std::vector<Permutation>& grassmannians(std::size_t n, const Caps& caps) {
  check_cap(n, caps.perm_cap, "permutation size");
  static std::mutex mutex;
  // std::map nodes are stable, so returned references survive later inserts.
  static std::map<std::size_t, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  if (!cache.contains(n)) {
    std::vector<Permutation> out;
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
      if (descents(e) <= 1) out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    cache.emplace(n, std::move(out));
  }
  return cache.at(n);
}

bool contains_pattern(const Permutation& sigma, const Permutation& pi) {
  const auto n = sigma.size();
  const auto k = pi.size();
  if (k > n) return false;
  if (k == 0) return true;
  auto s = sigma.entries();
  auto p = pi.entries();
  // Walk all k-subsets of positions as increasing index tuples.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a) {
      for (std::size_t b = a + 1; b < k && iso; ++b) {
        iso = (s[idx[a]] < s[idx[b]]) == (p[a] < p[b]);
      }
    }
    if (iso) return true;
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) return false;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

CountValue count(std::size_t n, const std::optional<Permutation>& pattern,
                 ClassFilter class_filter, ParityFilter parity_filter, const Caps& caps) {
  CountValue total = 0;
  for (const auto& p : grassmannians(n, caps)) {
    auto e = p.entries();
    if (class_filter == ClassFilter::BiGrassmannian && descents(inverse_of(e)) > 1) continue;
    if (class_filter == ClassFilter::Involution && !self_inverse(e)) continue;
    if (!passes_parity(inversions(e), parity_filter)) continue;
    if (pattern && contains_pattern(p, *pattern)) continue;
    ++total;
  }
  return total;
}

WordCensus word_census(std::size_t k, std::size_t m, const Caps& caps) {
  check_cap(m, caps.word_cap, "word length");
  std::vector<std::vector<int>> forbidden;
  for (std::size_t j = 0; j <= k; ++j) {
    std::vector<int> f(k, 1);
    std::fill(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(j), 0);
    forbidden.push_back(std::move(f));
  }
  WordCensus census(m + 1);
  std::vector<int> w(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t z = 0;
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = static_cast<int>((mask >> i) & 1);
      z += w[i] == 0;
    }
    bool avoids = true;
    for (const auto& f : forbidden) {
      if (has_subsequence(w, f)) {
        avoids = false;
        break;
      }
    }
    if (!avoids) continue;
    std::uint64_t inv = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) inv += w[a] == 1 && w[b] == 0;
    }
    census[z][inv % 2] += 1;
  }
  return census;
}

CountValue word_count(std::size_t k, std::size_t m, ParityFilter parity_filter,
                      std::optional<std::size_t> zeros, const Caps& caps) {
  const auto census = word_census(k, m, caps);
  CountValue total = 0;
  for (std::size_t z = 0; z < census.size(); ++z) {
    if (zeros && z != *zeros) continue;
    for (std::uint64_t parity = 0; parity < 2; ++parity) {
      if (passes_parity(parity, parity_filter)) total += census[z][parity];
    }
  }
  return total;
}

std::vector<std::string> dyck_strings(std::size_t n, const Caps& caps) {
  check_cap(n, caps.dyck_cap, "Dyck semilength");
  std::vector<std::string> out;
  const auto len = 2 * n;
  std::string s(len, 'D');
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    long h = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const bool up = (mask >> (len - 1 - i)) & 1;
      s[i] = up ? 'U' : 'D';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::uint64_t, CountValue> inversion_histogram(std::size_t n, const Caps& caps) {
  std::map<std::uint64_t, CountValue> hist;
  for (const auto& p : grassmannians(n, caps)) hist[inversions(p.entries())] += 1;
  return hist;
}

}  // namespace grassperm::oracle
