#include "grassperm/core.hpp"

#include <algorithm>
#include <charconv>

namespace grassperm {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw DomainError("binary word bit out of range");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError("binary word may only contain 0 and 1: '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros_then_ones(std::size_t zeros, std::size_t ones) {
  std::vector<std::uint8_t> bits(zeros + ones, 0);
  std::fill(bits.begin() + static_cast<std::ptrdiff_t>(zeros), bits.end(), 1);
  return BinaryWord(std::move(bits));
}

std::size_t BinaryWord::count_zeros() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0));
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const auto n = entries_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw DomainError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(i + 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.empty()) return Permutation();
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("bad permutation: '" + std::string(text) + "'");
      entries.push_back(c - '0');
    }
    return Permutation(std::move(entries));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw DomainError("bad permutation: '" + std::string(text) + "'");
    }
    entries.push_back(value);
    start = end + 1;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[entries_[i] - 1] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[other.entries_[i] - 1];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string s;
  if (entries_.size() <= 9) {
    for (int e : entries_) s.push_back(static_cast<char>('0' + e));
    return s;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(entries_[i]);
  }
  return s;
}

BinaryWord ASequence::to_word() const {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = a.size(); i-- > 0;) {
    bits.insert(bits.end(), a[i], 1);
    if (i > 0) bits.push_back(0);
  }
  return BinaryWord(std::move(bits));
}

std::uint64_t ASequence::weighted_sum() const {
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < a.size(); ++i) s += i * a[i];
  return s;
}

bool ASequence::odd_terms_at_odd_positions() const {
  std::size_t odd_terms = 0;
  for (std::size_t i = 1; i < a.size(); i += 2) odd_terms += a[i] % 2;
  return odd_terms % 2 == 1;
}

Permutation grassmannian_of_word(const BinaryWord& w) {
  std::vector<int> entries;
  entries.reserve(w.size());
  for (std::uint8_t bit : {0, 1}) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == bit) entries.push_back(static_cast<int>(i + 1));
    }
  }
  return Permutation(std::move(entries));
}

std::size_t descent_count(const Permutation& p) {
  std::size_t d = 0;
  auto e = p.entries();
  for (std::size_t i = 1; i < e.size(); ++i) d += e[i - 1] > e[i];
  return d;
}

bool is_grassmannian(const Permutation& p) { return descent_count(p) <= 1; }

std::vector<BinaryWord> words_of_permutation(const Permutation& p) {
  if (!is_grassmannian(p)) {
    throw DomainError("permutation " + p.str() + " has more than one descent");
  }
  const auto n = p.size();
  std::vector<BinaryWord> words;
  if (p.is_identity()) {
    for (std::size_t j = 0; j <= n; ++j) words.push_back(BinaryWord::zeros_then_ones(j, n - j));
    std::sort(words.begin(), words.end());
    return words;
  }
  // The zero block is the prefix up to and including the descent.
  auto e = p.entries();
  std::size_t split = 1;
  while (e[split - 1] < e[split]) ++split;
  std::vector<std::uint8_t> bits(n, 1);
  for (std::size_t i = 0; i < split; ++i) bits[e[i] - 1] = 0;
  words.emplace_back(std::move(bits));
  return words;
}

BinaryWord canonical_word(const Permutation& p) {
  if (p.is_identity()) return BinaryWord::zeros_then_ones(p.size(), 0);
  return words_of_permutation(p).front();
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p.at(i) == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::uint64_t permutation_inversions(const Permutation& p) {
  std::uint64_t count = 0;
  auto e = p.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) count += e[i] > e[j];
  }
  return count;
}

ASequence a_sequence(const BinaryWord& w) {
  // Scan right to left: ones before the first zero seen go to a_0, and so on.
  ASequence seq;
  seq.a.push_back(0);
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == 1) {
      ++seq.a.back();
    } else {
      seq.a.push_back(0);
    }
  }
  return seq;
}

std::uint64_t inversion_count(const BinaryWord& w) {
  std::uint64_t ones = 0, count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      ++ones;
    } else {
      count += ones;
    }
  }
  return count;
}

bool is_odd_word(const BinaryWord& w) { return inversion_count(w) % 2 == 1; }

}  // namespace grassperm
