#pragma once

// Binary words, permutations, and the word encoding of Grassmannian
// permutations: positions of the 0s in increasing order, then the positions
// of the 1s in increasing order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grassperm/count_value.hpp"

namespace grassperm {

class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  // Parses a string over {0,1}; the empty string is the empty word.
  static BinaryWord parse(std::string_view text);
  // 0^zeros 1^ones
  static BinaryWord zeros_then_ones(std::size_t zeros, std::size_t ones);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::size_t count_zeros() const;
  std::size_t count_ones() const { return size() - count_zeros(); }

  std::string str() const;

  // Lexicographic on the bit sequence, with a proper prefix ordered first.
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless the entries are exactly {1,...,n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);
  // Comma-separated one-line notation ("3,4,1,2"). A comma-free string of
  // digits is read one entry per digit ("3412").
  static Permutation parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  // 1-based value at 1-based position.
  int at(std::size_t position) const { return entries_[position - 1]; }
  std::span<const int> entries() const { return entries_; }

  Permutation inverse() const;
  // (this o other)(i) = this(other(i)). Sizes must agree.
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;

  // One digit per entry up to size 9, comma separated beyond.
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// a[0..j] for the word 1^{a_j} 0 1^{a_{j-1}} 0 ... 1^{a_1} 0 1^{a_0}, where j
// is the number of zeros. a[0] counts trailing ones, a[j] leading ones.
struct ASequence {
  std::vector<std::size_t> a;

  std::size_t zeros() const { return a.empty() ? 0 : a.size() - 1; }
  BinaryWord to_word() const;
  // Sum of i * a_i.
  std::uint64_t weighted_sum() const;
  // True iff an odd number of a_1, a_3, a_5, ... are odd.
  bool odd_terms_at_odd_positions() const;

  friend bool operator==(const ASequence&, const ASequence&) = default;
};

Permutation grassmannian_of_word(const BinaryWord& w);

// All words encoding p: a singleton for non-identity p, {0^j 1^{n-j}} for the
// identity. Sorted lexicographically. Throws DomainError if p has more than
// one descent.
std::vector<BinaryWord> words_of_permutation(const Permutation& p);

// Unique word for non-identity p, 0^n for the identity.
BinaryWord canonical_word(const Permutation& p);

std::size_t descent_count(const Permutation& p);
bool is_grassmannian(const Permutation& p);

// Fixed points in increasing order.
std::vector<int> fixed_points(const Permutation& p);

// Inversions counted directly on the permutation (pairs i < j, p_i > p_j).
std::uint64_t permutation_inversions(const Permutation& p);

ASequence a_sequence(const BinaryWord& w);

// Number of 10 subsequences of w; equals the inversion count of G(w).
std::uint64_t inversion_count(const BinaryWord& w);

bool is_odd_word(const BinaryWord& w);

}  // namespace grassperm
