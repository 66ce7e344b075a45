#pragma once

#include <cstddef>
#include <vector>

#include "grassperm/core.hpp"

namespace grassperm {

// True iff some subsequence of sigma is order-isomorphic to pi. An empty pi is
// contained in everything.
bool permutation_contains(const Permutation& sigma, const Permutation& pi);

// Subsequence containment, greedy earliest match.
bool word_contains(const BinaryWord& haystack, const BinaryWord& needle);

// Containment of G(needle) in G(haystack), decided on the words alone.
bool grassmannian_contains(const BinaryWord& haystack, const BinaryWord& needle);

// Length of the longest subsequence of w of the form 0^j 1^i.
std::size_t longest_zeros_then_ones(const BinaryWord& w);

// Membership in the avoider set: w avoids 0^j 1^{k-j} for every j in [0,k].
// Empty for k = 0.
bool avoids_all_increasing(const BinaryWord& w, std::size_t k);

// Grassmannian permutations of [n] avoiding the pattern, deduplicated and
// sorted lexicographically. Throws DomainError for a non-Grassmannian pattern
// and CapExceeded for n > max_n.
std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& pattern,
                                            std::size_t max_n = 24);

// All words of length m avoiding 0^j 1^{k-j} for every j in [0,k], sorted
// lexicographically.
std::vector<BinaryWord> enumerate_B(std::size_t k, std::size_t m);

}  // namespace grassperm
