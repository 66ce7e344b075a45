#pragma once

// BiGrassmannian permutations and Grassmannian involutions: recognition,
// totals, id_k-avoidance counts, and their odd refinements.

#include "grassperm/core.hpp"

namespace grassperm {

// Both p and p^{-1} have at most one descent. Throws DomainError if p itself
// is not Grassmannian.
bool is_bigrassmannian(const Permutation& p);
// p o p is the identity. Throws DomainError if p is not Grassmannian.
bool is_grassmannian_involution(const Permutation& p);

// w = 0^{k1} 1^{k2} 0^{k2} 1^{k3} for some k1, k2, k3 >= 0.
bool has_involution_word_form(const BinaryWord& w);

// 1 + C(m+1, 3)
CountValue bigrass_count(long m);
CountValue bigrass_avoiders(long k, long m);

// a(m): odd biGrassmannian permutations of size m. Zero for m < 0.
CountValue odd_bigrass_count(long m);
CountValue odd_bigrass_avoiders(long k, long m);

// ceil((m^2 + 1) / 4)
CountValue involution_count(long m);
CountValue involution_avoiders(long k, long m);

// b(m) = floor((m+1)^2 / 8): odd Grassmannian involutions of size m. Zero for m < 0.
CountValue odd_involution_count(long m);
CountValue odd_involution_avoiders(long k, long m);

}  // namespace grassperm
