#pragma once

// Odd/even refinement of the avoider counts: O(k, m) odd words in B(k, m),
// E(k, m) = B(k, m) - O(k, m). A word is odd when G(w) has an odd number of
// inversions.

#include "grassperm/count_value.hpp"

namespace grassperm {

// O(k, m) from B via the halving identity. O(k, 0) = 0.
CountValue odd_count(long k, long m);
CountValue even_count(long k, long m);

// O(k, 2k - 2) = (C_{k-1} + C_{(k-2)/2}) / 2 for k >= 2. Also checks
// O(k, 2k - 3) = 2 E(k, 2k - 2), and O = E at m = 2k - 2 for odd k, throwing
// ConsistencyError if either fails.
CountValue odd_count_at_max_length(long k);

// Dyck paths of semilength n with every peak and valley at odd height:
// C_{(n-1)/2}, zero for even n.
CountValue all_odd_extrema_count(long n);

// Odd avoider words (any length) with exactly j zeros.
CountValue odd_avoider_words_with_zeros(long k, long j);

// Odd Grassmannian permutations (any size) avoiding id_k.
CountValue total_odd_avoiders(long k);

}  // namespace grassperm
