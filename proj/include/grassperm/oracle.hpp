#pragma once

// Brute-force ground truth. Everything here is computed by exhaustive search
// over all permutations, all binary words, or all U/D strings, without the
// word encoding of Grassmannian permutations or any closed form.

#include <cstddef>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grassperm/core.hpp"

namespace grassperm::oracle {

struct Caps {
  std::size_t perm_cap = 10;
  std::size_t word_cap = 24;
  std::size_t dyck_cap = 12;
};

enum class ClassFilter { All, BiGrassmannian, Involution };
enum class ParityFilter { All, Odd, Even };

// Permutations of [n] with at most one descent, found by filtering all n!
// permutations. Lexicographic order. Cached per n.
const std::vector<Permutation>& grassmannians(std::size_t n, const Caps& caps = {});

// Naive subsequence search over all index subsets.
bool contains_pattern(const Permutation& sigma, const Permutation& pi);

// Grassmannian permutations of [n] that pass both filters and avoid `pattern`
// (no pattern: no avoidance condition).
CountValue count(std::size_t n, const std::optional<Permutation>& pattern,
                 ClassFilter class_filter = ClassFilter::All,
                 ParityFilter parity_filter = ParityFilter::All, const Caps& caps = {});

// Words of length m avoiding 0^j 1^{k-j} for every j in [0,k], optionally
// restricted by inversion parity and number of zeros.
CountValue word_count(std::size_t k, std::size_t m, ParityFilter parity_filter = ParityFilter::All,
                      std::optional<std::size_t> zeros = std::nullopt, const Caps& caps = {});

// The same avoiders tallied in one pass: census[zeros][inversions % 2].
using WordCensus = std::vector<std::array<CountValue, 2>>;
WordCensus word_census(std::size_t k, std::size_t m, const Caps& caps = {});

// All U/D strings of length 2n that stay weakly above the axis and end on it,
// as strings, lexicographic.
std::vector<std::string> dyck_strings(std::size_t n, const Caps& caps = {});

// inversions -> number of Grassmannian permutations of [n] with that many.
std::map<std::uint64_t, CountValue> inversion_histogram(std::size_t n, const Caps& caps = {});

}  // namespace grassperm::oracle
