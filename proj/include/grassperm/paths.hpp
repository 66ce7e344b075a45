#pragma once

// Dyck paths, floor-constrained lattice paths, their peak/valley statistics,
// and the bijections with avoider words used by the counting and parity
// results.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grassperm/core.hpp"

namespace grassperm {

enum class Step : char { Up = 'U', Down = 'D' };

struct Extremum {
  enum class Kind { Peak, Valley };
  Kind kind;
  // 0-based index of the first step of the UD (peak) or DU (valley) factor.
  std::size_t position;
  // Height at the turning point.
  long height;
};

// Peaks and valleys of a step sequence starting at height `start`, left to right.
std::vector<Extremum> extrema(std::span<const Step> steps, long start = 0);

std::string steps_to_string(std::span<const Step> steps);
std::vector<Step> parse_steps(std::string_view text);

class DyckPath {
 public:
  DyckPath() = default;
  // Throws DomainError unless balanced with nonnegative prefix heights.
  explicit DyckPath(std::vector<Step> steps);
  static DyckPath parse(std::string_view text);

  std::size_t semilength() const { return steps_.size() / 2; }
  std::span<const Step> steps() const { return steps_; }
  std::string str() const { return steps_to_string(steps_); }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

// Path from the origin with `zeros` up-steps and length - zeros down-steps
// that never drops below floor() = zeros - k + 1.
class LatticePath {
 public:
  // Throws DomainError if the step counts or the floor constraint fail.
  LatticePath(std::vector<Step> steps, std::size_t k, std::size_t m, std::size_t zeros);

  std::size_t k() const { return k_; }
  std::size_t length() const { return m_; }
  std::size_t zeros() const { return zeros_; }
  long floor() const { return static_cast<long>(zeros_) - static_cast<long>(k_) + 1; }
  std::span<const Step> steps() const { return steps_; }
  std::string str() const { return steps_to_string(steps_); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
  std::size_t k_;
  std::size_t m_;
  std::size_t zeros_;
};

std::vector<long> peaks(const DyckPath& p);
std::vector<long> valleys(const DyckPath& p);

// Sum of first and last peak heights; a single peak counts twice. Throws
// DomainError on the empty path.
long first_last_peak_sum(const DyckPath& p);

// a_i = number of down-steps directly after the i-th up-step, i = 1..n.
// Element 0 holds down-steps before the first up-step (always 0 for Dyck).
std::vector<std::size_t> down_runs_after_ups(std::span<const Step> steps);

// Words of B(k, m) to Dyck paths of semilength k + 1 whose first and last
// peak heights sum to 2k - m.
DyckPath word_to_dyck(std::size_t k, const BinaryWord& w);
BinaryWord dyck_to_word(std::size_t k, const DyckPath& p);

// D^{a_0} U D^{a_1} U ... U D^{a_j} for the a-sequence of w.
LatticePath word_to_lattice(std::size_t k, const BinaryWord& w);
BinaryWord lattice_to_word(const LatticePath& path);

// An odd number of odd values among a_1, a_3, a_5, ...
bool is_odd_dyck(const DyckPath& p);
bool is_odd_lattice(const LatticePath& p);

// First extremum whose height has the parity of `floor` (0 for Dyck paths).
std::optional<Extremum> first_even_extremum(const DyckPath& p);
std::optional<Extremum> first_floor_parity_extremum(const LatticePath& p);

// Swaps the UD/DU factor at the first even-height extremum. Throws
// DomainError when every extremum is at odd height.
DyckPath toggle_first_even_extremum(const DyckPath& p);
// Lattice analogue: the first extremum at height congruent to floor() mod 2.
LatticePath toggle_first_floor_parity_extremum(const LatticePath& p);

bool all_extrema_odd(const DyckPath& p);

// U^{2a_1+1} D^{2b_1} ... U^{2a_r} D^{2b_r+1}  ->  U^{a_1} D^{b_1} ... U^{a_r} D^{b_r}.
// Throws DomainError unless every extremum of p is at odd height.
DyckPath halve_all_odd_path(const DyckPath& p);
// Inverse of halve_all_odd_path.
DyckPath double_to_all_odd_path(const DyckPath& p);

// All Dyck paths of semilength n, lexicographic in their U/D strings.
std::vector<DyckPath> enumerate_dyck(std::size_t n);

// Standalone SVG drawing of one or more step sequences side by side.
std::string paths_svg(const std::vector<std::vector<Step>>& paths,
                      const std::vector<std::string>& captions);

}  // namespace grassperm
