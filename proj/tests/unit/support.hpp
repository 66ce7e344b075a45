#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grassperm/core.hpp"

namespace testing {

inline std::vector<grassperm::BinaryWord> all_words(std::size_t m) {
  std::vector<grassperm::BinaryWord> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::uint8_t> bits(m);
    for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> (m - 1 - i)) & 1;
    out.emplace_back(std::move(bits));
  }
  return out;
}

inline grassperm::BinaryWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution bit(0.5);
  std::vector<std::uint8_t> bits(len(rng));
  for (auto& b : bits) b = bit(rng);
  return grassperm::BinaryWord(std::move(bits));
}

}  // namespace testing
