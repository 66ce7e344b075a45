#include <doctest.h>

#include <algorithm>
#include <set>

#include "grassperm/core.hpp"
#include "grassperm/oracle.hpp"
#include "support.hpp"

using namespace grassperm;

TEST_CASE("word encoding") {
  CHECK(grassmannian_of_word(BinaryWord::parse("000101110")) == Permutation::parse("123594678"));
  CHECK(grassmannian_of_word(BinaryWord::parse("1100")) == Permutation::parse("3412"));
  CHECK(grassmannian_of_word(BinaryWord::parse("0000")).is_identity());
  CHECK(grassmannian_of_word(BinaryWord()).size() == 0);
}

TEST_CASE("words of a permutation") {
  CHECK(words_of_permutation(Permutation::parse("3412")) ==
        std::vector{BinaryWord::parse("1100")});
  CHECK(words_of_permutation(Permutation::identity(2)) ==
        std::vector{BinaryWord::parse("00"), BinaryWord::parse("01"), BinaryWord::parse("11")});
  CHECK(words_of_permutation(Permutation::parse("123594678")) ==
        std::vector{BinaryWord::parse("000101110")});
  CHECK_THROWS_AS(words_of_permutation(Permutation::parse("321")), DomainError);
  CHECK(canonical_word(Permutation::identity(3)) == BinaryWord::parse("000"));
}

TEST_CASE("descents and fixed points") {
  CHECK(descent_count(Permutation::identity(5)) == 0);
  CHECK(descent_count(Permutation::parse("3412")) == 1);
  CHECK(descent_count(Permutation::parse("321")) == 2);
  CHECK_FALSE(is_grassmannian(Permutation::parse("321")));
  CHECK(fixed_points(Permutation::identity(4)) == std::vector{1, 2, 3, 4});
  CHECK(fixed_points(Permutation::parse("3412")).empty());
  // 0^a 1 w' 0 1^b fixes the first a and last b points.
  CHECK(fixed_points(grassmannian_of_word(BinaryWord::parse("00101011"))) ==
        std::vector{1, 2, 7, 8});
}

TEST_CASE("a-sequence and inversions") {
  const auto w = BinaryWord::parse("1010");
  CHECK(a_sequence(w).a == std::vector<std::size_t>{0, 1, 1});
  CHECK(inversion_count(w) == 3);
  CHECK(a_sequence(w).weighted_sum() == 3);
  CHECK(is_odd_word(w));
  CHECK(inversion_count(BinaryWord::parse("1100")) == 4);
  CHECK_FALSE(is_odd_word(BinaryWord::parse("1100")));
  CHECK(inversion_count(BinaryWord::parse("0000")) == 0);
  CHECK(inversion_count(BinaryWord::parse("111")) == 0);
  CHECK_FALSE(is_odd_word(BinaryWord()));
  for (const auto& u : testing::all_words(7)) CHECK(a_sequence(u).to_word() == u);
}

TEST_CASE("permutation parsing and printing") {
  CHECK(Permutation::parse("3,4,1,2") == Permutation::parse("3412"));
  CHECK(Permutation::parse("3412").str() == "3412");
  CHECK(Permutation::identity(10).str() == "1,2,3,4,5,6,7,8,9,10");
  CHECK(Permutation::parse(Permutation::identity(11).str()) == Permutation::identity(11));
  CHECK_THROWS_AS(Permutation::parse("1223"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("1,x"), DomainError);
  CHECK_THROWS_AS(BinaryWord::parse("012"), DomainError);
  const auto p = Permutation::parse("3412");
  CHECK(p.compose(p.inverse()).is_identity());
}

TEST_CASE("round trip and inversion agreement on all words up to length 12") {
  for (std::size_t m = 0; m <= 12; ++m) {
    for (const auto& w : testing::all_words(m)) {
      const auto p = grassmannian_of_word(w);
      const auto back = words_of_permutation(p);
      CHECK(std::find(back.begin(), back.end(), w) != back.end());
      if (!p.is_identity()) CHECK(back.size() == 1);
      CHECK(inversion_count(w) == permutation_inversions(p));
      CHECK(a_sequence(w).odd_terms_at_odd_positions() == (inversion_count(w) % 2 == 1));
    }
  }
}

TEST_CASE("Grassmannian count 2^n - n by deduplicating words") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<Permutation> perms;
    for (const auto& w : testing::all_words(n)) perms.insert(grassmannian_of_word(w));
    CHECK(perms.size() == (std::size_t{1} << n) - n);
    if (n <= 8) CHECK(perms.size() == oracle::grassmannians(n).size());
  }
}
