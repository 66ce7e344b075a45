#include <doctest.h>

#include <map>
#include <set>

#include "grassperm/counting.hpp"
#include "grassperm/oracle.hpp"
#include "grassperm/paths.hpp"
#include "grassperm/patterns.hpp"

using namespace grassperm;

namespace {
DyckPath D(const char* s) { return DyckPath::parse(s); }
}  // namespace

TEST_CASE("peaks and valleys") {
  CHECK(peaks(D("UUDD")) == std::vector<long>{2});
  CHECK(valleys(D("UUDD")).empty());
  CHECK(peaks(D("UDUD")) == std::vector<long>{1, 1});
  CHECK(valleys(D("UDUD")) == std::vector<long>{0});
  CHECK(peaks(D("UDUUDUDD")) == std::vector<long>{1, 2, 2});
  CHECK(valleys(D("UDUUDUDD")) == std::vector<long>{0, 1});
  CHECK(down_runs_after_ups(D("UDUUDUDD").steps()) == std::vector<std::size_t>{0, 1, 0, 1, 2});
}

TEST_CASE("first and last peak") {
  CHECK(first_last_peak_sum(D("UUUDDD")) == 6);
  CHECK(first_last_peak_sum(D("UDUDUDUD")) == 2);
  CHECK(first_last_peak_sum(D("UUDDUD")) == 3);
  CHECK_THROWS_AS(first_last_peak_sum(DyckPath()), DomainError);
  CHECK_THROWS_AS(D("UDDU"), DomainError);
  CHECK_THROWS_AS(D("UUD"), DomainError);
}

TEST_CASE("word to Dyck path") {
  const auto p = word_to_dyck(3, BinaryWord::parse("1100"));
  CHECK(p.semilength() == 4);
  CHECK(first_last_peak_sum(p) == 2);
  CHECK(dyck_to_word(3, p) == BinaryWord::parse("1100"));
  for (std::size_t k = 1; k <= 5; ++k) {
    std::string expect(k, 'U');
    expect += "DU" + std::string(k, 'D');
    CHECK(word_to_dyck(k, BinaryWord()).str() == expect);
  }
  CHECK_THROWS_AS(word_to_dyck(3, BinaryWord::parse("0011")), DomainError);
  // The lone single-peak path of semilength k + 1 has no preimage.
  CHECK_THROWS_AS(dyck_to_word(3, D("UUUUDDDD")), DomainError);
}

TEST_CASE("word_to_dyck is a bijection onto paths with the right peak sum") {
  for (std::size_t k = 1; k <= 7; ++k) {
    std::map<long, std::set<std::string>> by_sum;
    for (const auto& s : oracle::dyck_strings(k + 1)) by_sum[first_last_peak_sum(D(s.c_str()))].insert(s);
    for (std::size_t m = 0; m <= 2 * k - 2; ++m) {
      std::set<std::string> image;
      for (const auto& w : enumerate_B(k, m)) {
        const auto p = word_to_dyck(k, w);
        image.insert(p.str());
        CHECK(dyck_to_word(k, p) == w);
      }
      CHECK(image.size() == enumerate_B(k, m).size());
      CHECK(image == by_sum[static_cast<long>(2 * k - m)]);
    }
  }
}

TEST_CASE("lattice path of the worked example") {
  const auto lp = word_to_lattice(5, BinaryWord::parse("110011"));
  CHECK(lp.str() == "DDUUDD");
  CHECK(lp.floor() == -2);
  const auto e = first_floor_parity_extremum(lp);
  REQUIRE(e);
  CHECK(e->kind == Extremum::Kind::Valley);
  CHECK(e->height == -2);
  const auto t = toggle_first_floor_parity_extremum(lp);
  CHECK(t.str() == "DUDUDD");
  CHECK(lattice_to_word(t) == BinaryWord::parse("110101"));
  CHECK(toggle_first_floor_parity_extremum(t) == lp);
  CHECK(word_to_lattice(4, BinaryWord::parse("111")).str() == "DDD");
}

TEST_CASE("lattice toggle flips parity within B(k, m)") {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t m = 0; m <= 2 * k - 2; ++m) {
      for (const auto& w : enumerate_B(k, m)) {
        const auto lp = word_to_lattice(k, w);
        CHECK(lattice_to_word(lp) == w);
        CHECK(is_odd_lattice(lp) == is_odd_word(w));
        if (!first_floor_parity_extremum(lp)) continue;
        const auto t = toggle_first_floor_parity_extremum(lp);
        const auto w2 = lattice_to_word(t);
        CHECK(avoids_all_increasing(w2, k));
        CHECK(w2.size() == m);
        CHECK(is_odd_word(w2) != is_odd_word(w));
        CHECK(toggle_first_floor_parity_extremum(t) == lp);
      }
    }
  }
}

TEST_CASE("parity of Dyck paths") {
  CHECK(is_odd_dyck(D("UDUD")));
  CHECK_FALSE(is_odd_dyck(D("UUDD")));
}

TEST_CASE("toggling the first even extremum") {
  CHECK(toggle_first_even_extremum(D("UDUUDUDD")) == D("UUDUDUDD"));
  CHECK(toggle_first_even_extremum(D("UUDUDUDD")) == D("UDUUDUDD"));
  CHECK_THROWS_AS(toggle_first_even_extremum(D("UD")), DomainError);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate_dyck(n)) {
      if (all_extrema_odd(p)) {
        CHECK_FALSE(first_even_extremum(p));
        continue;
      }
      const auto q = toggle_first_even_extremum(p);
      CHECK(q.semilength() == n);
      CHECK(toggle_first_even_extremum(q) == p);
      CHECK(is_odd_dyck(q) != is_odd_dyck(p));
    }
  }
}

TEST_CASE("halving all-odd paths") {
  CHECK(halve_all_odd_path(D("UD")) == DyckPath());
  CHECK(halve_all_odd_path(D("UUUDDD")) == D("UD"));
  CHECK_THROWS_AS(halve_all_odd_path(D("UUDD")), DomainError);
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<DyckPath> halves;
    std::size_t count = 0;
    for (const auto& p : enumerate_dyck(n)) {
      if (!all_extrema_odd(p)) continue;
      ++count;
      CHECK(is_odd_dyck(p));
      const auto h = halve_all_odd_path(p);
      CHECK(double_to_all_odd_path(h) == p);
      halves.insert(h);
    }
    if (n % 2 == 0) {
      CHECK(count == 0);
    } else {
      CHECK(CountValue(count) == catalan(static_cast<long>(n - 1) / 2));
      CHECK(halves.size() == enumerate_dyck((n - 1) / 2).size());
    }
  }
}

TEST_CASE("enumerate Dyck paths") {
  CHECK(enumerate_dyck(0) == std::vector{DyckPath()});
  CHECK(enumerate_dyck(3).size() == 5);
  CHECK(enumerate_dyck(4).size() == 14);
  for (std::size_t n = 0; n <= 10; ++n) {
    std::vector<std::string> mine;
    for (const auto& p : enumerate_dyck(n)) mine.push_back(p.str());
    CHECK(mine == oracle::dyck_strings(n));
  }
}

TEST_CASE("svg drawing") {
  const auto p = D("UUDD");
  const auto svg = paths_svg({std::vector<Step>(p.steps().begin(), p.steps().end())}, {"UUDD"});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("UUDD") != std::string::npos);
}
