// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grassperm/classes.hpp"
#include "grassperm/cli.hpp"
#include "grassperm/counting.hpp"
#include "grassperm/oracle.hpp"
#include "grassperm/parity.hpp"
#include "grassperm/paths.hpp"
#include "grassperm/patterns.hpp"
#include "grassperm/series.hpp"

using namespace grassperm;
using oracle::ClassFilter;
using oracle::ParityFilter;

namespace {

const oracle::Caps kCaps{10, 24, 12};

// Collects the first mismatch so the report line says where it broke.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
  }
  void equal(const CountValue& want, const CountValue& got, const std::string& what) {
    expect(want == got, what + ": expected " + want.str() + ", got " + got.str());
  }
  bool ok() const { return first_.empty(); }
  const std::string& detail() const { return first_; }

 private:
  std::string first_;
};

std::string at(long k, long m) { return "(" + std::to_string(k) + "," + std::to_string(m) + ")"; }

CountValue words(long k, long m, ParityFilter f = ParityFilter::All,
                 std::optional<std::size_t> zeros = std::nullopt) {
  return oracle::word_count(static_cast<std::size_t>(k), static_cast<std::size_t>(m), f, zeros, kCaps);
}

void conjecture(Probe& p) {
  for (long k = 2; k <= 7; ++k) {
    for (long m = k; m <= 2 * k - 2; ++m) {
      p.equal(words(k, m), avoider_count_closed_form(k, m), "A" + at(k, m));
    }
  }
  p.equal(4, avoider_count_recursive(3, 3), "B(3,3)");
  p.equal(2, avoider_count_recursive(3, 4), "B(3,4)");
  p.equal(11, avoider_count_recursive(4, 4), "B(4,4)");
  p.equal(words(4, 4), 11, "oracle B(4,4)");
}

void three_formulas(Probe& p) {
  const auto start = std::chrono::steady_clock::now();
  for (long k = 1; k <= 40; ++k) {
    for (long m = 1; m <= 2 * k; ++m) {
      const auto a = avoider_count_closed_form(k, m);
      p.equal(a, avoider_count_recursive(k, m), "B_recursive" + at(k, m));
      p.equal(a, avoider_count_binomial(k, m), "B_binomial" + at(k, m));
    }
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  p.expect(secs < 5.0, "took " + std::to_string(secs) + " s");
}

void dyck_bijection(Probe& p) {
  for (long k = 1; k <= 7; ++k) {
    const auto K = static_cast<std::size_t>(k);
    std::map<long, std::set<std::string>> by_sum;
    for (const auto& s : oracle::dyck_strings(K + 1, kCaps)) {
      by_sum[first_last_peak_sum(DyckPath::parse(s))].insert(s);
    }
    for (long m = 0; m <= 2 * k - 2; ++m) {
      const auto ws = enumerate_B(K, static_cast<std::size_t>(m));
      std::set<std::string> image;
      for (const auto& w : ws) {
        const auto d = word_to_dyck(K, w);
        image.insert(d.str());
        p.expect(dyck_to_word(K, d) == w, "round trip of " + w.str());
      }
      p.expect(image.size() == ws.size(), "not injective at " + at(k, m));
      p.expect(image == by_sum[2 * k - m], "image mismatch at " + at(k, m));
    }
  }
}

void ballot_catalan(Probe& p) {
  for (long a = 0; a <= 30; ++a) {
    for (long b = 0; b <= a; ++b) p.expect(verify_ballot_catalan_identity(a, b), "T" + at(a, b));
  }
}

void odd_counts(Probe& p) {
  for (long k = 1; k <= 7; ++k) {
    for (long m = 1; m <= 2 * k - 2; ++m) {
      p.equal(words(k, m, ParityFilter::Odd), odd_count(k, m), "O" + at(k, m));
    }
  }
  for (long k = 2; k <= 20; ++k) {
    p.equal(odd_count(k, 2 * k - 2), odd_count_at_max_length(k), "O_max(" + std::to_string(k) + ")");
    p.equal(2 * even_count(k, 2 * k - 2), odd_count(k, 2 * k - 3), "O(k,2k-3) at k=" + std::to_string(k));
  }
}

void totals(Probe& p) {
  for (long k = 1; k <= 12; ++k) {
    CountValue sum = 0;
    for (long m = 0; m <= 2 * k - 2; ++m) sum += avoider_count_recursive(k, m);
    p.equal(catalan(k + 1) - 1, sum, "sum B(" + std::to_string(k) + ",m)");
    p.equal(catalan(k + 1) - 1, total_avoider_words(k), "words total k=" + std::to_string(k));
    p.equal(catalan(k + 1) - binomial(k, 2) - 1, total_avoider_perms(k), "perms total k=" + std::to_string(k));
  }
  for (long k = 1; k <= 6; ++k) {
    CountValue w = 0;
    CountValue perms = 0;
    for (long m = 0; m <= 2 * k - 2; ++m) {
      w += words(k, m);
      perms += oracle::count(static_cast<std::size_t>(m), Permutation::identity(k), ClassFilter::All,
                             ParityFilter::All, kCaps);
    }
    p.equal(w, total_avoider_words(k), "oracle words total k=" + std::to_string(k));
    p.equal(perms, total_avoider_perms(k), "oracle perms total k=" + std::to_string(k));
  }
  for (long k = 1; k <= 7; ++k) {
    for (long j = 0; j <= k; ++j) {
      CountValue truth = 0;
      for (long m = j; m <= 2 * k - 2; ++m) truth += words(k, m, ParityFilter::All, j);
      p.equal(truth, ballot(k, j + 1), "zeros" + at(k, j));
      p.equal(truth, avoider_words_with_zeros(k, j), "zeros formula" + at(k, j));
    }
  }
}

void classes(Probe& p) {
  for (long m = 0; m <= 9; ++m) {
    const auto n = static_cast<std::size_t>(m);
    p.equal(oracle::count(n, std::nullopt, ClassFilter::BiGrassmannian, ParityFilter::All, kCaps),
            bigrass_count(m), "bigrass m=" + std::to_string(m));
    p.equal(oracle::count(n, std::nullopt, ClassFilter::BiGrassmannian, ParityFilter::Odd, kCaps),
            odd_bigrass_count(m), "a(m) m=" + std::to_string(m));
    p.equal(oracle::count(n, std::nullopt, ClassFilter::Involution, ParityFilter::All, kCaps),
            involution_count(m), "invol m=" + std::to_string(m));
    p.equal(oracle::count(n, std::nullopt, ClassFilter::Involution, ParityFilter::Odd, kCaps),
            odd_involution_count(m), "b(m) m=" + std::to_string(m));
    for (long k = 2; k <= 6; ++k) {
      const auto id = Permutation::identity(k);
      p.equal(oracle::count(n, id, ClassFilter::BiGrassmannian, ParityFilter::All, kCaps),
              bigrass_avoiders(k, m), "bigrass avoiders" + at(k, m));
      p.equal(oracle::count(n, id, ClassFilter::BiGrassmannian, ParityFilter::Odd, kCaps),
              odd_bigrass_avoiders(k, m), "odd bigrass avoiders" + at(k, m));
      p.equal(oracle::count(n, id, ClassFilter::Involution, ParityFilter::All, kCaps),
              involution_avoiders(k, m), "invol avoiders" + at(k, m));
      p.equal(oracle::count(n, id, ClassFilter::Involution, ParityFilter::Odd, kCaps),
              odd_involution_avoiders(k, m), "odd invol avoiders" + at(k, m));
    }
  }
  for (long m = 5; m <= 40; ++m) {
    p.equal(odd_involution_count(m - 4) + m - 1, odd_involution_count(m), "b recursion m=" + std::to_string(m));
  }
}

void odd_extrema(Probe& p) {
  for (long n = 1; n <= 11; ++n) {
    CountValue count = 0;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n), kCaps)) {
      count += all_extrema_odd(DyckPath::parse(s)) ? 1 : 0;
    }
    p.equal(catalan_or_zero(n - 1, 2), count, "all-odd n=" + std::to_string(n));
    p.equal(count, all_odd_extrema_count(n), "all_odd_extrema_count n=" + std::to_string(n));
  }
  for (long n = 0; n <= 8; ++n) {
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n), kCaps)) {
      const auto d = DyckPath::parse(s);
      if (all_extrema_odd(d)) continue;
      const auto t = toggle_first_even_extremum(d);
      p.expect(is_odd_dyck(t) != is_odd_dyck(d), "parity kept on " + s);
      p.expect(toggle_first_even_extremum(t) == d, "not an involution on " + s);
    }
  }
}

void generating_function(Probe& p) {
  const auto table = inversion_gf_table(10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto hist = oracle::inversion_histogram(n, kCaps);
    CountValue sum = 0;
    const std::size_t width = std::max(table.row(n).size(), hist.empty() ? 0 : hist.rbegin()->first + 1);
    for (std::size_t i = 0; i < width; ++i) {
      const auto it = hist.find(i);
      p.equal(it == hist.end() ? CountValue(0) : it->second, table.at(n, i),
              "coefficient" + at(static_cast<long>(n), static_cast<long>(i)));
      sum += table.at(n, i);
    }
    if (n >= 1) p.equal((CountValue(1) << n) - static_cast<long>(n), sum, "row sum n=" + std::to_string(n));
  }
}

void concluding(Probe& p) {
  const auto report = verify_concluding_identities(25);
  for (const auto& c : report.cases) {
    p.equal(c.expected, c.actual, "(" + c.identity + ") k=" + std::to_string(c.k));
    if (c.identity == "ii" && c.k == 3) p.equal(4, c.actual, "spot value k=3");
  }
  p.expect(!report.cases.empty(), "no cases");
}

void exit_codes(Probe& p) {
  std::ostringstream out, err;
  p.expect(cli::run({"verify"}, out, err) == cli::kOk, "clean verify did not exit 0");
  std::ostringstream fout, ferr;
  const int code =
      cli::run({"verify", "--suite", "counting", "--inject-fault", "B_recursive:4:4"}, fout, ferr);
  p.expect(code == cli::kVerificationFailed, "fault run exited " + std::to_string(code));
  p.expect(fout.str().find("FAIL B_recursive [k=4,m=4]") != std::string::npos,
           "fault report does not name the cell");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria = {
      {"1 conjectured formula matches brute force", conjecture},
      {"2 closed form, recurrence and binomial sum agree", three_formulas},
      {"3 words to Dyck paths is a bijection", dyck_bijection},
      {"4 ballot numbers as alternating Catalan sums", ballot_catalan},
      {"5 odd counts", odd_counts},
      {"6 totals and zero-refined counts", totals},
      {"7 biGrassmannian and involution classes", classes},
      {"8 all-odd-extrema paths and the toggle involution", odd_extrema},
      {"9 generating function table", generating_function},
      {"10 concluding identities", concluding},
      {"11 verify exit codes", exit_codes},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Probe p;
    try {
      fn(p);
    } catch (const std::exception& e) {
      p.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (p.ok() ? "PASS " : "FAIL ") << name;
    if (!p.ok()) std::cout << " -- " << p.detail();
    std::cout << '\n';
    failures += !p.ok();
  }
  return failures == 0 ? 0 : 1;
}
