#include "grassperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "grassperm/classes.hpp"
#include "grassperm/counting.hpp"
#include "grassperm/oracle.hpp"
#include "grassperm/parity.hpp"
#include "grassperm/paths.hpp"
#include "grassperm/patterns.hpp"
#include "grassperm/series.hpp"

namespace grassperm::verify {

namespace {

using Params = std::vector<std::pair<std::string, long>>;
using oracle::ClassFilter;
using oracle::ParityFilter;

class Recorder {
 public:
  Recorder(Report& report, const Options& options) : report_(report), options_(options) {}

  const Options& options() const { return options_; }

  oracle::Caps caps() const {
    oracle::Caps c;
    c.perm_cap = options_.perm_cap;
    c.word_cap = options_.word_cap;
    return c;
  }

  // Oracle word counts, one exhaustive census per (k, m) per run.
  CountValue words(long k, long m, ParityFilter parity, std::optional<std::size_t> zeros) {
    auto it = census_.find({k, m});
    if (it == census_.end()) {
      it = census_.emplace(std::pair{k, m}, oracle::word_census(static_cast<std::size_t>(k),
                                                                static_cast<std::size_t>(m), caps()))
               .first;
    }
    CountValue total = 0;
    for (std::size_t z = 0; z < it->second.size(); ++z) {
      if (zeros && z != *zeros) continue;
      if (parity != ParityFilter::Odd) total += it->second[z][0];
      if (parity != ParityFilter::Even) total += it->second[z][1];
    }
    return total;
  }

  // Compares a computed count against an expected one. The fault hook keys on
  // the check name and the k, m parameters.
  void count(const std::string& name, Params params, const CountValue& expected,
             CountValue actual) {
    if (const auto& f = options_.fault; f && f->check == name && param(params, "k") == f->k &&
                                        param(params, "m") == f->m) {
      actual += 1;
    }
    report_.checks.push_back(
        {name, std::move(params), expected.str(), actual.str(), expected == actual});
  }

  void flag(const std::string& name, Params params, bool ok, const std::string& detail = "") {
    report_.checks.push_back({name, std::move(params), "true", ok ? "true" : detail.empty() ? "false" : detail, ok});
  }

 private:
  static std::optional<long> param(const Params& params, const std::string& key) {
    for (const auto& [k, v] : params) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  Report& report_;
  const Options& options_;
  std::map<std::pair<long, long>, oracle::WordCensus> census_;
};

CountValue pow2(long e) { return CountValue(1) << e; }

long max_word_m(const Options& o, long k) {
  return std::min<long>(2 * k - 2, static_cast<long>(o.word_cap));
}

void counting_suite(Recorder& rec) {
  const auto& o = rec.options();
  const auto caps = rec.caps();

  for (long k = 1; k <= o.k_max; ++k) {
    for (long m = 0; m <= max_word_m(o, k); ++m) {
      const auto truth = rec.words(k, m, ParityFilter::All, std::nullopt);
      rec.count("B_recursive", {{"k", k}, {"m", m}}, truth, avoider_count_recursive(k, m));
      rec.count("A", {{"k", k}, {"m", m}}, truth, avoider_count_closed_form(k, m));
      if (m >= 1) rec.count("B_binomial", {{"k", k}, {"m", m}}, truth, avoider_count_binomial(k, m));
    }
  }

  const long three_way_k = std::max<long>(40, o.k_max);
  bool agree = true;
  std::string where;
  for (long k = 1; k <= three_way_k && agree; ++k) {
    for (long m = 1; m <= 2 * k && agree; ++m) {
      const auto a = avoider_count_closed_form(k, m);
      agree = a == avoider_count_recursive(k, m) && a == avoider_count_binomial(k, m);
      if (!agree) where = "k=" + std::to_string(k) + ",m=" + std::to_string(m);
    }
  }
  rec.flag("A=B_recursive=B_binomial", {{"k_max", three_way_k}}, agree, where);

  // Permutation side: B(k, m) = |G_m(id_k)| for m >= k, 2^m - m below.
  for (long k = 2; k <= o.k_max; ++k) {
    for (long m = 0; m <= 2 * k - 2 && m <= static_cast<long>(o.perm_cap); ++m) {
      const auto truth =
          oracle::count(m, Permutation::identity(k), ClassFilter::All, ParityFilter::All, caps);
      const auto b = avoider_count_recursive(k, m);
      const CountValue computed = m >= k ? b : (m == 0 ? CountValue(1) : b - m);
      rec.count("perm_avoiders", {{"k", k}, {"m", m}}, truth, computed);
    }
  }

  for (long k = 1; k <= o.k_max; ++k) {
    CountValue words = 0;
    for (long m = 0; m <= max_word_m(o, k); ++m) {
      words += rec.words(k, m, ParityFilter::All, std::nullopt);
    }
    if (2 * k - 2 <= static_cast<long>(o.word_cap)) {
      rec.count("total_words", {{"k", k}}, words, total_avoider_words(k));
    }
    if (2 * k - 2 <= static_cast<long>(o.perm_cap)) {
      CountValue perms = 0;
      for (long m = 0; m <= 2 * k - 2; ++m) {
        perms += oracle::count(m, Permutation::identity(k), ClassFilter::All, ParityFilter::All, caps);
      }
      rec.count("total_perms", {{"k", k}}, perms, total_avoider_perms(k));
    }
    for (long j = 0; j <= k; ++j) {
      CountValue truth = 0;
      for (long m = j; m <= max_word_m(o, k); ++m) {
        truth += rec.words(k, m, ParityFilter::All, static_cast<std::size_t>(j));
      }
      if (2 * k - 2 <= static_cast<long>(o.word_cap)) {
        rec.count("words_by_zeros", {{"k", k}, {"j", j}}, truth, avoider_words_with_zeros(k, j));
      }
    }
  }

  for (std::size_t n = 0; n <= o.perm_cap; ++n) {
    std::vector<CountValue> hist(n + 1, 0);
    for (const auto& p : oracle::grassmannians(n, caps)) {
      std::size_t fixed = 0;
      for (std::size_t i = 1; i <= n; ++i) fixed += p.at(i) == static_cast<int>(i);
      hist[fixed] += 1;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      rec.count("fixed_points", {{"n", static_cast<long>(n)}, {"k", static_cast<long>(k)}}, hist[k],
                fixed_point_count(static_cast<long>(n), static_cast<long>(k)));
    }
  }

  // Every non-identity Grassmannian pattern of length 2..4.
  for (std::size_t len = 2; len <= 4; ++len) {
    for (const auto& pattern : oracle::grassmannians(len, caps)) {
      if (pattern.is_identity()) continue;
      for (std::size_t n = 0; n <= std::min<std::size_t>(o.perm_cap, 8); ++n) {
        rec.count("nonidentity_avoiders " + pattern.str(), {{"n", static_cast<long>(n)}, {"k", static_cast<long>(len)}},
                  oracle::count(n, pattern, ClassFilter::All, ParityFilter::All, caps),
                  count_avoiders_nonidentity(static_cast<long>(n), static_cast<long>(len)));
      }
    }
  }

  // Peak statistics on brute-force Dyck strings.
  for (long n = 1; n <= std::min<long>(o.k_max + 1, static_cast<long>(caps.dyck_cap)); ++n) {
    std::map<long, CountValue> by_sum;
    std::map<std::pair<long, long>, CountValue> by_pair;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n))) {
      std::vector<long> ph;
      long h = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        h += s[i] == 'U' ? 1 : -1;
        if (s[i] == 'U' && i + 1 < s.size() && s[i + 1] == 'D') ph.push_back(h);
      }
      by_sum[ph.front() + ph.back()] += 1;
      by_pair[{ph.front(), ph.back()}] += 1;
    }
    for (long s = 0; s <= 2 * n - 2; ++s) {
      rec.count("peak_sum", {{"n", n}, {"s", s}}, by_sum[s], dyck_peak_sum_count(n, s));
    }
    // Pair counts refer to semilength n = q + 1.
    const long q = n - 1;
    for (long a = 1; a <= 2 * q; ++a) {
      for (long b = 1; a + b <= 2 * q; ++b) {
        rec.count("peak_pair", {{"n", q}, {"a", a}, {"b", b}}, by_pair[{a, b}],
                  dyck_peak_pair_count(q, a, b));
      }
    }
  }
}

void parity_suite(Recorder& rec) {
  const auto& o = rec.options();
  const auto caps = rec.caps();
  for (long k = 1; k <= o.k_max; ++k) {
    for (long m = 1; m <= max_word_m(o, k); ++m) {
      const auto odd = rec.words(k, m, ParityFilter::Odd, std::nullopt);
      const auto even = rec.words(k, m, ParityFilter::Even, std::nullopt);
      rec.count("O", {{"k", k}, {"m", m}}, odd, odd_count(k, m));
      rec.count("E", {{"k", k}, {"m", m}}, even, even_count(k, m));
    }
  }
  const long closed_k = std::max<long>(20, o.k_max);
  for (long k = 2; k <= closed_k; ++k) {
    rec.count("O_at_2k-2", {{"k", k}}, odd_count(k, 2 * k - 2), odd_count_at_max_length(k));
    rec.count("O(k,2k-3)=2E(k,2k-2)", {{"k", k}}, 2 * even_count(k, 2 * k - 2),
              odd_count(k, 2 * k - 3));
  }
  for (long k = 1; k <= o.k_max; ++k) {
    if (2 * k - 2 > static_cast<long>(o.word_cap)) continue;
    CountValue total = 0;
    for (long m = 0; m <= 2 * k - 2; ++m) {
      total += rec.words(k, m, ParityFilter::Odd, std::nullopt);
    }
    rec.count("total_odd", {{"k", k}}, total, total_odd_avoiders(k));
    for (long j = 0; j <= k; ++j) {
      CountValue truth = 0;
      for (long m = j; m <= 2 * k - 2; ++m) {
        truth += rec.words(k, m, ParityFilter::Odd, static_cast<std::size_t>(j));
      }
      rec.count("odd_words_by_zeros", {{"k", k}, {"j", j}}, truth, odd_avoider_words_with_zeros(k, j));
    }
  }
  for (long n = 1; n <= std::min<long>(11, static_cast<long>(caps.dyck_cap)); ++n) {
    CountValue all_odd = 0;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n), caps)) {
      all_odd += all_extrema_odd(DyckPath::parse(s)) ? 1 : 0;
    }
    rec.count("all_odd_extrema", {{"n", n}}, all_odd, all_odd_extrema_count(n));
  }
}

void classes_suite(Recorder& rec) {
  const auto& o = rec.options();
  const auto caps = rec.caps();
  for (long m = 0; m <= static_cast<long>(o.perm_cap); ++m) {
    const auto n = static_cast<std::size_t>(m);
    rec.count("bigrass", {{"m", m}}, oracle::count(n, std::nullopt, ClassFilter::BiGrassmannian, ParityFilter::All, caps), bigrass_count(m));
    rec.count("bigrass_odd", {{"m", m}},
              oracle::count(n, std::nullopt, ClassFilter::BiGrassmannian, ParityFilter::Odd, caps),
              odd_bigrass_count(m));
    rec.count("invol", {{"m", m}}, oracle::count(n, std::nullopt, ClassFilter::Involution, ParityFilter::All, caps),
              involution_count(m));
    rec.count("invol_odd", {{"m", m}},
              oracle::count(n, std::nullopt, ClassFilter::Involution, ParityFilter::Odd, caps),
              odd_involution_count(m));
  }
  for (long k = 2; k <= o.k_max; ++k) {
    const auto id = Permutation::identity(static_cast<std::size_t>(k));
    for (long m = 0; m <= std::min<long>(2 * k + 1, static_cast<long>(o.perm_cap)); ++m) {
      const auto n = static_cast<std::size_t>(m);
      rec.count("bigrass_avoiders", {{"k", k}, {"m", m}},
                oracle::count(n, id, ClassFilter::BiGrassmannian, ParityFilter::All, caps),
                bigrass_avoiders(k, m));
      rec.count("bigrass_odd_avoiders", {{"k", k}, {"m", m}},
                oracle::count(n, id, ClassFilter::BiGrassmannian, ParityFilter::Odd, caps),
                odd_bigrass_avoiders(k, m));
      rec.count("invol_avoiders", {{"k", k}, {"m", m}},
                oracle::count(n, id, ClassFilter::Involution, ParityFilter::All, caps),
                involution_avoiders(k, m));
      rec.count("invol_odd_avoiders", {{"k", k}, {"m", m}},
                oracle::count(n, id, ClassFilter::Involution, ParityFilter::Odd, caps),
                odd_involution_avoiders(k, m));
    }
  }
  for (long m = 5; m <= 40; ++m) {
    rec.count("b(m)=b(m-4)+m-1", {{"m", m}}, odd_involution_count(m - 4) + m - 1,
              odd_involution_count(m));
  }
}

void paths_suite(Recorder& rec) {
  const auto& o = rec.options();
  const auto caps = rec.caps();
  for (long k = 1; k <= std::min<long>(o.k_max, static_cast<long>(caps.dyck_cap) - 1); ++k) {
    std::map<long, std::set<std::string>> by_sum;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(k + 1), caps)) {
      const auto p = DyckPath::parse(s);
      by_sum[first_last_peak_sum(p)].insert(s);
    }
    for (long m = 0; m <= 2 * k - 2; ++m) {
      std::set<std::string> image;
      bool round_trip = true;
      const auto words = enumerate_B(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
      for (const auto& w : words) {
        const auto p = word_to_dyck(static_cast<std::size_t>(k), w);
        image.insert(p.str());
        round_trip = round_trip && dyck_to_word(static_cast<std::size_t>(k), p) == w;
      }
      const bool bijective = image.size() == words.size() && image == by_sum[2 * k - m];
      rec.flag("word_to_dyck bijection", {{"k", k}, {"m", m}}, bijective && round_trip);

      bool lattice_ok = true;
      for (const auto& w : words) {
        const auto lp = word_to_lattice(static_cast<std::size_t>(k), w);
        lattice_ok = lattice_ok && lattice_to_word(lp) == w && is_odd_lattice(lp) == is_odd_word(w);
      }
      rec.flag("word_to_lattice round trip", {{"k", k}, {"m", m}}, lattice_ok);
    }
  }
  for (long n = 1; n <= 8; ++n) {
    bool ok = true;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n), caps)) {
      const auto p = DyckPath::parse(s);
      if (all_extrema_odd(p)) continue;
      const auto q = toggle_first_even_extremum(p);
      ok = ok && toggle_first_even_extremum(q) == p && is_odd_dyck(q) != is_odd_dyck(p);
    }
    rec.flag("toggle involution flips parity", {{"n", n}}, ok);
  }
  for (long n = 1; n <= 9; n += 2) {
    std::set<std::string> halves;
    bool ok = true;
    for (const auto& s : oracle::dyck_strings(static_cast<std::size_t>(n), caps)) {
      const auto p = DyckPath::parse(s);
      if (!all_extrema_odd(p)) continue;
      ok = ok && is_odd_dyck(p);
      const auto h = halve_all_odd_path(p);
      ok = ok && double_to_all_odd_path(h) == p;
      halves.insert(h.str());
    }
    const auto target = oracle::dyck_strings(static_cast<std::size_t>((n - 1) / 2), caps);
    ok = ok && halves == std::set<std::string>(target.begin(), target.end());
    rec.flag("halving bijection", {{"n", n}}, ok);
  }
}

void series_suite(Recorder& rec) {
  const auto& o = rec.options();
  const auto caps = rec.caps();
  const auto table = inversion_gf_table(o.perm_cap);
  for (std::size_t n = 0; n <= o.perm_cap; ++n) {
    const auto hist = oracle::inversion_histogram(n, caps);
    const std::size_t width = std::max<std::size_t>(table.row(n).size(), hist.empty() ? 0 : hist.rbegin()->first + 1);
    CountValue row_sum = 0;
    for (std::size_t i = 0; i < width; ++i) {
      const auto it = hist.find(i);
      rec.count("gf_coefficient", {{"n", static_cast<long>(n)}, {"i", static_cast<long>(i)}},
                it == hist.end() ? CountValue(0) : it->second, table.at(n, i));
      row_sum += table.at(n, i);
    }
    if (n >= 1) {
      rec.count("gf_row_sum", {{"n", static_cast<long>(n)}}, pow2(static_cast<long>(n)) - static_cast<long>(n), row_sum);
    }
  }
}

void identities_suite(Recorder& rec) {
  const auto& o = rec.options();
  for (long a = 0; a <= o.k_max; ++a) {
    for (long b = -a; b <= a; ++b) {
      rec.flag("ballot_catalan", {{"a", a}, {"b", b}}, verify_ballot_catalan_identity(a, b));
    }
  }
  for (const auto& c : verify_concluding_identities(std::max<long>(1, o.k_max)).cases) {
    Params params{{"k", c.k}};
    if (c.m >= 0) params.emplace_back("m", c.m);
    rec.count("concluding_" + c.identity, std::move(params), c.expected, c.actual);
  }
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"counting", counting_suite}, {"parity", parity_suite},         {"classes", classes_suite},
      {"paths", paths_suite},       {"series", series_suite},         {"identities", identities_suite},
  };
  return s;
}

}  // namespace

std::string Check::params_str() const {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ',';
    s += k + '=' + std::to_string(v);
  }
  return s;
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run(const Options& options) {
  Report report{options.suite, {}};
  Recorder rec(report, options);
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (options.suite == "all" || options.suite == name) {
      fn(rec);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown verification suite: " + options.suite);
  return report;
}

void print_text(const Report& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.params_str() << "] expected "
        << c.expected << " actual " << c.actual << '\n';
  }
  out << report.suite << ": " << report.checks.size() - report.failures() << "/"
      << report.checks.size() << " checks passed\n";
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["checks"].push_back({{"name", c.name},
                           {"params", params},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"pass", c.pass}});
  }
  return j.dump(2) + "\n";
}

}  // namespace grassperm::verify
