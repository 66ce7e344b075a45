#include "grassperm/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grassperm/classes.hpp"
#include "grassperm/counting.hpp"
#include "grassperm/parity.hpp"
#include "grassperm/paths.hpp"
#include "grassperm/patterns.hpp"
#include "grassperm/series.hpp"
#include "grassperm/verify.hpp"

namespace grassperm::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long need(const std::optional<long>& v, const char* flag, const std::string& quantity) {
  if (!v) throw UsageError("quantity '" + quantity + "' requires " + flag);
  return *v;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::string quantity;
  std::optional<long> k, m, n, j;
};

CountValue evaluate(const CountArgs& a) {
  const auto& q = a.quantity;
  if (q == "B") return avoider_count_recursive(need(a.k, "--k", q), need(a.m, "--m", q));
  if (q == "A") return avoider_count_closed_form(need(a.k, "--k", q), need(a.m, "--m", q));
  if (q == "O") return odd_count(need(a.k, "--k", q), need(a.m, "--m", q));
  if (q == "E") return even_count(need(a.k, "--k", q), need(a.m, "--m", q));
  if (q == "fixed") return fixed_point_count(need(a.n, "--n", q), need(a.k, "--k", q));
  if (q == "total-words") return total_avoider_words(need(a.k, "--k", q));
  if (q == "total-perms") return total_avoider_perms(need(a.k, "--k", q));
  if (q == "total-odd") return total_odd_avoiders(need(a.k, "--k", q));
  if (q == "words-by-zeros") return avoider_words_with_zeros(need(a.k, "--k", q), need(a.j, "--j", q));
  if (q == "odd-words-by-zeros") {
    return odd_avoider_words_with_zeros(need(a.k, "--k", q), need(a.j, "--j", q));
  }
  const long m = need(a.m, "--m", q);
  if (q == "bigrass") return a.k ? bigrass_avoiders(*a.k, m) : bigrass_count(m);
  if (q == "bigrass-odd") return a.k ? odd_bigrass_avoiders(*a.k, m) : odd_bigrass_count(m);
  if (q == "invol") return a.k ? involution_avoiders(*a.k, m) : involution_count(m);
  if (q == "invol-odd") return a.k ? odd_involution_avoiders(*a.k, m) : odd_involution_count(m);
  throw UsageError("unknown quantity '" + q + "'");
}

const std::vector<std::string> kCountQuantities = {
    "B",     "A",           "O",     "E",         "bigrass",     "bigrass-odd",
    "invol", "invol-odd",   "fixed", "total-words", "total-perms", "total-odd",
    "words-by-zeros", "odd-words-by-zeros"};

// ---- table ----------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  // Numeric columns print bare; the rest are quoted in JSON.
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
};

Table build_table(const std::string& quantity, long k_max, long n_max) {
  Table t;
  auto grid = [&](const std::function<CountValue(long, long)>& f) {
    t.columns = {"k", "m", "value"};
    t.numeric = {true, true, false};
    for (long k = 1; k <= k_max; ++k) {
      for (long m = 0; m <= 2 * k - 2; ++m) {
        t.rows.push_back({std::to_string(k), std::to_string(m), f(k, m).str()});
      }
    }
  };
  if (quantity == "B") {
    grid(avoider_count_recursive);
  } else if (quantity == "A") {
    grid(avoider_count_closed_form);
  } else if (quantity == "O") {
    grid(odd_count);
  } else if (quantity == "E") {
    grid(even_count);
  } else if (quantity == "parity") {
    t.columns = {"k", "m", "B", "O", "E"};
    t.numeric = {true, true, false, false, false};
    for (long k = 1; k <= k_max; ++k) {
      for (long m = 0; m <= 2 * k - 2; ++m) {
        t.rows.push_back({std::to_string(k), std::to_string(m), avoider_count_recursive(k, m).str(),
                          odd_count(k, m).str(), even_count(k, m).str()});
      }
    }
  } else if (quantity == "classes" || quantity == "bigrass" || quantity == "bigrass-odd" ||
             quantity == "invol" || quantity == "invol-odd") {
    const std::vector<std::pair<std::string, std::function<CountValue(long, long)>>> classes = {
        {"bigrass", bigrass_avoiders},
        {"bigrass_odd", odd_bigrass_avoiders},
        {"invol", involution_avoiders},
        {"invol_odd", odd_involution_avoiders}};
    std::string wanted = quantity;
    std::replace(wanted.begin(), wanted.end(), '-', '_');
    t.columns = {"class", "k", "m", "value"};
    t.numeric = {false, true, true, false};
    for (const auto& [name, f] : classes) {
      if (quantity != "classes" && name != wanted) continue;
      for (long k = 2; k <= k_max; ++k) {
        for (long m = 0; m <= 2 * k; ++m) {
          t.rows.push_back({name, std::to_string(k), std::to_string(m), f(k, m).str()});
        }
      }
    }
  } else if (quantity == "series") {
    t.columns = {"n", "i", "count"};
    t.numeric = {true, true, false};
    const auto table = inversion_gf_table(static_cast<std::size_t>(n_max));
    for (std::size_t n = 0; n <= table.max_n(); ++n) {
      for (std::size_t i = 0; i < table.row(n).size(); ++i) {
        t.rows.push_back({std::to_string(n), std::to_string(i), table.at(n, i).str()});
      }
    }
  } else {
    throw UsageError("unknown table quantity '" + quantity + "'");
  }
  return t;
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void write_json(const std::string& quantity, const Table& t, std::ostream& out) {
  nlohmann::ordered_json j;
  j["quantity"] = quantity;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (t.numeric[c]) {
        r[t.columns[c]] = std::stol(row[c]);
      } else {
        // Counts exceed 64 bits; keep them exact as decimal strings.
        r[t.columns[c]] = row[c];
      }
    }
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

// ---- biject ---------------------------------------------------------------

std::string tuple_str(const std::vector<std::size_t>& v, std::size_t from = 0) {
  std::string s = "(";
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

const char* kind_name(Extremum::Kind k) { return k == Extremum::Kind::Peak ? "peak" : "valley"; }
const char* parity_name(bool odd) { return odd ? "odd" : "even"; }

bool looks_like_word(const std::string& s) {
  return s.find_first_not_of("01") == std::string::npos;
}

void write_svg(const std::string& file, const std::vector<std::vector<Step>>& paths,
               const std::vector<std::string>& captions) {
  std::ofstream f(file);
  if (!f) throw DomainError("cannot write " + file);
  f << paths_svg(paths, captions);
}

void to_steps(std::span<const Step> s, std::vector<std::vector<Step>>& into) {
  into.emplace_back(s.begin(), s.end());
}

int biject(const std::string& map, std::optional<long> k_opt, const std::string& input,
           const std::string& svg, std::ostream& final_out) {
  std::ostringstream out;
  std::vector<std::vector<Step>> drawn;
  std::vector<std::string> captions;
  auto k_of = [&]() -> std::size_t {
    if (!k_opt || *k_opt < 0) throw UsageError(map + " requires --k >= 0");
    return static_cast<std::size_t>(*k_opt);
  };
  out << "input: " << input << '\n';
  if (map == "word-to-dyck") {
    const auto w = BinaryWord::parse(input);
    const auto p = word_to_dyck(k_of(), w);
    out << "a-sequence: " << tuple_str(a_sequence(w).a) << '\n';
    out << "output: " << p.str() << '\n';
    out << "first+last peak: " << first_last_peak_sum(p) << '\n';
    to_steps(p.steps(), drawn);
    captions.push_back(input);
  } else if (map == "dyck-to-word") {
    const auto p = DyckPath::parse(input);
    const auto w = dyck_to_word(k_of(), p);
    out << "a-sequence: " << tuple_str(a_sequence(w).a) << '\n';
    out << "output: " << w.str() << '\n';
    to_steps(p.steps(), drawn);
    captions.push_back(w.str());
  } else if (map == "word-to-lattice") {
    const auto w = BinaryWord::parse(input);
    const auto lp = word_to_lattice(k_of(), w);
    out << "a-sequence: " << tuple_str(a_sequence(w).a) << '\n';
    out << "output: " << lp.str() << '\n';
    out << "floor: " << lp.floor() << '\n';
    out << "parity: " << parity_name(is_odd_lattice(lp)) << '\n';
    to_steps(lp.steps(), drawn);
    captions.push_back(input);
  } else if (map == "toggle") {
    if (looks_like_word(input)) {
      const auto w = BinaryWord::parse(input);
      const auto lp = word_to_lattice(k_of(), w);
      const auto e = first_floor_parity_extremum(lp);
      const auto toggled = toggle_first_floor_parity_extremum(lp);
      const auto w2 = lattice_to_word(toggled);
      out << "path: " << lp.str() << '\n';
      out << "a-sequence: " << tuple_str(a_sequence(w).a) << '\n';
      out << "changed: " << kind_name(e->kind) << " at position " << e->position + 1
          << " height " << e->height << '\n';
      out << "output path: " << toggled.str() << '\n';
      out << "output: " << w2.str() << '\n';
      out << "a-sequence after: " << tuple_str(a_sequence(w2).a) << '\n';
      out << "parity: " << parity_name(is_odd_word(w)) << " -> " << parity_name(is_odd_word(w2))
          << '\n';
      to_steps(lp.steps(), drawn);
      to_steps(toggled.steps(), drawn);
      captions = {w.str(), w2.str()};
    } else {
      const auto p = DyckPath::parse(input);
      const auto e = first_even_extremum(p);
      const auto q = toggle_first_even_extremum(p);
      out << "a-sequence: " << tuple_str(down_runs_after_ups(p.steps()), 1) << '\n';
      out << "changed: " << kind_name(e->kind) << " at position " << e->position + 1
          << " height " << e->height << '\n';
      out << "output: " << q.str() << '\n';
      out << "a-sequence after: " << tuple_str(down_runs_after_ups(q.steps()), 1) << '\n';
      out << "parity: " << parity_name(is_odd_dyck(p)) << " -> " << parity_name(is_odd_dyck(q))
          << '\n';
      to_steps(p.steps(), drawn);
      to_steps(q.steps(), drawn);
      captions = {p.str(), q.str()};
    }
  } else if (map == "halve") {
    const auto p = DyckPath::parse(input);
    const auto h = halve_all_odd_path(p);
    out << "a-sequence: " << tuple_str(down_runs_after_ups(p.steps()), 1) << '\n';
    out << "output: " << h.str() << '\n';
    to_steps(p.steps(), drawn);
    to_steps(h.steps(), drawn);
    captions = {p.str(), h.str().empty() ? "(empty)" : h.str()};
  } else {
    throw UsageError("unknown map '" + map + "'");
  }
  if (!svg.empty()) write_svg(svg, drawn, captions);
  final_out << out.str();
  return kOk;
}

// ---- enumerate ------------------------------------------------------------

int enumerate(const std::string& kind, const std::optional<long>& n, const std::optional<long>& k,
              const std::optional<long>& m, const std::string& pattern, const std::string& stats,
              std::optional<long> cap, std::ostream& out) {
  auto check_cap = [&](long value, long fallback) {
    const long limit = cap.value_or(fallback);
    if (value > limit) {
      throw CapExceeded("size " + std::to_string(value) + " exceeds cap " + std::to_string(limit));
    }
  };
  if (kind == "avoiders") {
    const long size = need(n, "--n", kind);
    if (pattern.empty()) throw UsageError("avoiders requires --pattern");
    if (stats == "peaks") throw UsageError("--stats peaks applies to dyck only");
    check_cap(size, 24);
    for (const auto& p : enumerate_avoiders(static_cast<std::size_t>(size), Permutation::parse(pattern), 64)) {
      out << p.str();
      if (stats == "inversions") out << ' ' << permutation_inversions(p);
      if (stats == "fixed-points") out << ' ' << fixed_points(p).size();
      out << '\n';
    }
  } else if (kind == "words") {
    const long kk = need(k, "--k", kind);
    const long mm = need(m, "--m", kind);
    if (stats == "peaks") throw UsageError("--stats peaks applies to dyck only");
    check_cap(mm, 40);
    for (const auto& w : enumerate_B(static_cast<std::size_t>(kk), static_cast<std::size_t>(mm))) {
      out << w.str();
      if (stats == "inversions") out << ' ' << inversion_count(w);
      if (stats == "fixed-points") out << ' ' << fixed_points(grassmannian_of_word(w)).size();
      out << '\n';
    }
  } else if (kind == "dyck") {
    const long size = need(n, "--n", kind);
    if (!stats.empty() && stats != "peaks") throw UsageError("dyck supports --stats peaks only");
    check_cap(size, 14);
    for (const auto& p : enumerate_dyck(static_cast<std::size_t>(size))) {
      out << p.str();
      if (stats == "peaks") {
        out << ' ';
        const auto ps = peaks(p);
        for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << ps[i];
      }
      out << '\n';
    }
  } else {
    throw UsageError("unknown enumeration '" + kind + "'");
  }
  return kOk;
}

std::optional<verify::Fault> parse_fault(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto a = spec.rfind(':');
  const auto b = a == std::string::npos ? a : spec.rfind(':', a - 1);
  if (b == std::string::npos) throw UsageError("--inject-fault expects CHECK:K:M");
  return verify::Fault{spec.substr(0, b), std::stol(spec.substr(b + 1, a - b - 1)),
                       std::stol(spec.substr(a + 1))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmannian permutations avoiding an increasing pattern"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print one exact count");
  count->add_option("--quantity", count_args.quantity, "Quantity to evaluate")
      ->required()
      ->check(CLI::IsMember(kCountQuantities));
  count->add_option("--k", count_args.k, "Pattern length k");
  count->add_option("--m", count_args.m, "Word length / permutation size m");
  count->add_option("--n", count_args.n, "Size n");
  count->add_option("--j", count_args.j, "Number of zeros j");

  std::string table_quantity;
  long k_max = 0;
  long n_max = 10;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Dump a table of counts as CSV or JSON");
  table->add_option("--quantity", table_quantity, "B, A, O, E, parity, classes, bigrass, bigrass-odd, invol, invol-odd, series")
      ->required();
  table->add_option("--k-max", k_max, "Largest k")->check(CLI::NonNegativeNumber);
  table->add_option("--n-max", n_max, "Largest size for the series table")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string enum_kind;
  std::optional<long> en, ek, em, ecap;
  std::string epattern, estats;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List objects, one per line");
  enumerate_cmd->add_option("kind", enum_kind, "avoiders, words or dyck")
      ->required()
      ->check(CLI::IsMember({"avoiders", "words", "dyck"}));
  enumerate_cmd->add_option("--n", en, "Size / semilength");
  enumerate_cmd->add_option("--k", ek, "Pattern length k");
  enumerate_cmd->add_option("--m", em, "Word length");
  enumerate_cmd->add_option("--pattern", epattern, "Grassmannian pattern, e.g. 123 or 1,2,3");
  enumerate_cmd->add_option("--stats", estats, "Append a statistic")
      ->check(CLI::IsMember({"inversions", "fixed-points", "peaks"}));
  enumerate_cmd->add_option("--cap", ecap, "Override the size cap");

  std::string map, input, svg;
  std::optional<long> bk;
  auto* biject_cmd = app.add_subcommand("biject", "Apply one of the path/word bijections");
  biject_cmd->add_option("map", map, "word-to-dyck, dyck-to-word, word-to-lattice, toggle, halve")
      ->required()
      ->check(CLI::IsMember({"word-to-dyck", "dyck-to-word", "word-to-lattice", "toggle", "halve"}));
  biject_cmd->add_option("--k", bk, "Pattern length k");
  biject_cmd->add_option("--input", input, "Binary word or U/D path")->required();
  biject_cmd->add_option("--svg", svg, "Write an SVG drawing of the paths");

  verify::Options vopt;
  std::string vformat = "text";
  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify", "Check every formula against brute force");
  verify_cmd->add_option("--suite", vopt.suite, "Suite to run")->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--k-max", vopt.k_max, "Largest k")->check(CLI::Range(1L, 40L));
  verify_cmd->add_option("--perm-cap", vopt.perm_cap, "Largest permutation size for the oracle")
      ->check(CLI::Range(0, 10));
  verify_cmd->add_option("--word-cap", vopt.word_cap, "Largest word length for the oracle")
      ->check(CLI::Range(0, 24));
  verify_cmd->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--inject-fault", fault, "Test hook: CHECK:K:M")->group("");

  std::vector<std::string> argv_store{"grassperm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*count) {
      out << evaluate(count_args).str() << '\n';
      return kOk;
    }
    if (*table) {
      const auto t = build_table(table_quantity, k_max, n_max);
      if (format == "json") {
        write_json(table_quantity, t, out);
      } else {
        write_csv(t, out);
      }
      return kOk;
    }
    if (*enumerate_cmd) return enumerate(enum_kind, en, ek, em, epattern, estats, ecap, out);
    if (*biject_cmd) return biject(map, bk, input, svg, out);
    if (*verify_cmd) {
      vopt.fault = parse_fault(fault);
      const auto report = verify::run(vopt);
      if (vformat == "json") {
        out << verify::to_json(report);
      } else {
        verify::print_text(report, out);
      }
      return report.all_passed() ? kOk : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace grassperm::cli
