#pragma once

// Verification driver: every closed form, recurrence and bijection checked
// against the brute-force oracle, one named check per compared cell.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace grassperm::verify {

struct Check {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  std::string expected;
  std::string actual;
  bool pass;

  std::string params_str() const;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

// Test hook: adds one to the computed value of the named check at (k, m)
// before comparison. `check` is the check name, e.g. "B_recursive".
struct Fault {
  std::string check;
  long k;
  long m;
};

struct Options {
  std::string suite = "all";
  long k_max = 6;
  std::size_t perm_cap = 9;
  std::size_t word_cap = 20;
  std::optional<Fault> fault;
};

// "all", "counting", "parity", "classes", "paths", "series", "identities"
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
Report run(const Options& options);

void print_text(const Report& report, std::ostream& out);
std::string to_json(const Report& report);

}  // namespace grassperm::verify
