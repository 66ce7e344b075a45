#include "grassperm/paths.hpp"

#include <algorithm>
#include <sstream>

#include "grassperm/patterns.hpp"

namespace grassperm {

namespace {

bool same_parity(long a, long b) { return ((a - b) % 2) == 0; }

struct Run {
  Step step;
  std::size_t length;
};

std::vector<Run> runs_of(std::span<const Step> steps) {
  std::vector<Run> runs;
  for (auto s : steps) {
    if (runs.empty() || runs.back().step != s) {
      runs.push_back({s, 1});
    } else {
      ++runs.back().length;
    }
  }
  return runs;
}

void append(std::vector<Step>& out, Step s, std::size_t count) { out.insert(out.end(), count, s); }

void require_avoider(std::size_t k, const BinaryWord& w) {
  if (!avoids_all_increasing(w, k)) {
    throw DomainError("word " + w.str() + " is not in B(" + std::to_string(k) + ", " +
                      std::to_string(w.size()) + ")");
  }
}

bool odd_by_runs(std::span<const Step> steps) {
  const auto a = down_runs_after_ups(steps);
  std::size_t odd_terms = 0;
  for (std::size_t i = 1; i < a.size(); i += 2) odd_terms += a[i] % 2;
  return odd_terms % 2 == 1;
}

void dyck_rec(std::size_t n, std::vector<Step>& prefix, std::size_t ups, std::size_t downs,
              std::vector<DyckPath>& out) {
  if (prefix.size() == 2 * n) {
    out.emplace_back(prefix);
    return;
  }
  if (downs < ups) {
    prefix.push_back(Step::Down);
    dyck_rec(n, prefix, ups, downs + 1, out);
    prefix.pop_back();
  }
  if (ups < n) {
    prefix.push_back(Step::Up);
    dyck_rec(n, prefix, ups + 1, downs, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Extremum> extrema(std::span<const Step> steps, long start) {
  std::vector<Extremum> out;
  long h = start;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    h += steps[i] == Step::Up ? 1 : -1;
    if (steps[i] == Step::Up && steps[i + 1] == Step::Down) {
      out.push_back({Extremum::Kind::Peak, i, h});
    } else if (steps[i] == Step::Down && steps[i + 1] == Step::Up) {
      out.push_back({Extremum::Kind::Valley, i, h});
    }
  }
  return out;
}

std::string steps_to_string(std::span<const Step> steps) {
  std::string s;
  s.reserve(steps.size());
  for (auto st : steps) s.push_back(static_cast<char>(st));
  return s;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      steps.push_back(Step::Up);
    } else if (c == 'D') {
      steps.push_back(Step::Down);
    } else {
      throw DomainError("path may only contain U and D: '" + std::string(text) + "'");
    }
  }
  return steps;
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long h = 0;
  for (auto s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) throw DomainError("Dyck path falls below the axis: " + str());
  }
  if (h != 0) throw DomainError("Dyck path does not return to the axis: " + str());
}

DyckPath DyckPath::parse(std::string_view text) { return DyckPath(parse_steps(text)); }

LatticePath::LatticePath(std::vector<Step> steps, std::size_t k, std::size_t m, std::size_t zeros)
    : steps_(std::move(steps)), k_(k), m_(m), zeros_(zeros) {
  const auto ups = static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Up));
  if (steps_.size() != m_ || ups != zeros_) {
    throw DomainError("lattice path " + str() + " needs " + std::to_string(zeros_) +
                      " up-steps and length " + std::to_string(m_));
  }
  long h = 0;
  for (auto s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < floor()) {
      throw DomainError("lattice path " + str() + " falls below y = " + std::to_string(floor()));
    }
  }
}

std::vector<long> peaks(const DyckPath& p) {
  std::vector<long> out;
  for (const auto& e : extrema(p.steps())) {
    if (e.kind == Extremum::Kind::Peak) out.push_back(e.height);
  }
  return out;
}

std::vector<long> valleys(const DyckPath& p) {
  std::vector<long> out;
  for (const auto& e : extrema(p.steps())) {
    if (e.kind == Extremum::Kind::Valley) out.push_back(e.height);
  }
  return out;
}

long first_last_peak_sum(const DyckPath& p) {
  const auto ps = peaks(p);
  if (ps.empty()) throw DomainError("the empty path has no peaks");
  return ps.front() + ps.back();
}

std::vector<std::size_t> down_runs_after_ups(std::span<const Step> steps) {
  std::vector<std::size_t> a{0};
  for (auto s : steps) {
    if (s == Step::Up) {
      a.push_back(0);
    } else {
      ++a.back();
    }
  }
  return a;
}

DyckPath word_to_dyck(std::size_t k, const BinaryWord& w) {
  require_avoider(k, w);
  const auto seq = a_sequence(w);
  const auto j = seq.zeros();
  const auto m = w.size();
  std::vector<Step> steps;
  append(steps, Step::Up, k - j);
  append(steps, Step::Down, seq.a[0] + 1);
  for (std::size_t i = 1; i <= j; ++i) {
    steps.push_back(Step::Up);
    append(steps, Step::Down, seq.a[i]);
  }
  steps.push_back(Step::Up);
  append(steps, Step::Down, k + j - m);
  return DyckPath(std::move(steps));
}

BinaryWord dyck_to_word(std::size_t k, const DyckPath& p) {
  if (p.semilength() != k + 1) {
    throw DomainError("path " + p.str() + " does not have semilength " + std::to_string(k + 1));
  }
  const auto runs = runs_of(p.steps());
  const auto lead = runs.front().length;
  if (lead > k) throw DomainError("path " + p.str() + " has its first peak above height k");
  const auto j = k - lead;
  ASequence seq;
  seq.a.push_back(runs[1].length - 1);
  // The remaining j + 1 up-steps each carry the down-run that follows them;
  // the last one closes the path and is not part of the word.
  const auto a = down_runs_after_ups(p.steps());
  for (std::size_t i = 1; i <= j; ++i) seq.a.push_back(a[lead + i]);
  return seq.to_word();
}

LatticePath word_to_lattice(std::size_t k, const BinaryWord& w) {
  require_avoider(k, w);
  const auto seq = a_sequence(w);
  std::vector<Step> steps;
  append(steps, Step::Down, seq.a[0]);
  for (std::size_t i = 1; i < seq.a.size(); ++i) {
    steps.push_back(Step::Up);
    append(steps, Step::Down, seq.a[i]);
  }
  return LatticePath(std::move(steps), k, w.size(), seq.zeros());
}

BinaryWord lattice_to_word(const LatticePath& path) {
  return ASequence{down_runs_after_ups(path.steps())}.to_word();
}

bool is_odd_dyck(const DyckPath& p) { return odd_by_runs(p.steps()); }
bool is_odd_lattice(const LatticePath& p) { return odd_by_runs(p.steps()); }

std::optional<Extremum> first_even_extremum(const DyckPath& p) {
  for (const auto& e : extrema(p.steps())) {
    if (same_parity(e.height, 0)) return e;
  }
  return std::nullopt;
}

std::optional<Extremum> first_floor_parity_extremum(const LatticePath& p) {
  for (const auto& e : extrema(p.steps())) {
    if (same_parity(e.height, p.floor())) return e;
  }
  return std::nullopt;
}

DyckPath toggle_first_even_extremum(const DyckPath& p) {
  const auto e = first_even_extremum(p);
  if (!e) throw DomainError("path " + p.str() + " has every peak and valley at odd height");
  std::vector<Step> steps(p.steps().begin(), p.steps().end());
  std::swap(steps[e->position], steps[e->position + 1]);
  return DyckPath(std::move(steps));
}

LatticePath toggle_first_floor_parity_extremum(const LatticePath& p) {
  const auto e = first_floor_parity_extremum(p);
  if (!e) {
    throw DomainError("lattice path " + p.str() +
                      " has no peak or valley at the parity of its floor");
  }
  std::vector<Step> steps(p.steps().begin(), p.steps().end());
  std::swap(steps[e->position], steps[e->position + 1]);
  return LatticePath(std::move(steps), p.k(), p.length(), p.zeros());
}

bool all_extrema_odd(const DyckPath& p) { return !first_even_extremum(p).has_value(); }

DyckPath halve_all_odd_path(const DyckPath& p) {
  if (p.semilength() % 2 == 0) {
    throw DomainError("path " + p.str() + " has even semilength");
  }
  if (!all_extrema_odd(p)) {
    throw DomainError("path " + p.str() + " has a peak or valley at even height");
  }
  const auto runs = runs_of(p.steps());
  std::vector<Step> out;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const bool trimmed = r == 0 || r + 1 == runs.size();
    const auto len = runs[r].length - (trimmed ? 1 : 0);
    if (len % 2 != 0) throw ConsistencyError("unexpected odd run in " + p.str());
    append(out, runs[r].step, len / 2);
  }
  return DyckPath(std::move(out));
}

DyckPath double_to_all_odd_path(const DyckPath& p) {
  const auto runs = runs_of(p.steps());
  std::vector<Step> out{Step::Up};
  for (const auto& run : runs) append(out, run.step, 2 * run.length);
  out.push_back(Step::Down);
  return DyckPath(std::move(out));
}

std::vector<DyckPath> enumerate_dyck(std::size_t n) {
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  prefix.reserve(2 * n);
  dyck_rec(n, prefix, 0, 0, out);
  return out;
}

std::string paths_svg(const std::vector<std::vector<Step>>& paths,
                      const std::vector<std::string>& captions) {
  constexpr int cell = 24;
  constexpr int gap = 2;
  long lo = 0, hi = 0;
  std::size_t width = 0;
  for (const auto& steps : paths) {
    long h = 0;
    for (auto s : steps) {
      h += s == Step::Up ? 1 : -1;
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    width += steps.size() + gap;
  }
  const long rows = hi - lo;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (width + gap) * cell
      << "\" height=\"" << (rows + 3) * cell << "\">\n";
  long x0 = gap;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& steps = paths[i];
    for (std::size_t x = 0; x <= steps.size(); ++x) {
      svg << "  <line x1=\"" << (x0 + static_cast<long>(x)) * cell << "\" y1=\"" << cell
          << "\" x2=\"" << (x0 + static_cast<long>(x)) * cell << "\" y2=\"" << (rows + 1) * cell
          << "\" stroke=\"#ccc\" stroke-dasharray=\"2,3\"/>\n";
    }
    svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
    long h = 0;
    for (std::size_t x = 0; x <= steps.size(); ++x) {
      if (x > 0) h += steps[x - 1] == Step::Up ? 1 : -1;
      svg << (x0 + static_cast<long>(x)) * cell << ',' << (hi - h + 1) * cell << ' ';
    }
    svg << "\"/>\n";
    if (i < captions.size()) {
      svg << "  <text x=\"" << x0 * cell << "\" y=\"" << (rows + 2) * cell
          << "\" font-family=\"monospace\" font-size=\"14\">" << captions[i] << "</text>\n";
    }
    x0 += static_cast<long>(steps.size()) + gap;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace grassperm
