#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassperm/classes.hpp"
#include "grassperm/counting.hpp"
#include "grassperm/parity.hpp"
#include "grassperm/paths.hpp"
#include "grassperm/patterns.hpp"
#include "grassperm/series.hpp"
#include "grassperm/verify.hpp"

namespace py = pybind11;
using namespace grassperm;

namespace {

py::int_ to_py(const CountValue& v) { return py::int_(py::str(v.str())); }

template <class... Args>
auto count_fn(CountValue (*f)(Args...)) {
  return [f](Args... args) { return to_py(f(args...)); };
}

std::vector<std::string> strings(const auto& items) {
  std::vector<std::string> out;
  for (const auto& x : items) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_grassperm, m) {
  m.doc() = "Grassmannian permutations avoiding increasing patterns";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

  m.def("binomial", count_fn(&binomial), py::arg("n"), py::arg("k"));
  m.def("catalan", count_fn(&catalan), py::arg("n"));
  m.def("ballot", count_fn(&ballot), py::arg("n"), py::arg("k"));
  m.def("B", count_fn(&avoider_count_recursive), py::arg("k"), py::arg("m"));
  m.def("A", count_fn(&avoider_count_closed_form), py::arg("k"), py::arg("m"));
  m.def("B_binomial", count_fn(&avoider_count_binomial), py::arg("k"), py::arg("m"));
  m.def("O", count_fn(&odd_count), py::arg("k"), py::arg("m"));
  m.def("E", count_fn(&even_count), py::arg("k"), py::arg("m"));
  m.def("fixed_point_count", count_fn(&fixed_point_count), py::arg("n"), py::arg("k"));
  m.def("total_avoider_words", count_fn(&total_avoider_words), py::arg("k"));
  m.def("total_avoider_perms", count_fn(&total_avoider_perms), py::arg("k"));
  m.def("total_odd_avoiders", count_fn(&total_odd_avoiders), py::arg("k"));
  m.def("bigrass_count", count_fn(&bigrass_count), py::arg("m"));
  m.def("bigrass_avoiders", count_fn(&bigrass_avoiders), py::arg("k"), py::arg("m"));
  m.def("involution_count", count_fn(&involution_count), py::arg("m"));
  m.def("involution_avoiders", count_fn(&involution_avoiders), py::arg("k"), py::arg("m"));

  m.def("grassmannian_of_word",
        [](const std::string& w) { return grassmannian_of_word(BinaryWord::parse(w)).str(); },
        py::arg("word"));
  m.def("inversion_count",
        [](const std::string& w) { return inversion_count(BinaryWord::parse(w)); }, py::arg("word"));
  m.def("enumerate_B", [](std::size_t k, std::size_t mm) { return strings(enumerate_B(k, mm)); },
        py::arg("k"), py::arg("m"));
  m.def("enumerate_avoiders",
        [](std::size_t n, const std::string& pattern) {
          return strings(enumerate_avoiders(n, Permutation::parse(pattern)));
        },
        py::arg("n"), py::arg("pattern"));
  m.def("enumerate_dyck", [](std::size_t n) { return strings(enumerate_dyck(n)); }, py::arg("n"));

  m.def("word_to_dyck",
        [](std::size_t k, const std::string& w) { return word_to_dyck(k, BinaryWord::parse(w)).str(); },
        py::arg("k"), py::arg("word"));
  m.def("dyck_to_word",
        [](std::size_t k, const std::string& p) { return dyck_to_word(k, DyckPath::parse(p)).str(); },
        py::arg("k"), py::arg("path"));
  m.def("toggle",
        [](const std::string& p) { return toggle_first_even_extremum(DyckPath::parse(p)).str(); },
        py::arg("path"));
  m.def("halve", [](const std::string& p) { return halve_all_odd_path(DyckPath::parse(p)).str(); },
        py::arg("path"));

  m.def("inversion_gf_table",
        [](std::size_t max_n) {
          const auto t = inversion_gf_table(max_n);
          std::vector<std::vector<py::int_>> rows;
          for (std::size_t n = 0; n <= max_n; ++n) {
            rows.emplace_back();
            for (const auto& c : t.row(n)) rows.back().push_back(to_py(c));
          }
          return rows;
        },
        py::arg("max_n"));

  m.def("verify",
        [](const std::string& suite, long k_max) {
          verify::Options o;
          o.suite = suite;
          o.k_max = k_max;
          const auto report = verify::run(o);
          return py::make_tuple(report.all_passed(), report.checks.size(), report.failures());
        },
        py::arg("suite") = "all", py::arg("k_max") = 6);
}
