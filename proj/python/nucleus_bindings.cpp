#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nucleus/asymptotics.hpp"
#include "nucleus/cache.hpp"
#include "nucleus/cli.hpp"
#include "nucleus/congruence.hpp"
#include "nucleus/counting.hpp"
#include "nucleus/partition.hpp"
#include "nucleus/report.hpp"
#include "nucleus/verify.hpp"

namespace py = pybind11;
using namespace nucleus;

namespace {

// Exact values cross the boundary as Python ints, via their decimal text.
py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(value).c_str(), nullptr, 10));
}

py::tuple to_py(const Partition& p) {
  py::tuple out(p.num_parts());
  for (std::size_t i = 0; i < p.num_parts(); ++i) out[i] = p[i];
  return out;
}

Partition from_py(const std::vector<Part>& parts) { return Partition(parts); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

EnumerationConstraint constraint(Part min_part, std::optional<Part> max_part, std::optional<Part> forbidden_part) {
  EnumerationConstraint c;
  c.min_part = min_part;
  c.max_part = max_part;
  c.forbidden_part = forbidden_part;
  return c;
}

// Owns the stream so Python iteration stays lazy.
class PyPartitionStream {
 public:
  PyPartitionStream(std::uint32_t n, EnumerationConstraint c) : stream_(n, c) {}
  py::tuple next() {
    if (!started_) {
      started_ = true;
    } else {
      stream_.advance();
    }
    if (!stream_.valid()) throw py::stop_iteration();
    return to_py(stream_.current());
  }

 private:
  PartitionStream stream_;
  bool started_ = false;
};

const CountTable& shared_table(std::size_t n) {
  static CountTable table(0);
  if (table.limit() < n) table.extend_to(std::max<std::size_t>(n, 2 * table.limit()));
  return table;
}

}  // namespace

PYBIND11_MODULE(_nucleus, m) {
  m.doc() = "Exact partition counts through nuclear partitions";

  py::register_exception<CacheError>(m, "CacheError");

  m.def("p", [](std::size_t n) { return to_py(shared_table(n).p(n)); }, py::arg("n"));
  m.def("nu", [](std::size_t n) { return to_py(shared_table(n).nu(n)); }, py::arg("n"));
  m.def("gamma", [](std::size_t n) { return to_py(shared_table(n).gamma(n)); }, py::arg("n"));
  m.def(
      "nu_k", [](std::size_t n, std::uint32_t k) { return to_py(nu_k(n, k, shared_table(n))); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "nu_bounded", [](std::uint32_t n, std::uint32_t m) { return to_py(nu_bounded(n, m)); }, py::arg("n"),
      py::arg("m"));
  m.def(
      "table",
      [](std::size_t limit) {
        const CountTable t(limit);
        py::list rows;
        for (std::size_t n = 0; n <= limit; ++n) rows.append(py::make_tuple(n, to_py(t.gamma(n)), to_py(t.nu(n)), to_py(t.p(n))));
        return rows;
      },
      py::arg("limit"), "Rows (n, gamma, nu, p) for n = 0..limit.");

  m.def(
      "theorem1",
      [](std::uint32_t n) {
        const auto b = theorem1_breakdown(n);
        py::dict out;
        out["n"] = b.n;
        out["nuclear_count"] = b.nuclear_count;
        out["gap_sum"] = b.gap_sum;
        out["value"] = to_py(b.value);
        return out;
      },
      py::arg("n"));
  m.def(
      "bounded_sum",
      [](std::uint32_t n) {
        const auto r = nu_via_bounded_sum(n);
        return py::make_tuple(to_py(r.printed), to_py(r.corrected));
      },
      py::arg("n"), "(printed, corrected) largest-part sums for nu(n).");
  m.def(
      "k_nuclear",
      [](std::size_t n, std::uint32_t k) {
        const auto r = p_via_k_nuclear(n, k, shared_table(n));
        return py::make_tuple(to_py(r.printed), to_py(r.corrected.value));
      },
      py::arg("n"), py::arg("k"), "(printed, corrected) k-step telescopings of p(n).");

  py::class_<PyPartitionStream>(m, "PartitionStream")
      .def("__iter__", [](PyPartitionStream& s) -> PyPartitionStream& { return s; })
      .def("__next__", &PyPartitionStream::next);
  m.def(
      "partitions",
      [](std::uint32_t n, Part min_part, std::optional<Part> max_part, std::optional<Part> forbidden_part) {
        const auto c = constraint(min_part, max_part, forbidden_part);
        c.validate();
        return PyPartitionStream(n, c);
      },
      py::arg("n"), py::arg("min_part") = 1, py::arg("max_part") = py::none(), py::arg("forbidden_part") = py::none(),
      "Lazy reverse-lexicographic stream of partitions of n as tuples.");

  m.def("is_nuclear", [](const std::vector<Part>& p) { return is_nuclear(from_py(p)); });
  m.def("is_ground_state", [](const std::vector<Part>& p) { return is_ground_state(from_py(p)); });
  m.def("fuse", [](const std::vector<Part>& p) { return to_py(fuse(from_py(p))); });
  m.def("decay_capacity", [](const std::vector<Part>& p) { return decay_capacity(from_py(p)); });
  m.def("decay_step", [](const std::vector<Part>& p, Part j) { return to_py(decay_step(from_py(p), j)); });
  m.def("decay_chain", [](const std::vector<Part>& p) {
    py::list out;
    for (const auto& lambda : decay_chain(from_py(p)).products) out.append(to_py(lambda));
    return out;
  });

  m.def(
      "check_congruence",
      [](const std::string& family, std::uint32_t modulus, std::uint32_t last) {
        const auto f = make_family(parse_family_kind(family), modulus);
        return json_to_py(to_json(check_family(f, last, shared_table(f.max_argument(last)))));
      },
      py::arg("family"), py::arg("modulus"), py::arg("last") = 200);
  m.def(
      "check_custom",
      [](std::uint32_t a, std::uint32_t b, std::uint32_t modulus, std::uint32_t last) {
        const auto f = custom_family(a, b, modulus);
        return json_to_py(to_json(check_family(f, last, shared_table(f.max_argument(last)))));
      },
      py::arg("a"), py::arg("b"), py::arg("modulus"), py::arg("last") = 200);
  m.def(
      "parity_via_gamma", [](std::uint32_t n) { return parity_via_gamma(n, shared_table(n)); }, py::arg("n"));
  m.def("p_mod_m", &p_mod_m_table, py::arg("last"), py::arg("m"));

  m.def(
      "verify",
      [](std::uint32_t limit, std::uint32_t enum_limit) {
        VerifyOptions o;
        o.exact_limit = limit;
        o.enum_limit = enum_limit;
        return json_to_py(to_json(run_verification(shared_table(limit), o), false));
      },
      py::arg("limit") = 500, py::arg("enum_limit") = 40);

  m.def("hr_p", [](std::uint64_t n) { return hr_p(n).value(); }, py::arg("n"));
  m.def(
      "hr_nu",
      [](std::uint64_t n, bool simplified) {
        return hr_nu(n, simplified ? NuForm::simplified : NuForm::exact_difference).value();
      },
      py::arg("n"), py::arg("simplified") = false);
  m.def(
      "hr_gamma",
      [](std::uint64_t n, bool simplified) {
        return hr_gamma(n, simplified ? GammaForm::simplified : GammaForm::exact_difference).value();
      },
      py::arg("n"), py::arg("simplified") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in process; returns (exit_code, stdout, stderr).");
}
