// Thin bindings: structured values cross the boundary as JSON text in the same
// formats the CLI reads and writes; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sympal/cli.hpp"
#include "sympal/io.hpp"

namespace py = pybind11;
using namespace sympal;
using io::Json;

namespace {

std::string dump(const Json& j) { return j.dump(); }

std::string irreducibility_name(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible:
      return "irreducible";
    case Irreducibility::Reducible:
      return "reducible";
    default:
      return "unverified";
  }
}

std::string sweep(const std::string& group_doc, const std::string& kind, const std::optional<std::string>& normal_doc,
                  std::optional<std::uint64_t> p) {
  const auto g = io::finite_group_from_json(io::parse(group_doc));
  if (kind == "proposition") {
    SubgroupPtr normal;
    if (normal_doc) normal = io::subgroup_from_json(g, io::parse(*normal_doc));
    return dump(io::to_json(sweep_prop_nh(g, normal, p)));
  }
  if (kind == "restriction") return dump(io::to_json(sweep_res_nontrivial(g)));
  if (kind == "mackey") return dump(io::to_json(sweep_mackey_identity(g)));
  if (kind == "frobenius") return dump(io::to_json(sweep_frobenius(g)));
  throw Error(Errc::Parse, "unknown sweep \"" + kind + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transvection subgroups of GSp, (n,p)-groups, inertia weights and character sweeps";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "SympalError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      const auto& type = error_type.get_stored();
      py::object inst = type(e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_CAP") = kDefaultCap;

  m.def("sp_order", &sp_order, py::arg("n"), py::arg("q"), "|Sp_n(F_q)|, or None on overflow or odd n.");

  m.def(
      "group_order",
      [](const std::string& doc, std::size_t cap) { return group_order(io::group_from_json(io::parse(doc)), cap); },
      py::arg("group"), py::arg("cap") = kDefaultCap, py::call_guard<py::gil_scoped_release>());

  m.def(
      "is_irreducible",
      [](const std::string& doc) { return irreducibility_name(is_irreducible(io::group_from_json(io::parse(doc))).status); },
      py::arg("group"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "classify",
      [](const std::string& doc, std::size_t cap) {
        const auto g = io::group_from_json(io::parse(doc));
        const auto v = classify(g, cap);
        verify_classification(g, v);
        return dump(io::to_json(v));
      },
      py::arg("group"), py::arg("cap") = kDefaultCap, py::call_guard<py::gil_scoped_release>(),
      "Classification document; the witness is verified before returning.");

  m.def(
      "np_group",
      [](unsigned n, std::uint64_t q, std::uint64_t p, std::uint64_t ell, std::optional<std::int64_t> alpha) {
        auto g = build_np_group(build_chi(make_np_params(n, q, p, ell)));
        if (alpha) g = twist_unramified(g, g.chi.field->from_int(*alpha));
        return dump(io::to_json(g));
      },
      py::arg("n"), py::arg("q"), py::arg("p"), py::arg("ell"), py::arg("alpha") = py::none(),
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "find_np_primes",
      [](unsigned n, std::uint64_t q_max) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const auto& x : find_np_primes(n, q_max)) out.emplace_back(x.q, x.p);
        return out;
      },
      py::arg("n"), py::arg("q_max"));

  m.def(
      "check_npower_distinct",
      [](const std::string& doc) {
        const auto res = check_npower_distinct(io::profile_from_json(io::parse(doc)));
        Json out = {{"distinct", res.distinct()}};
        if (res.collision) out["collision"] = io::to_json(*res.collision);
        return dump(out);
      },
      py::arg("profile"));

  m.def(
      "twist_by_cyclotomic",
      [](const std::string& doc, std::int64_t a) {
        return dump(io::to_json(twist_by_cyclotomic(io::profile_from_json(io::parse(doc)), a)));
      },
      py::arg("profile"), py::arg("a"));

  m.def("sweep", &sweep, py::arg("group"), py::arg("kind"), py::arg("normal") = py::none(), py::arg("p") = py::none(),
        py::call_guard<py::gil_scoped_release>());

  m.def("fixture_groups", [] {
    std::vector<std::string> names;
    for (const auto& g : fixture_groups()) names.push_back(g.name);
    return names;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI subcommand in-process; returns (exit code, stdout, stderr).");
}
