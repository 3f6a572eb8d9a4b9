#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liken/cli.hpp"
#include "liken/construct.hpp"
#include "liken/error.hpp"
#include "liken/families.hpp"
#include "liken/morphisms.hpp"
#include "liken/prefix_io.hpp"
#include "liken/properties.hpp"
#include "liken/semigroup.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

liken::PropertyReport run_check(const std::string& name, const liken::LikenSpec& spec, const liken::Prefix& p) {
  using namespace liken;
  if (name == "convexity") return check_convexity(p);
  if (name == "disjoint-support") return check_disjoint_support(p);
  if (name == "parity") return check_parity(p);
  if (name == "or") return check_or(p);
  if (name == "bertrand") return check_bertrand(p);
  if (name == "legendre") return check_legendre(p);
  if (name == "separation") return check_separation(p);
  if (name == "uniqueness") return check_uniqueness(spec, p);
  if (name == "dimension") return dimension(p);
  if (name == "positions") return positions_report(p);
  if (name == "gap-lemmas") return check_gap_lemmas(p, 10000);
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + name + "'");
}

liken::Prefix prefix_of(const std::string& spec, std::size_t count) {
  return liken::enumerate(liken::spec_from_inline(spec), liken::Limit::count(count + 1));
}

}  // namespace

PYBIND11_MODULE(_liken, m) {
  m.doc() = "Exact enumeration and property checks for likens; results are JSON strings";

  static py::exception<liken::Error> error(m, "LikenError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const liken::Error& e) {
      py::object index = e.index() ? py::object(py::int_(*e.index())) : py::object(py::none());
      PyErr_SetObject(error.ptr(),
                      py::make_tuple(std::string(liken::error_code_name(e.code())), e.what(), index).ptr());
    }
  });

  m.def(
      "enumerate_prefix",
      [](const std::string& spec, std::size_t count) { return liken::prefix_to_json(prefix_of(spec, count)).dump(); },
      py::arg("spec"), py::arg("count"), "Prefix x_0 .. x_count as a JSON export");

  m.def(
      "check",
      [](const std::string& spec, std::size_t count, const std::vector<std::string>& props) {
        const liken::Prefix p = prefix_of(spec, count);
        json out = json::array();
        for (const auto& name : props) out.push_back(liken::report_to_json(run_check(name, p.spec(), p)));
        return out.dump();
      },
      py::arg("spec"), py::arg("count"), py::arg("props"));

  m.def(
      "compare",
      [](const std::string& a, const std::string& b, std::size_t k_max, unsigned precision) {
        return liken::homothety_to_json(
                   liken::homothety_test(liken::spec_from_inline(a), liken::spec_from_inline(b), k_max, precision))
            .dump();
      },
      py::arg("a"), py::arg("b"), py::arg("k_max") = 20, py::arg("precision") = liken::kDefaultPrecisionCeiling);

  m.def(
      "order_check",
      [](const std::string& a, const std::string& b, std::size_t count) {
        return liken::order_iso_to_json(liken::order_iso_prefix_test(prefix_of(a, count), prefix_of(b, count))).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("count"));

  m.def(
      "semigroup",
      [](const std::vector<std::uint64_t>& gens, const std::vector<std::uint64_t>& apery) {
        return liken::semigroup_summary(liken::NumericalSemigroup(gens), apery).dump();
      },
      py::arg("gens"), py::arg("apery") = std::vector<std::uint64_t>{});

  m.def(
      "construct",
      [](const std::string& policy, std::size_t steps) {
        liken::ConstructPolicy pol = liken::ConstructPolicy::convexity_window();
        if (policy == "midpoint") {
          pol = liken::ConstructPolicy::midpoint();
        } else if (policy == "convexity-window-plain") {
          pol = liken::ConstructPolicy::convexity_window(false);
        } else if (policy != "convexity-window") {
          throw liken::Error(liken::ErrorCode::InvalidArgument, "unknown policy '" + policy + "'");
        }
        const liken::ConstructionTrace t = liken::or_construct(pol, steps);
        json trace = json::array();
        for (const auto& s : t.steps) trace.push_back(liken::step_to_json(s));
        return json{{"policy", t.policy},
                    {"steps", trace},
                    {"backtracks", t.backtracks},
                    {"prefix", liken::prefix_to_json(t.prefix)}}
            .dump();
      },
      py::arg("policy") = "convexity-window", py::arg("steps") = 100);

  m.def(
      "verify_main",
      [](const std::string& spec, std::size_t count) {
        return liken::main_report_to_json(liken::verify_main_theorem(prefix_of(spec, count))).dump();
      },
      py::arg("spec"), py::arg("count"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv = {"liken"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = liken::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the liken command line in-process; returns (exit_code, stdout, stderr)");
}
