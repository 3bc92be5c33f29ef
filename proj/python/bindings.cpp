#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsl/chain_model.hpp"
#include "lsl/generator.hpp"
#include "lsl/io.hpp"
#include "lsl/render.hpp"
#include "lsl/reports.hpp"

namespace py = pybind11;

namespace {

lsl::Instance load(const std::string& text) { return lsl::instance_from_json(lsl::parse_json(text, "<python>"), "<python>"); }

py::dict result(const lsl::CheckResult& r) {
  py::dict out;
  out["ok"] = r.ok;
  out["report"] = r.report.dump();
  out["text"] = r.text;
  return out;
}

py::dict gen(int d, int r, const std::string& strategy, std::uint64_t seed, std::uint64_t budget,
             const std::string& mode, const std::string& from) {
  lsl::GenSpec spec;
  spec.d = d;
  spec.r = r;
  spec.seed = seed;
  spec.budget = budget;
  spec.strategy = lsl::parse_strategy(strategy);
  lsl::check_spec(spec);
  py::dict out;
  switch (spec.strategy) {
    case lsl::Strategy::FromSections: {
      auto g = lsl::gen_simple(spec);
      out["instance"] = lsl::to_json(g.instance).dump();
      out["certificate"] = lsl::to_json(g.certificate).dump();
      out["draws"] = g.draws;
      break;
    }
    case lsl::Strategy::ExactSearch: {
      auto res = lsl::gen_exact_search(spec);
      out["instance"] = res.instance ? py::object(py::str(lsl::to_json(*res.instance).dump())) : py::object(py::none());
      out["distributive_everywhere"] = res.distributive_everywhere;
      out["expansions"] = res.expansions;
      out["backtracks"] = res.backtracks;
      break;
    }
    case lsl::Strategy::Degrade: {
      lsl::Instance base;
      if (!from.empty()) {
        base = load(from);
      } else {
        lsl::GenSpec simple = spec;
        simple.strategy = lsl::Strategy::FromSections;
        base = lsl::gen_simple(simple).instance;
      }
      auto deg = lsl::degrade(base, lsl::parse_degrade_mode(mode), seed);
      out["instance"] = lsl::to_json(deg.instance).dump();
      out["note"] = deg.note;
      break;
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_lsl, m) {
  m.doc() = "Exact rational checks for limit linear series on a chain of three curves";

  py::register_exception<lsl::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<lsl::BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
  py::register_exception<lsl::DegradeUnavailable>(m, "DegradeUnavailable", PyExc_RuntimeError);

  m.def("gen", &gen, py::arg("d"), py::arg("r"), py::arg("strategy") = "from-sections", py::arg("seed") = 0,
        py::arg("budget") = 10000, py::arg("mode") = "break-linking", py::arg("from_instance") = "",
        "Generate an instance; JSON strings in the returned dict");
  m.def("validate", [](const std::string& t) { return result(lsl::validate_check(load(t))); });
  m.def("analyze", [](const std::string& t) { return result(lsl::analyze_check(load(t))); });
  m.def("certify", [](const std::string& t) { return result(lsl::certify_check(load(t))); });
  m.def("verify_certificate", [](const std::string& t, const std::string& c) {
    const auto inst = load(t);
    const auto cert = lsl::certificate_from_json(lsl::parse_json(c, "<python>"), inst.d(), "<python>");
    return result(lsl::certify_check(inst, &cert));
  });
  m.def("laws", [](const std::string& t) { return result(lsl::laws_check(load(t))); });
  m.def("chain_laws", [](int d) { return result(lsl::chain_laws_check(d)); });
  m.def("grid", [](const std::string& t) { return result(lsl::grid_check(load(t))); });
  m.def("chain_skeleton", [](int d, int r) { return lsl::skeleton_json(lsl::chain_skeleton(lsl::ChainCurve{d}), r).dump(); });
  m.def("h0_dims", [](int d) {
    std::vector<std::size_t> dims;
    const auto s = lsl::chain_skeleton(lsl::ChainCurve{d});
    for (const auto& md : s.grid) dims.push_back(s.dim(md));
    return dims;
  });
}
