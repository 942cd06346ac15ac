// Python bindings. Terms and deltas cross the boundary as concrete syntax;
// structured results come back as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ilc/algebra.hpp"
#include "ilc/eval.hpp"
#include "ilc/harness.hpp"
#include "ilc/json.hpp"
#include "ilc/service.hpp"
#include "ilc/syntax.hpp"

namespace py = pybind11;

namespace {

std::string term_text(const ilc::Term& t) { return ilc::pretty_term(t); }
std::string delta_text(const ilc::Delta& d) { return ilc::pretty_delta(d); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto& error = py::register_exception<ilc::Error>(m, "Error");
  py::register_exception<ilc::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ilc::EndpointMismatch>(m, "EndpointMismatch", error.ptr());

  m.def("normalize_term", [](const std::string& s) {
    return term_text(ilc::parse_term(s));
  });
  m.def("normalize_delta", [](const std::string& s) {
    return delta_text(ilc::parse_delta(s));
  });
  m.def("term_json", [](const std::string& s) {
    return ilc::to_json(ilc::parse_term(s)).dump();
  });
  m.def("delta_json", [](const std::string& s) {
    return ilc::to_json(ilc::parse_delta(s)).dump();
  });
  m.def("src", [](const std::string& d) { return term_text(ilc::src(ilc::parse_delta(d))); });
  m.def("tgt", [](const std::string& d) { return term_text(ilc::tgt(ilc::parse_delta(d))); });

  m.def(
      "eval",
      [](const std::string& s, std::uint64_t fuel) {
        ilc::FreshNameScope names;
        ilc::Term t = ilc::parse_term(s);
        py::gil_scoped_release release;
        return ilc::to_json(ilc::eval(t, fuel)).dump();
      },
      py::arg("term"), py::arg("fuel") = ilc::kDefaultServiceFuel);
  m.def(
      "delta_eval",
      [](const std::string& s, std::uint64_t fuel) {
        ilc::FreshNameScope names;
        ilc::Delta d = ilc::parse_delta(s);
        py::gil_scoped_release release;
        return delta_text(ilc::delta_eval(d, fuel));
      },
      py::arg("delta"), py::arg("fuel") = ilc::kDefaultServiceFuel);

  m.def("apply", [](const std::string& e, const std::string& d) {
    return term_text(ilc::apply(ilc::parse_term(e), ilc::parse_delta(d)));
  });
  m.def("diff", [](const std::string& a, const std::string& b) {
    return delta_text(ilc::diff(ilc::parse_term(a), ilc::parse_term(b)));
  });
  m.def("check_valid", [](const std::string& d, const std::string& e) {
    return ilc::check_valid(ilc::parse_delta(d), ilc::parse_term(e));
  });
  m.def("compose", [](const std::string& a, const std::string& b) {
    return delta_text(ilc::compose(ilc::parse_delta(a), ilc::parse_delta(b)));
  });
  m.def("compatible", [](const std::string& a, const std::string& b) {
    return ilc::compatible(ilc::parse_delta(a), ilc::parse_delta(b));
  });
  m.def("residual", [](const std::string& a, const std::string& b) {
    return delta_text(ilc::residual(ilc::parse_delta(a), ilc::parse_delta(b)));
  });

  m.def(
      "fuzz",
      [](std::uint64_t trials, std::uint64_t seed, std::uint64_t fuel,
         std::uint64_t size, unsigned threads) {
        ilc::Config cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.fuel = fuel;
        cfg.size = size;
        cfg.threads = threads;
        py::gil_scoped_release release;
        return ilc::to_json(ilc::run_coherence_suite(cfg)).dump();
      },
      py::arg("trials") = 2000, py::arg("seed") = 1, py::arg("fuel") = 512,
      py::arg("size") = 40, py::arg("threads") = 0);

  m.def("request", [](const std::string& path, const std::string& body) {
    ilc::Response r = ilc::handle_request(path, body);
    return std::make_pair(r.status, r.body.dump());
  });
}
