#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uol/classes.hpp"
#include "uol/coloring.hpp"
#include "uol/core.hpp"
#include "uol/evil.hpp"
#include "uol/experiment.hpp"
#include "uol/priority.hpp"
#include "uol/progmodel.hpp"

namespace py = pybind11;
using namespace uol;

namespace {

// Indices cross the boundary as decimal strings; the Python side wraps them in int.
std::string encode_text(const std::string& term) { return encode(parse_term(term)).to_string(); }
std::string decode_text(const std::string& index) { return format_term(decode(ProgramIndex::parse(index))); }

std::optional<int> eval_index(const std::string& index, Point x, std::uint64_t steps) {
  auto r = eval_bounded(ProgramIndex::parse(index), x, StepBudget{steps});
  if (!r.value) return std::nullopt;
  return *r.value;
}

std::string closure_verdict(const std::string& cls, const std::string& word, std::size_t budget) {
  return to_string(closure_extendable(builtin_class(cls), parse_word(word), word.size(), budget).verdict);
}

std::string realizable_verdict(const std::string& cls, const std::string& sample) {
  return to_string(is_realizable(parse_sample(sample), builtin_class(cls)).verdict);
}

py::dict evil(const std::string& registry, std::size_t n, std::size_t horizon, std::uint64_t fuel) {
  auto r = load_registry(registry);
  auto p = evil_sequence(n, *r, horizon, fuel);
  py::dict d;
  d["word"] = p.word;
  d["undefined_at"] = p.undefined_at;
  return d;
}

py::dict construct(const std::string& registry, std::size_t timesteps, std::uint64_t multiplier) {
  auto r = load_registry(registry);
  auto t = priority_construct(*r, timesteps, FuelSchedule{multiplier});
  py::list entries;
  for (auto& e : t.entries()) entries.append(py::make_tuple(e.requirement, e.ones, e.added_at));
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < t.timesteps(); ++s) sizes.push_back(t.a_size(s));
  std::vector<std::optional<std::size_t>> off;
  for (std::size_t e = 0; e < t.requirements(); ++e) off.push_back(t.deactivated_at(e));
  py::dict d;
  d["entries"] = entries;
  d["a_size"] = sizes;
  d["deactivated_at"] = off;
  d["trace"] = t.format();
  return d;
}

std::vector<int> extend_coloring(const std::string& graph, const std::vector<int>& partial) {
  auto g = load_graph(graph);
  Coloring f(partial.begin(), partial.end());
  auto c = extension_operator(g, f);
  return {c.begin(), c.end()};
}

py::tuple run(const std::string& config) {
  auto r = run_command(ExperimentConfig::parse(config));
  return py::make_tuple(static_cast<int>(r.status), r.files, r.message);
}

}  // namespace

PYBIND11_MODULE(_uol, m) {
  py::register_exception<Error>(m, "UolError");
  m.def("encode", &encode_text, py::arg("term"));
  m.def("decode", &decode_text, py::arg("index"));
  m.def("eval_bounded", &eval_index, py::arg("index"), py::arg("x"), py::arg("steps"));
  m.def("closure_extendable", &closure_verdict, py::arg("cls"), py::arg("word"),
        py::arg("budget") = kDefaultBudget);
  m.def("is_realizable", &realizable_verdict, py::arg("cls"), py::arg("sample"));
  m.def("evil_sequence", &evil, py::arg("registry"), py::arg("n"), py::arg("horizon"),
        py::arg("fuel") = kDefaultFuel);
  m.def("priority_construct", &construct, py::arg("registry"), py::arg("timesteps"),
        py::arg("multiplier") = 1);
  m.def("extension_operator", &extend_coloring, py::arg("graph"), py::arg("partial"));
  m.def("run_command", &run, py::arg("config"));
  m.def("config_dump", [](const std::string& text) { return ExperimentConfig::parse(text).dump(); },
        py::arg("config"));
}
