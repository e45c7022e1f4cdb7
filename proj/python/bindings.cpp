#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lieconf/cli.hpp"
#include "lieconf/serialize.hpp"

namespace py = pybind11;
using namespace lieconf;

namespace {

std::string classify_json(int max_rank, const std::string& only_case, unsigned threads,
                          const std::string& expect) {
  ClassifyOptions opts;
  opts.max_rank = max_rank;
  opts.threads = threads;
  if (only_case != "all") opts.only_case = parse_case(only_case);
  const auto expected = load_expected(expect);
  const auto report = [&] {
    py::gil_scoped_release release;
    return classify_all(opts);
  }();
  Json j = to_json(report);
  j["comparison"] = to_json(compare_survivors(report, expected, opts.only_case));
  return j.dump();
}

std::string dump_constants_json(const std::string& system) {
  const auto [s, r] = parse_system_label(system);
  Json j = Json::array();
  for (auto& line : dump_constants(*StructureConstants::build(RootSystem::build(s, r))))
    j.push_back(std::move(line));
  return j.dump();
}

py::tuple run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lie-conformal");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(int(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_lieconf, m) {
  static py::exception<Error> exc(m, "LieConfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("DEFAULT_EXPECT") = std::string(LIECONF_DATA_DIR) + "/expected_survivors.json";
  m.def("dump_roots", [](const std::string& system) {
    const auto [s, r] = parse_system_label(system);
    return dump_roots(*RootSystem::build(s, r)).dump();
  });
  m.def("dump_constants", &dump_constants_json);
  m.def("classify", &classify_json, py::arg("max_rank"), py::arg("case"), py::arg("threads"),
        py::arg("expect"));
  m.def("solve", [](const std::string& config) {
    Json j;
    try {
      j = Json::parse(config);
    } catch (const Json::exception& e) {
      throw Error(Errc::InvalidInput, e.what());
    }
    return solve_request(config_request_from_json(j)).dump();
  });
  m.def("check_examples",
        [](const std::string& construction, std::optional<int> n, std::size_t trials,
           std::uint64_t seed) { return check_examples(construction, n, trials, seed).dump(); });
  m.def("run", &run_cli, "Runs the command line with the given arguments; returns "
                         "(exit code, stdout, stderr).");
}
