#include "lieconf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lieconf/serialize.hpp"

namespace lieconf {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct ClassifyArgs {
  int max_rank = 8;
  std::string only_case = "all";
  std::string format = "table";
  std::string expect = std::string(LIECONF_DATA_DIR) + "/expected_survivors.json";
  unsigned threads = 0;
};

struct SolveArgs {
  std::string config;
};

struct ExampleArgs {
  std::string construction = "all";
  std::optional<int> n;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
};

struct SystemArgs {
  std::string system;
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  ClassifyOptions opts;
  opts.max_rank = a.max_rank;
  opts.threads = a.threads;
  if (a.only_case != "all") opts.only_case = parse_case(a.only_case);
  const auto expected = load_expected(a.expect);
  const auto report = classify_all(opts);
  const auto cmp = compare_survivors(report, expected, opts.only_case);
  if (a.format == "json") {
    Json j = to_json(report);
    j["comparison"] = to_json(cmp);
    out << j.dump(1) << "\n";
  } else {
    out << render_table(report);
    out << (cmp.ok() ? "match" : "MISMATCH") << " against " << a.expect << "\n";
    for (const auto& m : cmp.missing)
      out << "  missing " << m.system << " " << to_string(m.tag)
          << " delta=" << to_string(m.delta) << "\n";
    for (const auto& u : cmp.unexpected)
      out << "  unexpected " << u.system << " " << to_string(u.tag)
          << " delta=" << to_string(u.delta)
          << " alpha=" << (u.alpha ? to_string(*u.alpha) : std::string("-"))
          << "\n";
    for (const auto& m : cmp.mislabeled) out << "  mislabeled " << m << "\n";
  }
  return cmp.ok() ? kOk : kMismatch;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  out << solve_request(config_request_from_json(read_json_file(a.config))).dump(1) << "\n";
  return kOk;
}

int do_examples(const ExampleArgs& a, std::ostream& out) {
  const Json j = check_examples(a.construction, a.n, a.trials, a.seed);
  out << j.dump(1) << "\n";
  return j["ok"].get<bool>() ? kOk : kMismatch;
}

RootSystemPtr system_from(const SystemArgs& a) {
  const auto [s, r] = parse_system_label(a.system);
  return RootSystem::build(s, r);
}

} // namespace

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie-theoretic classification of conformal homogeneous "
               "spaces",
               "lie-conformal"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Run the classification");
  classify->add_option("--max-rank", ca.max_rank, "Largest rank enumerated");
  classify->add_option("--case", ca.only_case, "Restrict to one case")
      ->check(CLI::IsMember({"case1", "case2", "parabolic", "all"}));
  classify->add_option("--format", ca.format)
      ->check(CLI::IsMember({"table", "json"}));
  classify->add_option("--expect", ca.expect, "Expected-survivors JSON file");
  classify->add_option("--threads", ca.threads,
                       "Worker threads (default: LIE_CONFORMAL_THREADS or 1)");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one isotropy configuration");
  solve_cmd->add_option("config", sa.config, "Configuration JSON file")->required();

  ExampleArgs ea;
  auto* examples =
      app.add_subcommand("check-examples", "Check the explicit constructions");
  examples->add_option("--construction", ea.construction)
      ->check(CLI::IsMember({"sp", "sl", "g2", "so", "all"}));
  examples->add_option("--n", ea.n, "Size parameter (default: a small range)");
  examples->add_option("--trials", ea.trials, "Random group elements per check");
  examples->add_option("--seed", ea.seed, "Seed of the random checks");

  SystemArgs ra;
  auto* roots = app.add_subcommand("dump-roots", "Print a root system");
  roots->add_option("--system", ra.system, "e.g. B3, E8, A1xA1")->required();
  SystemArgs ka;
  auto* consts = app.add_subcommand("dump-constants",
                                    "Print the structure constants as JSON lines");
  consts->add_option("--system", ka.system, "e.g. B3, E8, A1xA1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify) return do_classify(ca, out);
    if (*solve_cmd) return do_solve(sa, out);
    if (*examples) return do_examples(ea, out);
    if (*roots) {
      out << dump_roots(*system_from(ra)).dump(1) << "\n";
      return kOk;
    }
    if (*consts) {
      auto sc = StructureConstants::build(system_from(ka));
      for (const auto& line : dump_constants(*sc)) out << line.dump() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

} // namespace lieconf
