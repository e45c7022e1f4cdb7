#include <doctest.h>

#include <sstream>

#include "lieconf/cli.hpp"
#include "lieconf/serialize.hpp"

using namespace lieconf;

namespace {

struct Ran {
  int code;
  std::string out;
  std::string err;
};

Ran cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lie-conformal");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(LIECONF_DATA_DIR) + "/" + rel; }

} // namespace

TEST_CASE("classify exit codes") {
  CHECK(cli({"classify", "--max-rank", "1"}).code == 2);
  CHECK(cli({"classify", "--max-rank", "2"}).code == 0);
  CHECK(cli({"classify", "--max-rank", "2", "--case", "nope"}).code == 2);
  CHECK(cli({"classify", "--max-rank", "2", "--expect", "/nonexistent.json"}).code == 2);
  // rank 3 brings in B3 alpha = e3, which is not among the expected rows
  CHECK(cli({"classify", "--max-rank", "3", "--case", "parabolic"}).code == 1);
  CHECK(cli({"classify", "--max-rank", "3", "--case", "case1"}).code == 0);
}

TEST_CASE("classify JSON report") {
  const auto r = cli({"classify", "--max-rank", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["max_rank"] == 2);
  REQUIRE(j["candidates"].is_array());
  for (const auto& c : j["candidates"])
    for (const auto* k : {"label", "rank", "case", "delta", "alpha", "verdict", "stage", "witness"})
      CHECK(c.contains(k));
  CHECK(j["survivors"].size() == 8);
  CHECK(j["comparison"]["match"] == true);
  // identical on a second run
  CHECK(cli({"classify", "--max-rank", "2", "--format", "json"}).out == r.out);
}

TEST_CASE("solve") {
  const auto r = cli({"solve", data("configs/b3_einstein.json")});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["dimension"] == 1);
  CHECK(j["feasible"] == true);
  CHECK(j["witness"].size() == 1);
  CHECK(j["unknowns"].size() == j["witness"][0].size());

  const auto e3 = Json::parse(cli({"solve", data("configs/b3_alpha_e3.json")}).out);
  CHECK(e3["dimension"] == 1);
  CHECK(e3["feasible"] == true);

  CHECK(cli({"solve", "/nonexistent.json"}).code == 2);
  CHECK(cli({"solve"}).code == 2);
}

TEST_CASE("config parsing") {
  auto req = config_request_from_json(
      Json::parse(R"({"system":"D4","case":"parabolic","delta":["-1",-1,"-1","1"],"alpha":[0,0,1,-1]})"));
  CHECK(req.series == Series::D);
  CHECK(req.rank == 4);
  CHECK(req.delta[1] == Rational(-1));
  CHECK_THROWS_AS(config_request_from_json(Json::parse(R"({"system":"D4"})")), Error);
  CHECK_THROWS_AS(config_request_from_json(
                      Json::parse(R"({"system":"D4","case":"Case2","delta":[1],"bogus":1})")),
                  Error);
  CHECK(parse_system_label("A1xA1") == std::pair{Series::A1xA1, 2});
  CHECK(parse_system_label("E7") == std::pair{Series::E7, 7});
  CHECK(parse_system_label("C12") == std::pair{Series::C, 12});
  CHECK_THROWS_AS(parse_system_label("Q3"), Error);
}

TEST_CASE("check-examples") {
  const auto sp = cli({"check-examples", "--construction", "sp", "--n", "2", "--trials", "10"});
  CHECK(sp.code == 0);
  CHECK(Json::parse(sp.out)["ok"] == true);
  CHECK(cli({"check-examples", "--construction", "sl", "--trials", "5"}).code == 0);
  CHECK(cli({"check-examples", "--construction", "g2"}).code == 0);
  const auto so = cli({"check-examples", "--construction", "so"});
  CHECK(so.code == 1);
  for (const auto& r : Json::parse(so.out)["results"]) {
    CHECK(r["displayed_dimension"] == 0);
    CHECK(r["computed_dimension"] == 1);
  }
  CHECK(cli({"check-examples", "--construction", "xx"}).code == 2);
  CHECK(cli({"check-examples", "--construction", "sp", "--n", "0"}).code == 2);
}

TEST_CASE("dumps") {
  const auto r = cli({"dump-roots", "--system", "G2"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["label"] == "G2");
  CHECK(j["positives"].size() == 6);
  CHECK(j["simples"][0][0].is_string());

  const auto c = cli({"dump-constants", "--system", "A2"});
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto l = Json::parse(line);
    CHECK(l.contains("alpha"));
    CHECK(l.contains("beta"));
    CHECK(l["n"].is_string());
    ++count;
  }
  CHECK(count == 12); // ordered pairs of A2 roots with a root sum
  CHECK(cli({"dump-roots", "--system", "D2"}).code == 2);
  CHECK(cli({"dump-roots"}).code == 2);
  CHECK(cli({}).code == 2);
}
