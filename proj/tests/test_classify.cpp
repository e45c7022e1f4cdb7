#include <doctest.h>

#include <array>
#include <deque>
#include <numeric>

#include "lieconf/classify.hpp"
#include "lieconf/serialize.hpp"
#include "support.hpp"

using namespace lieconf;
using testing::e;
using testing::errc_of;
using testing::half;
using testing::vec;

namespace {

/// Number of Weyl orbits of pairs (x, alpha) with (x, alpha) = 0 and
/// x + alpha a root, by union-find under the simple reflections.
std::size_t case1_orbit_count(const RootSystem& rs) {
  std::vector<std::pair<Vector, Vector>> pairs;
  std::map<std::pair<Vector, Vector>, std::size_t> index;
  for (const auto& x : rs.roots())
    for (const auto& a : rs.roots())
      if (rs.inner(x, a).is_zero() && rs.is_root(x + a)) {
        index[{x, a}] = pairs.size();
        pairs.emplace_back(x, a);
      }
  std::vector<std::size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (RootId s : rs.simples()) {
      const Vector& m = rs.root(s);
      const auto j = index.at({rs.weyl_reflect(m, pairs[i].first),
                               rs.weyl_reflect(m, pairs[i].second)});
      parent[find(i)] = find(j);
    }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < pairs.size(); ++i) roots.insert(find(i));
  return roots.size();
}

/// Word in the simple reflections carrying (x, a) to (y, b), found by
/// breadth-first search on vector pairs.
std::optional<std::vector<int>> connecting_word(const RootSystem& rs, const Vector& x,
                                                const Vector& a, const Vector& y,
                                                const Vector& b) {
  using P = std::pair<Vector, Vector>;
  std::map<P, std::vector<int>> seen{{{x, a}, {}}};
  std::deque<P> queue{{x, a}};
  while (!queue.empty()) {
    const P cur = queue.front();
    queue.pop_front();
    const auto word = seen[cur];
    if (cur == P{y, b}) return word;
    for (int i = 0; i < rs.rank(); ++i) {
      const Vector& m = rs.root(rs.simples()[std::size_t(i)]);
      P next{rs.weyl_reflect(m, cur.first), rs.weyl_reflect(m, cur.second)};
      if (seen.count(next)) continue;
      auto w = word;
      w.insert(w.begin(), i);
      seen[next] = w;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

const ClassificationReport& report4() {
  static const ClassificationReport r = [] {
    ClassifyOptions o;
    o.max_rank = 4;
    o.threads = 1;
    return classify_all(o);
  }();
  return r;
}

} // namespace

TEST_CASE("Case1 pair transversal") {
  for (int n = 2; n <= 6; ++n) {
    const auto b = RootSystem::build(Series::B, n);
    CHECK(enumerate_case1(*b) == std::vector<Case1Pair>{{e(n, {{0, 1}}), e(n, {{1, 1}})}});
    const auto c = RootSystem::build(Series::C, n);
    CHECK(enumerate_case1(*c) ==
          std::vector<Case1Pair>{{e(n, {{0, 1}, {1, 1}}), e(n, {{0, 1}, {1, -1}})}});
  }
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 1}, {Series::A, 2}, {Series::A, 5}, {Series::D, 4}, {Series::D, 6},
           {Series::E6, 6}, {Series::E7, 7}, {Series::E8, 8}, {Series::G2, 2}})
    CHECK(enumerate_case1(*RootSystem::build(s, n)).empty());
  CHECK(errc_of([] { (void)enumerate_case1(*RootSystem::build(Series::A1xA1, 2)); }) ==
        Errc::Reducible);
}

TEST_CASE("Case1 transversal size matches a union-find orbit count") {
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::B, 3}, {Series::B, 4}, {Series::C, 3},
           {Series::C, 4}, {Series::D, 4}, {Series::G2, 2}, {Series::F4, 4},
           {Series::E6, 6}}) {
    const auto rs = RootSystem::build(s, n);
    CAPTURE(rs->name());
    CHECK(enumerate_case1(*rs).size() == case1_orbit_count(*rs));
  }
}

TEST_CASE("the two displayed F4 pairs lie in one Weyl orbit") {
  const auto f4 = RootSystem::build(Series::F4, 4);
  const auto pairs = enumerate_case1(*f4);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == Case1Pair{vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
  const Vector x = half({1, 1, -1, -1}), a = half({1, 1, 1, 1});
  CHECK(f4->inner(x, a).is_zero());
  CHECK(f4->is_root(x + a));
  const auto w = connecting_word(*f4, vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), x, a);
  REQUIRE(w);
  CHECK(f4->apply_word(*w, vec({1, 0, 0, 0})) == x);
  CHECK(f4->apply_word(*w, vec({0, 1, 0, 0})) == a);
}

TEST_CASE("Case2 lowest-root candidates") {
  for (int n = 2; n <= 6; ++n) {
    const auto rs = RootSystem::build(Series::A, n);
    const auto c = enumerate_case2(rs);
    REQUIRE(c);
    CHECK(c->delta == rs->root(rs->minimal_root()));
  }
  CHECK(errc_of([] { (void)enumerate_case2(RootSystem::build(Series::A1xA1, 2)); }) ==
        Errc::Reducible);
}

TEST_CASE("parabolic candidates") {
  const auto b3 = RootSystem::build(Series::B, 3);
  const auto c = enumerate_parabolic(b3);
  CHECK(c.size() == 3);
  for (const auto& x : c) {
    CHECK(x.tag == CaseTag::Parabolic);
    CHECK(x.delta == b3->root(b3->minimal_root()) - b3->root(*x.alpha));
  }
  const auto a1 = enumerate_parabolic(RootSystem::build(Series::A, 1));
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].tag == CaseTag::LowRank);
  CHECK(a1[0].delta == vec({-2, 2}));
  const auto aa = enumerate_parabolic(RootSystem::build(Series::A1xA1, 2));
  REQUIRE(aa.size() == 1);
  CHECK(aa[0].tag == CaseTag::LowRank);
}

TEST_CASE("root checks eliminate the displayed non-survivors") {
  const auto sc = StructureConstants::build(RootSystem::build(Series::B, 3));
  const auto& rs = sc->system_ptr();
  // Parabolic alpha = e2 - e3: delta = -(e1+e2) - (e2-e3) leaves a root
  // without a partner.
  for (const auto& c : enumerate_parabolic(rs)) {
    if (rs->root(*c.alpha) != vec({0, 1, -1})) continue;
    const auto v = evaluate(sc, c);
    CHECK_FALSE(v.survivor());
    CHECK(v.fast_path.eliminated);
    CHECK(v.stage_reached == Stage::RootCombinatorics);
    CHECK_FALSE(v.witness.empty());
    CHECK(v.pipelines_agree);
  }
}

TEST_CASE("rank <= 4 classification") {
  const auto& r = report4();
  for (const auto& v : r.verdicts) {
    CHECK(v.pipelines_agree);
    if (v.stage_reached == Stage::SolverFeasibility) {
      REQUIRE(v.solution);
      CHECK((v.solution->dimension == 0 || v.solution->certified_degenerate));
    }
    if (v.survivor()) {
      REQUIRE(v.solution);
      CHECK(v.solution->feasible());
      CHECK(v.solution->residual.is_zero());
    }
  }
  for (const auto& s : r.sweeps) CHECK(s.flagged.empty());

  const auto expected = load_expected(std::string(LIECONF_DATA_DIR) + "/expected_survivors.json");
  const auto cmp = compare_survivors(r, expected);
  CHECK(cmp.missing.empty());
  CHECK(cmp.mislabeled.empty());
  // Frozen: the extra survivors are B3 alpha = e3 and the two D4 images of it.
  std::set<std::pair<std::string, Vector>> extra;
  for (const auto& u : cmp.unexpected) extra.insert({u.system, *u.alpha});
  CHECK(extra == std::set<std::pair<std::string, Vector>>{
                     {"B3", vec({0, 0, 1})},
                     {"D4", vec({0, 0, 1, -1})},
                     {"D4", vec({0, 0, 1, 1})}});
}

TEST_CASE("case filter and survivor agreement with max rank 2") {
  ClassifyOptions o;
  o.max_rank = 2;
  const auto r = classify_all(o);
  const auto expected = load_expected(std::string(LIECONF_DATA_DIR) + "/expected_survivors.json");
  CHECK(compare_survivors(r, expected).ok());
  o.only_case = CaseTag::Case1;
  const auto c1 = classify_all(o);
  for (const auto& v : c1.verdicts) CHECK(v.candidate.tag == CaseTag::Case1);
  CHECK(compare_survivors(c1, expected, CaseTag::Case1).ok());
  CHECK(errc_of([] { (void)classify_all(1); }) == Errc::InvalidRank);
}

TEST_CASE("verdicts do not depend on the choice of positive roots") {
  std::mt19937_64 rng(2024);
  for (const auto& v : report4().verdicts) {
    if (!v.config) continue;
    const auto& rs = v.candidate.system;
    const auto sc = StructureConstants::build(rs);
    for (int t = 0; t < 5; ++t) {
      const auto w = testing::random_word(*rs, rng, 10);
      DeriveOptions opts;
      opts.positives = PositiveSystem::standard(*rs).translate(*rs, w);
      std::optional<RootId> alpha;
      if (v.candidate.alpha) alpha = rs->apply_word(w, *v.candidate.alpha);
      const auto moved = derive_isotropy(
          rs, Distortion::make(*rs, rs->apply_word(w, v.candidate.delta)), v.candidate.tag,
          alpha, opts);
      REQUIRE(moved.ok());
      CHECK(moved.config->codim_h() == v.config->codim_h());
      if (!v.solution) continue;
      const auto sol = solve(assemble(sc, *moved.config));
      CHECK(sol.dimension == v.solution->dimension);
      CHECK(sol.feasible() == v.solution->feasible());
    }
  }
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  ClassifyOptions o;
  o.max_rank = 3;
  o.threads = 1;
  const auto a = to_json(classify_all(o)).dump();
  o.threads = 4;
  const auto b = to_json(classify_all(o)).dump();
  CHECK(a == b);
  CHECK(to_json(classify_all(o)).dump() == b);
}

TEST_CASE("survivors grow monotonically with the rank bound") {
  std::set<std::string> prev;
  for (int r = 2; r <= 4; ++r) {
    ClassifyOptions o;
    o.max_rank = r;
    std::set<std::string> cur;
    for (const auto& s : classify_all(o).survivors)
      cur.insert(s.system + to_string(s.tag) + to_string(s.delta));
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = cur;
  }
}

TEST_CASE("expected labels") {
  const auto c3 = RootSystem::build(Series::C, 3);
  Candidate c{c3, CaseTag::Case1, -e(3, {{0, 1}, {1, 1}}), c3->id_of(e(3, {{0, 1}, {1, -1}}))};
  REQUIRE(expected_label(c));
  CHECK(expected_label(c)->label == SurvivorLabel::Sp_case);
  const auto b3 = RootSystem::build(Series::B, 3);
  Candidate p{b3, CaseTag::Parabolic, vec({-1, -1, -1}), b3->id_of(vec({0, 0, 1}))};
  CHECK_FALSE(expected_label(p));
  CHECK(parse_survivor_label(to_string(SurvivorLabel::G2_Eins5)) == SurvivorLabel::G2_Eins5);
}
