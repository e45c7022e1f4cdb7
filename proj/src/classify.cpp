#include "lieconf/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace lieconf {

std::string to_string(Stage s) {
  switch (s) {
  case Stage::RootCombinatorics: return "RootCombinatorics";
  case Stage::IsotropyClosure: return "IsotropyClosure";
  case Stage::SolverFeasibility: return "SolverFeasibility";
  case Stage::Survivor: return "Survivor";
  }
  return "?";
}

std::string to_string(SurvivorLabel l) {
  switch (l) {
  case SurvivorLabel::Sp_case: return "Sp_case";
  case SurvivorLabel::SL_case: return "SL_case";
  case SurvivorLabel::Einstein_Bn: return "Einstein_Bn";
  case SurvivorLabel::Einstein_Dn: return "Einstein_Dn";
  case SurvivorLabel::Eins3_B2: return "Eins3_B2";
  case SurvivorLabel::G2_Eins5: return "G2_Eins5";
  case SurvivorLabel::CP1: return "CP1";
  case SurvivorLabel::CP1xCP1: return "CP1xCP1";
  }
  return "?";
}

SurvivorLabel parse_survivor_label(std::string_view text) {
  for (auto l : {SurvivorLabel::Sp_case, SurvivorLabel::SL_case,
                 SurvivorLabel::Einstein_Bn, SurvivorLabel::Einstein_Dn,
                 SurvivorLabel::Eins3_B2, SurvivorLabel::G2_Eins5,
                 SurvivorLabel::CP1, SurvivorLabel::CP1xCP1}) {
    if (to_string(l) == text) return l;
  }
  throw Error(Errc::InvalidInput,
              "unknown survivor label '" + std::string(text) + "'");
}

namespace {

void require_irreducible(const RootSystem& rs) {
  if (!rs.irreducible())
    throw Error(Errc::Reducible, rs.name() + " is not irreducible");
}

bool root_or_zero(const RootSystem& rs, const Vector& v) {
  return is_zero(v) || rs.is_root(v);
}

Vector e(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> c) {
  Vector v = zero_vector(n);
  for (auto [i, x] : c) v[i] = Rational(x);
  return v;
}

// Roots that the pairing law forces into h together with their negative
// in Case2 (positive beta whose negative has no partner); their coroots
// lie in a ∩ h.
std::vector<Vector> case2_forced(const RootSystem& rs, const Vector& delta) {
  std::vector<Vector> out;
  for (RootId b : rs.positives()) {
    if (!root_or_zero(rs, delta + rs.root(b))) out.push_back(rs.root(b));
  }
  return out;
}

} // namespace

std::vector<Case1Pair> enumerate_case1(const RootSystem& rs) {
  require_irreducible(rs);
  const std::size_t n = rs.size();
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<RootId, RootId>> reps;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[x * n + a]) continue;
      const auto X = RootId(x), A = RootId(a);
      // x = -delta: (delta, alpha) = 0 and delta - alpha = -(x + alpha).
      if (!rs.inner(X, A).is_zero() || rs.sum(X, A) < 0) continue;
      const auto orbit = rs.pair_orbit(X, A);
      auto best = orbit.front();
      for (const auto& p : orbit) {
        seen[std::size_t(p.first) * n + std::size_t(p.second)] = true;
        const Vector& f = rs.root(p.first);
        const Vector& bf = rs.root(best.first);
        if (canonical_less(f, bf) ||
            (f == bf && canonical_less(rs.root(p.second), rs.root(best.second))))
          best = p;
      }
      reps.push_back(best);
    }
  }
  std::sort(reps.begin(), reps.end(), [&](const auto& p, const auto& q) {
    if (p.first != q.first)
      return canonical_less(rs.root(p.first), rs.root(q.first));
    return canonical_less(rs.root(p.second), rs.root(q.second));
  });
  std::vector<Case1Pair> out;
  for (auto [x, a] : reps) out.push_back({rs.root(x), rs.root(a)});
  return out;
}

std::vector<Candidate> case1_candidates(const RootSystemPtr& rsp) {
  const RootSystem& rs = *rsp;
  require_irreducible(rs);
  std::vector<Candidate> out;
  for (std::size_t d = 0; d < rs.size(); ++d) {
    for (RootId a : rs.positives()) {
      if (!rs.inner(RootId(d), a).is_zero()) continue;
      if (rs.difference(RootId(d), a) < 0) continue;
      out.push_back({rsp, CaseTag::Case1, rs.root(RootId(d)), a});
    }
  }
  return out;
}

std::optional<Candidate> enumerate_case2(const RootSystemPtr& rsp) {
  const RootSystem& rs = *rsp;
  require_irreducible(rs);
  const Vector delta = rs.root(rs.minimal_root());
  auto span = case2_forced(rs, delta);
  span.push_back(delta);
  if (rank(Matrix::from_rows(span, rs.ambient_dim())) ==
      static_cast<std::size_t>(rs.rank()))
    return std::nullopt;
  return Candidate{rsp, CaseTag::Case2, delta, std::nullopt};
}

std::vector<Candidate> case2_candidates(const RootSystemPtr& rsp) {
  const RootSystem& rs = *rsp;
  require_irreducible(rs);
  std::vector<Candidate> out;
  for (std::size_t d = 0; d < rs.size(); ++d) {
    if (!rs.is_positive(RootId(d)))
      out.push_back({rsp, CaseTag::Case2, rs.root(RootId(d)), std::nullopt});
  }
  return out;
}

std::vector<Candidate> enumerate_parabolic(const RootSystemPtr& rsp) {
  const RootSystem& rs = *rsp;
  if (rs.series() == Series::A1xA1) {
    const Vector d = -(rs.root(rs.simples()[0]) + rs.root(rs.simples()[1]));
    return {{rsp, CaseTag::LowRank, d, std::nullopt}};
  }
  if (rs.series() == Series::A && rs.rank() == 1) {
    const Vector d = Rational(-2) * rs.root(rs.simples()[0]);
    return {{rsp, CaseTag::LowRank, d, std::nullopt}};
  }
  std::vector<Candidate> out;
  const Vector low = rs.root(rs.minimal_root());
  for (RootId s : rs.simples())
    out.push_back({rsp, CaseTag::Parabolic, low - rs.root(s), s});
  return out;
}

FastPath case1_root_checks(const Candidate& c) {
  const RootSystem& rs = *c.system;
  FastPath fp;
  const Vector& alpha = rs.root(*c.alpha);
  for (RootId b : rs.positives()) {
    if (b == *c.alpha || rs.inner(b, *c.alpha).is_zero()) continue;
    const Vector s = c.delta + rs.root(b);
    if (!root_or_zero(rs, s)) {
      fp.eliminated = true;
      fp.reason = "beta = " + to_string(rs.root(b)) +
                  " is positive and not orthogonal to alpha = " +
                  to_string(alpha) + ", so g_-beta must be paired, but " +
                  "delta + beta = " + to_string(s) + " is not a root";
      fp.witness = {rs.root(b), s};
      return fp;
    }
  }
  return fp;
}

FastPath case2_root_checks(const Candidate& c) {
  const RootSystem& rs = *c.system;
  FastPath fp;
  for (RootId a : rs.positives()) {
    const Vector d = c.delta - rs.root(a);
    if (rs.is_root(d)) {
      fp.eliminated = true;
      fp.reason = "delta is not the lowest root: delta - " +
                  to_string(rs.root(a)) + " = " + to_string(d) +
                  " is a root, which puts g_delta in h";
      fp.witness = {rs.root(a), d};
      return fp;
    }
  }
  auto forced = case2_forced(rs, c.delta);
  auto span = forced;
  span.push_back(c.delta);
  if (rank(Matrix::from_rows(span, rs.ambient_dim())) ==
      static_cast<std::size_t>(rs.rank())) {
    fp.eliminated = true;
    fp.reason = "H_delta and the coroots of the " +
                std::to_string(forced.size()) +
                " roots forced into h with their negatives span a";
    fp.witness = std::move(forced);
  }
  return fp;
}

FastPath parabolic_root_checks(const Candidate& c) {
  FastPath fp;
  if (c.tag != CaseTag::Parabolic) return fp;
  const RootSystem& rs = *c.system;
  const auto& simples = rs.simples();
  const auto k = static_cast<std::size_t>(
      std::find(simples.begin(), simples.end(), *c.alpha) - simples.begin());
  for (RootId b : rs.positives()) {
    if (rs.simple_coords(b)[k] <= 0) continue;
    const Vector s = c.delta + rs.root(b);
    if (!root_or_zero(rs, s)) {
      fp.eliminated = true;
      fp.reason = "g_-beta lies outside h for beta = " +
                  to_string(rs.root(b)) + ", but delta + beta = " +
                  to_string(s) + " is not a root";
      fp.witness = {rs.root(b), s};
      return fp;
    }
  }
  return fp;
}

std::optional<LabelMatch> expected_label(const Candidate& c) {
  const RootSystem& rs = *c.system;
  const std::size_t n = rs.ambient_dim();
  const int r = rs.rank();
  const Series s = rs.series();
  auto alpha_is = [&](const Vector& v) {
    return c.alpha && rs.root(*c.alpha) == v;
  };
  switch (c.tag) {
  case CaseTag::LowRank:
    if (s == Series::A1xA1) return LabelMatch{SurvivorLabel::CP1xCP1, ""};
    if (s == Series::A && r == 1) return LabelMatch{SurvivorLabel::CP1, ""};
    return std::nullopt;
  case CaseTag::Case1:
    if (s == Series::C && c.delta == e(n, {{0, -1}, {1, -1}}) &&
        alpha_is(e(n, {{0, 1}, {1, -1}})))
      return LabelMatch{SurvivorLabel::Sp_case, ""};
    if (s == Series::B && r == 2 && c.delta == e(n, {{0, -1}}) &&
        alpha_is(e(n, {{1, 1}})))
      return LabelMatch{SurvivorLabel::Sp_case, "B2 ≅ C2"};
    return std::nullopt;
  case CaseTag::Case2:
    if (c.delta != rs.root(rs.minimal_root())) return std::nullopt;
    if (s == Series::A && r >= 2) return LabelMatch{SurvivorLabel::SL_case, ""};
    if (s == Series::D && r == 3)
      return LabelMatch{SurvivorLabel::SL_case, "D3 ≅ A3"};
    return std::nullopt;
  case CaseTag::Parabolic: {
    const Vector e12 = e(n, {{0, 1}, {1, -1}});
    if (s == Series::B && r >= 3 && alpha_is(e12))
      return LabelMatch{SurvivorLabel::Einstein_Bn, ""};
    if (s == Series::B && r == 2 && alpha_is(e12))
      return LabelMatch{SurvivorLabel::Eins3_B2, ""};
    if (s == Series::C && r == 2 && alpha_is(e(n, {{1, 2}})))
      return LabelMatch{SurvivorLabel::Eins3_B2, "C2 ≅ B2"};
    if (s == Series::D && alpha_is(e12))
      return LabelMatch{SurvivorLabel::Einstein_Dn, ""};
    if (s == Series::A && r == 3 && alpha_is(e(n, {{1, 1}, {2, -1}})))
      return LabelMatch{SurvivorLabel::Einstein_Dn, "A3 ≅ D3"};
    if (s == Series::G2 && alpha_is(e(n, {{0, 1}, {1, -1}})))
      return LabelMatch{SurvivorLabel::G2_Eins5, ""};
    return std::nullopt;
  }
  }
  return std::nullopt;
}

namespace {

struct Generic {
  Stage stage = Stage::Survivor;
  std::string reason;
  std::vector<Vector> witness;
  std::optional<IsotropyConfig> config;
  std::optional<FormSolution> solution;
};

Generic run_generic(const StructureConstantsPtr& sc, const Candidate& c,
                    const DeriveOptions& opts = {}) {
  Generic g;
  const Distortion d = Distortion::make(*c.system, c.delta);
  DeriveResult dr = derive_isotropy(c.system, d, c.tag, c.alpha, opts);
  if (!dr.ok()) {
    g.stage = Stage::IsotropyClosure;
    g.reason = dr.inconsistent->reason;
    g.witness = dr.inconsistent->witness;
    return g;
  }
  g.config = std::move(dr.config);
  const FormSystem fs = assemble(sc, *g.config);
  FormSolution sol = solve(fs);
  if (sol.feasible()) {
    const auto rep = verify_invariance(fs, *sol.nondegenerate_witness);
    if (!rep.ok())
      throw std::logic_error("solver witness fails invariance: " +
                             rep.violation.value_or("?"));
    g.stage = Stage::Survivor;
    g.reason = "nondegenerate invariant form, solution space of dimension " +
               std::to_string(sol.dimension);
  } else {
    g.stage = Stage::SolverFeasibility;
    g.reason = sol.dimension == 0
                   ? "the invariance equations only admit the zero form"
                   : "the determinant of the generic solution (dimension " +
                         std::to_string(sol.dimension) +
                         ") is identically zero";
  }
  g.solution = std::move(sol);
  return g;
}

} // namespace

CandidateVerdict evaluate(const StructureConstantsPtr& sc, const Candidate& c) {
  if (&sc->system() != c.system.get())
    throw Error(Errc::SystemMismatch,
                "structure constants are not over " + c.system->name());
  CandidateVerdict v;
  v.candidate = c;
  switch (c.tag) {
  case CaseTag::Case1: v.fast_path = case1_root_checks(c); break;
  case CaseTag::Case2: v.fast_path = case2_root_checks(c); break;
  case CaseTag::Parabolic:
  case CaseTag::LowRank: v.fast_path = parabolic_root_checks(c); break;
  }
  Generic g = run_generic(sc, c);
  v.config = std::move(g.config);
  v.solution = std::move(g.solution);
  if (v.fast_path.eliminated && g.stage != Stage::Survivor) {
    v.stage_reached = Stage::RootCombinatorics;
    v.reason = v.fast_path.reason;
    v.witness = v.fast_path.witness;
    v.notes.push_back("confirmed at " + to_string(g.stage) + ": " + g.reason);
  } else {
    if (v.fast_path.eliminated) {
      v.pipelines_agree = false;
      v.notes.push_back("root checks eliminate this candidate (" +
                        v.fast_path.reason +
                        ") but closure and solver keep it");
    }
    v.stage_reached = g.stage;
    v.reason = std::move(g.reason);
    v.witness = std::move(g.witness);
  }
  if (v.survivor()) {
    if (auto m = expected_label(c)) {
      v.survivor_label = m->label;
      if (!m->note.empty()) v.notes.push_back(m->note);
    } else {
      v.notes.push_back("not among the expected classification rows");
    }
  }
  return v;
}

CandidateVerdict eliminate_case1(const StructureConstantsPtr& sc,
                                 const Candidate& c) {
  if (c.tag != CaseTag::Case1)
    throw Error(Errc::InvalidInput, "not a Case1 candidate");
  return evaluate(sc, c);
}

CandidateVerdict eliminate_case2(const StructureConstantsPtr& sc,
                                 const Candidate& c) {
  if (c.tag != CaseTag::Case2)
    throw Error(Errc::InvalidInput, "not a Case2 candidate");
  return evaluate(sc, c);
}

CandidateVerdict eliminate_parabolic(const StructureConstantsPtr& sc,
                                     const Candidate& c) {
  if (c.tag != CaseTag::Parabolic && c.tag != CaseTag::LowRank)
    throw Error(Errc::InvalidInput, "not a parabolic candidate");
  return evaluate(sc, c);
}

std::vector<std::pair<Series, int>> systems_up_to(int max_rank) {
  std::vector<std::pair<Series, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Series::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::C, r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back(Series::D, r);
  out.emplace_back(Series::E6, 6);
  out.emplace_back(Series::E7, 7);
  out.emplace_back(Series::E8, 8);
  out.emplace_back(Series::F4, 4);
  out.emplace_back(Series::G2, 2);
  out.emplace_back(Series::A1xA1, 2);
  return out;
}

namespace {

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LIE_CONFORMAL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool case_selected(const std::optional<CaseTag>& only, CaseTag t) {
  if (!only) return true;
  if (*only == CaseTag::Parabolic || *only == CaseTag::LowRank)
    return t == CaseTag::Parabolic || t == CaseTag::LowRank;
  return *only == t;
}

SubcandidateSweep sweep_case2(const StructureConstantsPtr& sc,
                              const Candidate& c, const IsotropyConfig& cfg) {
  const RootSystem& rs = *c.system;
  SubcandidateSweep sw;
  sw.system = rs.name();
  sw.delta = c.delta;
  std::vector<std::pair<RootId, RootId>> pairs;
  for (std::size_t l = 0; l < rs.size(); ++l) {
    if (cfg.in_h[l]) continue;
    const auto m = rs.find(c.delta - rs.root(RootId(l)));
    if (m && RootId(l) <= *m && !cfg.in_h[std::size_t(*m)])
      pairs.emplace_back(RootId(l), *m);
  }
  if (pairs.size() > 16)
    throw std::logic_error("too many pairs to sweep in " + rs.name());
  std::set<std::vector<bool>> seen;
  for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
    ++sw.subsets;
    DeriveOptions opts;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!(mask >> k & 1u)) continue;
      opts.extra_h.push_back(pairs[k].first);
      opts.extra_h.push_back(pairs[k].second);
    }
    Generic g = run_generic(sc, c, opts);
    if (!g.config) continue;
    if (!seen.insert(g.config->in_h).second) continue;
    ++sw.consistent;
    if (g.stage == Stage::Survivor) {
      ++sw.feasible;
      std::string d = "extra pairs in h:";
      for (RootId x : opts.extra_h) d += " " + to_string(rs.root(x));
      sw.flagged.push_back(d);
    }
  }
  return sw;
}

} // namespace

ClassificationReport classify_all(const ClassifyOptions& opts) {
  if (opts.max_rank < 2)
    throw Error(Errc::InvalidRank,
                "max rank must be at least 2, got " +
                    std::to_string(opts.max_rank));
  const unsigned threads = thread_count(opts.threads);
  const auto systems = systems_up_to(opts.max_rank);

  std::vector<StructureConstantsPtr> scs(systems.size());
  parallel_for(systems.size(), threads, [&](std::size_t i) {
    scs[i] = StructureConstants::build(
        RootSystem::build(systems[i].first, systems[i].second));
  });

  std::vector<std::pair<std::size_t, Candidate>> cands;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const RootSystemPtr& rs = scs[i]->system_ptr();
    auto add = [&](std::vector<Candidate> list) {
      for (auto& c : list)
        if (case_selected(opts.only_case, c.tag))
          cands.emplace_back(i, std::move(c));
    };
    if (rs->irreducible()) {
      add(case1_candidates(rs));
      add(case2_candidates(rs));
    }
    add(enumerate_parabolic(rs));
  }

  ClassificationReport rep;
  rep.max_rank = opts.max_rank;
  rep.verdicts.resize(cands.size());
  parallel_for(cands.size(), threads, [&](std::size_t k) {
    rep.verdicts[k] = evaluate(scs[cands[k].first], cands[k].second);
  });

  std::vector<std::size_t> to_sweep;
  for (std::size_t k = 0; k < rep.verdicts.size(); ++k) {
    const auto& v = rep.verdicts[k];
    if (v.survivor()) {
      const RootSystem& rs = *v.candidate.system;
      SurvivorEntry s;
      s.system = rs.name();
      s.rank = rs.rank();
      s.tag = v.candidate.tag;
      s.delta = v.candidate.delta;
      if (v.candidate.alpha) s.alpha = rs.root(*v.candidate.alpha);
      s.label = v.survivor_label;
      for (const auto& n : v.notes) {
        if (!s.note.empty()) s.note += "; ";
        s.note += n;
      }
      rep.survivors.push_back(std::move(s));
    }
    if (opts.sweep_case2 && v.candidate.tag == CaseTag::Case2 && v.config &&
        v.candidate.system->rank() <= opts.sweep_max_rank)
      to_sweep.push_back(k);
  }
  rep.sweeps.resize(to_sweep.size());
  parallel_for(to_sweep.size(), threads, [&](std::size_t i) {
    const std::size_t k = to_sweep[i];
    const auto& v = rep.verdicts[k];
    rep.sweeps[i] = sweep_case2(scs[cands[k].first], v.candidate, *v.config);
  });
  return rep;
}

ClassificationReport classify_all(int max_rank) {
  ClassifyOptions o;
  o.max_rank = max_rank;
  return classify_all(o);
}

SurvivorComparison compare_survivors(const ClassificationReport& report,
                                     const std::vector<ExpectedSurvivor>& expected,
                                     std::optional<CaseTag> only_case) {
  auto key = [](const std::string& sys, CaseTag t, const Vector& d,
                const std::optional<Vector>& a) {
    return sys + "|" + to_string(t) + "|" + to_string(d) + "|" +
           (a ? to_string(*a) : std::string("-"));
  };
  std::map<std::string, const ExpectedSurvivor*> want;
  for (const auto& e : expected) {
    if (e.rank > report.max_rank || !case_selected(only_case, e.tag)) continue;
    want[key(e.system, e.tag, e.delta, e.alpha)] = &e;
  }
  SurvivorComparison cmp;
  std::set<std::string> found;
  for (const auto& s : report.survivors) {
    const std::string k = key(s.system, s.tag, s.delta, s.alpha);
    auto it = want.find(k);
    if (it == want.end()) {
      cmp.unexpected.push_back(s);
      continue;
    }
    found.insert(k);
    if (it->second->label != s.label)
      cmp.mislabeled.push_back(
          k + ": expected " +
          (it->second->label ? to_string(*it->second->label) : "none") +
          ", got " + (s.label ? to_string(*s.label) : "none"));
  }
  for (const auto& [k, e] : want)
    if (!found.count(k)) cmp.missing.push_back(*e);
  return cmp;
}

} // namespace lieconf
