#include "lieconf/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lieconf {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad rational " + j.dump());
    }
  }
  throw Error(Errc::InvalidInput, "expected a rational, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array())
    throw Error(Errc::InvalidInput, "expected an array, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

namespace {

Json vectors(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json root(const RootSystem& rs, RootId id) { return to_json(rs.root(id)); }

Json optional_vector(const std::optional<Vector>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

} // namespace

Json dump_roots(const RootSystem& rs) {
  Json j;
  j["label"] = rs.name();
  j["rank"] = rs.rank();
  Json s = Json::array();
  for (RootId id : rs.simples()) s.push_back(root(rs, id));
  j["simples"] = s;
  Json p = Json::array();
  for (RootId id : rs.positives()) p.push_back(root(rs, id));
  j["positives"] = p;
  j["highest_root"] = rs.irreducible() ? root(rs, rs.highest_root()) : Json(nullptr);
  return j;
}

Json dump_constants(const StructureConstants& sc) {
  const RootSystem& rs = sc.system();
  Json out = Json::array();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const int n = sc.n(RootId(a), RootId(b));
      if (n != 0)
        out.push_back({{"alpha", root(rs, RootId(a))},
                       {"beta", root(rs, RootId(b))},
                       {"n", Rational(n).str()}});
    }
  return out;
}

std::pair<Series, int> parse_system_label(std::string_view label) {
  const std::string s(label);
  for (auto fixed : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2,
                     Series::A1xA1}) {
    if (s == to_string(fixed))
      return {fixed, fixed == Series::A1xA1 ? 2 : s.back() - '0'};
  }
  if (s.size() >= 2 && std::string("ABCD").find(s[0]) != std::string::npos) {
    int r = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || r > 1000)
        throw Error(Errc::InvalidInput, "bad system label '" + s + "'");
      r = r * 10 + (s[i] - '0');
    }
    return {parse_series(s.substr(0, 1)), r};
  }
  throw Error(Errc::InvalidInput, "bad system label '" + s + "'");
}

ConfigRequest config_request_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "config must be an object");
  for (const auto& key : {"system", "case", "delta"})
    if (!j.contains(key))
      throw Error(Errc::InvalidInput, std::string("config lacks '") + key + "'");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k != "system" && k != "case" && k != "delta" && k != "alpha" &&
        k != "extra_h")
      throw Error(Errc::InvalidInput, "unknown config key '" + k + "'");
  }
  ConfigRequest r;
  std::tie(r.series, r.rank) = parse_system_label(j["system"].get<std::string>());
  r.tag = parse_case(j["case"].get<std::string>());
  r.delta = vector_from_json(j["delta"]);
  if (j.contains("alpha") && !j["alpha"].is_null())
    r.alpha = vector_from_json(j["alpha"]);
  if (j.contains("extra_h"))
    for (const auto& v : j["extra_h"]) r.extra_h.push_back(vector_from_json(v));
  return r;
}

Json solve_request(const ConfigRequest& req) {
  auto rs = RootSystem::build(req.series, req.rank);
  auto sc = StructureConstants::build(rs);
  const auto delta = Distortion::make(*rs, req.delta);
  std::optional<RootId> alpha;
  if (req.alpha) alpha = rs->id_of(*req.alpha);
  DeriveOptions opts;
  for (const auto& v : req.extra_h) opts.extra_h.push_back(rs->id_of(v));
  const auto derived = derive_isotropy(rs, delta, req.tag, alpha, opts);
  if (!derived.ok()) {
    Json j;
    j["dimension"] = 0;
    j["feasible"] = false;
    j["witness"] = Json::array();
    j["unknowns"] = Json::array();
    j["inconsistent"] = derived.inconsistent->reason;
    j["inconsistent_witness"] = vectors(derived.inconsistent->witness);
    return j;
  }
  const auto fs = assemble(sc, *derived.config);
  Json j = to_json(fs, solve(fs));
  j["config"] = to_json(*derived.config);
  return j;
}

Json to_json(const IsotropyConfig& c) {
  const RootSystem& rs = *c.system;
  Json j;
  j["system"] = rs.name();
  j["case"] = to_string(c.tag);
  j["delta"] = to_json(c.delta.functional);
  j["alpha"] = c.alpha ? root(rs, *c.alpha) : Json(nullptr);
  j["cartan"] = c.cartan.full ? Json("full")
                              : Json({{"normal", to_json(c.cartan.normal)}});
  Json h = Json::array();
  for (RootId a : c.h_roots()) h.push_back(root(rs, a));
  j["h_roots"] = h;
  j["codim_h"] = c.codim_h();
  Json ab = Json::array();
  for (auto [x, y] : c.absorbed_pairs) ab.push_back({root(rs, x), root(rs, y)});
  j["absorbed_pairs"] = ab;
  return j;
}

Json to_json(const FormSystem& fs, const FormSolution& sol) {
  const RootSystem& rs = fs.sc->system();
  Json j;
  j["dimension"] = sol.dimension;
  j["feasible"] = sol.feasible();
  j["unique_class"] = sol.unique_class();
  j["certified_degenerate"] = sol.certified_degenerate;
  Json labels = Json::array();
  for (const auto& l : fs.labels) labels.push_back(label_name(rs, l));
  j["labels"] = labels;
  Json u = Json::array();
  for (auto [a, b] : fs.unknowns)
    u.push_back({label_name(rs, fs.labels[a]), label_name(rs, fs.labels[b])});
  j["unknowns"] = u;
  j["witness"] = sol.nondegenerate_witness
                     ? Json::array({to_json(*sol.nondegenerate_witness)})
                     : Json::array();
  j["witness_determinant"] = to_json(sol.witness_determinant);
  j["basis"] = vectors(sol.basis);
  j["residual"] = to_json(sol.residual);
  return j;
}

Json to_json(const CandidateVerdict& v) {
  const RootSystem& rs = *v.candidate.system;
  Json j;
  j["label"] = rs.name();
  j["rank"] = rs.rank();
  j["case"] = to_string(v.candidate.tag);
  j["delta"] = to_json(v.candidate.delta);
  j["alpha"] = v.candidate.alpha ? root(rs, *v.candidate.alpha) : Json(nullptr);
  j["verdict"] = v.survivor() ? "survivor" : "eliminated";
  j["stage"] = to_string(v.stage_reached);
  j["reason"] = v.reason;
  j["witness"] = vectors(v.witness);
  j["survivor_label"] =
      v.survivor_label ? Json(to_string(*v.survivor_label)) : Json(nullptr);
  j["solution_dimension"] =
      v.solution ? Json(v.solution->dimension) : Json(nullptr);
  j["pipelines_agree"] = v.pipelines_agree;
  j["notes"] = v.notes;
  return j;
}

Json to_json(const SurvivorEntry& s) {
  Json j;
  j["system"] = s.system;
  j["rank"] = s.rank;
  j["case"] = to_string(s.tag);
  j["delta"] = to_json(s.delta);
  j["alpha"] = optional_vector(s.alpha);
  j["label"] = s.label ? Json(to_string(*s.label)) : Json(nullptr);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["max_rank"] = r.max_rank;
  Json c = Json::array();
  for (const auto& v : r.verdicts) c.push_back(to_json(v));
  j["candidates"] = c;
  Json s = Json::array();
  for (const auto& v : r.survivors) s.push_back(to_json(v));
  j["survivors"] = s;
  Json w = Json::array();
  for (const auto& sw : r.sweeps)
    w.push_back({{"system", sw.system},
                 {"delta", to_json(sw.delta)},
                 {"subsets", sw.subsets},
                 {"consistent", sw.consistent},
                 {"feasible", sw.feasible},
                 {"flagged", sw.flagged}});
  j["case2_sweeps"] = w;
  return j;
}

Json to_json(const SurvivorComparison& c) {
  Json j;
  j["match"] = c.ok();
  Json m = Json::array();
  for (const auto& e : c.missing)
    m.push_back({{"system", e.system},
                 {"case", to_string(e.tag)},
                 {"delta", to_json(e.delta)},
                 {"alpha", optional_vector(e.alpha)}});
  j["missing"] = m;
  Json u = Json::array();
  for (const auto& s : c.unexpected) u.push_back(to_json(s));
  j["unexpected"] = u;
  j["mislabeled"] = c.mislabeled;
  return j;
}

Json to_json(const ConstructionVerdict& v) {
  Json j;
  j["construction"] = v.construction;
  j["n"] = v.n;
  j["ok"] = v.ok();
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  j["checks"] = v.checks;
  j["worst_residual"] = to_json(v.worst_residual);
  if (v.stabilizer_dim) j["stabilizer_dim"] = *v.stabilizer_dim;
  if (v.normalizer_dim) j["normalizer_dim"] = *v.normalizer_dim;
  j["failures"] = v.failures;
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["name"] = r.name;
  j["reproduced"] = r.reproduced();
  Json rel = Json::array();
  for (std::size_t i = 0; i < r.relations.size(); ++i) {
    const auto& x = r.relations[i];
    rel.push_back({{"x", to_json(x.x)},
                   {"y", to_json(x.y)},
                   {"z", to_json(x.z)},
                   {"displayed", to_json(x.k)},
                   {"computed", r.computed[i]}});
  }
  j["relations"] = rel;
  j["witness_count"] = r.all_witnesses.size();
  if (r.witness) {
    Json w = Json::array();
    for (std::size_t i = 0; i < r.witness->roots.size(); ++i)
      w.push_back({{"root", to_json(r.witness->roots[i])},
                   {"scale", to_json(r.witness->scales[i])}});
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const CycleReport& r) {
  Json j;
  j["name"] = r.name;
  j["relations"] = to_json(r.relations);
  j["displayed_dimension"] = r.displayed_dimension;
  j["computed_dimension"] = r.computed_dimension;
  return j;
}

Json to_json(const G2Alignment& a, const RootSystem& rs) {
  Json j;
  j["global_scale"] = to_json(a.global_scale);
  j["relation_basis"] = a.relation_basis;
  Json s = Json::array();
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    s.push_back({{"label", label_name(rs, a.labels[i])},
                 {"scale", to_json(a.label_scales[i])}});
  j["label_scales"] = s;
  return j;
}

namespace {

Json g2_example(bool& ok) {
  auto sc = StructureConstants::build(RootSystem::build(Series::G2, 2));
  Json j;
  j["construction"] = "g2";
  RelationReport rel;
  try {
    rel = check_g2_relations(*sc);
  } catch (const Error& e) {
    ok = false;
    j["ok"] = false;
    j["error"] = e.what();
    return j;
  }
  j["relations"] = to_json(rel);
  const auto cands = enumerate_parabolic(sc->system_ptr());
  std::optional<Candidate> cand;
  for (const auto& c : cands)
    if (expected_label(c) && expected_label(c)->label == SurvivorLabel::G2_Eins5)
      cand = c;
  bool form_ok = false;
  if (cand) {
    const auto v = evaluate(sc, *cand);
    if (v.survivor()) {
      const auto fs = assemble(sc, *v.config);
      try {
        const auto al = align_g2_form(fs, *v.solution->nondegenerate_witness);
        const auto inv = verify_invariance(fs, displayed_g2_form(fs, al));
        j["alignment"] = to_json(al, sc->system());
        j["displayed_form_invariant"] = inv.ok();
        form_ok = inv.ok();
      } catch (const Error& e) {
        j["alignment_error"] = e.what();
      }
    }
  }
  j["ok"] = rel.reproduced() && form_ok;
  ok = ok && j["ok"].get<bool>();
  return j;
}

} // namespace

Json check_examples(const std::string& construction, std::optional<int> n,
                    std::size_t trials, std::uint64_t seed) {
  const std::string& c = construction;
  if (c != "sp" && c != "sl" && c != "g2" && c != "so" && c != "all")
    throw Error(Errc::InvalidInput, "unknown construction '" + c + "'");
  bool ok = true;
  Json results = Json::array();
  auto range = [&](int lo, int hi) {
    std::vector<int> ns;
    if (n) {
      ns.push_back(*n);
    } else {
      for (int k = lo; k <= hi; ++k) ns.push_back(k);
    }
    return ns;
  };
  if (c == "sp" || c == "all")
    for (int k : range(1, 4)) {
      const auto v = check_sp_embedding(k, trials, seed);
      ok = ok && v.ok();
      results.push_back(to_json(v));
    }
  if (c == "sl" || c == "all")
    for (int k : range(2, 5)) {
      const auto v = check_sl_embedding(k, trials, seed);
      ok = ok && v.ok();
      results.push_back(to_json(v));
    }
  if (c == "g2" || c == "all") results.push_back(g2_example(ok));
  if (c == "so")
    for (const auto& cyc : so_displayed_cycles()) {
      auto sc = StructureConstants::build(RootSystem::build(cyc.series, cyc.rank));
      const auto r = check_cycle(*sc, cyc);
      Json j = to_json(r);
      j["construction"] = "so";
      j["ok"] = r.relations.reproduced();
      ok = ok && r.relations.reproduced();
      results.push_back(j);
    }
  Json j;
  j["ok"] = ok;
  j["results"] = results;
  return j;
}

std::vector<ExpectedSurvivor> expected_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("survivors") || !j["survivors"].is_array())
    throw Error(Errc::InvalidInput, "expected-survivors file lacks 'survivors'");
  std::vector<ExpectedSurvivor> out;
  for (const auto& e : j["survivors"]) {
    try {
      ExpectedSurvivor s;
      s.system = e.at("system").get<std::string>();
      s.rank = e.at("rank").get<int>();
      s.tag = parse_case(e.at("case").get<std::string>());
      s.delta = vector_from_json(e.at("delta"));
      if (e.contains("alpha") && !e["alpha"].is_null())
        s.alpha = vector_from_json(e["alpha"]);
      if (e.contains("label") && !e["label"].is_null())
        s.label = parse_survivor_label(e["label"].get<std::string>());
      out.push_back(std::move(s));
    } catch (const Json::exception& ex) {
      throw Error(Errc::InvalidInput, std::string("bad survivor row: ") + ex.what());
    }
  }
  return out;
}

std::vector<ExpectedSurvivor> load_expected(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + p.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(Errc::InvalidInput, p.string() + ": " + ex.what());
  }
  return expected_from_json(j);
}

std::string render_table(const ClassificationReport& r) {
  struct Row {
    std::string label;
    int rank;
    std::string tag, alpha, line;
  };
  std::vector<Row> rows;
  for (const auto& v : r.verdicts) {
    const RootSystem& rs = *v.candidate.system;
    Row row{rs.name(), rs.rank(), to_string(v.candidate.tag),
            v.candidate.alpha ? to_string(rs.root(*v.candidate.alpha)) : "-",
            ""};
    std::ostringstream os;
    os << row.label << '\t' << to_string(v.candidate.tag) << '\t'
       << "delta=" << to_string(v.candidate.delta) << '\t' << "alpha=" << row.alpha
       << '\t' << to_string(v.stage_reached) << '\t';
    if (v.survivor())
      os << (v.survivor_label ? to_string(*v.survivor_label) : "UNEXPECTED");
    else
      os << v.reason;
    row.line = os.str();
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.label, a.rank, a.tag, a.alpha) <
           std::tie(b.label, b.rank, b.tag, b.alpha);
  });
  std::string out;
  for (const auto& row : rows) out += row.line + "\n";
  out += "survivors: " + std::to_string(r.survivors.size()) + "\n";
  for (const auto& s : r.survivors) {
    out += "  " + s.system + "\t" + to_string(s.tag) + "\tdelta=" +
           to_string(s.delta) + "\talpha=" +
           (s.alpha ? to_string(*s.alpha) : std::string("-")) + "\t" +
           (s.label ? to_string(*s.label) : std::string("UNEXPECTED"));
    if (!s.note.empty()) out += "\t(" + s.note + ")";
    out += "\n";
  }
  return out;
}

} // namespace lieconf
