#include "lieconf/isotropy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lieconf {

std::string to_string(CaseTag c) {
  switch (c) {
  case CaseTag::Case1: return "Case1";
  case CaseTag::Case2: return "Case2";
  case CaseTag::Parabolic: return "Parabolic";
  case CaseTag::LowRank: return "LowRank";
  }
  return "?";
}

CaseTag parse_case(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "case1") return CaseTag::Case1;
  if (t == "case2") return CaseTag::Case2;
  if (t == "parabolic") return CaseTag::Parabolic;
  if (t == "lowrank") return CaseTag::LowRank;
  throw Error(Errc::InvalidInput, "unknown case '" + std::string(text) + "'");
}

namespace {

std::vector<Vector> simple_vectors(const RootSystem& rs) {
  std::vector<Vector> out;
  for (RootId s : rs.simples()) out.push_back(rs.root(s));
  return out;
}

} // namespace

Distortion Distortion::make(const RootSystem& rs, const Vector& functional) {
  if (functional.size() != rs.ambient_dim())
    throw Error(Errc::DimensionMismatch,
                "distortion has " + std::to_string(functional.size()) +
                    " coordinates, expected " +
                    std::to_string(rs.ambient_dim()));
  if (is_zero(functional))
    throw Error(Errc::InvalidInput, "distortion must be nonzero");
  if (!solve_in_span(simple_vectors(rs), functional))
    throw Error(Errc::InvalidInput,
                to_string(functional) + " is outside the span of the roots");
  Distortion d;
  d.functional = functional;
  d.as_root = rs.find(functional);
  for (RootId a = 0; a < static_cast<RootId>(rs.size()) && !d.as_sum; ++a) {
    if (auto b = rs.find(functional - rs.root(a)); b && *b >= a)
      d.as_sum = std::make_pair(a, *b);
  }
  return d;
}

PositiveSystem PositiveSystem::standard(const RootSystem& rs) {
  PositiveSystem ps;
  ps.positive.resize(rs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    ps.positive[a] = rs.is_positive(static_cast<RootId>(a));
  ps.simples = rs.simples();
  return ps;
}

PositiveSystem PositiveSystem::translate(const RootSystem& rs,
                                         const std::vector<int>& word) const {
  PositiveSystem out;
  out.positive.assign(rs.size(), false);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    const RootId w = rs.apply_word(word, static_cast<RootId>(a));
    out.positive[static_cast<std::size_t>(w)] = positive[a];
  }
  for (RootId s : simples) out.simples.push_back(rs.apply_word(word, s));
  return out;
}

RootId PositiveSystem::lowest_root(const RootSystem& rs) const {
  if (!rs.irreducible())
    throw Error(Errc::Reducible, rs.name() + " has no lowest root");
  for (std::size_t l = 0; l < rs.size(); ++l) {
    if (!positive[l]) continue;
    bool top = true;
    for (std::size_t b = 0; b < rs.size() && top; ++b) {
      if (positive[b] &&
          rs.sum(static_cast<RootId>(l), static_cast<RootId>(b)) >= 0)
        top = false;
    }
    if (top) return rs.negate(static_cast<RootId>(l));
  }
  throw std::logic_error("no highest root");
}

std::vector<RootId> IsotropyConfig::h_roots() const {
  std::vector<RootId> out;
  for (std::size_t a = 0; a < in_h.size(); ++a)
    if (in_h[a]) out.push_back(static_cast<RootId>(a));
  return out;
}

std::vector<RootId> IsotropyConfig::p_roots() const {
  std::vector<RootId> out;
  for (std::size_t a = 0; a < in_p.size(); ++a)
    if (in_p[a]) out.push_back(static_cast<RootId>(a));
  return out;
}

std::size_t IsotropyConfig::codim_h() const {
  std::size_t n = cartan.codim();
  for (bool b : in_h) n += b ? 0 : 1;
  return n;
}

std::optional<PairingPartner> pairing_partner(const RootSystem& rs,
                                              const Distortion& delta,
                                              RootId alpha) {
  const Vector d = delta.functional - rs.root(alpha);
  if (is_zero(d)) return PairingPartner{true, RootSystem::kNone};
  if (auto id = rs.find(d)) return PairingPartner{false, *id};
  return std::nullopt;
}

namespace {

class Closure {
public:
  Closure(const RootSystem& rs, const Distortion& delta, CaseTag tag,
          std::optional<RootId> alpha, const PositiveSystem& ps)
      : rs_(rs), delta_(delta), tag_(tag), alpha_(alpha), ps_(ps),
        n_(rs.size()), in_h_(n_, false),
        partner_(n_, RootSystem::kNone) {
    for (std::size_t a = 0; a < n_; ++a) {
      if (auto p = pairing_partner(rs, delta, static_cast<RootId>(a)); p)
        partner_[a] = p->is_zero ? RootSystem::kZero : p->root;
    }
  }

  std::optional<Inconsistency> run(const std::vector<RootId>& extra) {
    switch (tag_) {
    case CaseTag::Case1:
      full_ = false;
      normal_ = rs_.root(*alpha_);
      break;
    case CaseTag::Case2:
      full_ = false;
      span_.push_back(delta_.functional);
      break;
    case CaseTag::Parabolic:
    case CaseTag::LowRank: full_ = true; break;
    }
    for (std::size_t a = 0; a < n_; ++a) {
      const RootId pa = partner_[a];
      const bool unpaired =
          pa == RootSystem::kNone || (pa == RootSystem::kZero && full_);
      if (unpaired) add(static_cast<RootId>(a), "unpaired");
      if (tag_ != CaseTag::Case1 && ps_.positive[a])
        add(static_cast<RootId>(a), "positive");
    }
    for (RootId e : extra) add(e, "extra");

    for (bool changed = true; changed;) {
      changed = false;
      if (auto bad = check()) return bad;
      for (std::size_t b = 0; b < n_; ++b) {
        if (!in_h_[b]) continue;
        const auto beta = static_cast<RootId>(b);
        const RootId mu = partner_[b];
        if (mu >= 0 && !in_h_[static_cast<std::size_t>(mu)]) {
          add(mu, "partner of " + to_string(rs_.root(beta)) +
                      " lies in h");
          absorbed_.emplace_back(beta, mu);
          changed = true;
        }
        for (std::size_t g = 0; g < n_; ++g) {
          if (!in_p(g)) continue;
          const RootId s = rs_.sum(static_cast<RootId>(g), beta);
          if (s >= 0 && !in_h_[static_cast<std::size_t>(s)]) {
            add(s, "[" + to_string(rs_.root(RootId(g))) + ", " +
                       to_string(rs_.root(beta)) + "]");
            changed = true;
          } else if (s == RootSystem::kZero) {
            if (auto bad = add_coroot(beta)) return bad;
          }
        }
      }
      for (std::size_t g = 0; g < n_; ++g) {
        if (in_p(g) && !in_h_[g] && nonzero_on_cartan(RootId(g))) {
          add(RootId(g), "[a ∩ h, g_" + to_string(rs_.root(RootId(g))) + "]");
          changed = true;
        }
      }
    }
    if (auto bad = check()) return bad;
    if (tag_ == CaseTag::Parabolic) {
      std::vector<Vector> outside;
      for (RootId s : ps_.simples)
        if (!in_h_[std::size_t(rs_.negate(s))]) outside.push_back(rs_.root(s));
      if (outside.size() > 1)
        return Inconsistency{"h is not a maximal parabolic subalgebra",
                             outside};
    }
    if (!full_ && tag_ == CaseTag::Case2) finish_case2_normal();
    return std::nullopt;
  }

  IsotropyConfig config(RootSystemPtr rsp, std::optional<RootId> alpha) && {
    IsotropyConfig c;
    c.tag = tag_;
    c.system = std::move(rsp);
    c.delta = delta_;
    c.alpha = alpha;
    c.positives = ps_;
    c.cartan.full = full_;
    c.cartan.normal = full_ ? Vector{} : normal_;
    c.in_h = in_h_;
    c.in_p.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) c.in_p[a] = in_p(a);
    c.absorbed_pairs = std::move(absorbed_);
    return c;
  }

private:
  bool in_p(std::size_t a) const { return in_h_[a] || ps_.positive[a]; }

  void add(RootId a, std::string why) {
    auto i = static_cast<std::size_t>(a);
    if (in_h_[i]) return;
    in_h_[i] = true;
    why_.emplace_back(a, std::move(why));
  }

  std::string reason_for(RootId a) const {
    for (const auto& [r, w] : why_)
      if (r == a) return w;
    return "";
  }

  bool nonzero_on_cartan(RootId g) const {
    const Vector& v = rs_.root(g);
    if (full_) return true;
    if (tag_ == CaseTag::Case1) {
      // g vanishes on alpha^perp exactly when it is proportional to alpha.
      return g != *alpha_ && g != rs_.negate(*alpha_);
    }
    return std::any_of(span_.begin(), span_.end(),
                       [&](const Vector& s) { return !dot(v, s).is_zero(); });
  }

  std::optional<Inconsistency> add_coroot(RootId beta) {
    if (full_) return std::nullopt;
    const Vector& b = rs_.root(beta);
    if (tag_ == CaseTag::Case1) {
      if (!dot(b, normal_).is_zero())
        return Inconsistency{"coroot of " + to_string(b) +
                                 " must lie in h but is not orthogonal to "
                                 "alpha",
                             {b, rs_.root(*alpha_)}};
      return std::nullopt;
    }
    std::vector<Vector> trial = span_;
    trial.push_back(b);
    if (rank(Matrix::from_rows(trial, rs_.ambient_dim())) > span_rank()) {
      span_ = std::move(trial);
    }
    return std::nullopt;
  }

  std::size_t span_rank() const {
    return rank(Matrix::from_rows(span_, rs_.ambient_dim()));
  }

  std::optional<Inconsistency> check() const {
    if (tag_ == CaseTag::Case2 &&
        span_rank() == static_cast<std::size_t>(rs_.rank())) {
      return Inconsistency{"a is contained in h (H_delta and the coroots of "
                           "roots with both signs in h span a)",
                           span_};
    }
    if (!full_ && delta_.as_root && in_p(std::size_t(*delta_.as_root))) {
      const RootId d = *delta_.as_root;
      return Inconsistency{"g_delta lies in p (" +
                               (in_h_[std::size_t(d)] ? reason_for(d)
                                                      : "positive root") +
                               ")",
                           {rs_.root(d)}};
    }
    if (tag_ == CaseTag::Case1 && in_h_[std::size_t(*alpha_)]) {
      return Inconsistency{"g_alpha is forced into h by " +
                               reason_for(*alpha_),
                           {rs_.root(*alpha_)}};
    }
    if (tag_ == CaseTag::Parabolic) {
      const RootId na = rs_.negate(*alpha_);
      if (in_h_[std::size_t(na)])
        return Inconsistency{"g_-alpha is forced into h by " + reason_for(na),
                             {rs_.root(na)}};
    }
    if (full_ && std::all_of(in_h_.begin(), in_h_.end(),
                             [](bool b) { return b; })) {
      return Inconsistency{"h = g", {}};
    }
    return std::nullopt;
  }

  void finish_case2_normal() {
    // Normal vector: the element of the root span orthogonal to span_.
    const auto simples = simple_vectors(rs_);
    Matrix m(span_.size(), simples.size());
    for (std::size_t i = 0; i < span_.size(); ++i)
      for (std::size_t j = 0; j < simples.size(); ++j)
        m(i, j) = dot(span_[i], simples[j]);
    const auto ns = nullspace(m);
    if (ns.size() != 1)
      throw std::logic_error("Case2 Cartan part is not a hyperplane");
    Vector n = zero_vector(rs_.ambient_dim());
    for (std::size_t j = 0; j < simples.size(); ++j)
      n = n + ns[0][j] * simples[j];
    normal_ = n;
  }

  const RootSystem& rs_;
  const Distortion& delta_;
  CaseTag tag_;
  std::optional<RootId> alpha_;
  const PositiveSystem& ps_;
  std::size_t n_;
  std::vector<bool> in_h_;
  std::vector<RootId> partner_;
  bool full_ = true;
  Vector normal_;
  std::vector<Vector> span_;
  std::vector<std::pair<RootId, std::string>> why_;
  std::vector<std::pair<RootId, RootId>> absorbed_;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::InvalidInput, what);
}

} // namespace

DeriveResult derive_isotropy(RootSystemPtr rsp, const Distortion& delta,
                             CaseTag tag, std::optional<RootId> alpha,
                             const DeriveOptions& opts) {
  const RootSystem& rs = *rsp;
  const PositiveSystem ps =
      opts.positives ? *opts.positives : PositiveSystem::standard(rs);
  require(delta.functional.size() == rs.ambient_dim(),
          "distortion dimension");
  switch (tag) {
  case CaseTag::Case1:
    require(delta.as_root.has_value(), "Case1 needs delta to be a root");
    require(alpha.has_value(), "Case1 needs alpha");
    require(ps.is_positive(*alpha), "Case1 alpha must be positive");
    require(rs.inner(delta.functional, rs.root(*alpha)).is_zero(),
            "Case1 alpha must be orthogonal to delta");
    require(rs.is_root(delta.functional - rs.root(*alpha)),
            "Case1 needs delta - alpha to be a root");
    break;
  case CaseTag::Case2:
    require(delta.as_root.has_value(), "Case2 needs delta to be a root");
    require(!ps.is_positive(*delta.as_root), "Case2 delta must be negative");
    alpha.reset();
    break;
  case CaseTag::Parabolic:
    require(alpha.has_value(), "Parabolic needs alpha");
    require(std::find(ps.simples.begin(), ps.simples.end(), *alpha) !=
                ps.simples.end(),
            "Parabolic alpha must be simple");
    break;
  case CaseTag::LowRank: alpha.reset(); break;
  }

  Closure cl(rs, delta, tag, alpha, ps);
  DeriveResult out;
  if (auto bad = cl.run(opts.extra_h)) {
    out.inconsistent = std::move(bad);
    return out;
  }
  IsotropyConfig cfg = std::move(cl).config(rsp, alpha);
  const auto report = validate(cfg);
  if (!report.ok())
    throw std::logic_error("derived configuration fails validation: " +
                           report.failures());
  cfg.validated = true;
  out.config = std::move(cfg);
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.ok; });
}

std::string ValidationReport::failures() const {
  std::string s;
  for (const auto& c : checks) {
    if (c.ok) continue;
    if (!s.empty()) s += "; ";
    s += c.name;
    if (!c.witness.empty()) s += " (" + c.witness + ")";
  }
  return s;
}

ValidationReport validate(const IsotropyConfig& c) {
  ValidationReport rep;
  const RootSystem& rs = *c.system;
  const std::size_t n = rs.size();
  auto add = [&](std::string name) -> ValidationCheck& {
    rep.checks.push_back({std::move(name), true, {}});
    return rep.checks.back();
  };
  auto fail = [](ValidationCheck& ch, std::string w) {
    if (ch.ok) {
      ch.ok = false;
      ch.witness = std::move(w);
    }
  };
  auto pair_str = [&](RootId a, RootId b) {
    return to_string(rs.root(a)) + ", " + to_string(rs.root(b));
  };
  auto bracket_into_h = [&](ValidationCheck& ch, RootId x, RootId y) {
    const RootId s = rs.sum(x, y);
    if (s >= 0 && !c.h_contains(s)) fail(ch, pair_str(x, y));
    if (s == RootSystem::kZero && !c.cartan.contains(rs.coroot(y)))
      fail(ch, "coroot of " + to_string(rs.root(y)));
  };

  auto& nz = add("distortion nonzero");
  if (is_zero(c.delta.functional)) fail(nz, "delta = 0");

  auto& norm = add("a + g+ normalizes h");
  auto& sub = add("h is a subalgebra");
  auto& ideal = add("h is an ideal of p");
  for (std::size_t b = 0; b < n; ++b) {
    if (!c.in_h[b]) continue;
    for (std::size_t g = 0; g < n; ++g) {
      if (c.positives.positive[g]) bracket_into_h(norm, RootId(g), RootId(b));
      if (c.in_h[g]) bracket_into_h(sub, RootId(g), RootId(b));
      if (c.in_p[g]) bracket_into_h(ideal, RootId(g), RootId(b));
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (!c.in_p[g] || c.in_h[g]) continue;
    const Vector& v = rs.root(RootId(g));
    const bool acts = c.cartan.full ||
                      rank(Matrix::from_rows({v, c.cartan.normal},
                                             rs.ambient_dim())) == 2;
    if (acts) fail(ideal, "[a ∩ h, g_" + to_string(v) + "] not in h");
  }
  auto& pcont = add("p contains a + g+ and h");
  for (std::size_t a = 0; a < n; ++a) {
    if ((c.positives.positive[a] || c.in_h[a]) && !c.in_p[a])
      fail(pcont, to_string(rs.root(RootId(a))));
  }

  auto& proper = add("h is proper and p != g");
  {
    const bool h_all = std::all_of(c.in_h.begin(), c.in_h.end(),
                                   [](bool b) { return b; });
    const bool p_all = std::all_of(c.in_p.begin(), c.in_p.end(),
                                   [](bool b) { return b; });
    if (h_all && c.cartan.full) fail(proper, "h = g");
    if (p_all) fail(proper, "p = g");
  }

  auto& pairing = add("every space outside h has a partner outside h");
  for (std::size_t a = 0; a < n; ++a) {
    if (c.in_h[a]) continue;
    auto p = pairing_partner(rs, c.delta, RootId(a));
    if (!p) {
      fail(pairing, to_string(rs.root(RootId(a))) + " has no partner");
    } else if (p->is_zero) {
      if (c.cartan.full)
        fail(pairing, "delta outside h but a ⊆ h");
    } else if (c.in_h[std::size_t(p->root)]) {
      fail(pairing, pair_str(RootId(a), p->root));
    }
  }
  if (!c.cartan.full) {
    if (!c.delta.as_root)
      fail(pairing, "a ∩ h is a hyperplane but delta is not a root");
    else if (c.in_p[std::size_t(*c.delta.as_root)])
      fail(pairing, "g_delta lies in p");
  }

  auto& shape = add("case shape");
  auto positives_in_h = [&] {
    for (std::size_t a = 0; a < n; ++a)
      if (c.positives.positive[a] && !c.in_h[a])
        fail(shape, "positive root " + to_string(rs.root(RootId(a))) +
                        " outside h");
  };
  switch (c.tag) {
  case CaseTag::Case1:
    if (c.cartan.full) fail(shape, "a ∩ h must be a hyperplane");
    if (!c.delta.as_root) fail(shape, "delta must be a root");
    if (!c.alpha) {
      fail(shape, "alpha missing");
      break;
    }
    if (c.h_contains(*c.alpha)) fail(shape, "alpha lies in h");
    if (!rs.inner(c.delta.functional, rs.root(*c.alpha)).is_zero())
      fail(shape, "alpha not orthogonal to delta");
    if (!c.cartan.full &&
        rank(Matrix::from_rows({c.cartan.normal, rs.root(*c.alpha)},
                               rs.ambient_dim())) != 1)
      fail(shape, "a ∩ h is not alpha^perp");
    break;
  case CaseTag::Case2:
    if (c.cartan.full) fail(shape, "a ∩ h must be a hyperplane");
    positives_in_h();
    if (!rs.irreducible() || !c.delta.as_root ||
        *c.delta.as_root != c.positives.lowest_root(rs))
      fail(shape, "delta is not the lowest root");
    break;
  case CaseTag::Parabolic: {
    if (!c.cartan.full) fail(shape, "a must lie in h");
    positives_in_h();
    int outside = 0;
    for (RootId s : c.positives.simples)
      if (!c.h_contains(rs.negate(s))) ++outside;
    if (outside != 1)
      fail(shape, std::to_string(outside) +
                      " simple roots have their negative outside h");
    break;
  }
  case CaseTag::LowRank:
    if (!c.cartan.full) fail(shape, "a must lie in h");
    positives_in_h();
    break;
  }
  return rep;
}

Vector label_weight(const RootSystem& rs, const WeightLabel& l) {
  return l.cartan ? zero_vector(rs.ambient_dim()) : rs.root(l.root);
}

std::string label_name(const RootSystem& rs, const WeightLabel& l) {
  return l.cartan ? std::string("H") : to_string(rs.root(l.root));
}

std::vector<WeightLabel> quotient_basis(const IsotropyConfig& c) {
  if (!c.validated)
    throw Error(Errc::NotValidated, "quotient_basis needs a validated config");
  const RootSystem& rs = *c.system;
  std::vector<RootId> out;
  for (std::size_t a = 0; a < rs.size(); ++a)
    if (!c.in_h[a]) out.push_back(RootId(a));
  std::sort(out.begin(), out.end(), [&](RootId a, RootId b) {
    if (rs.height(a) != rs.height(b)) return rs.height(a) < rs.height(b);
    return canonical_less(rs.root(a), rs.root(b));
  });
  std::vector<WeightLabel> labels;
  for (RootId a : out) labels.push_back({false, a});
  if (!c.cartan.full) labels.push_back({true, RootSystem::kNone});
  return labels;
}

} // namespace lieconf
