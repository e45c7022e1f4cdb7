#include <doctest.h>

#include "lieconf/classify.hpp"
#include "lieconf/isotropy.hpp"
#include "support.hpp"

using namespace lieconf;
using testing::e;
using testing::errc_of;
using testing::vec;

namespace {

/// Closure for a parabolic candidate (a in h) computed by plain fixpoint
/// iteration over root vectors.
std::optional<std::set<Vector>> parabolic_closure(const RootSystem& rs,
                                                 const Vector& delta) {
  std::set<Vector> h;
  for (RootId p : rs.positives()) h.insert(rs.root(p));
  for (const auto& l : rs.roots()) {
    const Vector rest = delta - l;
    if (!is_zero(rest) && !rs.is_root(rest)) h.insert(l);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::set<Vector> snapshot = h;
    for (const auto& l : snapshot) {
      for (const auto& g : snapshot) {
        const Vector s = g + l;
        if (rs.is_root(s) && h.insert(s).second) grew = true;
      }
      const Vector partner = delta - l;
      if (rs.is_root(partner) && h.insert(partner).second) grew = true;
    }
  }
  if (rs.is_root(delta) && h.count(delta)) return std::nullopt;
  if (h.size() == rs.size()) return std::nullopt;
  return h;
}

IsotropyConfig derive_ok(const RootSystemPtr& rs, const Vector& delta, CaseTag tag,
                         std::optional<Vector> alpha) {
  std::optional<RootId> a;
  if (alpha) a = rs->id_of(*alpha);
  auto r = derive_isotropy(rs, Distortion::make(*rs, delta), tag, a);
  REQUIRE(r.ok());
  return *r.config;
}

} // namespace

TEST_CASE("distortion validation") {
  const auto rs = RootSystem::build(Series::B, 3);
  CHECK(errc_of([&] { (void)Distortion::make(*rs, vec({0, 0, 0})); }) ==
        Errc::InvalidInput);
  CHECK(errc_of([&] { (void)Distortion::make(*rs, vec({1, 0})); }) ==
        Errc::DimensionMismatch);
  const auto d = Distortion::make(*rs, vec({-1, -1, 0}));
  REQUIRE(d.as_root);
  CHECK(rs->root(*d.as_root) == vec({-1, -1, 0}));
  const auto two = Distortion::make(*rs, vec({-2, 0, 0}));
  CHECK_FALSE(two.as_root);
  REQUIRE(two.as_sum);
  CHECK(rs->root(two.as_sum->first) + rs->root(two.as_sum->second) == vec({-2, 0, 0}));
}

TEST_CASE("parabolic closure agrees with a fixpoint oracle") {
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 3}, {Series::A, 4}, {Series::B, 3}, {Series::B, 4},
           {Series::C, 3}, {Series::D, 4}, {Series::D, 5}, {Series::G2, 2},
           {Series::F4, 4}}) {
    const auto rs = RootSystem::build(s, n);
    for (const auto& c : enumerate_parabolic(rs)) {
      CAPTURE(rs->name());
      CAPTURE(to_string(c.delta));
      const auto oracle = parabolic_closure(*rs, c.delta);
      const auto got = derive_isotropy(rs, Distortion::make(*rs, c.delta), c.tag,
                                       c.alpha);
      REQUIRE(got.ok() == oracle.has_value());
      if (!oracle) continue;
      std::set<Vector> h;
      for (RootId a : got.config->h_roots()) h.insert(rs->root(a));
      CHECK(h == *oracle);
      CHECK(got.config->cartan.full);
    }
  }
}

TEST_CASE("Einstein configuration of B3") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto cfg = derive_ok(rs, vec({-2, 0, 0}), CaseTag::Parabolic, vec({1, -1, 0}));
  CHECK(validate(cfg).ok());
  // g/h is spanned by the roots -e1 + (anything orthogonal to e1)
  std::set<Vector> outside;
  for (RootId a = 0; a < RootId(rs->size()); ++a)
    if (!cfg.h_contains(a)) outside.insert(rs->root(a));
  CHECK(outside == std::set<Vector>{vec({-1, 0, 0}), vec({-1, 1, 0}), vec({-1, -1, 0}),
                                    vec({-1, 0, 1}), vec({-1, 0, -1})});
  CHECK(cfg.codim_h() == 5);
  const auto labels = quotient_basis(cfg);
  CHECK(labels.size() == 5);
  CHECK(std::none_of(labels.begin(), labels.end(),
                     [](const WeightLabel& l) { return l.cartan; }));
}

TEST_CASE("Case1 symplectic configuration keeps alpha^perp") {
  for (int n = 2; n <= 5; ++n) {
    const auto rs = RootSystem::build(Series::C, n);
    const Vector alpha = e(n, {{0, 1}, {1, -1}});
    const auto cfg = derive_ok(rs, -e(n, {{0, 1}, {1, 1}}), CaseTag::Case1, alpha);
    CHECK_FALSE(cfg.cartan.full);
    CHECK(rs->inner(cfg.cartan.normal, alpha) != Rational(0));
    CHECK_FALSE(cfg.h_contains(rs->id_of(alpha)));
    CHECK_FALSE(cfg.h_contains(rs->id_of(-e(n, {{0, 1}, {1, 1}}))));
    const auto labels = quotient_basis(cfg);
    CHECK(std::count_if(labels.begin(), labels.end(),
                        [](const WeightLabel& l) { return l.cartan; }) == 1);
  }
}

TEST_CASE("Case2 lowest-root configuration of A_n") {
  for (int n = 2; n <= 6; ++n) {
    const auto rs = RootSystem::build(Series::A, n);
    const Vector delta = rs->root(rs->minimal_root());
    const auto cfg = derive_ok(rs, delta, CaseTag::Case2, std::nullopt);
    CHECK(validate(cfg).ok());
    for (RootId p : rs->positives()) CHECK(cfg.h_contains(p));
    CHECK_FALSE(cfg.cartan.full);
  }
}

TEST_CASE("inconsistent candidates carry a witness") {
  // E8 has no Case2 survivor: the closure fills the Cartan subalgebra.
  const auto e8 = RootSystem::build(Series::E8, 8);
  const auto r = derive_isotropy(e8, Distortion::make(*e8, e8->root(e8->minimal_root())),
                                 CaseTag::Case2, std::nullopt);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.inconsistent->reason.empty());
}

TEST_CASE("argument checks") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto d = Distortion::make(*rs, vec({-2, 0, 0}));
  CHECK(errc_of([&] {
          (void)derive_isotropy(rs, d, CaseTag::Parabolic, rs->id_of(vec({1, 0, 0})));
        }) == Errc::InvalidInput);
  CHECK(errc_of([&] {
          (void)derive_isotropy(rs, d, CaseTag::Parabolic, std::nullopt);
        }) == Errc::InvalidInput);
  CHECK(errc_of([&] { (void)derive_isotropy(rs, d, CaseTag::Case2, std::nullopt); }) ==
        Errc::InvalidInput);
}

TEST_CASE("validate rejects a hand-broken configuration") {
  const auto rs = RootSystem::build(Series::B, 3);
  auto cfg = derive_ok(rs, vec({-2, 0, 0}), CaseTag::Parabolic, vec({1, -1, 0}));
  // moving a positive root out of h breaks normalization by g+
  cfg.in_h[std::size_t(rs->id_of(vec({0, 1, 0})))] = false;
  cfg.validated = false;
  CHECK_FALSE(validate(cfg).ok());
  CHECK(errc_of([&] { (void)quotient_basis(cfg); }) == Errc::NotValidated);
}

TEST_CASE("pairing partners") {
  const auto rs = RootSystem::build(Series::B, 3);
  const auto d = Distortion::make(*rs, vec({-2, 0, 0}));
  const auto p = pairing_partner(*rs, d, rs->id_of(vec({-1, 1, 0})));
  REQUIRE(p);
  CHECK(rs->root(p->root) == vec({-1, -1, 0}));
  CHECK_FALSE(pairing_partner(*rs, d, rs->id_of(vec({1, 0, 0}))));
  const auto r = Distortion::make(*rs, vec({-1, 0, 0}));
  const auto z = pairing_partner(*rs, r, rs->id_of(vec({-1, 0, 0})));
  REQUIRE(z);
  CHECK(z->is_zero);
}
