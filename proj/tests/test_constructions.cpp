#include <doctest.h>

#include "lieconf/constructions.hpp"
#include "support.hpp"

using namespace lieconf;
using testing::errc_of;
using testing::vec;

TEST_CASE("symplectic embedding") {
  for (int n = 1; n <= 3; ++n) {
    const auto v = check_sp_embedding(n, 20, 3);
    CAPTURE(n);
    CHECK(v.ok());
    CHECK(v.worst_residual.is_zero());
    CHECK(v.checks > 0);
  }
  CHECK(errc_of([] { (void)check_sp_embedding(0, 1); }) == Errc::InvalidInput);
}

TEST_CASE("quadratic space of the symplectic construction") {
  const auto q = sp_quadratic_space(2);
  CHECK(q.dimension == 8);
  // q(x, y) = omega(x, y)
  const Vector x{1, 2, 3, 4}, y{5, 6, 7, 8};
  Vector z = x;
  z.insert(z.end(), y.begin(), y.end());
  const Matrix w = symplectic_form(2);
  CHECK(q.q(z) == dot(x, w * y));
  // (x, y) -> (2x + y, x + y) scales q by 2*1 - 1*1
  Matrix g(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    g(i, i) = 2;
    g(i, i + 4) = 1;
    g(i + 4, i) = 1;
    g(i + 4, i + 4) = 1;
  }
  CHECK(q.defect(g, 1).is_zero());
  CHECK_FALSE(q.defect(g, 2).is_zero());
}

TEST_CASE("SL embedding, stabilizer and normalizer") {
  // dim of the stabilizer of [(e1, en*)] in sl(n): (n-1)^2 + 1 - 1 for n >= 3
  const std::map<int, std::pair<std::size_t, std::size_t>> dims{
      {2, {2, 2}}, {3, {4, 5}}, {4, {9, 10}}, {5, {16, 17}}};
  for (const auto& [n, d] : dims) {
    const auto v = check_sl_embedding(n, 20, 5);
    CAPTURE(n);
    CHECK(v.ok());
    REQUIRE(v.stabilizer_dim);
    CHECK(*v.stabilizer_dim == d.first);
    CHECK(*v.normalizer_dim == d.second);
  }
  CHECK(errc_of([] { (void)check_sl_embedding(1, 1); }) == Errc::InvalidInput);
}

TEST_CASE("matrix shapes") {
  const MatrixShapeSpec q{4, false}, p{4, true};
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const Matrix g = q.sample(rng);
    CHECK(q.matches(g));
    CHECK(p.matches(g));
    CHECK(determinant(g) == Rational(1));
  }
  // the torus element diag(2, 1/4, 1, 2) is in the normalizer shape only
  Matrix t = Matrix::identity(4);
  t(0, 0) = 2;
  t(1, 1) = Rational(1, 4);
  t(3, 3) = 2;
  CHECK(p.matches(t));
  CHECK_FALSE(q.matches(t));
  CHECK(p.lie_basis().size() == q.lie_basis().size() + 1);
}

TEST_CASE("G2 relations have diagonal witnesses") {
  const auto sc = StructureConstants::build(RootSystem::build(Series::G2, 2));
  const auto rep = check_g2_relations(*sc);
  CHECK(rep.reproduced());
  CHECK(rep.relations.size() == 6);
  const auto& w = *rep.witness;
  for (std::size_t i = 0; i < rep.relations.size(); ++i) {
    const auto& r = rep.relations[i];
    // c_x c_y N(x, y) = k c_z
    CHECK(*w.scale_of(r.x) * *w.scale_of(r.y) * Rational(rep.computed[i]) ==
          r.k * *w.scale_of(r.z));
  }
  for (const auto& alt : rep.all_witnesses)
    for (std::size_t i = 0; i < rep.relations.size(); ++i) {
      const auto& r = rep.relations[i];
      CHECK(*alt.scale_of(r.x) * *alt.scale_of(r.y) * Rational(rep.computed[i]) ==
            r.k * *alt.scale_of(r.z));
    }
}

TEST_CASE("relation checks reject malformed input") {
  const auto sc = StructureConstants::build(RootSystem::build(Series::G2, 2));
  CHECK(errc_of([&] {
          (void)check_relations(*sc, "bad", {{vec({1, -1, 0}), vec({1, 1, -2}), 1, vec({0, 0, 0})}});
        }) == Errc::InvalidInput);
  CHECK(errc_of([&] {
          (void)check_relations(*sc, "bad", {{vec({1, 0, 0}), vec({0, 1, 0}), 1, vec({1, 1, 0})}});
        }) == Errc::NotARoot);
  // a relation with the wrong magnitude has no witness among the scales
  const auto bad = check_relations(*sc, "bad", {{vec({1, -1, 0}), vec({-1, 0, 1}), 3, vec({0, -1, 1})}});
  CHECK_FALSE(bad.reproduced());
}
