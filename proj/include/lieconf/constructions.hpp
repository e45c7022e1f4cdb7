#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lieconf/chevalley.hpp"
#include "lieconf/invform.hpp"

namespace lieconf {

/// A quadratic space given by the symmetric Gram matrix of its polar form,
/// so that q(z) = z^T gram z.
struct QuadraticSpace {
  std::size_t dimension = 0;
  Matrix gram;

  [[nodiscard]] Rational q(const Vector& z) const;
  [[nodiscard]] Rational polar(const Vector& z, const Vector& w) const;
  /// Largest |entry| of g^T gram g - factor * gram.
  [[nodiscard]] Rational defect(const Matrix& g, const Rational& factor = 1) const;
};

/// Symplectic form on Q^{2n}: omega(x, y) = sum x_i y_{n+i} - y_i x_{n+i}.
Matrix symplectic_form(int n);
/// Q^{2n} x Q^{2n} with q(x, y) = omega(x, y).
QuadraticSpace sp_quadratic_space(int n);
/// E x E^* (E = Q^n) with q(x, f) = f(x).
QuadraticSpace sl_quadratic_space(int n);

/// Block upper triangular shapes of the stabilizer of the point (e_1, e_n^*)
/// of the light cone of E x E^* and of its normalizer:
///   ( l   u^t  v  )
///   ( 0   D    C  )
///   ( 0   0    l' )
/// with det D = 1 and l l' = 1 (stabilizer) or l det(D) l' = 1 (normalizer).
struct MatrixShapeSpec {
  int n = 3;
  bool normalizer = false;

  /// Whether g has this shape (zero pattern and determinant condition).
  [[nodiscard]] bool matches(const Matrix& g) const;
  /// Basis of the Lie algebra of the shape (trace conditions in place of the
  /// determinant conditions).
  [[nodiscard]] std::vector<Matrix> lie_basis() const;
  /// A random group element of the shape.
  [[nodiscard]] Matrix sample(std::mt19937_64& rng) const;
};

struct ConstructionVerdict {
  std::string construction;
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  /// Largest residual over all exact identities; must be exactly zero.
  Rational worst_residual;
  std::vector<std::string> failures;
  /// check_sl_embedding: dimensions of the stabilizer of the base point and
  /// of its normalizer inside sl(n).
  std::optional<std::size_t> stabilizer_dim;
  std::optional<std::size_t> normalizer_dim;

  [[nodiscard]] bool ok() const {
    return failures.empty() && worst_residual.is_zero();
  }
};

/// Sp(2n) -> SO(4n): random products of symplectic generators preserve q
/// (and have determinant 1 on Q^{4n}), and (x, y) -> (ax + by, cx + dy)
/// scales q by ad - bc. Throws Error(InvalidInput) for n < 1.
ConstructionVerdict check_sp_embedding(int n, std::size_t trials,
                                       std::uint64_t seed = 1);

/// SL(n) -> SO(2n): (x, f) -> (g x, f g^{-1}) preserves q; the stabilizer
/// of the point [(e_1, e_n^*)] and its normalizer are computed from their
/// definitions in sl(n) and compared with the displayed shapes. For n >= 3
/// the stabilizer has codimension 1 in the normalizer (for n = 2 they
/// coincide). Throws Error(InvalidInput) for n < 2.
ConstructionVerdict check_sl_embedding(int n, std::size_t trials,
                                       std::uint64_t seed = 1);

/// [E_x, E_y] = k E_z.
struct AdjointRelation {
  Vector x;
  Vector y;
  Rational k;
  Vector z;
};

/// Assignment E'_r = c_r E_r of the roots occurring in a relation set.
struct DiagonalWitness {
  std::vector<Vector> roots;
  std::vector<Rational> scales;
  [[nodiscard]] std::optional<Rational> scale_of(const Vector& r) const;
};

struct RelationReport {
  std::string name;
  std::vector<AdjointRelation> relations;
  /// N(x, y) in the library's basis, per relation.
  std::vector<int> computed;
  /// First witness in the search order, if any.
  std::optional<DiagonalWitness> witness;
  /// All witnesses over the scale set.
  std::vector<DiagonalWitness> all_witnesses;
  [[nodiscard]] bool reproduced() const { return witness.has_value(); }
};

/// Scales searched for diagonal witnesses: +-1, +-2, +-1/2.
const std::vector<Rational>& witness_scales();

/// Searches E'_r = c_r E_r with every c_r in witness_scales() under which
/// all relations hold. Throws Error(NotARoot) if a relation mentions a
/// non-root and Error(InvalidInput) if x + y != z.
RelationReport check_relations(const StructureConstants& sc, std::string name,
                               std::vector<AdjointRelation> relations);

/// The six displayed G2 relations (in the G2 realization of the library).
std::vector<AdjointRelation> g2_displayed_relations();
/// Throws Error(NoWitness) when no diagonal witness exists.
RelationReport check_g2_relations(const StructureConstants& sc);

/// Relations [p_i, u_i] = k u_{i'} and [p_i, v_i] = k' v_{i''}, stored as
/// consecutive entries (u relation, then v relation) sharing p_i. Each p_i
/// is nilpotent in h, so invariance gives
///   k' <u_i, v_{i''}> + k <u_{i'}, v_i> = 0.
struct PairingCycle {
  std::string name;
  Series series = Series::B;
  int rank = 3;
  std::vector<AdjointRelation> relations;
};

struct CycleReport {
  std::string name;
  RelationReport relations;
  /// Dimension of the solutions of the resulting equations on the pairs
  /// when the displayed constants are used, and when the library's
  /// constants are used (the latter is invariant under rescaling the basis).
  std::size_t displayed_dimension = 0;
  std::size_t computed_dimension = 0;
};

/// The displayed so(7) (B3, alpha = e3) and so(8) (D4, alpha = e3 + e4 and
/// alpha = e3 - e4) relations.
std::vector<PairingCycle> so_displayed_cycles();
CycleReport check_cycle(const StructureConstants& sc, const PairingCycle& c);

struct G2Alignment {
  /// The displayed form equals global_scale * c_i c_j <u_i, u_j> on the
  /// quotient labels.
  Rational global_scale;
  std::vector<WeightLabel> labels;
  std::vector<Rational> label_scales;
  /// True when the label scales come from a diagonal witness of the
  /// displayed relations, false when they were fitted freely.
  bool relation_basis = false;
};

/// Values of the displayed G2 form: <-(e1-e2), -(2e3-e1-e2)> = 1,
/// <-(e3-e1), -(e1+e3-2e2)> = -1, <-(e3-e2), -(e3-e2)> = 2.
std::vector<std::pair<std::pair<Vector, Vector>, Rational>> g2_displayed_form();

/// Aligns the form with entries x (over fs.unknowns) to the displayed
/// values. Throws Error(Unalignable) when the zero pattern differs or no
/// scaling fits.
G2Alignment align_g2_form(const FormSystem& fs, const Vector& x);

/// The displayed form expressed over fs.unknowns through an alignment.
Vector displayed_g2_form(const FormSystem& fs, const G2Alignment& a);

} // namespace lieconf
