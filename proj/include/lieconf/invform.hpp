#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieconf/chevalley.hpp"
#include "lieconf/isotropy.hpp"
#include "lieconf/polynomial.hpp"

namespace lieconf {

/// A generator of p used for the constraints, with its distortion value.
struct Generator {
  AlgebraElement element;
  Rational delta_value;
  std::string name;
};

/// Linear constraints on a symmetric bilinear form on g/h. Unknowns are the
/// entries <u_i, u_j> (i <= j, indices into `labels`) whose weights add up
/// to delta; every other entry vanishes by the Cartan equations.
struct FormSystem {
  StructureConstantsPtr sc;
  IsotropyConfig config;
  std::vector<WeightLabel> labels;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<Generator> generators;
  Matrix constraints;

  /// Column of the unordered pair {i, j}, if it is an unknown.
  [[nodiscard]] std::optional<std::size_t> column(std::size_t i,
                                                  std::size_t j) const;
  /// Symmetric Gram matrix on g/h of the form with entries x.
  [[nodiscard]] Matrix gram(const Vector& x) const;
};

/// Image of an element of p acting on the label basis of g/h: column j is
/// [p, u_j] mod h in label coordinates.
Matrix quotient_action(const StructureConstants& sc,
                       const IsotropyConfig& config,
                       const std::vector<WeightLabel>& labels,
                       const AlgebraElement& p);

/// Algebra element representing a label (E_lambda, or the Cartan element
/// whose ambient vector is the normal of a ∩ h).
AlgebraElement label_element(const IsotropyConfig& config,
                             const WeightLabel& l);

/// Generators of p: the simple coroots (spanning a) and E_gamma for every
/// root gamma of p.
std::vector<Generator> p_generators(const StructureConstants& sc,
                                    const IsotropyConfig& config);

/// Throws Error(NotValidated) for configurations that did not pass
/// validation and Error(SystemMismatch) when sc is over another system.
FormSystem assemble(StructureConstantsPtr sc, const IsotropyConfig& config);

struct FormSolution {
  std::size_t dimension = 0;
  std::vector<Vector> basis;
  /// Solution whose Gram matrix on g/h is invertible, if any.
  std::optional<Vector> nondegenerate_witness;
  Rational witness_determinant;
  /// True when the determinant of the generic combination of the basis is
  /// the zero polynomial, so that every solution is degenerate.
  bool certified_degenerate = false;
  std::size_t determinant_terms = 0;
  /// Largest |constraint residual| of the witness (or of the basis when
  /// there is no witness). Always exactly zero for correct output.
  Rational residual;

  [[nodiscard]] bool feasible() const {
    return nondegenerate_witness.has_value();
  }
  /// Nondegenerate forms exist and form a single projective class.
  [[nodiscard]] bool unique_class() const {
    return feasible() && dimension == 1;
  }
};

FormSolution solve(const FormSystem& system);

struct InvarianceReport {
  std::size_t elements_checked = 0;
  std::size_t triples_checked = 0;
  Rational max_residual;
  /// First violating (element, u, v), if any.
  std::optional<std::string> violation;
  [[nodiscard]] bool ok() const { return max_residual.is_zero(); }
};

/// Re-checks <[p,u],v> + <u,[p,v]> = delta(p) <u,v> for every pair of
/// labels and every p in a spanning set of p: the generators, `random_elements`
/// seeded random combinations of them, and all brackets of two generators.
/// Also checks [p, h] ⊆ h on the same set. Throws Error(ResidualNonzero)
/// when `throw_on_failure` is set and a residual is nonzero.
InvarianceReport verify_invariance(const FormSystem& system, const Vector& x,
                                   std::size_t random_elements = 8,
                                   std::uint64_t seed = 1,
                                   bool throw_on_failure = false);

} // namespace lieconf
