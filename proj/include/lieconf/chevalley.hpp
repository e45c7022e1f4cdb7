#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lieconf/rootsys.hpp"

namespace lieconf {

class StructureConstants;

/// Element of g = a + sum of root spaces. The Cartan part is expressed in
/// the basis of simple coroots h_1..h_r, the root part densely over the
/// roots of the system (index = RootId).
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(const RootSystem& rs)
      : system_(&rs), cartan_(zero_vector(rs.rank())),
        roots_(zero_vector(rs.size())) {}

  [[nodiscard]] const RootSystem* system() const { return system_; }
  [[nodiscard]] const Vector& cartan() const { return cartan_; }
  [[nodiscard]] const Vector& roots() const { return roots_; }
  Vector& cartan() { return cartan_; }
  Vector& roots() { return roots_; }

  [[nodiscard]] const Rational& coeff(RootId a) const {
    return roots_.at(static_cast<std::size_t>(a));
  }
  [[nodiscard]] bool is_zero() const {
    return lieconf::is_zero(cartan_) && lieconf::is_zero(roots_);
  }
  [[nodiscard]] bool in_cartan() const { return lieconf::is_zero(roots_); }

  /// Ambient vector of the Cartan part (sum of c_i times simple coroot i).
  [[nodiscard]] Vector cartan_ambient() const;

  /// Flattened coordinates: Cartan coefficients followed by root
  /// coefficients.
  [[nodiscard]] Vector flat() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.cartan_ == b.cartan_ && a.roots_ == b.roots_;
  }

  static AlgebraElement root_vector(const RootSystem& rs, RootId a,
                                    const Rational& c = 1);
  /// Cartan element from coefficients over the simple coroots.
  static AlgebraElement cartan_element(const RootSystem& rs,
                                       const Vector& coeffs);
  /// Cartan element whose ambient vector is `h`; throws
  /// Error(DimensionMismatch) when h lies outside the span of the roots.
  static AlgebraElement from_ambient(const RootSystem& rs, const Vector& h);

private:
  void check_same(const AlgebraElement& o) const;

  const RootSystem* system_ = nullptr;
  Vector cartan_;
  Vector roots_;
};

/// Chevalley basis structure constants. [E_a, E_-a] = h_a, the coroot with
/// a(h_a) = 2; [E_a, E_b] = N(a,b) E_{a+b} with |N(a,b)| = p+1 where p is
/// the largest integer such that b - p a is a root. Signs: positive roots are
/// ordered by height then canonical_less; for each non-simple positive root
/// the extraspecial pair (the decomposition a+b with a first in that order)
/// gets N = +(p+1), and all other constants follow from the standard
/// quadratic and cyclic relations.
class StructureConstants {
public:
  static std::shared_ptr<const StructureConstants> build(RootSystemPtr rs);

  [[nodiscard]] const RootSystem& system() const { return *rs_; }
  [[nodiscard]] const RootSystemPtr& system_ptr() const { return rs_; }
  [[nodiscard]] std::size_t dim() const { return rs_->rank() + rs_->size(); }

  /// N(a,b); zero when a+b is not a root (including a = -b).
  [[nodiscard]] int n(RootId a, RootId b) const {
    return n_[static_cast<std::size_t>(a) * rs_->size() + b];
  }
  /// Coefficients of h_a = [E_a, E_-a] over the simple coroots.
  [[nodiscard]] const std::vector<int>& coroot_coeffs(RootId a) const {
    return coroot_coeffs_.at(static_cast<std::size_t>(a));
  }
  /// b(h_i) for the i-th simple coroot.
  [[nodiscard]] int pairing(RootId b, std::size_t i) const {
    return pairing_[static_cast<std::size_t>(b) * rs_->rank() + i];
  }
  /// Killing-dual normalization factor: the vector a in the ambient space
  /// equals (a,a)/2 times the coroot h_a.
  [[nodiscard]] Rational killing_factor(RootId a) const {
    return rs_->inner(a, a) / Rational(2);
  }
  /// The extraspecial pair of every non-simple positive root, keyed by the
  /// root's id (kNone entries for simple and negative roots).
  [[nodiscard]] const std::vector<std::pair<RootId, RootId>>&
  extraspecial() const {
    return extraspecial_;
  }

  [[nodiscard]] AlgebraElement e(RootId a) const {
    return AlgebraElement::root_vector(*rs_, a);
  }
  [[nodiscard]] AlgebraElement h(std::size_t i) const {
    return AlgebraElement::cartan_element(*rs_,
                                          unit_vector(rs_->rank(), i));
  }
  /// Basis element by flat index: simple coroots first, then E_a by RootId.
  [[nodiscard]] AlgebraElement basis(std::size_t k) const;

  /// Largest p with b - p a a root.
  [[nodiscard]] int string_down(RootId a, RootId b) const;

private:
  StructureConstants() = default;

  RootSystemPtr rs_;
  std::vector<int> n_;
  std::vector<std::vector<int>> coroot_coeffs_;
  std::vector<int> pairing_;
  std::vector<std::pair<RootId, RootId>> extraspecial_;
};

using StructureConstantsPtr = std::shared_ptr<const StructureConstants>;

/// Bilinear antisymmetric bracket. Throws Error(SystemMismatch) if the
/// operands belong to different systems.
AlgebraElement bracket(const StructureConstants& sc, const AlgebraElement& x,
                       const AlgebraElement& y);

/// Matrix of ad_p from span(domain) to span(codomain): column j holds the
/// codomain coordinates of [p, domain[j]]. When `modulo` is non-empty the
/// image is only required to lie in span(codomain) + span(modulo) and the
/// modulo component is dropped. Throws Error(NotInvariant) when an image
/// leaves that span.
Matrix ad_matrix(const StructureConstants& sc, const AlgebraElement& p,
                 const std::vector<AlgebraElement>& domain,
                 const std::vector<AlgebraElement>& codomain,
                 const std::vector<AlgebraElement>& modulo = {});

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
AlgebraElement jacobiator(const StructureConstants& sc, const AlgebraElement& x,
                          const AlgebraElement& y, const AlgebraElement& z);

struct JacobiReport {
  std::uint64_t triples_checked = 0;
  std::uint64_t failures = 0;
  /// Flat basis indices of the first failing triple.
  std::optional<std::array<std::size_t, 3>> first_failure;
  [[nodiscard]] bool ok() const { return failures == 0; }
};

/// Exhaustive check over all triples i < j < k of basis elements (the
/// jacobiator is alternating, so this covers every ordered triple).
JacobiReport check_jacobi_exhaustive(const StructureConstants& sc);

/// Check on `samples` triples of basis elements drawn with a seeded
/// generator.
JacobiReport check_jacobi_sampled(const StructureConstants& sc,
                                  std::uint64_t samples, std::uint64_t seed);

} // namespace lieconf
