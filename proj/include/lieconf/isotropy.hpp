#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieconf/rootsys.hpp"

namespace lieconf {

enum class CaseTag { Case1, Case2, Parabolic, LowRank };

std::string to_string(CaseTag c);
/// Accepts "Case1", "case1", "Case2", "case2", "Parabolic", "parabolic",
/// "LowRank", "lowrank".
CaseTag parse_case(std::string_view text);

/// The distortion functional, stored as an ambient vector in the span of
/// the roots (functionals are identified with vectors through the ambient
/// form).
struct Distortion {
  Vector functional;
  std::optional<RootId> as_root;
  std::optional<std::pair<RootId, RootId>> as_sum;

  /// Throws Error(InvalidInput) for the zero functional and
  /// Error(DimensionMismatch) for a vector of the wrong length.
  static Distortion make(const RootSystem& rs, const Vector& functional);
};

/// A choice of positive roots (and its simple roots). The standard one is
/// the positive system of the root system; Weyl translates are used to test
/// that verdicts do not depend on the choice.
struct PositiveSystem {
  std::vector<bool> positive;
  std::vector<RootId> simples;

  static PositiveSystem standard(const RootSystem& rs);
  /// Image under the Weyl element given as a word in the simple
  /// reflections of rs (rightmost letter first).
  [[nodiscard]] PositiveSystem translate(const RootSystem& rs,
                                         const std::vector<int>& word) const;
  [[nodiscard]] bool is_positive(RootId a) const {
    return positive.at(static_cast<std::size_t>(a));
  }
  /// Lowest root for this positive system (irreducible systems only).
  [[nodiscard]] RootId lowest_root(const RootSystem& rs) const;
};

/// a ∩ h: either all of a or a hyperplane, given by a normal vector in the
/// span of the roots.
struct CartanPart {
  bool full = true;
  Vector normal;

  [[nodiscard]] bool contains(const Vector& h) const {
    return full || dot(h, normal).is_zero();
  }
  [[nodiscard]] std::size_t codim() const { return full ? 0 : 1; }
};

struct IsotropyConfig {
  CaseTag tag = CaseTag::Parabolic;
  RootSystemPtr system;
  Distortion delta;
  /// Case1: the positive root outside h orthogonal to delta.
  /// Parabolic: the simple root whose negative is outside h.
  std::optional<RootId> alpha;
  PositiveSystem positives;
  CartanPart cartan;
  std::vector<bool> in_h;
  std::vector<bool> in_p;
  /// Pairs {lambda, delta - lambda} that closure moved into h although
  /// neither root is forced there by the pairing rule. Empty for the
  /// maximal pairing-consistent candidate.
  std::vector<std::pair<RootId, RootId>> absorbed_pairs;
  bool validated = false;

  [[nodiscard]] bool h_contains(RootId a) const {
    return in_h.at(static_cast<std::size_t>(a));
  }
  [[nodiscard]] bool p_contains(RootId a) const {
    return in_p.at(static_cast<std::size_t>(a));
  }
  [[nodiscard]] std::vector<RootId> h_roots() const;
  [[nodiscard]] std::vector<RootId> p_roots() const;
  /// dim g - dim h.
  [[nodiscard]] std::size_t codim_h() const;
};

struct Inconsistency {
  std::string reason;
  /// Roots involved (for example the pair whose bracket leaves h).
  std::vector<Vector> witness;
};

struct DeriveResult {
  std::optional<IsotropyConfig> config;
  std::optional<Inconsistency> inconsistent;
  [[nodiscard]] bool ok() const { return config.has_value(); }
};

struct DeriveOptions {
  /// Extra roots to place in h before closure (used to sweep candidates
  /// with fewer paired root spaces).
  std::vector<RootId> extra_h;
  /// Defaults to the standard positive system.
  std::optional<PositiveSystem> positives;
};

/// Builds h and p from the distortion. A root lambda is placed in h when
/// delta - lambda is neither a root nor zero (it cannot be paired). The
/// case adds its own content (Case2 and Parabolic contain the positive
/// roots; Parabolic and LowRank contain all of a; Case1 has a ∩ h equal to
/// alpha^perp; Case2 starts from H_delta). The result is closed under:
///   [p, h] ⊆ h for root vectors,
///   [a ∩ h, g_gamma] ⊆ h for gamma in p,
///   lambda in h => delta - lambda in h (an unpaired space is in the kernel),
/// and fails when the closure puts g_delta into p, makes h = g, needs a
/// coroot outside a fixed Cartan hyperplane, or fills a in Case2.
DeriveResult derive_isotropy(RootSystemPtr rs, const Distortion& delta,
                             CaseTag tag, std::optional<RootId> alpha,
                             const DeriveOptions& opts = {});

struct ValidationCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::string failures() const;
};

ValidationReport validate(const IsotropyConfig& config);

/// Partner of alpha under the pairing law: delta - alpha when it is a root
/// (root set), the zero weight when delta = alpha (is_zero set), nothing
/// otherwise.
struct PairingPartner {
  bool is_zero = false;
  RootId root = RootSystem::kNone;
};
std::optional<PairingPartner> pairing_partner(const RootSystem& rs,
                                              const Distortion& delta,
                                              RootId alpha);

/// Basis label of g/h: a root outside h, or the Cartan complement.
struct WeightLabel {
  bool cartan = false;
  RootId root = RootSystem::kNone;
  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

/// Weight of a label as an ambient vector (zero for the Cartan label).
Vector label_weight(const RootSystem& rs, const WeightLabel& l);
std::string label_name(const RootSystem& rs, const WeightLabel& l);

/// Roots outside h by height, then canonical order, followed by the Cartan
/// label when a ∩ h is a hyperplane. Throws Error(NotValidated).
std::vector<WeightLabel> quotient_basis(const IsotropyConfig& config);

} // namespace lieconf
