#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieconf/errors.hpp"
#include "lieconf/linalg.hpp"

namespace lieconf {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2, A1xA1 };

std::string to_string(Series s);
Series parse_series(std::string_view text);

/// Index of a root inside its RootSystem.
using RootId = int;

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

/// Precedence used for every canonical choice in the library: `a` comes
/// first when, at the first coordinate where they differ, `a` has the
/// larger entry. The highest root of each classical series is first among
/// roots of its length under this order, so e.g. e1 precedes e2 and e1+e2
/// precedes e1-e2.
bool canonical_less(const Vector& a, const Vector& b);

/// A reduced root system in the standard ambient realization:
///   A_n  in the sum-zero hyperplane of Q^{n+1}, simple roots e_i - e_{i+1};
///   B_n  in Q^n, simple roots e_i - e_{i+1}, e_n;
///   C_n  in Q^n, simple roots e_i - e_{i+1}, 2 e_n;
///   D_n  in Q^n, simple roots e_i - e_{i+1}, e_{n-1} + e_n;
///   G2   in the sum-zero plane of Q^3, simple roots e1 - e2, -2e1 + e2 + e3;
///   F4   in Q^4, simple roots (e1-e2-e3-e4)/2, e4, e3 - e4, e2 - e3;
///   E_r  in Q^8, simple roots (e1+e8-e2-...-e7)/2, e1+e2, e2-e1, e3-e2, ...
///   A1xA1 in Q^4, simple roots e1 - e2, e3 - e4.
/// The ambient form is the standard dot product. Root tables (negation,
/// sums, reflections, inner products) are precomputed at construction;
/// afterwards the object is immutable.
class RootSystem {
public:
  static constexpr RootId kNone = -1;
  static constexpr RootId kZero = -2;

  /// Throws Error(InvalidRank) outside A(n>=1), B(n>=2), C(n>=2), D(n>=3)
  /// and the fixed ranks of E6/E7/E8/F4/G2/A1xA1.
  static std::shared_ptr<const RootSystem> build(Series series, int rank);

  [[nodiscard]] Series series() const { return series_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool irreducible() const { return series_ != Series::A1xA1; }

  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] const Vector& root(RootId id) const { return roots_.at(id); }
  [[nodiscard]] const std::vector<Vector>& roots() const { return roots_; }
  [[nodiscard]] const std::vector<RootId>& simples() const { return simples_; }
  [[nodiscard]] const std::vector<RootId>& positives() const {
    return positives_;
  }
  [[nodiscard]] bool is_positive(RootId id) const {
    return positive_flag_.at(id);
  }

  /// Coefficients of a root in the basis of simple roots (all integers).
  [[nodiscard]] const std::vector<int>& simple_coords(RootId id) const {
    return simple_coords_.at(id);
  }
  [[nodiscard]] int height(RootId id) const { return height_.at(id); }

  /// Lookup by coordinates. Throws Error(DimensionMismatch) for vectors of
  /// the wrong length.
  [[nodiscard]] std::optional<RootId> find(const Vector& v) const;
  [[nodiscard]] bool is_root(const Vector& v) const {
    return find(v).has_value();
  }
  /// Like find, but throws Error(NotARoot).
  [[nodiscard]] RootId id_of(const Vector& v) const;

  [[nodiscard]] RootId negate(RootId id) const { return neg_.at(id); }
  /// Index of a+b, kZero when a = -b, kNone when a+b is not a root.
  [[nodiscard]] RootId sum(RootId a, RootId b) const {
    return sum_[static_cast<std::size_t>(a) * size() + b];
  }
  /// Index of a-b with the same conventions as sum().
  [[nodiscard]] RootId difference(RootId a, RootId b) const {
    return sum(a, negate(b));
  }
  /// s_mirror(v) as a root index.
  [[nodiscard]] RootId reflect(RootId mirror, RootId v) const {
    return reflect_[static_cast<std::size_t>(mirror) * size() + v];
  }
  [[nodiscard]] const Rational& inner(RootId a, RootId b) const {
    return inner_[static_cast<std::size_t>(a) * size() + b];
  }

  /// Ambient form on arbitrary vectors; throws Error(DimensionMismatch).
  [[nodiscard]] Rational inner(const Vector& v, const Vector& w) const;

  /// v - 2 (v,m)/(m,m) m; throws Error(NotARoot) if m is not a root.
  [[nodiscard]] Vector weyl_reflect(const Vector& mirror,
                                    const Vector& v) const;

  /// Coroot 2a/(a,a) as an ambient vector.
  [[nodiscard]] Vector coroot(RootId id) const;

  /// The highest root; throws Error(Reducible) for A1xA1.
  [[nodiscard]] RootId highest_root() const;
  /// The lowest root (negative of the highest); throws Error(Reducible).
  [[nodiscard]] RootId minimal_root() const;

  /// Canonical representative of the simultaneous Weyl orbit of an ordered
  /// pair of roots: the first pair in canonical_less order (first entry,
  /// then second) over the orbit, found by breadth-first closure under the
  /// simple reflections.
  [[nodiscard]] std::pair<RootId, RootId> canonical_pair_rep(RootId a,
                                                             RootId b) const;
  [[nodiscard]] std::pair<Vector, Vector>
  canonical_pair_rep(const Vector& a, const Vector& b) const;

  /// All ordered pairs in the simultaneous Weyl orbit of (a, b).
  [[nodiscard]] std::vector<std::pair<RootId, RootId>>
  pair_orbit(RootId a, RootId b) const;

  /// Applies a word of simple reflections (indices into simples()),
  /// rightmost letter first.
  [[nodiscard]] RootId apply_word(const std::vector<int>& word,
                                  RootId v) const;
  [[nodiscard]] Vector apply_word(const std::vector<int>& word,
                                  const Vector& v) const;

  /// Expected |roots| for the series and rank.
  static std::size_t classical_root_count(Series s, int rank);

private:
  RootSystem() = default;
  void check_dim(const Vector& v) const;

  Series series_ = Series::A;
  int rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vector> roots_;
  std::unordered_map<Vector, RootId, VectorHash> index_;
  std::vector<RootId> simples_;
  std::vector<RootId> positives_;
  std::vector<bool> positive_flag_;
  std::vector<std::vector<int>> simple_coords_;
  std::vector<int> height_;
  std::vector<RootId> neg_;
  std::vector<RootId> sum_;
  std::vector<RootId> reflect_;
  std::vector<Rational> inner_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Checks the structural invariants (disjoint positive/negative split,
/// integrality of simple coordinates, root count, closure under every
/// reflection). Returns an empty string on success, a description otherwise.
std::string check_root_system(const RootSystem& rs);

} // namespace lieconf
