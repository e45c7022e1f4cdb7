#pragma once

#include <functional>
#include <optional>
#include <random>
#include <set>

#include "lieconf/errors.hpp"
#include "lieconf/linalg.hpp"
#include "lieconf/rootsys.hpp"

namespace testing {

inline std::optional<lieconf::Errc> errc_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const lieconf::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline lieconf::Vector vec(std::initializer_list<int> c) {
  lieconf::Vector v;
  for (int x : c) v.emplace_back(x);
  return v;
}

/// Ambient vector from doubled coordinates (for half-integral roots).
inline lieconf::Vector half(std::initializer_list<int> twice) {
  lieconf::Vector v;
  for (int x : twice) v.emplace_back(x, 2);
  return v;
}

inline lieconf::Vector e(std::size_t n, std::initializer_list<std::pair<int, int>> terms) {
  lieconf::Vector v = lieconf::zero_vector(n);
  for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] += lieconf::Rational(c);
  return v;
}

inline std::vector<int> random_word(const lieconf::RootSystem& rs,
                                    std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rs.simples().size()) - 1);
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back(pick(rng));
  return w;
}

/// Roots of the classical series written out from their defining formulas.
inline std::set<lieconf::Vector> classical_roots(lieconf::Series s, int n) {
  using lieconf::Series;
  std::set<lieconf::Vector> out;
  const std::size_t dim = s == Series::A ? static_cast<std::size_t>(n) + 1
                                         : static_cast<std::size_t>(n);
  auto unit = [&](std::size_t i, int c) {
    lieconf::Vector v = lieconf::zero_vector(dim);
    v[i] = c;
    return v;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (s == Series::A) {
        out.insert(unit(i, 1) + unit(j, -1));
        continue;
      }
      for (int a : {1, -1})
        for (int b : {1, -1}) out.insert(unit(i, a) + unit(j, b));
    }
  if (s == Series::B || s == Series::C)
    for (std::size_t i = 0; i < dim; ++i)
      for (int a : {1, -1}) out.insert(unit(i, s == Series::B ? a : 2 * a));
  return out;
}

} // namespace testing
