#include "lieconf/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace lieconf {

std::string to_string(Series s) {
  switch (s) {
  case Series::A: return "A";
  case Series::B: return "B";
  case Series::C: return "C";
  case Series::D: return "D";
  case Series::E6: return "E6";
  case Series::E7: return "E7";
  case Series::E8: return "E8";
  case Series::F4: return "F4";
  case Series::G2: return "G2";
  case Series::A1xA1: return "A1xA1";
  }
  return "?";
}

Series parse_series(std::string_view text) {
  static const std::pair<std::string_view, Series> table[] = {
      {"A", Series::A},   {"B", Series::B},   {"C", Series::C},
      {"D", Series::D},   {"E6", Series::E6}, {"E7", Series::E7},
      {"E8", Series::E8}, {"F4", Series::F4}, {"G2", Series::G2},
      {"A1xA1", Series::A1xA1}};
  for (const auto& [name, s] : table) {
    if (name == text) return s;
  }
  throw Error(Errc::InvalidInput, "unknown series label '" +
                                      std::string(text) + "'");
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) {
    h ^= std::hash<Rational>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

bool canonical_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

namespace {

int fixed_rank(Series s) {
  switch (s) {
  case Series::E6: return 6;
  case Series::E7: return 7;
  case Series::E8: return 8;
  case Series::F4: return 4;
  case Series::G2: return 2;
  case Series::A1xA1: return 2;
  default: return 0;
  }
}

Vector e(std::size_t dim, std::size_t i) { return unit_vector(dim, i - 1); }

std::vector<Vector> simple_roots(Series s, int n, std::size_t& dim) {
  std::vector<Vector> out;
  const Rational half(1, 2);
  switch (s) {
  case Series::A:
    dim = static_cast<std::size_t>(n) + 1;
    for (int i = 1; i <= n; ++i) out.push_back(e(dim, i) - e(dim, i + 1));
    break;
  case Series::B:
  case Series::C:
  case Series::D:
    dim = static_cast<std::size_t>(n);
    for (int i = 1; i < n; ++i) out.push_back(e(dim, i) - e(dim, i + 1));
    if (s == Series::B) out.push_back(e(dim, n));
    if (s == Series::C) out.push_back(Rational(2) * e(dim, n));
    if (s == Series::D) out.push_back(e(dim, n - 1) + e(dim, n));
    break;
  case Series::G2:
    dim = 3;
    out.push_back(e(3, 1) - e(3, 2));
    out.push_back(Rational(-2) * e(3, 1) + e(3, 2) + e(3, 3));
    break;
  case Series::F4:
    dim = 4;
    out.push_back(half * (e(4, 1) - e(4, 2) - e(4, 3) - e(4, 4)));
    out.push_back(e(4, 4));
    out.push_back(e(4, 3) - e(4, 4));
    out.push_back(e(4, 2) - e(4, 3));
    break;
  case Series::E6:
  case Series::E7:
  case Series::E8: {
    dim = 8;
    Vector a1 = half * (e(8, 1) + e(8, 8));
    for (int i = 2; i <= 7; ++i) a1 = a1 - half * e(8, i);
    out.push_back(a1);
    out.push_back(e(8, 1) + e(8, 2));
    for (int i = 1; i + 2 <= n; ++i) out.push_back(e(8, i + 1) - e(8, i));
    break;
  }
  case Series::A1xA1:
    dim = 4;
    out.push_back(e(4, 1) - e(4, 2));
    out.push_back(e(4, 3) - e(4, 4));
    break;
  }
  return out;
}

} // namespace

std::size_t RootSystem::classical_root_count(Series s, int n) {
  const auto nn = static_cast<std::size_t>(n);
  switch (s) {
  case Series::A: return nn * (nn + 1);
  case Series::B:
  case Series::C: return 2 * nn * nn;
  case Series::D: return 2 * nn * (nn - 1);
  case Series::E6: return 72;
  case Series::E7: return 126;
  case Series::E8: return 240;
  case Series::F4: return 48;
  case Series::G2: return 12;
  case Series::A1xA1: return 4;
  }
  return 0;
}

std::shared_ptr<const RootSystem> RootSystem::build(Series series, int rank) {
  const int fixed = fixed_rank(series);
  bool ok = false;
  switch (series) {
  case Series::A: ok = rank >= 1; break;
  case Series::B:
  case Series::C: ok = rank >= 2; break;
  case Series::D: ok = rank >= 3; break;
  default: ok = rank == fixed; break;
  }
  if (!ok) {
    throw Error(Errc::InvalidRank, to_string(series) + " with rank " +
                                       std::to_string(rank));
  }

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->series_ = series;
  rs->rank_ = rank;
  const auto simple = simple_roots(series, rank, rs->dim_);

  auto reflect_vec = [](const Vector& m, const Vector& v) {
    const Rational f = Rational(2) * dot(v, m) / dot(m, m);
    return v - f * m;
  };

  // Weyl closure of the simple roots under simple reflections.
  std::deque<Vector> queue(simple.begin(), simple.end());
  for (const auto& s : simple) {
    if (rs->index_.emplace(s, static_cast<RootId>(rs->roots_.size())).second)
      rs->roots_.push_back(s);
  }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : simple) {
      Vector w = reflect_vec(s, v);
      if (rs->index_.emplace(w, static_cast<RootId>(rs->roots_.size()))
              .second) {
        rs->roots_.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  // Deterministic order: positive roots by height then canonical order,
  // followed by their negatives in the same order. Simple coordinates are
  // needed first.
  const std::size_t r = simple.size();
  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = dot(simple[i], simple[j]);
  const Matrix gram_inv = inverse(gram);
  auto coords_of = [&](const Vector& v) {
    Vector pairing(r);
    for (std::size_t j = 0; j < r; ++j) pairing[j] = dot(v, simple[j]);
    const Vector c = gram_inv * pairing;
    std::vector<int> out(r);
    for (std::size_t j = 0; j < r; ++j) {
      if (!c[j].is_integer())
        throw std::logic_error("non-integral simple coordinates");
      out[j] = static_cast<int>(c[j].num());
    }
    return out;
  };

  std::vector<Vector> pos;
  for (const auto& v : rs->roots_) {
    auto c = coords_of(v);
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    if (nonneg) pos.push_back(v);
  }
  auto height_of = [&](const Vector& v) {
    auto c = coords_of(v);
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::vector<int> pos_height(pos.size());
  std::vector<std::size_t> order(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    pos_height[i] = height_of(pos[i]);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pos_height[a] != pos_height[b]) return pos_height[a] < pos_height[b];
    return canonical_less(pos[a], pos[b]);
  });
  std::vector<Vector> ordered;
  for (auto i : order) ordered.push_back(pos[i]);
  for (auto i : order) ordered.push_back(-pos[i]);
  if (ordered.size() != rs->roots_.size())
    throw std::logic_error("positive/negative split is not a partition");

  rs->roots_ = std::move(ordered);
  rs->index_.clear();
  const std::size_t n = rs->roots_.size();
  const std::size_t npos = n / 2;
  for (std::size_t i = 0; i < n; ++i)
    rs->index_.emplace(rs->roots_[i], static_cast<RootId>(i));
  rs->positive_flag_.assign(n, false);
  for (std::size_t i = 0; i < npos; ++i) {
    rs->positive_flag_[i] = true;
    rs->positives_.push_back(static_cast<RootId>(i));
  }
  for (const auto& s : simple) rs->simples_.push_back(rs->index_.at(s));
  rs->simple_coords_.resize(n);
  rs->height_.resize(n);
  rs->neg_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rs->simple_coords_[i] = coords_of(rs->roots_[i]);
    int h = 0;
    for (int x : rs->simple_coords_[i]) h += x;
    rs->height_[i] = h;
    rs->neg_[i] = static_cast<RootId>(i < npos ? i + npos : i - npos);
  }

  rs->sum_.assign(n * n, kNone);
  rs->reflect_.assign(n * n, kNone);
  rs->inner_.assign(n * n, Rational());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rs->inner_[a * n + b] = dot(rs->roots_[a], rs->roots_[b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Rational norm = rs->inner_[a * n + a];
    for (std::size_t b = 0; b < n; ++b) {
      if (rs->neg_[a] == static_cast<RootId>(b)) {
        rs->sum_[a * n + b] = kZero;
      } else if (auto it = rs->index_.find(rs->roots_[a] + rs->roots_[b]);
                 it != rs->index_.end()) {
        rs->sum_[a * n + b] = it->second;
      }
      const Rational f = Rational(2) * rs->inner_[a * n + b] / norm;
      rs->reflect_[a * n + b] =
          rs->index_.at(rs->roots_[b] - f * rs->roots_[a]);
    }
  }
  return rs;
}

std::string RootSystem::name() const {
  switch (series_) {
  case Series::A:
  case Series::B:
  case Series::C:
  case Series::D: return to_string(series_) + std::to_string(rank_);
  default: return to_string(series_);
  }
}

void RootSystem::check_dim(const Vector& v) const {
  if (v.size() != dim_) {
    throw Error(Errc::DimensionMismatch,
                "expected ambient dimension " + std::to_string(dim_) +
                    ", got " + std::to_string(v.size()));
  }
}

std::optional<RootId> RootSystem::find(const Vector& v) const {
  check_dim(v);
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  return std::nullopt;
}

RootId RootSystem::id_of(const Vector& v) const {
  auto id = find(v);
  if (!id) throw Error(Errc::NotARoot, to_string(v) + " in " + name());
  return *id;
}

Rational RootSystem::inner(const Vector& v, const Vector& w) const {
  check_dim(v);
  check_dim(w);
  return dot(v, w);
}

Vector RootSystem::weyl_reflect(const Vector& mirror, const Vector& v) const {
  check_dim(v);
  const RootId m = id_of(mirror);
  const Rational f = Rational(2) * dot(v, mirror) / inner(m, m);
  return v - f * mirror;
}

Vector RootSystem::coroot(RootId id) const {
  return (Rational(2) / inner(id, id)) * root(id);
}

RootId RootSystem::highest_root() const {
  if (!irreducible())
    throw Error(Errc::Reducible, name() + " has no highest root");
  // Positives are sorted by height, so the last one is the highest.
  return positives_.back();
}

RootId RootSystem::minimal_root() const { return negate(highest_root()); }

std::vector<std::pair<RootId, RootId>> RootSystem::pair_orbit(RootId a,
                                                              RootId b) const {
  const std::size_t n = size();
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<RootId, RootId>> orbit{{a, b}};
  seen[static_cast<std::size_t>(a) * n + b] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const auto [x, y] = orbit[head];
    for (RootId s : simples_) {
      const RootId rx = reflect(s, x);
      const RootId ry = reflect(s, y);
      auto key = static_cast<std::size_t>(rx) * n + ry;
      if (!seen[key]) {
        seen[key] = true;
        orbit.emplace_back(rx, ry);
      }
    }
  }
  return orbit;
}

std::pair<RootId, RootId> RootSystem::canonical_pair_rep(RootId a,
                                                         RootId b) const {
  auto orbit = pair_orbit(a, b);
  auto best = orbit.front();
  for (const auto& p : orbit) {
    const auto& [x, y] = p;
    if (canonical_less(root(x), root(best.first)) ||
        (x == best.first && canonical_less(root(y), root(best.second)))) {
      best = p;
    }
  }
  return best;
}

std::pair<Vector, Vector>
RootSystem::canonical_pair_rep(const Vector& a, const Vector& b) const {
  auto [x, y] = canonical_pair_rep(id_of(a), id_of(b));
  return {root(x), root(y)};
}

RootId RootSystem::apply_word(const std::vector<int>& word, RootId v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = reflect(simples_.at(static_cast<std::size_t>(*it)), v);
  return v;
}

Vector RootSystem::apply_word(const std::vector<int>& word,
                              const Vector& v) const {
  Vector w = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    w = weyl_reflect(root(simples_.at(static_cast<std::size_t>(*it))), w);
  return w;
}

std::string check_root_system(const RootSystem& rs) {
  const std::size_t n = rs.size();
  if (n != RootSystem::classical_root_count(rs.series(), rs.rank()))
    return "root count " + std::to_string(n);
  if (rs.positives().size() * 2 != n) return "positive half has wrong size";
  for (RootId a = 0; a < static_cast<RootId>(n); ++a) {
    if (is_zero(rs.root(a))) return "zero root";
    if (rs.is_positive(a) == rs.is_positive(rs.negate(a)))
      return "root and its negative on the same side";
    const auto& c = rs.simple_coords(a);
    const bool nonneg =
        std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonpos =
        std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (rs.is_positive(a) ? !nonneg : !nonpos)
      return "sign of simple coordinates disagrees with positivity";
    for (RootId m = 0; m < static_cast<RootId>(n); ++m) {
      Vector w = rs.weyl_reflect(rs.root(m), rs.root(a));
      if (!rs.is_root(w)) return "not closed under reflection";
    }
  }
  return {};
}

} // namespace lieconf
