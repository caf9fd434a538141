#pragma once

// Naive reference implementations used as oracles by the unit tests. They
// follow the definitions literally and share no code with the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "imw/monoid.hpp"

namespace oracle {

using imw::Elem;
using Table = std::vector<std::vector<Elem>>;

inline Table rows(const imw::FiniteMonoid& m) {
  Table t(m.size(), std::vector<Elem>(m.size()));
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) t[x][y] = m.mul(x, y);
  return t;
}

inline bool associative(const Table& t) {
  const auto n = t.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

inline std::vector<Elem> gen_inverses(const Table& t, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < t.size(); ++y)
    if (t[t[x][y]][x] == x && t[t[y][x]][y] == y) out.push_back(y);
  return out;
}

inline bool is_inverse(const Table& t) {
  for (Elem x = 0; x < t.size(); ++x)
    if (gen_inverses(t, x).size() != 1) return false;
  return true;
}

inline Elem inv(const Table& t, Elem x) { return gen_inverses(t, x).at(0); }

inline bool idem(const Table& t, Elem x) { return t[x][x] == x; }

inline bool leq(const Table& t, Elem x, Elem y) {
  for (Elem e = 0; e < t.size(); ++e)
    if (idem(t, e) && t[e][y] == x) return true;
  return false;
}

inline bool sigma(const Table& t, Elem a, Elem b) {
  for (Elem e = 0; e < t.size(); ++e)
    if (idem(t, e) && t[e][a] == t[e][b]) return true;
  return false;
}

inline bool e_unitary(const Table& t) {
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem e = 0; e < t.size(); ++e)
      if (idem(t, e) && idem(t, t[x][e]) && !idem(t, x)) return false;
  return true;
}

/// Greatest element of the sigma class of x, if any.
inline std::optional<Elem> greatest_in_class(const Table& t, Elem x) {
  for (Elem g = 0; g < t.size(); ++g) {
    if (!sigma(t, g, x)) continue;
    bool above_all = true;
    for (Elem y = 0; y < t.size(); ++y)
      if (sigma(t, y, x) && !leq(t, y, g)) above_all = false;
    if (above_all) return g;
  }
  return std::nullopt;
}

inline bool f_inverse(const Table& t) {
  for (Elem x = 0; x < t.size(); ++x)
    if (!greatest_in_class(t, x)) return false;
  return true;
}

inline bool clifford(const Table& t) {
  for (Elem e = 0; e < t.size(); ++e)
    for (Elem x = 0; x < t.size(); ++x)
      if (idem(t, e) && t[e][x] != t[x][e]) return false;
  return true;
}

/// Plain permutation search; only for tiny n.
inline bool isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x)
      for (Elem y = 0; y < a.size() && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Lexicographically least relabelling fixing element 0 (the identity).
inline Table canonical(const Table& t) {
  const auto n = t.size();
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::optional<Table> best;
  do {
    Table r(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) r[p[x]][p[y]] = p[t[x][y]];
    if (!best || r < *best) best = r;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return *best;
}

/// Calls f on every table of size n with identity 0.
template <typename F>
void for_each_table_with_identity(std::size_t n, F&& f) {
  Table t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) cells.emplace_back(x, y);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      f(t);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      t[cells[i].first][cells[i].second] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

/// Number of inverse monoids of order n up to isomorphism, by full scan.
inline std::size_t count_inverse_monoids(std::size_t n) {
  std::set<Table> seen;
  for_each_table_with_identity(n, [&](const Table& t) {
    if (associative(t) && is_inverse(t)) seen.insert(canonical(t));
  });
  return seen.size();
}

/// Number of semilattices with top of order n up to isomorphism.
inline std::size_t count_semilattices(std::size_t n) {
  std::set<Table> seen;
  Table t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) t[0][x] = t[x][0] = x, t[x][x] = x;
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) cells.emplace_back(x, y);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      if (associative(t)) seen.insert(canonical(t));
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      t[cells[i].first][cells[i].second] = t[cells[i].second][cells[i].first] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return seen.size();
}

}  // namespace oracle
