#include "imw/corpus.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "imw/isomorphism.hpp"

namespace imw {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

FiniteMonoid from_rows(std::vector<std::vector<Elem>> rows,
                       std::vector<std::string> labels) {
  return FiniteMonoid::validate(rows, 0, std::move(labels));
}

/// Partially filled Cayley table with identity 0. Each `set` reports whether
/// every associativity triple that has just become fully evaluable holds.
class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(n), t_(n * n, kUnset) {
    for (Elem x = 0; x < n; ++x) {
      t_[x] = x;
      t_[x * n] = x;
    }
  }

  Elem at(Elem x, Elem y) const { return t_[x * n_ + y]; }
  void unset(Elem x, Elem y) { t_[x * n_ + y] = kUnset; }

  bool set(Elem x, Elem y, Elem v) {
    t_[x * n_ + y] = v;
    return consistent_at(x, y);
  }

  /// Idempotents must commute in an inverse monoid.
  bool idempotents_commute_at(Elem x, Elem y) const {
    auto idem = [&](Elem e) { return at(e, e) == e; };
    auto ok = [&](Elem e, Elem f) {
      Elem a = at(e, f), b = at(f, e);
      return a == kUnset || b == kUnset || a == b;
    };
    if (x == y) {
      if (!idem(x)) return true;
      for (Elem f = 0; f < n_; ++f) {
        if (f != x && idem(f) && !ok(x, f)) return false;
      }
      return true;
    }
    return !(idem(x) && idem(y)) || ok(x, y);
  }

  const std::vector<Elem>& table() const { return t_; }

 private:
  bool consistent_at(Elem x, Elem y) const {
    Elem v = at(x, y);
    for (Elem z = 0; z < n_; ++z) {
      // (xy)z = x(yz)
      Elem l = at(v, z), yz = at(y, z);
      if (l != kUnset && yz != kUnset) {
        Elem r = at(x, yz);
        if (r != kUnset && l != r) return false;
      }
      // (zx)y = z(xy), with z playing w
      Elem zx = at(z, x);
      if (zx != kUnset) {
        Elem l2 = at(zx, y), r2 = at(z, v);
        if (l2 != kUnset && r2 != kUnset && l2 != r2) return false;
      }
    }
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        // (ab)y with ab = x
        if (at(a, b) == x) {
          Elem by = at(b, y);
          if (by != kUnset) {
            Elem r = at(a, by);
            if (r != kUnset && r != v) return false;
          }
        }
        // x(ab) with ab = y
        if (at(a, b) == y) {
          Elem xa = at(x, a);
          if (xa != kUnset) {
            Elem l = at(xa, b);
            if (l != kUnset && l != v) return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<Elem> t_;
};

bool has_unique_inverses(const FiniteMonoid& m) {
  for (Elem x = 0; x < m.size(); ++x) {
    if (generalized_inverses(m, x).size() != 1) return false;
  }
  return true;
}

using IsoKey = std::pair<std::vector<ElementProfile>, bool>;

IsoKey iso_key(const FiniteMonoid& m) {
  auto p = element_profiles(m);
  std::sort(p.begin(), p.end());
  return {std::move(p), m.is_commutative()};
}

/// Keeps first representatives of each isomorphism class, in input order.
class IsoDeduper {
 public:
  bool insert(const FiniteMonoid& m) {
    auto& bucket = buckets_[iso_key(m)];
    IsoSearchOptions opts{std::numeric_limits<std::size_t>::max(), true};
    for (const auto& seen : bucket) {
      if (brute_force_iso(seen, m, opts)) return false;
    }
    bucket.push_back(m);
    return true;
  }

 private:
  std::map<IsoKey, std::vector<FiniteMonoid>> buckets_;
};

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

// --- named instances ---------------------------------------------------------

namespace named {

FiniteMonoid trivial() { return FiniteMonoid::validate(1, {0}, 0, {"1"}); }

FiniteMonoid cyclic_group(std::size_t n) {
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
    for (Elem j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteMonoid::validate(n, std::move(table), 0, std::move(labels));
}

FiniteMonoid klein_four() {
  std::vector<Elem> table(16);
  for (Elem i = 0; i < 4; ++i) {
    for (Elem j = 0; j < 4; ++j) table[i * 4 + j] = i ^ j;
  }
  return FiniteMonoid::validate(4, std::move(table), 0, {"1", "a", "b", "c"});
}

FiniteMonoid symmetric_group_3() {
  std::vector<std::array<Elem, 3>> perms;
  std::array<Elem, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<Elem, 3>& q) {
    return static_cast<Elem>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> table(36);
  std::vector<std::string> labels;
  for (Elem i = 0; i < 6; ++i) {
    std::string l;
    for (Elem v : perms[i]) l += std::to_string(v);
    labels.push_back(l);
    for (Elem j = 0; j < 6; ++j) {
      std::array<Elem, 3> c{};  // (p_i o p_j)(k) = p_i(p_j(k))
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i * 6 + j] = index(c);
    }
  }
  return FiniteMonoid::validate(6, std::move(table), 0, std::move(labels));
}

SemilatticeMonoid chain(std::size_t n) {
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (n == 2 ? "e" : "e" + std::to_string(i)));
    for (Elem j = 0; j < n; ++j) table[i * n + j] = std::max(i, j);
  }
  return SemilatticeMonoid::validate(
      FiniteMonoid::validate(n, std::move(table), 0, std::move(labels)));
}

SemilatticeMonoid diamond() {
  return SemilatticeMonoid::validate(from_rows({{0, 1, 2, 3},
                                               {1, 1, 3, 3},
                                               {2, 3, 2, 3},
                                               {3, 3, 3, 3}},
                                              {"1", "a", "b", "0"}));
}

FiniteMonoid m3() {
  return from_rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 1}}, {"1", "e", "t"});
}

FiniteMonoid brandt_b21() {
  // Matrix units: a = E12, b = E21, ab = E11, ba = E22; index 5 is zero.
  const std::array<std::pair<int, int>, 4> unit{{{1, 2}, {2, 1}, {1, 1}, {2, 2}}};
  auto times = [&](Elem x, Elem y) -> Elem {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x == 5 || y == 5) return 5;
    auto [i, j] = unit[x - 1];
    auto [k, l] = unit[y - 1];
    if (j != k) return 5;
    for (Elem z = 0; z < 4; ++z) {
      if (unit[z] == std::pair{i, l}) return z + 1;
    }
    return 5;
  };
  std::vector<Elem> table(36);
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) table[x * 6 + y] = times(x, y);
  }
  return FiniteMonoid::validate(6, std::move(table), 0,
                                {"1", "a", "b", "ab", "ba", "0"});
}

FiniteMonoid m7() {
  auto d4 = diamond();
  const std::array<Elem, 4> swap{0, 2, 1, 3};
  const std::vector<std::pair<Elem, Elem>> elems{
      {0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {3, 1}};
  std::vector<Elem> table(49);
  for (Elem i = 0; i < 7; ++i) {
    for (Elem j = 0; j < 7; ++j) {
      auto [y, g] = elems[i];
      auto [z, h] = elems[j];
      std::pair<Elem, Elem> p{d4.meet(y, g == 0 ? z : swap[z]), (g + h) % 2};
      table[i * 7 + j] =
          static_cast<Elem>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  return FiniteMonoid::validate(
      7, std::move(table), 0,
      {"(1,1)", "(a,1)", "(b,1)", "(0,1)", "(a,g)", "(b,g)", "(0,g)"});
}

AlmostAction z2_on_chain2() {
  return validate_almost_action(cyclic_group(2), chain(2), {0, 1, 1, 1});
}

GluingMap z2_chain2_gluing() {
  return validate_gluing_map(cyclic_group(2), chain(2), {0, 1});
}

}  // namespace named

std::string_view to_string(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::monoid: return "monoid";
    case CorpusKind::group: return "group";
    case CorpusKind::semilattice: return "semilattice";
    case CorpusKind::almost_action: return "almost-action";
    case CorpusKind::gluing_map: return "gluing-map";
    case CorpusKind::factor_system: return "factor-system";
  }
  return "unknown";
}

std::optional<FiniteMonoid> CorpusInstance::monoid() const {
  if (auto m = std::get_if<FiniteMonoid>(&payload)) return *m;
  if (auto y = std::get_if<SemilatticeMonoid>(&payload)) return y->base();
  return std::nullopt;
}

std::vector<CorpusInstance> builtin_corpus() {
  const std::map<std::string, bool> all{
      {"inverse", true}, {"e_unitary", true}, {"f_inverse", true}, {"clifford", true}};
  std::vector<CorpusInstance> c;
  c.push_back({"T1", CorpusKind::monoid, named::trivial(), all});
  c.push_back({"Z2", CorpusKind::group, named::cyclic_group(2), all});
  c.push_back({"Z4", CorpusKind::group, named::cyclic_group(4), all});
  c.push_back({"V4", CorpusKind::group, named::klein_four(), all});
  c.push_back({"S3", CorpusKind::group, named::symmetric_group_3(), all});
  c.push_back({"CH2", CorpusKind::semilattice, named::chain(2), all});
  c.push_back({"CH3", CorpusKind::semilattice, named::chain(3), all});
  c.push_back({"D4", CorpusKind::semilattice, named::diamond(), all});
  c.push_back({"M3", CorpusKind::monoid, named::m3(), all});
  c.push_back({"B21", CorpusKind::monoid, named::brandt_b21(),
               {{"inverse", true}, {"e_unitary", false}, {"f_inverse", false},
                {"clifford", false}}});
  c.push_back({"M7", CorpusKind::monoid, named::m7(),
               {{"inverse", true}, {"e_unitary", true}, {"f_inverse", false},
                {"clifford", false}}});
  c.push_back({"AA-Z2-CH2", CorpusKind::almost_action, named::z2_on_chain2(), {}});
  c.push_back({"GL-Z2-CH2", CorpusKind::gluing_map, named::z2_chain2_gluing(), {}});
  c.push_back({"FS-Z2-CH2", CorpusKind::factor_system,
               factor_system_from_almost_action(named::z2_on_chain2()), {}});
  return c;
}

std::vector<NamedMonoid> small_groups() {
  std::vector<NamedMonoid> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back({"Z" + std::to_string(n), named::cyclic_group(n)});
  }
  out.push_back({"V4", named::klein_four()});
  out.push_back({"S3", named::symmetric_group_3()});
  for (const auto& g : out) require_group(g.monoid);
  return out;
}

// --- enumeration ---------------------------------------------------------------

std::vector<SemilatticeMonoid> enumerate_semilattices(std::size_t max_n,
                                                      std::size_t bound) {
  if (max_n > bound) {
    fail(ErrorCode::BoundExceeded, "semilattice enumeration limited to n <= " +
                                       std::to_string(bound),
         {static_cast<Elem>(max_n)});
  }
  std::vector<SemilatticeMonoid> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    TableSearch search(n);
    for (Elem x = 1; x < n; ++x) search.set(x, x, x);
    // Meets of non-top pairs, upper triangle row-major; never the top.
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 1; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) cells.emplace_back(x, y);
    }
    IsoDeduper dedup;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == cells.size()) {
        auto m = FiniteMonoid::validate(n, search.table(), 0);
        if (dedup.insert(m)) out.push_back(SemilatticeMonoid::validate(std::move(m)));
        return;
      }
      auto [x, y] = cells[i];
      for (Elem v = 1; v < n; ++v) {
        bool ok = search.set(x, y, v);
        ok = search.set(y, x, v) && ok;
        if (ok) self(self, i + 1);
        search.unset(x, y);
        search.unset(y, x);
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

std::vector<AlmostAction> enumerate_almost_actions(const FiniteMonoid& g,
                                                   const SemilatticeMonoid& y,
                                                   std::size_t budget) {
  require_group(g);
  std::size_t ny = y.size();
  // Candidate rows: meet-endomorphisms of Y, lexicographic.
  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> r(ny, 0);
  while (true) {
    bool meet_preserving = true;
    for (Elem a = 0; a < ny && meet_preserving; ++a) {
      for (Elem b = 0; b < ny; ++b) {
        if (r[y.meet(a, b)] != y.meet(r[a], r[b])) {
          meet_preserving = false;
          break;
        }
      }
    }
    if (meet_preserving) rows.push_back(r);
    std::size_t pos = ny;
    while (pos > 0 && r[pos - 1] + 1 == ny) r[--pos] = 0;
    if (pos == 0) break;
    ++r[pos - 1];
  }

  std::vector<Elem> movers;
  for (Elem a = 0; a < g.size(); ++a) {
    if (a != g.identity()) movers.push_back(a);
  }
  std::size_t space = checked_power(rows.size(), movers.size(), budget);
  if (space > budget) {
    fail(ErrorCode::BudgetExceeded,
         "almost-action search space exceeds budget " + std::to_string(budget),
         {static_cast<Elem>(g.size()), static_cast<Elem>(ny)});
  }

  std::vector<Elem> dot(g.size() * ny, kUnset);
  std::vector<bool> assigned(g.size(), false);
  for (Elem b = 0; b < ny; ++b) dot[g.identity() * ny + b] = b;
  assigned[g.identity()] = true;

  // A3 for every (a, h) whose rows a, h, ah are all fixed.
  auto a3_holds = [&]() {
    for (Elem a = 0; a < g.size(); ++a) {
      if (!assigned[a]) continue;
      Elem a_top = dot[a * ny + y.top()];
      for (Elem h = 0; h < g.size(); ++h) {
        Elem ah = g.mul(a, h);
        if (!assigned[h] || !assigned[ah]) continue;
        for (Elem b = 0; b < ny; ++b) {
          if (dot[a * ny + dot[h * ny + b]] != y.meet(dot[ah * ny + b], a_top)) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::vector<AlmostAction> out;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == movers.size()) {
      out.push_back(validate_almost_action(g, y, dot));
      return;
    }
    Elem a = movers[i];
    assigned[a] = true;
    for (const auto& row : rows) {
      std::copy(row.begin(), row.end(), dot.begin() + a * ny);
      if (a3_holds()) self(self, i + 1);
    }
    assigned[a] = false;
    std::fill(dot.begin() + a * ny, dot.begin() + (a + 1) * ny, kUnset);
  };
  recurse(recurse, 0);
  return out;
}

std::vector<GluingMap> enumerate_gluing_maps(const FiniteMonoid& g,
                                             const SemilatticeMonoid& y,
                                             std::size_t budget) {
  require_group(g);
  std::size_t movers = g.size() - 1;
  if (checked_power(y.size(), movers, budget) > budget) {
    fail(ErrorCode::BudgetExceeded,
         "gluing-map search space exceeds budget " + std::to_string(budget),
         {static_cast<Elem>(g.size()), static_cast<Elem>(y.size())});
  }
  std::vector<Elem> order;
  for (Elem a = 0; a < g.size(); ++a) {
    if (a != g.identity()) order.push_back(a);
  }
  std::vector<Elem> f(g.size(), 0);
  f[g.identity()] = y.top();
  std::vector<GluingMap> out;
  std::vector<Elem> digits(movers, 0);
  while (true) {
    for (std::size_t i = 0; i < movers; ++i) f[order[i]] = digits[i];
    if (!gluing_failure(g, y, f)) out.push_back(validate_gluing_map(g, y, f));
    std::size_t pos = movers;
    while (pos > 0 && digits[pos - 1] + 1 == y.size()) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

std::vector<InverseMonoid> enumerate_inverse_monoids(std::size_t max_n,
                                                     std::size_t bound) {
  if (max_n > bound) {
    fail(ErrorCode::BoundExceeded, "inverse-monoid enumeration limited to n <= " +
                                       std::to_string(bound),
         {static_cast<Elem>(max_n)});
  }
  std::vector<InverseMonoid> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    TableSearch search(n);
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 1; x < n; ++x) {
      for (Elem y = 1; y < n; ++y) cells.emplace_back(x, y);
    }
    IsoDeduper dedup;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == cells.size()) {
        auto m = FiniteMonoid::validate(n, search.table(), 0);
        if (has_unique_inverses(m) && dedup.insert(m)) {
          out.push_back(validate_inverse(m));
        }
        return;
      }
      auto [x, y] = cells[i];
      for (Elem v = 0; v < n; ++v) {
        if (search.set(x, y, v) && search.idempotents_commute_at(x, y)) {
          self(self, i + 1);
        }
        search.unset(x, y);
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

std::vector<FiniteMonoid> dedup_up_to_iso(const std::vector<FiniteMonoid>& ms) {
  IsoDeduper dedup;
  std::vector<FiniteMonoid> out;
  for (const auto& m : ms) {
    if (dedup.insert(m)) out.push_back(m);
  }
  return out;
}

}  // namespace imw
