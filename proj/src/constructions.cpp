#include "imw/constructions.hpp"

#include <algorithm>
#include <string>

namespace imw {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void check_table_shape(std::span<const Elem> values, std::size_t expected,
                       std::size_t bound, const char* what) {
  if (values.size() != expected) {
    fail(ErrorCode::BadShape, std::string(what) + " has " +
                                  std::to_string(values.size()) +
                                  " entries, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= bound) {
      fail(ErrorCode::IndexOutOfRange,
           std::string(what) + " entry " + std::to_string(i) + " out of range",
           {static_cast<Elem>(i)});
    }
  }
}

// Pair set with its (first, second) -> index lookup, before the table exists.
struct PairIndex {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::size_t second_size;
  std::vector<Elem> lookup;

  PairIndex(std::vector<std::pair<Elem, Elem>> p, std::size_t first_size,
            std::size_t second)
      : pairs(std::move(p)),
        second_size(second),
        lookup(first_size * second, kNone) {
    for (Elem i = 0; i < pairs.size(); ++i) {
      lookup[pairs[i].first * second_size + pairs[i].second] = i;
    }
  }

  std::optional<Elem> find(Elem first, Elem second) const {
    Elem v = lookup[static_cast<std::size_t>(first) * second_size + second];
    if (v == kNone) return std::nullopt;
    return v;
  }

  PairMonoid finish(InverseMonoid m) && {
    return PairMonoid{std::move(m), std::move(pairs), second_size,
                      std::move(lookup)};
  }
};

}  // namespace

std::optional<Elem> PairMonoid::index_of(Elem first, Elem second) const {
  std::size_t at = static_cast<std::size_t>(first) * second_size + second;
  if (second >= second_size || at >= lookup.size() || lookup[at] == kNone) {
    return std::nullopt;
  }
  return lookup[at];
}

std::vector<Elem> require_group(const FiniteMonoid& g) {
  auto inv = group_inverses(g);
  if (!inv) fail(ErrorCode::NotAGroup, "acting monoid is not a group");
  return *inv;
}

// --- almost actions --------------------------------------------------------

std::optional<AxiomFailure> almost_action_failure(const FiniteMonoid& g,
                                                  const SemilatticeMonoid& y,
                                                  std::span<const Elem> dot) {
  std::size_t ny = y.size();
  check_table_shape(dot, g.size() * ny, ny, "almost action table");
  auto act = [&](Elem a, Elem b) { return dot[a * ny + b]; };
  Elem one = g.identity();
  for (Elem b = 0; b < ny; ++b) {
    if (act(one, b) != b) return AxiomFailure{1, {b}};
  }
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < ny; ++b) {
      for (Elem c = 0; c < ny; ++c) {
        if (act(a, y.meet(b, c)) != y.meet(act(a, b), act(a, c))) {
          return AxiomFailure{2, {a, b, c}};
        }
      }
    }
  }
  for (Elem a = 0; a < g.size(); ++a) {
    Elem a_top = act(a, y.top());
    for (Elem h = 0; h < g.size(); ++h) {
      for (Elem b = 0; b < ny; ++b) {
        if (act(a, act(h, b)) != y.meet(act(g.mul(a, h), b), a_top)) {
          return AxiomFailure{3, {a, h, b}};
        }
      }
    }
  }
  return std::nullopt;
}

AlmostAction validate_almost_action(FiniteMonoid g, SemilatticeMonoid y,
                                    std::vector<Elem> dot) {
  require_group(g);
  if (auto f = almost_action_failure(g, y, dot)) {
    fail(ErrorCode::AxiomViolation,
         "almost action axiom A" + std::to_string(f->axiom) + " fails at (" +
             join(f->witness) + ")",
         f->witness);
  }
  return AlmostAction(std::move(g), std::move(y), std::move(dot));
}

PairMonoid f_product(const AlmostAction& aa) {
  const auto& g = aa.group();
  const auto& y = aa.semilattice();
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < y.size(); ++b) {
      if (y.leq(b, aa.act(a, y.top()))) pairs.emplace_back(b, a);
    }
  }
  PairIndex out(std::move(pairs), y.size(), g.size());
  std::size_t n = out.pairs.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    auto [yi, gi] = out.pairs[i];
    labels.push_back(pair_label(y.label(yi), g.label(gi)));
    for (Elem j = 0; j < n; ++j) {
      auto [yj, gj] = out.pairs[j];
      auto k = out.find(y.meet(yi, aa.act(gi, yj)), g.mul(gi, gj));
      if (!k) {
        fail(ErrorCode::InternalCharacterizationFailure,
             "F(Y,G) is not closed under multiplication", {i, j});
      }
      table[i * n + j] = *k;
    }
  }
  Elem id = *out.find(y.top(), g.identity());
  return std::move(out).finish(validate_inverse(
      FiniteMonoid::validate(n, std::move(table), id, std::move(labels))));
}

// --- factor systems ----------------------------------------------------------

std::vector<std::vector<Elem>> FactorSystem::sim_labels() const {
  std::vector<std::vector<Elem>> out;
  for (const auto& c : sim_) out.push_back(c.classes());
  return out;
}

std::optional<ConditionFailure> factor_system_failure(
    const FiniteMonoid& hm, const FiniteMonoid& nm,
    const std::vector<std::vector<Elem>>& sim, std::span<const Elem> act_table,
    std::span<const Elem> chi_table) {
  std::size_t nh = hm.size(), nn = nm.size();
  if (sim.size() != nh) {
    fail(ErrorCode::BadShape, "equivalence family must have one entry per h");
  }
  for (const auto& row : sim) {
    if (row.size() != nn) fail(ErrorCode::BadShape, "equivalence row has wrong size");
  }
  check_table_shape(act_table, nh * nn, nn, "action table");
  check_table_shape(chi_table, nh * nh, nn, "chi table");

  auto rel = [&](Elem h, Elem a, Elem b) { return sim[h][a] == sim[h][b]; };
  auto act = [&](Elem h, Elem n) { return act_table[h * nn + n]; };
  auto chi = [&](Elem a, Elem b) { return chi_table[a * nh + b]; };
  auto mn = [&](Elem a, Elem b) { return nm.mul(a, b); };
  auto mh = [&](Elem a, Elem b) { return hm.mul(a, b); };
  const Elem one_h = hm.identity(), one_n = nm.identity();

  // Related pairs n1 < n2 for each h.
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs(nh);
  for (Elem h = 0; h < nh; ++h) {
    for (Elem a = 0; a < nn; ++a) {
      for (Elem b = a + 1; b < nn; ++b) {
        if (rel(h, a, b)) pairs[h].emplace_back(a, b);
      }
    }
  }
  auto failure = [](int c, std::vector<Elem> w) {
    return std::optional<ConditionFailure>(ConditionFailure{c, std::move(w)});
  };

  // 1: ~_1 is equality.
  if (!pairs[one_h].empty()) {
    return failure(1, {pairs[one_h][0].first, pairs[one_h][0].second});
  }
  // 2: left multiplication respects ~_h.
  for (Elem h = 0; h < nh; ++h) {
    for (auto [a, b] : pairs[h]) {
      for (Elem x = 0; x < nn; ++x) {
        if (!rel(h, mn(x, a), mn(x, b))) return failure(2, {h, a, b, x});
      }
    }
  }
  // 3: right multiplication by chi(h1, h2) moves ~_h1 into ~_h1h2.
  for (Elem h1 = 0; h1 < nh; ++h1) {
    for (auto [a, b] : pairs[h1]) {
      for (Elem h2 = 0; h2 < nh; ++h2) {
        Elem c = chi(h1, h2);
        if (!rel(mh(h1, h2), mn(a, c), mn(b, c))) return failure(3, {h1, h2, a, b});
      }
    }
  }
  // 4: right multiplication by h.n respects ~_h.
  for (Elem h = 0; h < nh; ++h) {
    for (auto [a, b] : pairs[h]) {
      for (Elem n = 0; n < nn; ++n) {
        Elem hn = act(h, n);
        if (!rel(h, mn(a, hn), mn(b, hn))) return failure(4, {h, a, b, n});
      }
    }
  }
  // 5: acting by h1 then multiplying by chi(h1, h2).
  for (Elem h2 = 0; h2 < nh; ++h2) {
    for (auto [a, b] : pairs[h2]) {
      for (Elem h1 = 0; h1 < nh; ++h1) {
        Elem c = chi(h1, h2);
        if (!rel(mh(h1, h2), mn(act(h1, a), c), mn(act(h1, b), c))) {
          return failure(5, {h1, h2, a, b});
        }
      }
    }
  }
  // 6: h.(n1 n2) ~_h (h.n1)(h.n2).
  for (Elem h = 0; h < nh; ++h) {
    for (Elem a = 0; a < nn; ++a) {
      for (Elem b = 0; b < nn; ++b) {
        if (!rel(h, act(h, mn(a, b)), mn(act(h, a), act(h, b)))) {
          return failure(6, {h, a, b});
        }
      }
    }
  }
  // 7: chi(h1,h2)(h1h2 . n) ~_h1h2 (h1 . (h2 . n)) chi(h1,h2).
  for (Elem h1 = 0; h1 < nh; ++h1) {
    for (Elem h2 = 0; h2 < nh; ++h2) {
      Elem c = chi(h1, h2), h12 = mh(h1, h2);
      for (Elem n = 0; n < nn; ++n) {
        if (!rel(h12, mn(c, act(h12, n)), mn(act(h1, act(h2, n)), c))) {
          return failure(7, {h1, h2, n});
        }
      }
    }
  }
  // 8: h.1 ~_h 1.
  for (Elem h = 0; h < nh; ++h) {
    if (!rel(h, act(h, one_n), one_n)) return failure(8, {h});
  }
  // 9: 1.n ~_1 n.
  for (Elem n = 0; n < nn; ++n) {
    if (!rel(one_h, act(one_h, n), n)) return failure(9, {n});
  }
  // 10: chi(1,h) ~_h 1 ~_h chi(h,1).
  for (Elem h = 0; h < nh; ++h) {
    if (!rel(h, chi(one_h, h), one_n) || !rel(h, one_n, chi(h, one_h))) {
      return failure(10, {h});
    }
  }
  // 11: cocycle condition up to ~_xyz.
  for (Elem x = 0; x < nh; ++x) {
    for (Elem y = 0; y < nh; ++y) {
      Elem xy = mh(x, y);
      for (Elem z = 0; z < nh; ++z) {
        Elem yz = mh(y, z), xyz = mh(xy, z);
        if (!rel(xyz, mn(chi(x, y), chi(xy, z)),
                 mn(act(x, chi(y, z)), chi(x, yz)))) {
          return failure(11, {x, y, z});
        }
      }
    }
  }
  return std::nullopt;
}

FactorSystem validate_factor_system(FiniteMonoid h, FiniteMonoid n,
                                    const std::vector<std::vector<Elem>>& sim,
                                    std::vector<Elem> act, std::vector<Elem> chi) {
  if (auto f = factor_system_failure(h, n, sim, act, chi)) {
    fail(ErrorCode::ConditionViolation,
         "factor system condition " + std::to_string(f->condition) +
             " fails at (" + join(f->witness) + ")",
         f->witness);
  }
  std::vector<Congruence> classes;
  classes.reserve(sim.size());
  for (const auto& row : sim) classes.push_back(Congruence::from_labels(row));
  return FactorSystem(std::move(h), std::move(n), std::move(classes),
                      std::move(act), std::move(chi));
}

FactorSystem factor_system_from_almost_action(const AlmostAction& aa) {
  const auto& g = aa.group();
  const auto& y = aa.semilattice();
  std::vector<std::vector<Elem>> sim(g.size(), std::vector<Elem>(y.size()));
  std::vector<Elem> chi(g.size() * g.size());
  for (Elem a = 0; a < g.size(); ++a) {
    Elem a_top = aa.act(a, y.top());
    for (Elem b = 0; b < y.size(); ++b) sim[a][b] = y.meet(b, a_top);
    for (Elem h = 0; h < g.size(); ++h) chi[a * g.size() + h] = a_top;
  }
  return validate_factor_system(g, y.base(), sim, aa.table(), std::move(chi));
}

CrossedProduct crossed_product(const FactorSystem& fs) {
  const auto& hm = fs.acting();
  const auto& nm = fs.kernel();
  std::vector<std::pair<Elem, Elem>> elements;
  std::vector<std::vector<Elem>> index(hm.size());
  std::vector<std::vector<std::vector<Elem>>> members(hm.size());
  for (Elem h = 0; h < hm.size(); ++h) {
    members[h] = fs.sim(h).members();
    for (const auto& cls : members[h]) {
      index[h].push_back(static_cast<Elem>(elements.size()));
      elements.emplace_back(cls.front(), h);
    }
  }
  auto index_of = [&](Elem n, Elem h) { return index[h][fs.sim(h).class_of(n)]; };

  std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    auto [ni, hi] = elements[i];
    labels.push_back(pair_label("[" + nm.label(ni) + "]", hm.label(hi)));
    const auto& class_i = members[hi][fs.sim(hi).class_of(ni)];
    for (Elem j = 0; j < n; ++j) {
      auto [nj, hj] = elements[j];
      const auto& class_j = members[hj][fs.sim(hj).class_of(nj)];
      Elem hh = hm.mul(hi, hj), c = fs.chi(hi, hj);
      Elem result = kNone;
      // Every choice of representatives must land in the same class.
      for (Elem a : class_i) {
        for (Elem b : class_j) {
          Elem r = index_of(nm.mul(nm.mul(a, fs.act(hi, b)), c), hh);
          if (result == kNone) {
            result = r;
          } else if (r != result) {
            fail(ErrorCode::IllDefinedMultiplication,
                 "product of " + std::to_string(i) + " and " + std::to_string(j) +
                     " depends on representatives (" + std::to_string(a) + ", " +
                     std::to_string(b) + ")",
                 {i, j, a, b});
          }
        }
      }
      table[i * n + j] = result;
    }
  }
  Elem id = index_of(nm.identity(), hm.identity());
  return {FiniteMonoid::validate(n, std::move(table), id, std::move(labels)),
          std::move(elements), std::move(index)};
}

IsoWitness iso_f_product_crossed(const AlmostAction& aa) {
  auto fp = f_product(aa);
  auto fs = factor_system_from_almost_action(aa);
  auto cp = crossed_product(fs);
  const auto& y = aa.semilattice();

  std::vector<Elem> phi(fp.pairs.size());
  for (Elem i = 0; i < fp.pairs.size(); ++i) {
    auto [yi, gi] = fp.pairs[i];
    phi[i] = cp.index_of(fs, yi, gi);
  }
  std::vector<Elem> psi(cp.elements.size());
  for (Elem i = 0; i < cp.elements.size(); ++i) {
    auto [rep, g] = cp.elements[i];
    auto target = fp.index_of(y.meet(rep, aa.act(g, y.top())), g);
    if (!target) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "psi leaves F(Y,G)", {i});
    }
    psi[i] = *target;
  }
  return verify_iso(fp.monoid.base(), cp.monoid, std::move(phi), std::move(psi));
}

// --- gluings -----------------------------------------------------------------

std::optional<GluingFailure> gluing_failure(const FiniteMonoid& g,
                                            const SemilatticeMonoid& y,
                                            std::span<const Elem> f) {
  check_table_shape(f, g.size(), y.size(), "gluing map");
  if (f[g.identity()] != y.top()) {
    return GluingFailure{true, g.identity(), g.identity()};
  }
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < g.size(); ++b) {
      if (y.meet(f[g.mul(a, b)], f[a]) != y.meet(f[a], f[b])) {
        return GluingFailure{false, a, b};
      }
    }
  }
  return std::nullopt;
}

GluingMap validate_gluing_map(FiniteMonoid g, SemilatticeMonoid y,
                              std::vector<Elem> f) {
  require_group(g);
  if (auto e = gluing_failure(g, y, f)) {
    if (e->identity_not_top) {
      fail(ErrorCode::IdentityNotTop, "f(1) is not the top of Y", {g.identity()});
    }
    fail(ErrorCode::ConditionViolation,
         "f(gh) ^ f(g) != f(g) ^ f(h) at (" + std::to_string(e->g) + ", " +
             std::to_string(e->h) + ")",
         {e->g, e->h});
  }
  return GluingMap(std::move(g), std::move(y), std::move(f));
}

Gluing gluing(const GluingMap& gm) {
  const auto& g = gm.group();
  const auto& y = gm.semilattice();
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < y.size(); ++b) {
      if (y.leq(b, gm(a))) pairs.emplace_back(b, a);
    }
  }
  PairIndex idx(std::move(pairs), y.size(), g.size());
  std::size_t n = idx.pairs.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    auto [yi, gi] = idx.pairs[i];
    labels.push_back(pair_label(y.label(yi), g.label(gi)));
    for (Elem j = 0; j < n; ++j) {
      auto [yj, gj] = idx.pairs[j];
      auto k = idx.find(y.meet(yi, yj), g.mul(gi, gj));
      if (!k) {
        fail(ErrorCode::InternalCharacterizationFailure,
             "Gl(f) is not closed under multiplication", {i, j});
      }
      table[i * n + j] = *k;
    }
  }
  Elem id = *idx.find(y.top(), g.identity());
  PairMonoid gl = std::move(idx).finish(validate_inverse(
      FiniteMonoid::validate(n, std::move(table), id, std::move(labels))));

  if (!is_clifford(gl.monoid).holds) {
    fail(ErrorCode::InternalCharacterizationFailure, "Gl(f) is not Clifford");
  }
  if (!is_f_inverse(gl.monoid).holds) {
    fail(ErrorCode::InternalCharacterizationFailure, "Gl(f) is not F-inverse");
  }

  std::vector<Elem> k(y.size()), q(n), s(g.size());
  for (Elem b = 0; b < y.size(); ++b) k[b] = *gl.index_of(b, g.identity());
  for (Elem i = 0; i < n; ++i) q[i] = gl.pairs[i].second;
  for (Elem a = 0; a < g.size(); ++a) s[a] = *gl.index_of(gm(a), a);
  Extension ext{y.base(), gl.monoid.base(), g,
                MonoidMap{std::move(k), MapKind::homomorphism},
                MonoidMap{std::move(q), MapKind::homomorphism}};
  ext.validate();
  if (auto w = splitting_witness(ext, s)) {
    fail(ErrorCode::InternalCharacterizationFailure,
         "s(g) = (f(g), g) is not a weakly Schreier splitting",
         {w->first, w->second});
  }
  return {std::move(gl), std::move(ext),
          WSSplitting{MonoidMap{std::move(s), MapKind::function}}};
}

FInverseData f_inverse_data(const InverseMonoid& m) {
  auto fi = is_f_inverse(m);
  if (!fi.holds) {
    fail(ErrorCode::PreconditionFailed, "monoid is not F-inverse",
         {*fi.failing_class});
  }
  FInverseData d{idempotent_semilattice(m), quotient(m.base(), fi.sigma),
                 std::move(fi.selector), std::vector<Elem>(m.size(), kNone)};
  for (Elem i = 0; i < d.idempotents.embedding.size(); ++i) {
    d.local[d.idempotents.embedding(i)] = i;
  }
  return d;
}

CliffordGluing gluing_map_from_clifford(const InverseMonoid& m) {
  auto cl = is_clifford(m);
  if (!cl.holds) {
    fail(ErrorCode::PreconditionFailed, "monoid is not Clifford",
         {cl.witness->first, cl.witness->second});
  }
  auto data = f_inverse_data(m);
  const auto& g = data.group.monoid;
  const auto& s = data.selector;
  auto ginv = require_group(g);
  auto order = natural_order(m);
  for (Elem a = 0; a < g.size(); ++a) {
    if (m.inverse(s[a]) != s[ginv[a]]) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "s(g)^-1 != s(g^-1)", {a});
    }
    for (Elem b = 0; b < g.size(); ++b) {
      if (!order.leq(m.mul(s[a], s[b]), s[g.mul(a, b)])) {
        fail(ErrorCode::InternalCharacterizationFailure,
             "s(g) s(h) is not below s(gh)", {a, b});
      }
    }
  }
  std::vector<Elem> f(g.size());
  for (Elem a = 0; a < g.size(); ++a) {
    f[a] = data.local[m.mul(s[a], m.inverse(s[a]))];
  }
  auto map = validate_gluing_map(g, data.idempotents.semilattice, std::move(f));
  return {std::move(map), std::move(data)};
}

IsoWitness clifford_reconstruction(const InverseMonoid& m) {
  auto cg = gluing_map_from_clifford(m);
  auto gl = gluing(cg.map);
  const auto& d = cg.data;
  const auto& pm = gl.product;

  std::vector<Elem> phi(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto target = pm.index_of(d.local[m.mul(x, m.inverse(x))], d.group.map(x));
    if (!target) {
      fail(ErrorCode::InternalCharacterizationFailure, "phi leaves Gl(f)", {x});
    }
    phi[x] = *target;
  }
  std::vector<Elem> psi(pm.pairs.size());
  for (Elem i = 0; i < pm.pairs.size(); ++i) {
    auto [yi, gi] = pm.pairs[i];
    psi[i] = m.mul(d.idempotents.embedding(yi), d.selector[gi]);
  }
  return verify_iso(m.base(), pm.monoid.base(), std::move(phi), std::move(psi));
}

RecoveredAlmostAction almost_action_from_f_inverse(const InverseMonoid& m,
                                                   IsoSearchOptions options) {
  auto d = f_inverse_data(m);
  const auto& g = d.group.monoid;
  const auto& y = d.idempotents.semilattice;
  const auto& k = d.idempotents.embedding;
  std::vector<Elem> dot(g.size() * y.size());
  for (Elem a = 0; a < g.size(); ++a) {
    Elem sa = d.selector[a];
    for (Elem b = 0; b < y.size(); ++b) {
      Elem conj = m.mul(m.mul(sa, k(b)), m.inverse(sa));
      if (d.local[conj] == kNone) {
        fail(ErrorCode::InternalCharacterizationFailure,
             "conjugate of an idempotent is not idempotent", {a, b});
      }
      dot[a * y.size() + b] = d.local[conj];
    }
  }
  auto aa = validate_almost_action(g, y, std::move(dot));
  auto fp = f_product(aa);

  std::vector<Elem> forward(fp.pairs.size());
  for (Elem i = 0; i < fp.pairs.size(); ++i) {
    auto [yi, gi] = fp.pairs[i];
    forward[i] = m.mul(k(yi), d.selector[gi]);
  }
  std::vector<Elem> backward(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto target = fp.index_of(d.local[m.mul(x, m.inverse(x))], d.group.map(x));
    if (!target) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "x x^-1 is not below g . 1", {x});
    }
    backward[x] = *target;
  }
  auto explicit_iso = verify_iso(fp.monoid.base(), m.base(), std::move(forward),
                                 std::move(backward));
  auto oracle = brute_force_iso(fp.monoid.base(), m.base(), options);
  if (!oracle) {
    fail(ErrorCode::IsoNotFound, "F(Y,G) is not isomorphic to M");
  }
  return {std::move(aa), std::move(fp), std::move(explicit_iso),
          std::move(*oracle)};
}

FactorSystem factor_system_from_extension(const Extension& ext,
                                          const WSSplitting& ws,
                                          IsoSearchOptions options) {
  const auto& nm = ext.kernel;
  const auto& gm = ext.middle;
  const auto& hm = ext.quotient;
  const auto& s = ws.s;
  std::size_t nn = nm.size(), nh = hm.size();

  std::vector<std::vector<Elem>> sim(nh, std::vector<Elem>(nn));
  std::vector<Elem> act(nh * nn), chi(nh * nh);
  for (Elem h = 0; h < nh; ++h) {
    for (Elem n = 0; n < nn; ++n) sim[h][n] = gm.mul(ext.k(n), s(h));
  }
  auto least_kernel = [&](Elem target, Elem h) -> std::optional<Elem> {
    for (Elem n = 0; n < nn; ++n) {
      if (gm.mul(ext.k(n), s(h)) == target) return n;
    }
    return std::nullopt;
  };
  for (Elem h = 0; h < nh; ++h) {
    for (Elem n = 0; n < nn; ++n) {
      auto w = least_kernel(gm.mul(s(h), ext.k(n)), h);
      if (!w) fail(ErrorCode::NoActionWitness, "no n' with k(n')s(h) = s(h)k(n)", {h, n});
      act[h * nn + n] = *w;
    }
    for (Elem h2 = 0; h2 < nh; ++h2) {
      auto w = least_kernel(gm.mul(s(h), s(h2)), hm.mul(h, h2));
      if (!w) fail(ErrorCode::NoChiWitness, "no n with k(n)s(h1h2) = s(h1)s(h2)", {h, h2});
      chi[h * nh + h2] = *w;
    }
  }
  auto fs = validate_factor_system(hm, nm, sim, std::move(act), std::move(chi));
  crossed_product_to_middle(ext, ws, fs);
  auto cp = crossed_product(fs);
  if (!brute_force_iso(cp.monoid, gm, options)) {
    fail(ErrorCode::IsoNotFound, "crossed product is not isomorphic to the middle object");
  }
  return fs;
}

IsoWitness crossed_product_to_middle(const Extension& ext, const WSSplitting& ws,
                                     const FactorSystem& fs) {
  auto cp = crossed_product(fs);
  const auto& gm = ext.middle;
  std::vector<Elem> forward(cp.elements.size());
  for (Elem i = 0; i < cp.elements.size(); ++i) {
    auto [n, h] = cp.elements[i];
    forward[i] = gm.mul(ext.k(n), ws.s(h));
  }
  std::vector<Elem> backward(gm.size(), kNone);
  for (Elem g = 0; g < gm.size(); ++g) {
    Elem h = ext.q(g);
    for (Elem n = 0; n < ext.kernel.size() && backward[g] == kNone; ++n) {
      if (gm.mul(ext.k(n), ws.s(h)) == g) backward[g] = cp.index_of(fs, n, h);
    }
    if (backward[g] == kNone) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "element not of the form k(n) s(q(g))", {g});
    }
  }
  return verify_iso(cp.monoid, gm, std::move(forward), std::move(backward));
}

}  // namespace imw
