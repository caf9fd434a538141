#include "imw/inverse.hpp"

#include <algorithm>

namespace imw {

std::vector<Elem> generalized_inverses(const FiniteMonoid& m, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < m.size(); ++y) {
    if (m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

InverseMonoid::InverseMonoid(FiniteMonoid base, std::vector<Elem> inv)
    : base_(std::move(base)), inv_(std::move(inv)) {
  for (Elem x = 0; x < base_.size(); ++x) {
    if (base_.is_idempotent(x)) idempotents_.push_back(x);
  }
}

InverseMonoid validate_inverse(const FiniteMonoid& m) {
  std::vector<Elem> inv(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto candidates = generalized_inverses(m, x);
    if (candidates.empty()) {
      fail(ErrorCode::NoInverse,
           "element " + m.label(x) + " has no generalized inverse", {x});
    }
    if (candidates.size() > 1) {
      fail(ErrorCode::NonUniqueInverse,
           "element " + m.label(x) + " has inverses " + m.label(candidates[0]) +
               " and " + m.label(candidates[1]),
           {x, candidates[0], candidates[1]});
    }
    inv[x] = candidates.front();
  }
  // Unique inverses force commuting idempotents; disagreement means the
  // table or the search above is broken.
  for (Elem e = 0; e < m.size(); ++e) {
    if (!m.is_idempotent(e)) continue;
    for (Elem f = e + 1; f < m.size(); ++f) {
      if (m.is_idempotent(f) && m.mul(e, f) != m.mul(f, e)) {
        fail(ErrorCode::IdempotentsDoNotCommute,
             "idempotents " + m.label(e) + " and " + m.label(f) +
                 " do not commute",
             {e, f});
      }
    }
  }
  return InverseMonoid(m, std::move(inv));
}

SemilatticeMonoid::SemilatticeMonoid(FiniteMonoid m) : base_(std::move(m)) {
  std::size_t n = base_.size();
  order_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) order_[x * n + y] = base_.mul(x, y) == x;
  }
}

SemilatticeMonoid SemilatticeMonoid::validate(FiniteMonoid m) {
  for (Elem x = 0; x < m.size(); ++x) {
    if (!m.is_idempotent(x)) {
      fail(ErrorCode::NotASemilattice, m.label(x) + " is not idempotent", {x});
    }
    for (Elem y = x + 1; y < m.size(); ++y) {
      if (m.mul(x, y) != m.mul(y, x)) {
        fail(ErrorCode::NotASemilattice,
             m.label(x) + " and " + m.label(y) + " do not commute", {x, y});
      }
    }
  }
  return SemilatticeMonoid(std::move(m));
}

IdempotentSemilattice idempotent_semilattice(const InverseMonoid& m) {
  auto sub = generated_submonoid(m.base(), m.idempotents());
  if (sub.monoid.size() != m.idempotents().size()) {
    fail(ErrorCode::InternalCharacterizationFailure,
         "idempotents are not closed under multiplication");
  }
  return {SemilatticeMonoid::validate(std::move(sub.monoid)),
          std::move(sub.embedding)};
}

std::vector<std::pair<Elem, Elem>> NaturalOrder::strict_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      if (x != y && leq(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Elem> NaturalOrder::maximal_in(const std::vector<Elem>& subset) const {
  std::vector<Elem> out;
  for (Elem x : subset) {
    bool dominated = std::any_of(subset.begin(), subset.end(), [&](Elem y) {
      return y != x && leq(x, y);
    });
    if (!dominated) out.push_back(x);
  }
  return out;
}

NaturalOrder natural_order(const InverseMonoid& m) {
  std::size_t n = m.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem y = 0; y < n; ++y) {
    for (Elem e : m.idempotents()) leq[m.mul(e, y) * n + y] = 1;
  }
  for (Elem x = 0; x < n; ++x) {
    if (!leq[x * n + x]) {
      fail(ErrorCode::OrderAxiomViolation, "order is not reflexive", {x});
    }
    for (Elem y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x]) {
        fail(ErrorCode::OrderAxiomViolation, "order is not antisymmetric", {x, y});
      }
      if (!leq[x * n + y]) continue;
      for (Elem z = 0; z < n; ++z) {
        if (leq[y * n + z] && !leq[x * n + z]) {
          fail(ErrorCode::OrderAxiomViolation, "order is not transitive",
               {x, y, z});
        }
      }
    }
  }
  return NaturalOrder(n, std::move(leq));
}

Congruence min_group_congruence(const InverseMonoid& m) {
  std::size_t n = m.size();
  // Union-find over the pairs e a = e b; then check the classes really are
  // the relation (i.e. the relation was already transitive).
  std::vector<Elem> parent(n);
  for (Elem x = 0; x < n; ++x) parent[x] = x;
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto related = [&](Elem a, Elem b) {
    return std::any_of(m.idempotents().begin(), m.idempotents().end(),
                       [&](Elem e) { return m.mul(e, a) == m.mul(e, b); });
  };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (related(a, b)) parent[find(a)] = find(b);
    }
  }
  std::vector<Elem> roots(n);
  for (Elem x = 0; x < n; ++x) roots[x] = find(x);
  auto sigma = Congruence::from_labels(roots);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (sigma.related(a, b) && !related(a, b)) {
        fail(ErrorCode::InternalCharacterizationFailure,
             "sigma relation is not transitive", {a, b});
      }
    }
  }
  if (auto w = sigma.compatibility_witness(m.base())) {
    fail(ErrorCode::InternalCharacterizationFailure,
         "sigma is not a congruence", *w);
  }
  if (!quotient(m.base(), sigma).monoid.is_group()) {
    fail(ErrorCode::InternalCharacterizationFailure,
         "M/sigma is not a group");
  }
  return sigma;
}

EUnitaryVerdict is_e_unitary(const InverseMonoid& m) {
  for (Elem x = 0; x < m.size(); ++x) {
    if (m.is_idempotent(x)) continue;
    for (Elem e : m.idempotents()) {
      if (m.is_idempotent(m.mul(x, e))) return {false, std::pair{x, e}};
    }
  }
  return {};
}

FInverseVerdict is_f_inverse(const InverseMonoid& m) {
  FInverseVerdict v;
  v.sigma = min_group_congruence(m);
  auto order = natural_order(m);
  auto classes = v.sigma.members();
  v.selector.assign(classes.size(), 0);
  for (Elem c = 0; c < classes.size(); ++c) {
    auto maximals = order.maximal_in(classes[c]);
    if (maximals.size() > 1) v.maximal_reading_diverges = true;
    if (maximals.size() == 1) {
      v.selector[c] = maximals.front();
    } else if (v.holds) {
      v.holds = false;
      v.failing_class = c;
      v.failing_maximals = std::move(maximals);
    }
  }
  if (!v.holds) v.selector.clear();
  return v;
}

CliffordVerdict is_clifford(const InverseMonoid& m) {
  CliffordVerdict v;
  for (Elem e : m.idempotents()) {
    for (Elem x = 0; x < m.size() && v.holds; ++x) {
      if (m.mul(e, x) != m.mul(x, e)) v = {false, std::pair{e, x}};
    }
    if (!v.holds) break;
  }
  bool normal = true;
  for (Elem x = 0; x < m.size(); ++x) {
    if (m.mul(x, m.inverse(x)) != m.mul(m.inverse(x), x)) normal = false;
  }
  if (normal != v.holds) {
    fail(ErrorCode::EquivalenceMismatch,
         "central idempotents and x x^-1 = x^-1 x disagree");
  }
  return v;
}

}  // namespace imw
