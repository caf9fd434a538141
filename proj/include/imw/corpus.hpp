#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "imw/constructions.hpp"

namespace imw {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

namespace named {
FiniteMonoid trivial();
FiniteMonoid cyclic_group(std::size_t n);
FiniteMonoid klein_four();
FiniteMonoid symmetric_group_3();
/// 1 > e1 > ... > e(n-1); index i is the i-th element from the top.
SemilatticeMonoid chain(std::size_t n);
/// {1, a, b, 0} with a ^ b = 0.
SemilatticeMonoid diamond();
/// {1, e, t}: {e, t} is a copy of Z2 with identity e, plus an outer 1.
FiniteMonoid m3();
/// Five-element Brandt semigroup {a, b, ab, ba, 0} with identity adjoined.
FiniteMonoid brandt_b21();
/// The submonoid of D4 x| Z2 (swap a <-> b) on
/// {(1,1),(a,1),(b,1),(0,1),(a,g),(b,g),(0,g)}.
FiniteMonoid m7();
/// Z2 acting on the 2-chain by g.1 = g.e = e.
AlmostAction z2_on_chain2();
/// f : Z2 -> 2-chain, f(g) = e.
GluingMap z2_chain2_gluing();
}  // namespace named

enum class CorpusKind { monoid, group, semilattice, almost_action, gluing_map, factor_system };

std::string_view to_string(CorpusKind kind);

using CorpusPayload = std::variant<FiniteMonoid, SemilatticeMonoid, AlmostAction,
                                   GluingMap, FactorSystem>;

struct CorpusInstance {
  std::string name;
  CorpusKind kind;
  CorpusPayload payload;
  /// Pinned predicate verdicts ("inverse", "e_unitary", "f_inverse", "clifford").
  std::map<std::string, bool> expected;

  /// The monoid this instance denotes, if it is one (monoid, group,
  /// semilattice); constructions are not evaluated here.
  std::optional<FiniteMonoid> monoid() const;
};

std::vector<CorpusInstance> builtin_corpus();

struct NamedMonoid {
  std::string name;
  FiniteMonoid monoid;
};

/// Z1..Z6, Klein four, S3.
std::vector<NamedMonoid> small_groups();

/// All semilattice monoids with at most max_n elements up to isomorphism,
/// ordered by size then discovery. Throws BoundExceeded if max_n > bound.
std::vector<SemilatticeMonoid> enumerate_semilattices(std::size_t max_n,
                                                      std::size_t bound = 6);

/// Every almost action of g on y, in lexicographic order of the non-identity
/// rows. Rows range over the meet-endomorphisms of y; the product of those
/// row spaces must fit the budget.
std::vector<AlmostAction> enumerate_almost_actions(const FiniteMonoid& g,
                                                   const SemilatticeMonoid& y,
                                                   std::size_t budget = kDefaultBudget);

/// Every gluing map g -> y (f(1) = top), lexicographic in (f(g)) for g != 1.
std::vector<GluingMap> enumerate_gluing_maps(const FiniteMonoid& g,
                                             const SemilatticeMonoid& y,
                                             std::size_t budget = kDefaultBudget);

/// All inverse monoids with at most max_n elements up to isomorphism,
/// ordered by size then discovery; identity is always index 0.
std::vector<InverseMonoid> enumerate_inverse_monoids(std::size_t max_n,
                                                     std::size_t bound = 5);

/// Drops later entries isomorphic to an earlier one.
std::vector<FiniteMonoid> dedup_up_to_iso(const std::vector<FiniteMonoid>& ms);

}  // namespace imw
