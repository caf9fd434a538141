#pragma once

#include <optional>
#include <vector>

#include "imw/monoid.hpp"

namespace imw {

/// A bijection certified to be a homomorphism with a homomorphic inverse.
struct IsoWitness {
  FiniteMonoid a;
  FiniteMonoid b;
  MonoidMap forward;   // a -> b
  MonoidMap backward;  // b -> a
};

/// Throws NotHomomorphism(x, y) or NotInverse(x) on the first failure.
IsoWitness verify_iso(const FiniteMonoid& a, const FiniteMonoid& b,
                      std::vector<Elem> forward, std::vector<Elem> backward);

/// Cheap isomorphism invariant of one element.
struct ElementProfile {
  bool idempotent = false;
  std::uint32_t index = 0;   // least i with x^i = x^(i+period)
  std::uint32_t period = 0;
  std::uint32_t generalized_inverses = 0;

  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> element_profiles(const FiniteMonoid& m);

struct IsoSearchOptions {
  std::size_t max_n = 12;
  /// identity -> identity, profile matching and product propagation.
  /// Off: plain permutation enumeration (only sensible for tiny n).
  bool prune = true;
};

/// First isomorphism found, or nullopt. Throws SizeLimitExceeded when the
/// structures are larger than options.max_n.
std::optional<IsoWitness> brute_force_iso(const FiniteMonoid& a,
                                          const FiniteMonoid& b,
                                          IsoSearchOptions options = {});

}  // namespace imw
