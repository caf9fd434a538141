#pragma once

#include <optional>
#include <vector>

#include "imw/inverse.hpp"

namespace imw {

/// N >-k-> G ->>q H with q^{-1}(1) = k(N). k is stored explicitly because
/// constructions produce isomorphic copies of N rather than literal subsets.
struct Extension {
  FiniteMonoid kernel;    // N
  FiniteMonoid middle;    // G
  FiniteMonoid quotient;  // H
  MonoidMap k;
  MonoidMap q;

  /// Checks k injective hom, q surjective hom and the kernel condition.
  /// Throws NotAnExtension with the offending element.
  void validate() const;
};

struct CanonicalExtension {
  std::optional<Extension> extension;
  /// x in q^{-1}(1) but not idempotent; exactly an E-unitary failure.
  std::optional<Elem> kernel_mismatch;

  bool ok() const noexcept { return extension.has_value(); }
};

/// E(M) -> M -> M/sigma.
CanonicalExtension build_canonical_extension(const InverseMonoid& m);

/// Weakly Schreier splitting: q s = id and every g equals k(n) s(q(g)).
struct WSSplitting {
  MonoidMap s;  // H -> G, kind function
};

/// First (h, g) for which the splitting property fails, or nullopt.
std::optional<std::pair<Elem, Elem>> splitting_witness(const Extension& ext,
                                                       std::span<const Elem> s);

struct WeaklySchreierResult {
  std::optional<WSSplitting> splitting;
  /// Fiber index with no candidate, plus the fiber's elements.
  std::optional<Elem> empty_fiber;
  std::vector<Elem> fiber;
  /// Number of candidates found in each fiber (size |H|).
  std::vector<std::size_t> candidate_counts;

  bool ok() const noexcept { return splitting.has_value(); }
};

/// Fiber-local search; s picks the least-index candidate of each fiber.
WeaklySchreierResult is_weakly_schreier(const Extension& ext);

struct WeaklySchreierIffFInverse {
  bool e_unitary = false;
  bool f_inverse = false;
  bool weakly_schreier = false;
  bool agree = false;
  /// Both hold and s(h) is the greatest element of every fiber.
  bool selector_matches = false;
  /// Every fiber had exactly one candidate (tie-break inert).
  bool candidates_unique = false;

  bool consistent() const noexcept {
    return agree && (!f_inverse || (selector_matches && candidates_unique));
  }
};

/// Decides both sides independently. Precondition: M is E-unitary;
/// otherwise the report has e_unitary = false and nothing else is computed.
WeaklySchreierIffFInverse weakly_schreier_iff_f_inverse(const InverseMonoid& m);

struct Cosplitting {
  MonoidMap ell;  // G -> N, ell(m) = m m^-1
  bool is_homomorphism = false;
};

/// Retraction of the kernel map. Throws PreconditionFailed unless M is
/// E-unitary, InternalCharacterizationFailure if ell k != id.
Cosplitting cosplit_retraction(const InverseMonoid& m);

}  // namespace imw
