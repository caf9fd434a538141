#pragma once

// Almost semidirect products F(Y,G), relaxed factor systems with their
// crossed products, and the modified Artin gluing Gl(f), together with the
// maps that recover each construction from an F-inverse monoid.

#include <optional>
#include <utility>
#include <vector>

#include "imw/extension.hpp"
#include "imw/inverse.hpp"
#include "imw/isomorphism.hpp"

namespace imw {

/// Throws NotAGroup unless every element of g is invertible; returns the
/// inverse table.
std::vector<Elem> require_group(const FiniteMonoid& g);

// ---------------------------------------------------------------------------
// Almost actions

/// g . y, a group acting on a semilattice up to meets with g . 1:
///   (A1) 1 . y = y
///   (A2) g . (y ^ z) = g . y ^ g . z
///   (A3) g . (h . y) = (gh) . y ^ g . 1
class AlmostAction {
 public:
  const FiniteMonoid& group() const noexcept { return group_; }
  const SemilatticeMonoid& semilattice() const noexcept { return semilattice_; }
  Elem act(Elem g, Elem y) const noexcept { return dot_[g * semilattice_.size() + y]; }
  /// Row-major |G| x |Y|.
  const std::vector<Elem>& table() const noexcept { return dot_; }

 private:
  friend AlmostAction validate_almost_action(FiniteMonoid, SemilatticeMonoid,
                                             std::vector<Elem>);
  AlmostAction(FiniteMonoid g, SemilatticeMonoid y, std::vector<Elem> dot)
      : group_(std::move(g)), semilattice_(std::move(y)), dot_(std::move(dot)) {}

  FiniteMonoid group_;
  SemilatticeMonoid semilattice_;
  std::vector<Elem> dot_;
};

struct AxiomFailure {
  int axiom = 0;               // 1, 2 or 3
  std::vector<Elem> witness;   // A1: (y); A2: (g, y, z); A3: (g, h, y)
};

/// Non-throwing check of A1-A3 (first failure in axiom, then index order).
std::optional<AxiomFailure> almost_action_failure(const FiniteMonoid& g,
                                                  const SemilatticeMonoid& y,
                                                  std::span<const Elem> dot);

AlmostAction validate_almost_action(FiniteMonoid g, SemilatticeMonoid y,
                                    std::vector<Elem> dot);

/// An inverse monoid whose elements are pairs, with the pair table.
struct PairMonoid {
  InverseMonoid monoid;
  std::vector<std::pair<Elem, Elem>> pairs;  // element -> (first, second)
  std::size_t second_size = 0;
  std::vector<Elem> lookup;                  // first * second_size + second

  /// Index of the pair, or nullopt when it is not an element.
  std::optional<Elem> index_of(Elem first, Elem second) const;
};

/// F(Y,G) = {(y, g) : y <= g . 1} with (y, g)(z, h) = (y ^ g . z, gh).
/// Elements are ordered by g, then y.
PairMonoid f_product(const AlmostAction& aa);

// ---------------------------------------------------------------------------
// Relaxed factor systems

/// (~, ., chi) of H on N: an H-indexed equivalence on N, a map H x N -> N
/// and chi : H x H -> N satisfying the eleven relaxed factor-system
/// conditions.
class FactorSystem {
 public:
  const FiniteMonoid& acting() const noexcept { return h_; }   // H
  const FiniteMonoid& kernel() const noexcept { return n_; }   // N
  const Congruence& sim(Elem h) const noexcept { return sim_[h]; }
  bool related(Elem h, Elem n1, Elem n2) const noexcept {
    return sim_[h].related(n1, n2);
  }
  Elem act(Elem h, Elem n) const noexcept { return act_[h * n_.size() + n]; }
  Elem chi(Elem h1, Elem h2) const noexcept { return chi_[h1 * h_.size() + h2]; }

  std::vector<std::vector<Elem>> sim_labels() const;
  const std::vector<Elem>& act_table() const noexcept { return act_; }
  const std::vector<Elem>& chi_table() const noexcept { return chi_; }

 private:
  friend FactorSystem validate_factor_system(FiniteMonoid, FiniteMonoid,
                                             const std::vector<std::vector<Elem>>&,
                                             std::vector<Elem>, std::vector<Elem>);
  FactorSystem(FiniteMonoid h, FiniteMonoid n, std::vector<Congruence> sim,
               std::vector<Elem> act, std::vector<Elem> chi)
      : h_(std::move(h)), n_(std::move(n)), sim_(std::move(sim)),
        act_(std::move(act)), chi_(std::move(chi)) {}

  FiniteMonoid h_;
  FiniteMonoid n_;
  std::vector<Congruence> sim_;
  std::vector<Elem> act_;  // |H| x |N|
  std::vector<Elem> chi_;  // |H| x |H|
};

struct ConditionFailure {
  int condition = 0;  // 1..11
  std::vector<Elem> witness;
};

/// Exhaustive check of the eleven conditions over their full quantifier
/// ranges. `sim` gives one class label per (h, n); labels need not be
/// normalized.
std::optional<ConditionFailure> factor_system_failure(
    const FiniteMonoid& h, const FiniteMonoid& n,
    const std::vector<std::vector<Elem>>& sim, std::span<const Elem> act,
    std::span<const Elem> chi);

FactorSystem validate_factor_system(FiniteMonoid h, FiniteMonoid n,
                                    const std::vector<std::vector<Elem>>& sim,
                                    std::vector<Elem> act, std::vector<Elem> chi);

/// y ~_g z iff y ^ g.1 = z ^ g.1, chi(g, h) = g.1, action unchanged.
FactorSystem factor_system_from_almost_action(const AlmostAction& aa);

struct CrossedProduct {
  FiniteMonoid monoid;
  /// element -> (least representative n, h)
  std::vector<std::pair<Elem, Elem>> elements;
  /// (h, class of n under ~_h) -> element
  std::vector<std::vector<Elem>> index;

  Elem index_of(const FactorSystem& fs, Elem n, Elem h) const {
    return index[h][fs.sim(h).class_of(n)];
  }
};

/// Disjoint union of N/~_h with ([n], h)([n'], h') = ([n (h.n') chi(h,h')], hh').
/// Elements sorted by (h, least representative).
CrossedProduct crossed_product(const FactorSystem& fs);

/// phi (y, g) = ([y]_g, g), psi ([y]_g, g) = (y ^ g.1, g).
IsoWitness iso_f_product_crossed(const AlmostAction& aa);

// ---------------------------------------------------------------------------
// Gluings

/// f : G -> Y with f(1) = top and f(gh) ^ f(g) = f(g) ^ f(h).
class GluingMap {
 public:
  const FiniteMonoid& group() const noexcept { return group_; }
  const SemilatticeMonoid& semilattice() const noexcept { return semilattice_; }
  Elem operator()(Elem g) const noexcept { return f_[g]; }
  const std::vector<Elem>& values() const noexcept { return f_; }

 private:
  friend GluingMap validate_gluing_map(FiniteMonoid, SemilatticeMonoid,
                                       std::vector<Elem>);
  GluingMap(FiniteMonoid g, SemilatticeMonoid y, std::vector<Elem> f)
      : group_(std::move(g)), semilattice_(std::move(y)), f_(std::move(f)) {}

  FiniteMonoid group_;
  SemilatticeMonoid semilattice_;
  std::vector<Elem> f_;
};

struct GluingFailure {
  bool identity_not_top = false;
  Elem g = 0, h = 0;  // pair violating f(gh) ^ f(g) = f(g) ^ f(h)
};

std::optional<GluingFailure> gluing_failure(const FiniteMonoid& g,
                                            const SemilatticeMonoid& y,
                                            std::span<const Elem> f);

GluingMap validate_gluing_map(FiniteMonoid g, SemilatticeMonoid y,
                              std::vector<Elem> f);

struct Gluing {
  PairMonoid product;   // Gl(f), ordered by g, then y
  Extension extension;  // Y -> Gl(f) -> G, k(y) = (y, 1), e(y, g) = g
  WSSplitting splitting;  // s(g) = (f(g), g)
};

/// Gl(f) = {(y, g) : y <= f(g)} with (y, g)(z, h) = (y ^ z, gh). Asserts the
/// result is F-inverse and Clifford and that s(g) = (f(g), g) splits the
/// extension.
Gluing gluing(const GluingMap& gm);

/// The data an F-inverse monoid decomposes into.
struct FInverseData {
  IdempotentSemilattice idempotents;  // Y = E(M) and k
  Quotient group;                     // G = M/sigma and q
  std::vector<Elem> selector;         // s : G -> M, greatest element per class
  std::vector<Elem> local;            // idempotent of M -> index in Y
};

/// Throws PreconditionFailed unless M is F-inverse.
FInverseData f_inverse_data(const InverseMonoid& m);

struct CliffordGluing {
  GluingMap map;
  FInverseData data;
};

/// f(g) = s(g) s(g)^-1. Checks s(g)^-1 = s(g^-1) and s(g) s(h) <= s(gh)
/// along the way. Throws PreconditionFailed unless M is F-inverse Clifford.
CliffordGluing gluing_map_from_clifford(const InverseMonoid& m);

/// phi(x) = (x x^-1, [x]) : M -> Gl(f), psi(y, g) = k(y) s(g).
IsoWitness clifford_reconstruction(const InverseMonoid& m);

struct RecoveredAlmostAction {
  AlmostAction action;
  PairMonoid product;     // F(Y,G)
  IsoWitness explicit_iso;  // (y, g) -> y s(g)
  IsoWitness oracle_iso;    // brute_force_iso(F(Y,G), M)
};

/// G = M/sigma, Y = E(M), g . y = s(g) y s(g)^-1.
RecoveredAlmostAction almost_action_from_f_inverse(const InverseMonoid& m,
                                                   IsoSearchOptions options = {});

/// n1 ~_h n2 iff k(n1) s(h) = k(n2) s(h); h . n = least n' with
/// k(n') s(h) = s(h) k(n); chi(h1, h2) = least n with k(n) s(h1 h2) =
/// s(h1) s(h2). Verifies the crossed product against the middle object both
/// through ([n], h) -> k(n) s(h) and through brute_force_iso.
FactorSystem factor_system_from_extension(const Extension& ext,
                                          const WSSplitting& ws,
                                          IsoSearchOptions options = {});

/// ([n], h) -> k(n) s(h) as a certified isomorphism.
IsoWitness crossed_product_to_middle(const Extension& ext, const WSSplitting& ws,
                                     const FactorSystem& fs);

}  // namespace imw
