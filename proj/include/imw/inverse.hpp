#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "imw/monoid.hpp"

namespace imw {

/// A finite monoid in which every element has exactly one generalized
/// inverse (x y x = x and y x y = y).
class InverseMonoid {
 public:
  const FiniteMonoid& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Elem identity() const noexcept { return base_.identity(); }
  Elem mul(Elem x, Elem y) const noexcept { return base_.mul(x, y); }
  Elem inverse(Elem x) const noexcept { return inv_[x]; }
  const std::vector<Elem>& inverses() const noexcept { return inv_; }
  bool is_idempotent(Elem x) const noexcept { return base_.is_idempotent(x); }
  /// E(M), ascending.
  const std::vector<Elem>& idempotents() const noexcept { return idempotents_; }
  std::string label(Elem x) const { return base_.label(x); }

 private:
  friend InverseMonoid validate_inverse(const FiniteMonoid& m);
  InverseMonoid(FiniteMonoid base, std::vector<Elem> inv);

  FiniteMonoid base_;
  std::vector<Elem> inv_;
  std::vector<Elem> idempotents_;
};

/// Generalized inverses of x: every y with x y x = x and y x y = y.
std::vector<Elem> generalized_inverses(const FiniteMonoid& m, Elem x);

/// Throws NoInverse(x) / NonUniqueInverse(x, y1, y2) for the first offending
/// element, and IdempotentsDoNotCommute(e, f) if the cross-check disagrees.
InverseMonoid validate_inverse(const FiniteMonoid& m);

/// Commutative monoid of idempotents. Multiplication is the meet and the
/// identity is the top element.
class SemilatticeMonoid {
 public:
  static SemilatticeMonoid validate(FiniteMonoid m);

  const FiniteMonoid& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Elem top() const noexcept { return base_.identity(); }
  Elem meet(Elem x, Elem y) const noexcept { return base_.mul(x, y); }
  bool leq(Elem x, Elem y) const noexcept { return order_[x * size() + y] != 0; }
  std::string label(Elem x) const { return base_.label(x); }

 private:
  explicit SemilatticeMonoid(FiniteMonoid m);

  FiniteMonoid base_;
  std::vector<std::uint8_t> order_;
};

struct IdempotentSemilattice {
  SemilatticeMonoid semilattice;
  MonoidMap embedding;  // k : E(M) -> M
};

IdempotentSemilattice idempotent_semilattice(const InverseMonoid& m);

/// x <= y iff x = e y for some idempotent e.
class NaturalOrder {
 public:
  std::size_t size() const noexcept { return n_; }
  bool leq(Elem x, Elem y) const noexcept { return leq_[x * n_ + y] != 0; }
  /// Pairs (x, y) with x < y, lexicographic.
  std::vector<std::pair<Elem, Elem>> strict_pairs() const;
  /// Maximal elements of `subset` under the order.
  std::vector<Elem> maximal_in(const std::vector<Elem>& subset) const;

 private:
  friend NaturalOrder natural_order(const InverseMonoid& m);
  NaturalOrder(std::size_t n, std::vector<std::uint8_t> leq)
      : n_(n), leq_(std::move(leq)) {}

  std::size_t n_;
  std::vector<std::uint8_t> leq_;
};

NaturalOrder natural_order(const InverseMonoid& m);

/// sigma: a ~ b iff e a = e b for some idempotent e. The result is checked
/// to be a congruence with a group quotient.
Congruence min_group_congruence(const InverseMonoid& m);

struct EUnitaryVerdict {
  bool holds = true;
  // (x, e): e and x e idempotent, x not.
  std::optional<std::pair<Elem, Elem>> witness;
};

EUnitaryVerdict is_e_unitary(const InverseMonoid& m);

struct FInverseVerdict {
  bool holds = true;
  Congruence sigma = Congruence::identity(0);
  /// s : M/sigma -> M, greatest element of each class (when holds).
  std::vector<Elem> selector;
  /// First class without a greatest element, and its maximal elements.
  std::optional<Elem> failing_class;
  std::vector<Elem> failing_maximals;
  /// Some class has more than one maximal element; the literal "has a
  /// maximal element" reading would still accept the monoid.
  bool maximal_reading_diverges = false;
};

FInverseVerdict is_f_inverse(const InverseMonoid& m);

struct CliffordVerdict {
  bool holds = true;
  // (e, x) with e idempotent and e x != x e.
  std::optional<std::pair<Elem, Elem>> witness;
};

CliffordVerdict is_clifford(const InverseMonoid& m);

}  // namespace imw
