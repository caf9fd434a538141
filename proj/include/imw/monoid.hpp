#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imw/common.hpp"

namespace imw {

/// A finite monoid stored as its full Cayley table.
///
/// Instances only come out of `validate`, so every FiniteMonoid in the
/// program is closed, associative and has a two-sided identity.
class FiniteMonoid {
 public:
  /// Checks closure, identity and associativity (exhaustive O(n^3)) and
  /// throws `Error` with the first witness in lexicographic order.
  static FiniteMonoid validate(std::size_t n, std::vector<Elem> table, Elem id,
                               std::vector<std::string> labels = {});
  static FiniteMonoid validate(const std::vector<std::vector<Elem>>& rows,
                               Elem id, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  Elem identity() const noexcept { return id_; }
  Elem mul(Elem x, Elem y) const noexcept { return table_[x * n_ + y]; }
  std::span<const Elem> row(Elem x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  std::span<const Elem> table() const noexcept { return table_; }
  std::vector<std::vector<Elem>> rows() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name; falls back to the decimal index.
  std::string label(Elem x) const;
  FiniteMonoid with_labels(std::vector<std::string> labels) const;

  bool is_commutative() const;
  /// Every element has a two-sided inverse.
  bool is_group() const;
  bool is_idempotent(Elem x) const noexcept { return mul(x, x) == x; }

  /// Table and identity equality; labels are cosmetic and ignored.
  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.n_ == b.n_ && a.id_ == b.id_ && a.table_ == b.table_;
  }

 private:
  FiniteMonoid(std::size_t n, std::vector<Elem> table, Elem id,
               std::vector<std::string> labels)
      : n_(n), table_(std::move(table)), id_(id), labels_(std::move(labels)) {}

  std::size_t n_;
  std::vector<Elem> table_;
  Elem id_;
  std::vector<std::string> labels_;
};

/// Returns the first (x, y, z) with (xy)z != x(yz), if any.
std::optional<std::vector<Elem>> associativity_witness(
    std::size_t n, std::span<const Elem> table);

enum class MapKind { function, homomorphism };

/// A map between two monoids, stored as an index vector. The monoids
/// themselves are owned by whatever structure the map belongs to.
struct MonoidMap {
  std::vector<Elem> values;
  MapKind kind = MapKind::function;

  Elem operator()(Elem x) const { return values[x]; }
  std::size_t size() const noexcept { return values.size(); }
};

/// First (x, y) with f(xy) != f(x)f(y); {id, id} when f(id) != id.
std::optional<std::pair<Elem, Elem>> homomorphism_witness(
    const FiniteMonoid& source, const FiniteMonoid& target,
    std::span<const Elem> values);
bool is_homomorphism(const FiniteMonoid& source, const FiniteMonoid& target,
                     std::span<const Elem> values);
bool is_injective(std::span<const Elem> values, std::size_t target_size);
bool is_surjective(std::span<const Elem> values, std::size_t target_size);

/// Equivalence on a monoid's elements, normalized so that class indices are
/// contiguous and numbered by first occurrence.
class Congruence {
 public:
  /// Normalizes arbitrary class labels. Does not check compatibility.
  static Congruence from_labels(std::span<const Elem> labels);
  static Congruence identity(std::size_t n);
  static Congruence universal(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return count_; }
  Elem class_of(Elem x) const noexcept { return class_of_[x]; }
  const std::vector<Elem>& classes() const noexcept { return class_of_; }
  bool related(Elem a, Elem b) const noexcept {
    return class_of_[a] == class_of_[b];
  }
  /// Members of each class, ascending.
  std::vector<std::vector<Elem>> members() const;

  /// First (a, b, x) with a ~ b but xa !~ xb or ax !~ bx.
  std::optional<std::vector<Elem>> compatibility_witness(
      const FiniteMonoid& m) const;

  /// Meet in the lattice of equivalences.
  Congruence intersect(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Congruence(std::vector<Elem> class_of, std::size_t count)
      : class_of_(std::move(class_of)), count_(count) {}

  std::vector<Elem> class_of_;
  std::size_t count_ = 0;
};

struct Quotient {
  FiniteMonoid monoid;
  MonoidMap map;  // surjective homomorphism onto `monoid`
};

/// M/theta with the class map. Throws NotACongruence on incompatibility.
Quotient quotient(const FiniteMonoid& m, const Congruence& theta);

/// Componentwise product; element (a, b) has index a * |B| + b.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

struct Submonoid {
  FiniteMonoid monoid;
  MonoidMap embedding;  // injective homomorphism into the parent
};

/// Closure of subset + {id}; elements keep the parent's index order.
Submonoid generated_submonoid(const FiniteMonoid& m,
                              std::span<const Elem> subset);

/// Group inverse of every element, or nullopt when some element has none.
std::optional<std::vector<Elem>> group_inverses(const FiniteMonoid& m);

}  // namespace imw
