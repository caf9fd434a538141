#include "imw/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "imw/kernels.hpp"

namespace imw {

std::optional<std::vector<Elem>> associativity_witness(
    std::size_t n, std::span<const Elem> table) {
  for (Elem x = 0; x < n; ++x) {
    auto row_x = table.subspan(x * n, n);
    for (Elem y = 0; y < n; ++y) {
      auto row_y = table.subspan(y * n, n);
      auto row_xy = table.subspan(static_cast<std::size_t>(row_x[y]) * n, n);
      // (xy)z against x(yz) for every z at once.
      std::size_t z = kernels::first_gather_mismatch(row_xy, row_x, row_y);
      if (z < n) return std::vector<Elem>{x, y, static_cast<Elem>(z)};
    }
  }
  return std::nullopt;
}

FiniteMonoid FiniteMonoid::validate(std::size_t n, std::vector<Elem> table,
                                    Elem id, std::vector<std::string> labels) {
  if (n == 0) fail(ErrorCode::BadShape, "monoid must have at least one element");
  if (table.size() != n * n) {
    fail(ErrorCode::BadShape, "table has " + std::to_string(table.size()) +
                                  " entries, expected " + std::to_string(n * n));
  }
  if (!labels.empty() && labels.size() != n) {
    fail(ErrorCode::BadShape, "expected " + std::to_string(n) + " labels");
  }
  if (id >= n) {
    fail(ErrorCode::IndexOutOfRange,
         "identity index " + std::to_string(id) + " out of range", {id});
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      Elem x = static_cast<Elem>(i / n), y = static_cast<Elem>(i % n);
      fail(ErrorCode::IndexOutOfRange,
           "entry table[" + std::to_string(x) + "][" + std::to_string(y) +
               "] = " + std::to_string(table[i]) + " out of range",
           {x, y});
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (table[id * n + x] != x || table[x * n + id] != x) {
      fail(ErrorCode::NotIdentity,
           std::to_string(id) + " is not an identity for " + std::to_string(x),
           {x});
    }
  }
  if (auto w = associativity_witness(n, table)) {
    const auto& t = *w;
    fail(ErrorCode::NotAssociative,
         "(" + std::to_string(t[0]) + "*" + std::to_string(t[1]) + ")*" +
             std::to_string(t[2]) + " != " + std::to_string(t[0]) + "*(" +
             std::to_string(t[1]) + "*" + std::to_string(t[2]) + ")",
         t);
  }
  return FiniteMonoid(n, std::move(table), id, std::move(labels));
}

FiniteMonoid FiniteMonoid::validate(const std::vector<std::vector<Elem>>& rows,
                                    Elem id, std::vector<std::string> labels) {
  std::size_t n = rows.size();
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      fail(ErrorCode::BadShape, "row " + std::to_string(x) + " has " +
                                    std::to_string(rows[x].size()) +
                                    " entries, expected " + std::to_string(n));
    }
    table.insert(table.end(), rows[x].begin(), rows[x].end());
  }
  return validate(n, std::move(table), id, std::move(labels));
}

std::vector<std::vector<Elem>> FiniteMonoid::rows() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(n_);
  for (Elem x = 0; x < n_; ++x) {
    auto r = row(x);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::string FiniteMonoid::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

FiniteMonoid FiniteMonoid::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    fail(ErrorCode::BadShape, "expected " + std::to_string(n_) + " labels");
  }
  return FiniteMonoid(n_, table_, id_, std::move(labels));
}

bool FiniteMonoid::is_commutative() const {
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = x + 1; y < n_; ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

bool FiniteMonoid::is_group() const { return group_inverses(*this).has_value(); }

std::optional<std::vector<Elem>> group_inverses(const FiniteMonoid& m) {
  std::vector<Elem> inv(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool found = false;
    for (Elem y = 0; y < m.size() && !found; ++y) {
      if (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity()) {
        inv[x] = y;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return inv;
}

std::optional<std::pair<Elem, Elem>> homomorphism_witness(
    const FiniteMonoid& source, const FiniteMonoid& target,
    std::span<const Elem> values) {
  if (values.size() != source.size()) {
    fail(ErrorCode::BadShape, "map has " + std::to_string(values.size()) +
                                  " values, source has " +
                                  std::to_string(source.size()));
  }
  for (Elem x = 0; x < values.size(); ++x) {
    if (values[x] >= target.size()) {
      fail(ErrorCode::IndexOutOfRange,
           "map value for " + std::to_string(x) + " out of range", {x});
    }
  }
  if (values[source.identity()] != target.identity()) {
    return std::pair{source.identity(), source.identity()};
  }
  for (Elem x = 0; x < source.size(); ++x) {
    // f(x*y) against f(x)*f(y) across the whole row.
    std::size_t y = kernels::first_gather2_mismatch(
        values, source.row(x), target.row(values[x]), values);
    if (y < source.size()) return std::pair{x, static_cast<Elem>(y)};
  }
  return std::nullopt;
}

bool is_homomorphism(const FiniteMonoid& source, const FiniteMonoid& target,
                     std::span<const Elem> values) {
  return !homomorphism_witness(source, target, values).has_value();
}

bool is_injective(std::span<const Elem> values, std::size_t target_size) {
  std::vector<bool> seen(target_size, false);
  for (Elem v : values) {
    if (v >= target_size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_surjective(std::span<const Elem> values, std::size_t target_size) {
  std::vector<bool> seen(target_size, false);
  std::size_t hit = 0;
  for (Elem v : values) {
    if (v < target_size && !seen[v]) {
      seen[v] = true;
      ++hit;
    }
  }
  return hit == target_size;
}

Congruence Congruence::from_labels(std::span<const Elem> labels) {
  std::vector<Elem> class_of(labels.size());
  std::vector<std::pair<Elem, Elem>> renumber;  // (label, class)
  Elem next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(renumber.begin(), renumber.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == renumber.end()) {
      renumber.emplace_back(labels[i], next);
      class_of[i] = next++;
    } else {
      class_of[i] = it->second;
    }
  }
  return Congruence(std::move(class_of), next);
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Elem> c(n);
  std::iota(c.begin(), c.end(), Elem{0});
  return Congruence(std::move(c), n);
}

Congruence Congruence::universal(std::size_t n) {
  return Congruence(std::vector<Elem>(n, 0), n == 0 ? 0 : 1);
}

std::vector<std::vector<Elem>> Congruence::members() const {
  std::vector<std::vector<Elem>> out(count_);
  for (Elem x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

std::optional<std::vector<Elem>> Congruence::compatibility_witness(
    const FiniteMonoid& m) const {
  if (m.size() != class_of_.size()) {
    fail(ErrorCode::BadShape, "congruence size does not match monoid");
  }
  auto groups = members();
  for (const auto& cls : groups) {
    Elem a = cls.front();
    for (std::size_t i = 1; i < cls.size(); ++i) {
      Elem b = cls[i];
      for (Elem x = 0; x < m.size(); ++x) {
        if (!related(m.mul(x, a), m.mul(x, b)) ||
            !related(m.mul(a, x), m.mul(b, x))) {
          return std::vector<Elem>{a, b, x};
        }
      }
    }
  }
  return std::nullopt;
}

Congruence Congruence::intersect(const Congruence& other) const {
  std::vector<Elem> pair_labels(size());
  for (Elem x = 0; x < size(); ++x) {
    pair_labels[x] =
        class_of_[x] * static_cast<Elem>(other.class_count()) + other.class_of(x);
  }
  return from_labels(pair_labels);
}

Quotient quotient(const FiniteMonoid& m, const Congruence& theta) {
  if (auto w = theta.compatibility_witness(m)) {
    fail(ErrorCode::NotACongruence,
         "classes of " + std::to_string((*w)[0]) + " and " +
             std::to_string((*w)[1]) + " separate under multiplication by " +
             std::to_string((*w)[2]),
         *w);
  }
  std::size_t k = theta.class_count();
  auto groups = theta.members();
  std::vector<Elem> table(k * k);
  for (Elem c = 0; c < k; ++c) {
    for (Elem d = 0; d < k; ++d) {
      table[c * k + d] = theta.class_of(m.mul(groups[c].front(), groups[d].front()));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Elem c = 0; c < k; ++c) labels.push_back("[" + m.label(groups[c].front()) + "]");
  auto q = FiniteMonoid::validate(k, std::move(table),
                                  theta.class_of(m.identity()), std::move(labels));
  return {std::move(q), MonoidMap{theta.classes(), MapKind::homomorphism}};
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (Elem a1 = 0; a1 < na; ++a1) {
    for (Elem b1 = 0; b1 < nb; ++b1) {
      Elem x = static_cast<Elem>(a1 * nb + b1);
      labels[x] = "(" + a.label(a1) + "," + b.label(b1) + ")";
      for (Elem a2 = 0; a2 < na; ++a2) {
        for (Elem b2 = 0; b2 < nb; ++b2) {
          Elem y = static_cast<Elem>(a2 * nb + b2);
          table[x * n + y] =
              static_cast<Elem>(a.mul(a1, a2) * nb + b.mul(b1, b2));
        }
      }
    }
  }
  return FiniteMonoid::validate(
      n, std::move(table), static_cast<Elem>(a.identity() * nb + b.identity()),
      std::move(labels));
}

Submonoid generated_submonoid(const FiniteMonoid& m,
                              std::span<const Elem> subset) {
  std::vector<bool> in(m.size(), false);
  std::vector<Elem> frontier{m.identity()};
  in[m.identity()] = true;
  for (Elem s : subset) {
    if (s >= m.size()) {
      fail(ErrorCode::IndexOutOfRange,
           "generator " + std::to_string(s) + " out of range", {s});
    }
    if (!in[s]) {
      in[s] = true;
      frontier.push_back(s);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < m.size(); ++x) {
      if (!in[x]) continue;
      for (Elem y = 0; y < m.size(); ++y) {
        if (in[y] && !in[m.mul(x, y)]) {
          in[m.mul(x, y)] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<Elem> elems;
  for (Elem x = 0; x < m.size(); ++x) {
    if (in[x]) elems.push_back(x);
  }
  std::vector<Elem> local(m.size(), 0);
  for (Elem i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  std::size_t k = elems.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> labels;
  for (Elem i = 0; i < k; ++i) {
    labels.push_back(m.label(elems[i]));
    for (Elem j = 0; j < k; ++j) table[i * k + j] = local[m.mul(elems[i], elems[j])];
  }
  auto sub = FiniteMonoid::validate(k, std::move(table), local[m.identity()],
                                    std::move(labels));
  return {std::move(sub), MonoidMap{std::move(elems), MapKind::homomorphism}};
}

}  // namespace imw
