#include "imw/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "imw/inverse.hpp"

namespace imw {

IsoWitness verify_iso(const FiniteMonoid& a, const FiniteMonoid& b,
                      std::vector<Elem> forward, std::vector<Elem> backward) {
  if (forward.size() != a.size() || backward.size() != b.size()) {
    fail(ErrorCode::BadShape, "iso maps do not match the monoid sizes");
  }
  if (auto w = homomorphism_witness(a, b, forward)) {
    fail(ErrorCode::NotHomomorphism,
         "forward map fails at (" + a.label(w->first) + ", " +
             a.label(w->second) + ")",
         {w->first, w->second});
  }
  if (auto w = homomorphism_witness(b, a, backward)) {
    fail(ErrorCode::NotHomomorphism,
         "backward map fails at (" + b.label(w->first) + ", " +
             b.label(w->second) + ")",
         {w->first, w->second});
  }
  for (Elem x = 0; x < a.size(); ++x) {
    if (backward[forward[x]] != x) {
      fail(ErrorCode::NotInverse, "backward(forward(" + a.label(x) + ")) != " + a.label(x), {x});
    }
  }
  for (Elem y = 0; y < b.size(); ++y) {
    if (forward[backward[y]] != y) {
      fail(ErrorCode::NotInverse, "forward(backward(" + b.label(y) + ")) != " + b.label(y), {y});
    }
  }
  return {a, b, MonoidMap{std::move(forward), MapKind::homomorphism},
          MonoidMap{std::move(backward), MapKind::homomorphism}};
}

std::vector<ElementProfile> element_profiles(const FiniteMonoid& m) {
  std::vector<ElementProfile> out(m.size());
  std::vector<std::uint32_t> first_seen(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto& p = out[x];
    p.idempotent = m.is_idempotent(x);
    p.generalized_inverses =
        static_cast<std::uint32_t>(generalized_inverses(m, x).size());
    std::fill(first_seen.begin(), first_seen.end(), 0);
    Elem power = x;
    for (std::uint32_t i = 1;; ++i) {
      if (first_seen[power] != 0) {
        p.index = first_seen[power];
        p.period = i - first_seen[power];
        break;
      }
      first_seen[power] = i;
      power = m.mul(power, x);
    }
  }
  return out;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

class PropagatingSearch {
 public:
  PropagatingSearch(const FiniteMonoid& a, const FiniteMonoid& b)
      : a_(a),
        b_(b),
        pa_(element_profiles(a)),
        pb_(element_profiles(b)),
        map_(a.size(), kUnset),
        rev_(b.size(), kUnset) {}

  std::optional<std::vector<Elem>> run() {
    if (!assign(a_.identity(), b_.identity())) return std::nullopt;
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  bool search() {
    auto next = std::find(map_.begin(), map_.end(), kUnset);
    if (next == map_.end()) return true;
    Elem x = static_cast<Elem>(next - map_.begin());
    for (Elem y = 0; y < b_.size(); ++y) {
      if (rev_[y] != kUnset || pa_[x] != pb_[y]) continue;
      std::size_t mark = trail_.size();
      if (assign(x, y) && search()) return true;
      undo(mark);
    }
    return false;
  }

  // Assigns x -> y and closes the partial map under products of assigned
  // elements. False on conflict; the caller undoes the trail.
  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (map_[u] != kUnset) {
        if (map_[u] != v) return false;
        continue;
      }
      if (rev_[v] != kUnset || pa_[u] != pb_[v]) return false;
      map_[u] = v;
      rev_[v] = u;
      trail_.push_back(u);
      for (Elem w : trail_) {
        for (auto [l, r] : {std::pair{u, w}, std::pair{w, u}}) {
          Elem p = a_.mul(l, r);
          Elem img = b_.mul(map_[l], map_[r]);
          if (map_[p] == kUnset) {
            queue.emplace_back(p, img);
          } else if (map_[p] != img) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Elem u = trail_.back();
      trail_.pop_back();
      rev_[map_[u]] = kUnset;
      map_[u] = kUnset;
    }
  }

  const FiniteMonoid& a_;
  const FiniteMonoid& b_;
  std::vector<ElementProfile> pa_, pb_;
  std::vector<Elem> map_, rev_;
  std::vector<Elem> trail_;
};

std::optional<std::vector<Elem>> permutation_search(const FiniteMonoid& a,
                                                    const FiniteMonoid& b) {
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    if (is_homomorphism(a, b, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

std::optional<IsoWitness> brute_force_iso(const FiniteMonoid& a,
                                          const FiniteMonoid& b,
                                          IsoSearchOptions options) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > options.max_n) {
    fail(ErrorCode::SizeLimitExceeded,
         "iso search on " + std::to_string(a.size()) +
             " elements exceeds bound " + std::to_string(options.max_n),
         {static_cast<Elem>(a.size())});
  }
  auto forward = options.prune ? PropagatingSearch(a, b).run()
                               : permutation_search(a, b);
  if (!forward) return std::nullopt;
  std::vector<Elem> backward(b.size());
  for (Elem x = 0; x < a.size(); ++x) backward[(*forward)[x]] = x;
  return verify_iso(a, b, std::move(*forward), std::move(backward));
}

}  // namespace imw
