#include "imw/extension.hpp"

#include <algorithm>

namespace imw {

void Extension::validate() const {
  if (k.size() != kernel.size() || q.size() != middle.size()) {
    fail(ErrorCode::NotAnExtension, "map sizes do not match the monoids");
  }
  if (!is_injective(k.values, middle.size())) {
    fail(ErrorCode::NotAnExtension, "k is not injective");
  }
  if (auto w = homomorphism_witness(kernel, middle, k.values)) {
    fail(ErrorCode::NotAnExtension, "k is not a homomorphism",
         {w->first, w->second});
  }
  if (!is_surjective(q.values, quotient.size())) {
    fail(ErrorCode::NotAnExtension, "q is not surjective");
  }
  if (auto w = homomorphism_witness(middle, quotient, q.values)) {
    fail(ErrorCode::NotAnExtension, "q is not a homomorphism",
         {w->first, w->second});
  }
  std::vector<bool> in_image(middle.size(), false);
  for (Elem v : k.values) in_image[v] = true;
  for (Elem g = 0; g < middle.size(); ++g) {
    if (in_image[g] != (q(g) == quotient.identity())) {
      fail(ErrorCode::NotAnExtension,
           "kernel condition fails at " + middle.label(g), {g});
    }
  }
}

CanonicalExtension build_canonical_extension(const InverseMonoid& m) {
  auto sigma = min_group_congruence(m);
  auto [e, k] = idempotent_semilattice(m);
  auto [h, q] = quotient(m.base(), sigma);
  Elem one = q(m.identity());
  for (Elem x = 0; x < m.size(); ++x) {
    if (q(x) == one && !m.is_idempotent(x)) return {std::nullopt, x};
  }
  Extension ext{e.base(), m.base(), std::move(h), std::move(k), std::move(q)};
  ext.validate();
  return {std::move(ext), std::nullopt};
}

std::optional<std::pair<Elem, Elem>> splitting_witness(const Extension& ext,
                                                       std::span<const Elem> s) {
  for (Elem h = 0; h < ext.quotient.size(); ++h) {
    if (ext.q(s[h]) != h) return std::pair{h, s[h]};
  }
  for (Elem g = 0; g < ext.middle.size(); ++g) {
    Elem sg = s[ext.q(g)];
    bool reached = std::any_of(ext.k.values.begin(), ext.k.values.end(),
                               [&](Elem kn) { return ext.middle.mul(kn, sg) == g; });
    if (!reached) return std::pair{ext.q(g), g};
  }
  return std::nullopt;
}

WeaklySchreierResult is_weakly_schreier(const Extension& ext) {
  const auto& g = ext.middle;
  std::vector<std::vector<Elem>> fibers(ext.quotient.size());
  for (Elem x = 0; x < g.size(); ++x) fibers[ext.q(x)].push_back(x);

  // reach[x] marks every k(n) x.
  auto reachable_from = [&](Elem x) {
    std::vector<bool> reach(g.size(), false);
    for (Elem kn : ext.k.values) reach[g.mul(kn, x)] = true;
    return reach;
  };

  WeaklySchreierResult r;
  r.candidate_counts.assign(fibers.size(), 0);
  std::vector<Elem> s(fibers.size(), 0);
  for (Elem h = 0; h < fibers.size(); ++h) {
    bool chosen = false;
    for (Elem x : fibers[h]) {
      auto reach = reachable_from(x);
      bool covers = std::all_of(fibers[h].begin(), fibers[h].end(),
                                [&](Elem y) { return reach[y]; });
      if (!covers) continue;
      ++r.candidate_counts[h];
      if (!chosen) {
        s[h] = x;
        chosen = true;
      }
    }
    if (!chosen && !r.empty_fiber) {
      r.empty_fiber = h;
      r.fiber = fibers[h];
    }
  }
  if (!r.empty_fiber) {
    if (auto w = splitting_witness(ext, s)) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "fiber candidates do not form a splitting", {w->first, w->second});
    }
    r.splitting = WSSplitting{MonoidMap{std::move(s), MapKind::function}};
  }
  return r;
}

WeaklySchreierIffFInverse weakly_schreier_iff_f_inverse(const InverseMonoid& m) {
  WeaklySchreierIffFInverse report;
  auto canonical = build_canonical_extension(m);
  if (!canonical.ok()) return report;
  report.e_unitary = true;

  auto fi = is_f_inverse(m);
  auto ws = is_weakly_schreier(*canonical.extension);
  report.f_inverse = fi.holds;
  report.weakly_schreier = ws.ok();
  report.agree = report.f_inverse == report.weakly_schreier;
  if (report.f_inverse && report.weakly_schreier) {
    // Both index classes by the same normalized sigma.
    report.selector_matches = fi.selector == ws.splitting->s.values;
    report.candidates_unique =
        std::all_of(ws.candidate_counts.begin(), ws.candidate_counts.end(),
                    [](std::size_t c) { return c == 1; });
  }
  return report;
}

Cosplitting cosplit_retraction(const InverseMonoid& m) {
  auto canonical = build_canonical_extension(m);
  if (!canonical.ok()) {
    fail(ErrorCode::PreconditionFailed,
         "canonical extension does not exist (not E-unitary)",
         {*canonical.kernel_mismatch});
  }
  const auto& ext = *canonical.extension;
  std::vector<Elem> local(m.size(), 0);
  for (Elem i = 0; i < ext.k.size(); ++i) local[ext.k(i)] = i;

  Cosplitting c;
  c.ell.kind = MapKind::function;
  c.ell.values.resize(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    c.ell.values[x] = local[m.mul(x, m.inverse(x))];
  }
  for (Elem n = 0; n < ext.kernel.size(); ++n) {
    if (c.ell(ext.k(n)) != n) {
      fail(ErrorCode::InternalCharacterizationFailure,
           "ell is not a retraction of k", {n});
    }
  }
  c.is_homomorphism = is_homomorphism(m.base(), ext.kernel, c.ell.values);
  if (c.is_homomorphism) c.ell.kind = MapKind::homomorphism;
  return c;
}

}  // namespace imw
