#include "imw/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "imw/extension.hpp"

namespace imw {

namespace {

constexpr std::size_t kMaxFailuresKept = 5;

void record(CriterionResult& c, const std::string& where, const std::string& what) {
  c.passed = false;
  if (c.failures.size() < kMaxFailuresKept) c.failures.push_back(where + ": " + what);
}

/// Runs one check, turning exceptions into failures.
void guarded(CriterionResult& c, const std::string& where,
             const std::function<std::optional<std::string>()>& check) {
  ++c.checked;
  try {
    if (auto failure = check()) record(c, where, *failure);
  } catch (const Error& e) {
    record(c, where, e.what());
  } catch (const std::exception& e) {
    record(c, where, e.what());
  }
}

std::vector<std::pair<std::string, FiniteMonoid>> grid_groups() {
  return {{"Z2", named::cyclic_group(2)},
          {"Z3", named::cyclic_group(3)},
          {"Z4", named::cyclic_group(4)},
          {"V4", named::klein_four()}};
}

std::vector<std::pair<std::string, SemilatticeMonoid>> grid_semilattices(std::size_t max_y) {
  std::vector<std::pair<std::string, SemilatticeMonoid>> out;
  std::size_t last_size = 0;
  char letter = 'a';
  for (auto& y : enumerate_semilattices(max_y)) {
    if (y.size() != last_size) {
      last_size = y.size();
      letter = 'a';
    }
    out.emplace_back("Y" + std::to_string(y.size()) + letter++, std::move(y));
  }
  return out;
}

std::string padded(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

template <typename T>
void sort_by_name(std::vector<T>& v, auto key) {
  std::stable_sort(v.begin(), v.end(),
                   [&](const T& a, const T& b) { return key(a) < key(b); });
}

CriterionResult extension_iff_e_unitary(const SuiteCorpus& corpus) {
  CriterionResult c{1, "canonical extension exists iff E-unitary", true, 0, {}, {}};
  std::vector<std::string> negatives;
  for (const auto& [name, m] : corpus.inverse_monoids) {
    guarded(c, name, [&, &name = name, &m = m]() -> std::optional<std::string> {
      auto inv = validate_inverse(m);
      auto canon = build_canonical_extension(inv);
      bool eu = is_e_unitary(inv).holds;
      if (canon.ok() != eu) return "extension " + std::string(canon.ok() ? "built" : "refused") +
                                   " but E-unitary is " + (eu ? "true" : "false");
      if (canon.ok()) canon.extension->validate();
      if (!eu) negatives.push_back(name);
      return std::nullopt;
    });
  }
  c.notes.push_back("not E-unitary: " + std::to_string(negatives.size()));
  if (std::find(negatives.begin(), negatives.end(), "builtin/B21") == negatives.end()) {
    record(c, "builtin/B21", "missing from the negative cases");
  }
  return c;
}

CriterionResult splitting_iff_f_inverse(const SuiteCorpus& corpus) {
  CriterionResult c{2, "weakly Schreier iff F-inverse on E-unitary instances", true, 0, {}, {}};
  std::vector<std::string> counterexamples;
  std::size_t e_unitary = 0;
  for (const auto& [name, m] : corpus.inverse_monoids) {
    auto inv = validate_inverse(m);
    if (!is_e_unitary(inv).holds) continue;
    ++e_unitary;
    guarded(c, name, [&, &name = name]() -> std::optional<std::string> {
      auto r = weakly_schreier_iff_f_inverse(inv);
      if (!r.agree) {
        return std::string("weakly Schreier ") + (r.weakly_schreier ? "holds" : "fails") +
               " but F-inverse " + (r.f_inverse ? "holds" : "fails");
      }
      if (r.f_inverse && !r.selector_matches) return "splitting is not the greatest selector";
      if (r.f_inverse && !r.candidates_unique) return "a fiber has several candidates";
      // Independent comparison of the splitting with the greatest elements.
      auto fi = is_f_inverse(inv);
      auto ws = is_weakly_schreier(*build_canonical_extension(inv).extension);
      if (fi.holds && ws.splitting->s.values != fi.selector) {
        return "splitting " + join(ws.splitting->s.values) + " != selector " +
               join(fi.selector);
      }
      if (!fi.holds) counterexamples.push_back(name);
      return std::nullopt;
    });
  }
  c.notes.push_back("E-unitary instances: " + std::to_string(e_unitary));
  std::string names;
  for (const auto& n : counterexamples) names += (names.empty() ? "" : " ") + n;
  c.notes.push_back("E-unitary, not F-inverse: " + std::to_string(counterexamples.size()) +
                    (names.empty() ? "" : " (" + names + ")"));
  if (std::find(counterexamples.begin(), counterexamples.end(), "builtin/M7") ==
      counterexamples.end()) {
    record(c, "builtin/M7", "missing from the E-unitary non-F-inverse cases");
  }
  return c;
}

CriterionResult almost_actions(const SuiteCorpus& corpus, const SuiteOptions& options) {
  CriterionResult c{3, "almost actions give factor systems with F(Y,G) = crossed product",
                    true, 0, {}, {}};
  IsoSearchOptions iso{options.max_iso_n, true};
  for (const auto& [name, aa] : corpus.almost_actions) {
    guarded(c, name, [&, &aa = aa]() -> std::optional<std::string> {
      auto fs = factor_system_from_almost_action(aa);
      if (auto f = factor_system_failure(fs.acting(), fs.kernel(), fs.sim_labels(),
                                         fs.act_table(), fs.chi_table())) {
        return "condition " + std::to_string(f->condition) + " fails at " + join(f->witness);
      }
      auto w = iso_f_product_crossed(aa);
      verify_iso(w.a, w.b, w.forward.values, w.backward.values);
      auto fp = f_product(aa);
      auto cp = crossed_product(fs);
      if (!(w.a == fp.monoid.base()) || !(w.b == cp.monoid)) {
        return std::string("certified isomorphism relates the wrong monoids");
      }
      if (!brute_force_iso(fp.monoid.base(), cp.monoid, iso)) {
        return std::string("brute force finds no isomorphism");
      }
      return std::nullopt;
    });
  }
  c.notes.push_back("almost actions: " + std::to_string(corpus.almost_actions.size()));
  return c;
}

CriterionResult gluings(const SuiteCorpus& corpus) {
  CriterionResult c{4, "Gl(f) is F-inverse Clifford and f is recovered", true, 0, {}, {}};
  for (const auto& [name, gm] : corpus.gluing_maps) {
    guarded(c, name, [&, &gm = gm]() -> std::optional<std::string> {
      auto gl = gluing(gm);
      const auto& m = gl.product.monoid;
      if (!is_f_inverse(m).holds) return std::string("Gl(f) is not F-inverse");
      if (!is_clifford(m).holds) return std::string("Gl(f) is not Clifford");
      auto cg = gluing_map_from_clifford(m);
      const Elem one = gm.group().identity();
      for (Elem g = 0; g < gm.group().size(); ++g) {
        Elem x = *gl.product.index_of(gm(g), g);
        Elem cls = cg.data.group.map(x);
        Elem recovered = cg.data.idempotents.embedding(cg.map(cls));
        if (recovered != *gl.product.index_of(gm(g), one)) {
          return "f differs at g = " + std::to_string(g);
        }
      }
      auto w = clifford_reconstruction(m);
      verify_iso(w.a, w.b, w.forward.values, w.backward.values);
      for (Elem x = 0; x < m.size(); ++x) {
        if (w.backward(w.forward(x)) != x) return "round trip moves " + std::to_string(x);
      }
      return std::nullopt;
    });
  }
  c.notes.push_back("gluing maps: " + std::to_string(corpus.gluing_maps.size()));
  return c;
}

CriterionResult abelian_gluings(const SuiteCorpus& corpus) {
  CriterionResult c{5, "Gl(f) over an abelian group is commutative", true, 0, {}, {}};
  for (const auto& [name, gm] : corpus.gluing_maps) {
    if (!gm.group().is_commutative()) continue;
    guarded(c, name, [&, &gm = gm]() -> std::optional<std::string> {
      auto gl = gluing(gm);
      const auto& m = gl.product.monoid.base();
      for (Elem x = 0; x < m.size(); ++x) {
        for (Elem y = x + 1; y < m.size(); ++y) {
          if (m.mul(x, y) != m.mul(y, x)) {
            return "xy != yx at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
          }
        }
      }
      return std::nullopt;
    });
  }
  return c;
}

CriterionResult sigma_minimality(const SuiteCorpus& corpus, const SuiteOptions& options) {
  CriterionResult c{6, "sigma is the least group congruence", true, 0, {}, {}};
  for (const auto& [name, m] : corpus.inverse_monoids) {
    if (m.size() > options.sigma_oracle_max_n) continue;
    guarded(c, name, [&, &m = m]() -> std::optional<std::string> {
      auto sigma = min_group_congruence(validate_inverse(m));
      auto meet = group_congruence_meet(m);
      if (!(sigma == meet)) {
        return "sigma " + join(sigma.classes()) + " != meet " + join(meet.classes());
      }
      return std::nullopt;
    });
  }
  return c;
}

CriterionResult factor_extraction(const SuiteCorpus& corpus, const SuiteOptions& options) {
  CriterionResult c{7, "factor systems extracted from weakly Schreier extensions", true, 0,
                    {}, {}};
  IsoSearchOptions iso{options.max_iso_n, true};
  for (const auto& [name, m] : corpus.inverse_monoids) {
    auto inv = validate_inverse(m);
    auto canon = build_canonical_extension(inv);
    if (!canon.ok()) continue;
    auto ws = is_weakly_schreier(*canon.extension);
    if (!ws.ok()) continue;
    guarded(c, name, [&, &m = m]() -> std::optional<std::string> {
      auto fs = factor_system_from_extension(*canon.extension, *ws.splitting, iso);
      if (auto f = factor_system_failure(fs.acting(), fs.kernel(), fs.sim_labels(),
                                         fs.act_table(), fs.chi_table())) {
        return "condition " + std::to_string(f->condition) + " fails";
      }
      if (!brute_force_iso(crossed_product(fs).monoid, m, iso)) {
        return std::string("crossed product is not isomorphic to M");
      }
      return std::nullopt;
    });
  }
  return c;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

Congruence group_congruence_meet(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  auto meet = Congruence::universal(n);
  // Restricted growth strings enumerate every set partition once.
  std::vector<Elem> rgs(n, 0);
  auto visit = [&](auto&& self, std::size_t i, Elem blocks) -> void {
    if (i == n) {
      auto theta = Congruence::from_labels(rgs);
      if (theta.compatibility_witness(m)) return;
      if (quotient(m, theta).monoid.is_group()) meet = meet.intersect(theta);
      return;
    }
    for (Elem b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max<Elem>(blocks, b + 1));
    }
  };
  visit(visit, 1, 1);
  return meet;
}

SuiteCorpus build_suite_corpus(const SuiteOptions& options) {
  SuiteCorpus corpus;
  for (const auto& inst : builtin_corpus()) {
    std::optional<FiniteMonoid> m = inst.monoid();
    if (const auto* aa = std::get_if<AlmostAction>(&inst.payload)) {
      m = f_product(*aa).monoid.base();
    } else if (const auto* gm = std::get_if<GluingMap>(&inst.payload)) {
      m = gluing(*gm).product.monoid.base();
    } else if (const auto* fs = std::get_if<FactorSystem>(&inst.payload)) {
      m = crossed_product(*fs).monoid;
    }
    corpus.inverse_monoids.push_back({"builtin/" + inst.name, *m});
  }
  std::size_t i = 0;
  for (const auto& m : enumerate_inverse_monoids(options.enumerate_max_n)) {
    corpus.inverse_monoids.push_back(
        {"enum/n" + std::to_string(m.size()) + "-" + padded(i++), m.base()});
  }
  auto ys = grid_semilattices(options.grid_max_y);
  for (const auto& [gname, g] : grid_groups()) {
    for (const auto& [yname, y] : ys) {
      std::size_t k = 0;
      for (auto& aa : enumerate_almost_actions(g, y, options.budget)) {
        std::string name = "F/" + gname + "/" + yname + "/" + padded(k++);
        corpus.inverse_monoids.push_back({name, f_product(aa).monoid.base()});
        corpus.almost_actions.emplace_back(name, std::move(aa));
      }
      k = 0;
      for (auto& gm : enumerate_gluing_maps(g, y, options.budget)) {
        std::string name = "Gl/" + gname + "/" + yname + "/" + padded(k++);
        corpus.inverse_monoids.push_back({name, gluing(gm).product.monoid.base()});
        corpus.gluing_maps.emplace_back(name, std::move(gm));
      }
    }
  }
  sort_by_name(corpus.inverse_monoids, [](const SuiteCorpus::Named& x) { return x.name; });
  sort_by_name(corpus.almost_actions, [](const auto& x) { return x.first; });
  sort_by_name(corpus.gluing_maps, [](const auto& x) { return x.first; });
  return corpus;
}

std::vector<CriterionResult> run_criteria(const SuiteCorpus& corpus,
                                          const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(extension_iff_e_unitary(corpus));
  out.push_back(splitting_iff_f_inverse(corpus));
  out.push_back(almost_actions(corpus, options));
  out.push_back(gluings(corpus));
  out.push_back(abelian_gluings(corpus));
  out.push_back(sigma_minimality(corpus, options));
  out.push_back(factor_extraction(corpus, options));
  return out;
}

namespace {

Json criteria_json(const std::vector<CriterionResult>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    arr.push_back(Json{{"id", c.id},
                       {"title", c.title},
                       {"passed", c.passed},
                       {"checked", c.checked},
                       {"notes", c.notes},
                       {"failures", c.failures}});
  }
  return arr;
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& options) {
  SuiteResult r;
  r.criteria = run_criteria(build_suite_corpus(options), options);
  auto first = criteria_json(r.criteria).dump();
  auto second = criteria_json(run_criteria(build_suite_corpus(options), options)).dump();
  CriterionResult det{8, "repeated runs serialize identically", first == second, 1, {}, {}};
  det.notes.push_back("bytes: " + std::to_string(first.size()));
  if (!det.passed) det.failures.push_back("second run differs from the first");
  r.criteria.push_back(std::move(det));
  return r;
}

Json suite_to_json(const SuiteResult& r) {
  return Json{{"schema", kJsonSchema},
              {"kind", "suite"},
              {"passed", r.passed()},
              {"criteria", criteria_json(r.criteria)}};
}

std::string suite_to_human(const SuiteResult& r) {
  std::ostringstream out;
  for (const auto& c : r.criteria) {
    out << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title
        << "  [checked " << c.checked << "]\n";
    for (const auto& n : c.notes) out << "      " << n << "\n";
    for (const auto& f : c.failures) out << "      failure " << f << "\n";
  }
  out << (r.passed() ? "all criteria passed" : "some criteria failed") << "\n";
  return out.str();
}

}  // namespace imw
