#include "imw/report.hpp"

#include <iomanip>
#include <sstream>

#include "imw/extension.hpp"

namespace imw {

namespace {

std::vector<std::string> labels_of(const FiniteMonoid& m, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(m.label(x));
  return out;
}

std::string label_list(const FiniteMonoid& m, const std::vector<Elem>& xs,
                       const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += m.label(xs[i]);
  }
  return out;
}

Json elements_json(const FiniteMonoid& m, const std::vector<Elem>& xs) {
  return Json{{"indices", xs}, {"labels", labels_of(m, xs)}};
}

Json verdict_json(const FiniteMonoid& m, const std::optional<Verdict>& v) {
  if (!v) return nullptr;
  return Json{{"holds", v->holds},
              {"witness", elements_json(m, v->witness)},
              {"detail", v->detail}};
}

void verdict_row(std::ostream& out, const FiniteMonoid& m, const char* name,
                 const std::optional<Verdict>& v) {
  out << "  " << std::left << std::setw(17) << name;
  if (!v) {
    out << "n/a\n";
    return;
  }
  out << (v->holds ? "yes" : "no");
  if (!v->witness.empty() || !v->detail.empty()) out << (v->holds ? "   " : "    ");
  if (!v->witness.empty()) out << "witness " << label_list(m, v->witness, ", ");
  if (!v->detail.empty()) out << (v->witness.empty() ? "" : "  ") << "(" << v->detail << ")";
  out << "\n";
}

Verdict from_error(const Error& e) {
  return {false, e.witness(), e.what()};
}


void table_block(std::ostream& out, const std::string& title, const FiniteMonoid& rows,
                 const FiniteMonoid& cols, const FiniteMonoid& values,
                 const std::vector<Elem>& flat) {
  out << title << "\n";
  std::size_t w = 4;
  for (Elem x = 0; x < rows.size(); ++x) w = std::max(w, rows.label(x).size() + 2);
  for (Elem x = 0; x < cols.size(); ++x) w = std::max(w, cols.label(x).size() + 2);
  for (Elem x = 0; x < values.size(); ++x) w = std::max(w, values.label(x).size() + 2);
  out << "  " << std::setw(static_cast<int>(w)) << "";
  for (Elem c = 0; c < cols.size(); ++c) out << std::setw(static_cast<int>(w)) << cols.label(c);
  out << "\n";
  for (Elem r = 0; r < rows.size(); ++r) {
    out << "  " << std::setw(static_cast<int>(w)) << rows.label(r);
    for (Elem c = 0; c < cols.size(); ++c) {
      out << std::setw(static_cast<int>(w)) << values.label(flat[r * cols.size() + c]);
    }
    out << "\n";
  }
}

}  // namespace

bool AnalysisReport::all_hold() const {
  auto ok = [](const std::optional<Verdict>& v) { return !v || v->holds; };
  return inverse.holds && ok(e_unitary) && ok(f_inverse) && ok(clifford) &&
         ok(weakly_schreier);
}

AnalysisReport analyze(const FiniteMonoid& m, std::string name) {
  AnalysisReport r;
  r.name = std::move(name);
  r.monoid = m;
  std::optional<InverseMonoid> inv;
  try {
    inv = validate_inverse(m);
  } catch (const Error& e) {
    r.inverse = from_error(e);
    return r;
  }

  auto eu = is_e_unitary(*inv);
  r.e_unitary = Verdict{eu.holds, {}, {}};
  if (eu.witness) {
    r.e_unitary->witness = {eu.witness->first, eu.witness->second};
    r.e_unitary->detail = "x e is idempotent for idempotent e, x is not";
  }

  auto fi = is_f_inverse(*inv);
  r.f_inverse = Verdict{fi.holds, {}, {}};
  if (!fi.holds) {
    r.f_inverse->witness = fi.failing_maximals;
    r.f_inverse->detail = "sigma class " + std::to_string(fi.failing_class.value_or(0)) +
                          " has no greatest element; maximal elements listed";
  }
  r.maximal_reading_diverges = fi.maximal_reading_diverges;
  r.sigma_classes = fi.sigma.members();
  if (fi.holds) r.max_selector = fi.selector;

  auto cl = is_clifford(*inv);
  r.clifford = Verdict{cl.holds, {}, {}};
  if (cl.witness) {
    r.clifford->witness = {cl.witness->first, cl.witness->second};
    r.clifford->detail = "idempotent e does not commute with x";
  }

  auto canon = build_canonical_extension(*inv);
  if (canon.ok()) {
    auto ws = is_weakly_schreier(*canon.extension);
    r.weakly_schreier = Verdict{ws.ok(), {}, {}};
    if (!ws.ok()) {
      r.weakly_schreier->witness = ws.fiber;
      r.weakly_schreier->detail = "EmptyCandidateFiber: fiber over sigma class " +
                                  std::to_string(ws.empty_fiber.value_or(0)) +
                                  " has no candidate";
    }
  }

  r.idempotents = inv->idempotents();
  r.order_pairs = natural_order(*inv).strict_pairs();

  if (fi.holds && cl.holds) {
    auto cg = gluing_map_from_clifford(*inv);
    std::vector<Elem> f;
    for (Elem y : cg.map.values()) f.push_back(cg.data.idempotents.embedding(y));
    r.gluing_map = std::move(f);
  }
  return r;
}

Json report_to_json(const AnalysisReport& r) {
  const auto& m = r.monoid;
  Json order = Json::array();
  for (auto [x, y] : r.order_pairs) order.push_back({x, y});
  Json sigma = Json::array();
  for (const auto& c : r.sigma_classes) sigma.push_back(c);
  return Json{
      {"schema", kJsonSchema},
      {"kind", "analysis"},
      {"name", r.name},
      {"n", m.size()},
      {"labels", labels_of(m, [&] {
         std::vector<Elem> all(m.size());
         for (Elem x = 0; x < m.size(); ++x) all[x] = x;
         return all;
       }())},
      {"verdicts",
       {{"inverse", verdict_json(m, r.inverse)},
        {"e_unitary", verdict_json(m, r.e_unitary)},
        {"f_inverse", verdict_json(m, r.f_inverse)},
        {"clifford", verdict_json(m, r.clifford)},
        {"weakly_schreier", verdict_json(m, r.weakly_schreier)}}},
      {"sigma_classes", sigma},
      {"idempotents", r.idempotents},
      {"natural_order", order},
      {"max_selector", r.f_inverse && r.f_inverse->holds ? Json(r.max_selector) : Json(nullptr)},
      {"gluing_map", r.gluing_map ? Json(*r.gluing_map) : Json(nullptr)},
      {"maximal_reading_diverges", r.maximal_reading_diverges},
      {"all_hold", r.all_hold()}};
}

std::string report_to_human(const AnalysisReport& r) {
  const auto& m = r.monoid;
  std::ostringstream out;
  out << r.name << "  n=" << m.size() << "\n";
  verdict_row(out, m, "inverse", r.inverse);
  verdict_row(out, m, "e_unitary", r.e_unitary);
  verdict_row(out, m, "f_inverse", r.f_inverse);
  verdict_row(out, m, "clifford", r.clifford);
  verdict_row(out, m, "weakly_schreier", r.weakly_schreier);
  if (!r.inverse.holds) return out.str();
  out << "idempotents      " << label_list(m, r.idempotents) << "\n";
  out << "sigma classes   ";
  for (const auto& c : r.sigma_classes) out << " {" << label_list(m, c) << "}";
  out << "\n";
  out << "natural order   ";
  if (r.order_pairs.empty()) out << " (discrete)";
  for (auto [x, y] : r.order_pairs) out << " " << m.label(x) << "<" << m.label(y);
  out << "\n";
  if (r.f_inverse && r.f_inverse->holds) {
    out << "max selector     " << label_list(m, r.max_selector) << "\n";
  }
  if (r.gluing_map) out << "gluing map       " << label_list(m, *r.gluing_map) << "\n";
  if (r.maximal_reading_diverges) {
    out << "note             some sigma class has several maximal elements\n";
  }
  return out.str();
}

bool ExtensionReport::ok() const {
  return extension.holds && weakly_schreier && weakly_schreier->holds;
}

ExtensionReport analyze_extension(const FiniteMonoid& m, std::string name) {
  auto inv = validate_inverse(m);
  ExtensionReport r;
  r.name = std::move(name);
  r.monoid = m;
  auto canon = build_canonical_extension(inv);
  if (!canon.ok()) {
    r.extension = {false, {*canon.kernel_mismatch},
                   "NotAnExtension: sigma-kernel element is not idempotent"};
    return r;
  }
  const auto& ext = *canon.extension;
  r.kernel = ext.k.values;
  r.quotient_map = ext.q.values;
  auto ws = is_weakly_schreier(ext);
  r.candidate_counts = ws.candidate_counts;
  r.weakly_schreier = Verdict{ws.ok(), {}, {}};
  if (ws.ok()) {
    r.splitting = ws.splitting->s.values;
  } else {
    r.weakly_schreier->witness = ws.fiber;
    r.weakly_schreier->detail = "EmptyCandidateFiber: fiber over sigma class " +
                                std::to_string(ws.empty_fiber.value_or(0)) +
                                " has no candidate";
  }
  auto cs = cosplit_retraction(inv);
  for (Elem x = 0; x < m.size(); ++x) r.cosplitting.push_back(ext.k(cs.ell(x)));
  r.cosplitting_is_homomorphism = cs.is_homomorphism;
  r.iff_consistent = weakly_schreier_iff_f_inverse(inv).consistent();
  return r;
}

Json extension_report_to_json(const ExtensionReport& r) {
  const auto& m = r.monoid;
  return Json{{"schema", kJsonSchema},
              {"kind", "extension"},
              {"name", r.name},
              {"n", m.size()},
              {"extension", verdict_json(m, r.extension)},
              {"kernel", elements_json(m, r.kernel)},
              {"quotient_map", r.quotient_map},
              {"weakly_schreier", verdict_json(m, r.weakly_schreier)},
              {"splitting", r.weakly_schreier && r.weakly_schreier->holds
                                ? elements_json(m, r.splitting)
                                : Json(nullptr)},
              {"candidate_counts", r.candidate_counts},
              {"cosplitting", r.extension.holds ? elements_json(m, r.cosplitting)
                                                : Json(nullptr)},
              {"cosplitting_is_homomorphism", r.cosplitting_is_homomorphism},
              {"f_inverse_agrees", r.iff_consistent}};
}

std::string extension_report_to_human(const ExtensionReport& r) {
  const auto& m = r.monoid;
  std::ostringstream out;
  out << r.name << "  n=" << m.size() << "\n";
  verdict_row(out, m, "extension", r.extension);
  if (!r.extension.holds) return out.str();
  out << "  kernel           " << label_list(m, r.kernel) << "\n";
  out << "  quotient         |M/sigma| = " << r.candidate_counts.size() << ", q =";
  for (Elem x = 0; x < m.size(); ++x) out << " " << m.label(x) << "->" << r.quotient_map[x];
  out << "\n";
  verdict_row(out, m, "weakly_schreier", r.weakly_schreier);
  out << "  candidates      ";
  for (auto c : r.candidate_counts) out << " " << c;
  out << "\n";
  if (!r.splitting.empty()) out << "  splitting        " << label_list(m, r.splitting) << "\n";
  out << "  cosplitting      " << label_list(m, r.cosplitting)
      << (r.cosplitting_is_homomorphism ? "  (homomorphism)" : "  (not a homomorphism)")
      << "\n";
  out << "  f_inverse agrees " << (r.iff_consistent ? "yes" : "no") << "\n";
  return out.str();
}

Decomposition decompose(const FiniteMonoid& m, std::string name,
                        IsoSearchOptions options) {
  auto inv = validate_inverse(m);
  Decomposition d;
  d.name = std::move(name);
  auto fi = is_f_inverse(inv);
  d.f_inverse = {fi.holds, fi.failing_maximals, {}};
  if (!fi.holds) {
    d.f_inverse.detail = "sigma class " + std::to_string(fi.failing_class.value_or(0)) +
                         " has no greatest element";
    return d;
  }
  d.almost_action = almost_action_from_f_inverse(inv, options).action;
  auto canon = build_canonical_extension(inv);
  auto ws = is_weakly_schreier(*canon.extension);
  if (!ws.ok()) {
    fail(ErrorCode::InternalCharacterizationFailure,
         "F-inverse monoid without a weakly Schreier splitting");
  }
  d.factor_system = factor_system_from_extension(*canon.extension, *ws.splitting, options);
  if (is_clifford(inv).holds) d.gluing_map = gluing_map_from_clifford(inv).map;
  return d;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j{{"schema", kJsonSchema},
         {"kind", "decomposition"},
         {"name", d.name},
         {"f_inverse", d.f_inverse.holds},
         {"almost_action", nullptr},
         {"factor_system", nullptr},
         {"gluing_map", nullptr}};
  if (d.almost_action) j["almost_action"] = almost_action_to_json(*d.almost_action);
  if (d.factor_system) j["factor_system"] = factor_system_to_json(*d.factor_system);
  if (d.gluing_map) j["gluing_map"] = gluing_map_to_json(*d.gluing_map);
  return j;
}

std::string decomposition_to_human(const Decomposition& d) {
  std::ostringstream out;
  out << d.name << "\n";
  if (!d.f_inverse.holds) {
    out << "not F-inverse: " << d.f_inverse.detail << "\n";
    return out.str();
  }
  if (d.almost_action) {
    const auto& aa = *d.almost_action;
    table_block(out, "almost action g.y (rows G, columns Y)", aa.group(),
                aa.semilattice().base(), aa.semilattice().base(), aa.table());
  }
  if (d.factor_system) {
    const auto& fs = *d.factor_system;
    out << "factor system classes\n";
    for (Elem h = 0; h < fs.acting().size(); ++h) {
      out << "  ~" << fs.acting().label(h) << " ";
      for (const auto& c : fs.sim(h).members()) out << " {" << label_list(fs.kernel(), c) << "}";
      out << "\n";
    }
    table_block(out, "factor system action h.n", fs.acting(), fs.kernel(), fs.kernel(),
                fs.act_table());
    table_block(out, "factor system chi(h1, h2)", fs.acting(), fs.acting(), fs.kernel(),
                fs.chi_table());
  }
  if (d.gluing_map) {
    const auto& gm = *d.gluing_map;
    out << "gluing map f\n";
    for (Elem g = 0; g < gm.group().size(); ++g) {
      out << "  f(" << gm.group().label(g) << ") = " << gm.semilattice().label(gm(g)) << "\n";
    }
  }
  return out.str();
}

}  // namespace imw
