#pragma once

// Analysis reports for the CLI: what `check`, `extension` and `decompose`
// print, as sorted-key JSON or as a plain table.

#include <optional>
#include <string>
#include <vector>

#include "imw/constructions.hpp"
#include "imw/mtab.hpp"

namespace imw {

struct Verdict {
  bool holds = true;
  std::vector<Elem> witness;  // element indices; empty when holds
  std::string detail;
};

struct AnalysisReport {
  std::string name;
  FiniteMonoid monoid = FiniteMonoid::validate(1, {0}, 0);
  Verdict inverse;
  /// Only computed for inverse monoids.
  std::optional<Verdict> e_unitary, f_inverse, clifford;
  /// Only defined when the canonical extension exists (E-unitary).
  std::optional<Verdict> weakly_schreier;
  std::vector<std::vector<Elem>> sigma_classes;
  std::vector<Elem> idempotents;
  std::vector<std::pair<Elem, Elem>> order_pairs;  // strict x < y
  std::vector<Elem> max_selector;                  // per sigma class, when F-inverse
  std::optional<std::vector<Elem>> gluing_map;     // f per sigma class, as elements of M
  bool maximal_reading_diverges = false;

  /// Every computed verdict holds.
  bool all_hold() const;
};

AnalysisReport analyze(const FiniteMonoid& m, std::string name);

Json report_to_json(const AnalysisReport& r);
std::string report_to_human(const AnalysisReport& r);

struct ExtensionReport {
  std::string name;
  FiniteMonoid monoid = FiniteMonoid::validate(1, {0}, 0);
  Verdict extension;  // canonical extension exists; witness = kernel mismatch
  std::vector<Elem> kernel;            // k(E(M)) in M
  std::vector<Elem> quotient_map;      // q : M -> M/sigma
  std::optional<Verdict> weakly_schreier;
  std::vector<Elem> splitting;         // s : M/sigma -> M
  std::vector<std::size_t> candidate_counts;
  std::vector<Elem> cosplitting;       // ell : M -> M, image in E(M)
  bool cosplitting_is_homomorphism = false;
  bool iff_consistent = false;

  bool ok() const;
};

/// Throws the validation error when m is not inverse.
ExtensionReport analyze_extension(const FiniteMonoid& m, std::string name);

Json extension_report_to_json(const ExtensionReport& r);
std::string extension_report_to_human(const ExtensionReport& r);

struct Decomposition {
  std::string name;
  Verdict f_inverse;
  std::optional<AlmostAction> almost_action;
  std::optional<FactorSystem> factor_system;
  std::optional<GluingMap> gluing_map;  // Clifford only
};

Decomposition decompose(const FiniteMonoid& m, std::string name,
                        IsoSearchOptions options = {});

Json decomposition_to_json(const Decomposition& d);
std::string decomposition_to_human(const Decomposition& d);

}  // namespace imw
