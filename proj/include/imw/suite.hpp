#pragma once

// The acceptance run behind `imw suite`: eight property checks over the
// builtin corpus, small enumerated inverse monoids and every almost action
// and gluing map of a small group on a small semilattice.

#include <string>
#include <vector>

#include "imw/corpus.hpp"
#include "imw/mtab.hpp"

namespace imw {

struct SuiteOptions {
  std::size_t budget = kDefaultBudget;
  std::size_t max_iso_n = 16;
  std::size_t enumerate_max_n = 4;    // enumerate_inverse_monoids bound
  std::size_t grid_max_y = 4;         // semilattices for the (G, Y) grid
  std::size_t sigma_oracle_max_n = 6;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> notes;     // counts, named witnesses
  std::vector<std::string> failures;  // first few, one line each
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool passed() const;
};

/// Instances the criteria range over, name-sorted.
struct SuiteCorpus {
  struct Named {
    std::string name;
    FiniteMonoid monoid;
  };
  std::vector<Named> inverse_monoids;
  std::vector<std::pair<std::string, AlmostAction>> almost_actions;
  std::vector<std::pair<std::string, GluingMap>> gluing_maps;
};

SuiteCorpus build_suite_corpus(const SuiteOptions& options);

/// Criteria 1-7.
std::vector<CriterionResult> run_criteria(const SuiteCorpus& corpus,
                                          const SuiteOptions& options);

/// Criteria 1-7, then criterion 8: the whole run repeated from scratch must
/// serialize to the same bytes.
SuiteResult run_suite(const SuiteOptions& options = {});

/// Intersection of all congruences of m with a group quotient, by set
/// partition enumeration. Meant for |m| <= 7.
Congruence group_congruence_meet(const FiniteMonoid& m);

Json suite_to_json(const SuiteResult& r);
std::string suite_to_human(const SuiteResult& r);

}  // namespace imw
