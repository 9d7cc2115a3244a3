#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccheck/morita.hpp"
#include "nccheck/product.hpp"

namespace nccheck {

/// Condition name → verdict text ("true", "false", "undefined", "+1", "{0,2}", a dimension, ...).
using Verdicts = std::map<std::string, std::string>;

std::string verdict(bool b);
std::string verdict(const std::optional<bool>& b);
std::string verdict(const std::set<int>& ko);

/// Every check applicable to a single triple.
struct TripleAnalysis {
  Index hilbert_dim = 0;
  bool even = false;
  bool real = false;
  Index dim_algebra = 0;
  Index dim_one_forms = 0;
  Index dim_clifford = 0;
  std::optional<Index> dim_clifford_gamma;
  std::optional<bool> grading_in_clifford;

  std::optional<ConditionReport> order_zero, order_one, order_two;
  std::optional<SignReport> signs;
  std::set<int> ko;
  std::optional<MoritaClassification> classification;
  /// Spin ⇒ γ ∈ Cl ∧ even-spin, order two ∧ γ ∈ Cl ⇒ Ω¹ = 0, the Morita ⇒ order implications,
  /// and the Cl° inclusion equivalences.
  std::vector<ConditionReport> implications;

  Verdicts verdicts;
};

TripleAnalysis analyze(const FiniteSpectralTriple& t);

/// The product in both real-structure modes and the product-level identities.
struct ProductAnalysis {
  TripleAnalysis plain;
  std::optional<TripleAnalysis> koszul;
  std::vector<ConditionReport> checks;
  Verdicts verdicts;
};

ProductAnalysis analyze_product(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

}  // namespace nccheck
