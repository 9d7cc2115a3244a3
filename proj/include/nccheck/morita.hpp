#pragma once

#include <optional>
#include <string>

#include "nccheck/triple.hpp"

namespace nccheck {

/// Outcome of one J-implemented Morita test B1 ~_J B2, i.e. B1 = (B2°)′.
///
/// The test is decided either as B1 = (B2°)′ or, equivalently, as B1′ = B2°;
/// whichever side has the larger algebra gets commuted. `lhs` and `rhs` name
/// the two subspaces actually compared.
struct MoritaResult {
  bool holds = false;
  std::string lhs;
  std::string rhs;
  Index dim_lhs = 0;
  Index dim_rhs = 0;
  std::optional<Witness> witness;  // element of the larger side at distance > tol from the other
};

MoritaResult morita_test(const OperatorAlgebra& b1, const OperatorAlgebra& b2, const AntilinearOperator& j,
                         double tol = kDefaultTol);

bool morita_equivalent_J(const OperatorAlgebra& b1, const OperatorAlgebra& b2, const AntilinearOperator& j,
                         double tol = kDefaultTol);

struct MoritaClassification {
  bool spin = false;
  std::optional<bool> even_spin;  // undefined without a grading
  bool hodge = false;

  MoritaResult spin_result;
  std::optional<MoritaResult> even_spin_result;
  MoritaResult hodge_result;

  Index dim_algebra = 0;
  Index dim_one_forms = 0;
  Index dim_clifford = 0;
  std::optional<Index> dim_clifford_gamma;
  std::optional<bool> grading_in_clifford;
};

/// Spin: Cl ~_J A. Even-spin: Cl^γ ~_J A. Hodge: Cl ~_J Cl. Needs a real structure.
MoritaClassification classify(const FiniteSpectralTriple& t);
/// Same, reusing Cl_D(A) and (for even triples) Cl_D^γ(A) computed by the caller.
MoritaClassification classify(const FiniteSpectralTriple& t, const OperatorAlgebra& cl,
                              const std::optional<OperatorAlgebra>& cl_gamma, Index dim_one_forms);

}  // namespace nccheck
