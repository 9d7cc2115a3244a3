#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccheck/algebra.hpp"

namespace nccheck {

struct RealStructure {
  AntilinearOperator j;
  std::optional<ComplexMatrix> twist;
};

/// (A, H, D, γ, J, τ) with H = C^n. A is the unital *-algebra generated by the
/// listed generators; its orthonormal basis is computed once at construction.
class FiniteSpectralTriple {
 public:
  FiniteSpectralTriple(std::vector<ComplexMatrix> algebra_generators, ComplexMatrix dirac,
                       std::optional<ComplexMatrix> grading = std::nullopt,
                       std::optional<RealStructure> real_structure = std::nullopt,
                       double tol = kDefaultTol);

  Index hilbert_dim() const { return dirac_.rows(); }
  const std::vector<ComplexMatrix>& algebra_generators() const { return generators_; }
  const ComplexMatrix& dirac() const { return dirac_; }
  const std::optional<ComplexMatrix>& grading() const { return grading_; }
  const std::optional<RealStructure>& real_structure() const { return real_; }
  const OperatorAlgebra& algebra() const { return algebra_; }
  bool is_even() const { return grading_.has_value(); }
  double tol() const { return tol_; }

  /// Throws if the triple has no real structure.
  const AntilinearOperator& j() const;

 private:
  std::vector<ComplexMatrix> generators_;
  ComplexMatrix dirac_;
  std::optional<ComplexMatrix> grading_;
  std::optional<RealStructure> real_;
  OperatorAlgebra algebra_;
  double tol_;
};

struct Witness {
  // indices into the algebra basis (or other family); -1 when not applicable
  Index first = -1;
  Index second = -1;
  ComplexMatrix matrix;
  double norm = 0.0;
  std::string description;
};

struct ConditionReport {
  std::string name;
  bool holds = false;
  std::optional<Witness> witness;
  /// Largest violation seen over the quantified family (operator norm).
  double max_violation = 0.0;
  std::string detail;
};

MatrixSubspace one_forms(const FiniteSpectralTriple& t);
OperatorAlgebra clifford(const FiniteSpectralTriple& t);
/// Requires a grading.
OperatorAlgebra clifford_gamma(const FiniteSpectralTriple& t);


ConditionReport check_order_zero(const FiniteSpectralTriple& t);
ConditionReport check_order_one(const FiniteSpectralTriple& t);
ConditionReport check_order_two(const FiniteSpectralTriple& t);

/// Order conditions over an explicit family of algebra elements rather than the basis of A.
ConditionReport check_order_zero(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family);
ConditionReport check_order_one(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family);
ConditionReport check_order_two(const FiniteSpectralTriple& t, const std::vector<ComplexMatrix>& family);

/// Cl_D(A)° ⊆ A′, equivalent to orders zero and one together.
bool clifford_circ_commutes_with_algebra(const FiniteSpectralTriple& t, const OperatorAlgebra& cl);
/// Cl_D(A)° ⊆ Cl_D(A)′, equivalent to all three orders.
bool clifford_circ_commutes_with_clifford(const FiniteSpectralTriple& t, const OperatorAlgebra& cl);

enum class Sign { Plus, Minus, Undefined, Degenerate };

std::string to_string(Sign s);
/// +1, -1, or 0 for undefined/degenerate.
int sign_value(Sign s);
bool is_defined(Sign s);

struct SignReport {
  Sign epsilon = Sign::Undefined;
  Sign epsilon_prime = Sign::Undefined;
  std::optional<Sign> epsilon_dprime;  // absent for odd triples
  bool twisted = false;
  ConditionReport epsilon_report;
  ConditionReport epsilon_prime_report;
  std::optional<ConditionReport> epsilon_dprime_report;
};

/// Decides lhs = ±rhs with threshold `thr`; both → Degenerate, neither → Undefined.
Sign detect_sign(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double thr, ConditionReport* report);

SignReport check_signs(const FiniteSpectralTriple& t);

/// Residues mod 8 whose column lists the tuple. Any undefined sign gives the empty set.
std::set<int> ko_dimensions(Sign epsilon, Sign epsilon_prime, std::optional<Sign> epsilon_dprime);
std::set<int> ko_dimensions(const SignReport& s);

struct ChainTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<ComplexMatrix> factors;  // a₀, a₁, ..., a_n
};
using HochschildChain = std::vector<ChainTerm>;

struct HochschildReport {
  ConditionReport report;
  double boundary_norm = 0.0;
  ComplexVector boundary;         // coordinates of b(c) in the tensor power of the basis of A
  ComplexMatrix image;            // π_D(c)
  std::string represents;         // "1", "grading" or "none"
  double residual = 0.0;          // distance of π_D(c) from the represented target
};

/// Checks b(c) = 0 in A^{⊗n} and compares π_D(c) = Σ a₀[D,a₁]…[D,a_n] with 1 and γ.
/// Throws std::invalid_argument when a chain entry lies outside A.
HochschildReport check_hochschild_cycle(const FiniteSpectralTriple& t, const HochschildChain& c);

}  // namespace nccheck
