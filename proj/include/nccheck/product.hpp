#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nccheck/morita.hpp"
#include "nccheck/triple.hpp"

namespace nccheck {

enum class JMode { Plain, Koszul };

std::string to_string(JMode m);

/// Product (A₁⊗A₂, H₁⊗H₂, D₁⊗1 + γ₁⊗D₂). T1 must be even; koszul mode also
/// needs T2 even. The real structure is formed when both factors carry one.
FiniteSpectralTriple product_triple(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2, JMode mode);

/// Σ = 1 − 2P₁⁻⊗P₂⁻, the sign (−1)^{|v||w|} on homogeneous tensors.
ComplexMatrix koszul_sign(const ComplexMatrix& gamma1, const ComplexMatrix& gamma2);

enum class Parity { Even, Odd, Mixed };

/// Operator split into homogeneous parts X± = (X ± γXγ)/2 relative to a grading.
class GradedOperator {
 public:
  GradedOperator(ComplexMatrix matrix, ComplexMatrix grading, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  const ComplexMatrix& grading() const { return grading_; }
  Parity parity() const { return parity_; }
  const ComplexMatrix& even_part() const { return even_; }
  const ComplexMatrix& odd_part() const { return odd_; }

 private:
  ComplexMatrix matrix_, grading_, even_, odd_;
  Parity parity_;
};

enum class Side { Left, Right };

/// Left: a ⊙ b = a·γ₁^{|b|} ⊗ b. Right: a ⊙′ b = a ⊗ b·γ₂^{|a|}. Mixed inputs are
/// split and the homogeneous products summed.
ComplexMatrix graded_product(const GradedOperator& a, const GradedOperator& b, Side side);

struct GradedAlgebraPair {
  OperatorAlgebra b1, b2;
  ComplexMatrix gamma1, gamma2;
};

/// Throws InvariantViolation("graded pair") unless each Bᵢ is stable under Ad γᵢ.
void validate_graded_pair(const GradedAlgebraPair& p, double tol = kDefaultTol);

/// Span of graded products of homogeneous parts of basis elements. Closure under
/// products is asserted (InvariantViolation("graded algebra closure")).
OperatorAlgebra graded_algebra(const GradedAlgebraPair& p, Side side, double tol = kDefaultTol);

/// D̃ = D₁⊗γ₂ + 1⊗D₂. T2 must be even.
ComplexMatrix alt_dirac(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

struct GctReport {
  ConditionReport report;
  Index dim_b1 = 0, dim_b2 = 0;
  Index dim_lhs = 0;  // (B₁⊙B₂)′
  Index dim_rhs = 0;  // B₁′⊙′B₂′
  bool rhs_in_lhs = false;
  bool lhs_in_rhs = false;
};

/// (B₁⊙B₂)′ = B₁′⊙′B₂′, both sides computed independently.
GctReport verify_gct(const GradedAlgebraPair& p, double tol = kDefaultTol);

/// Random γ-homogeneous generators (1–3 per factor), factor dimensions 2..dim_max.
GradedAlgebraPair random_graded_pair(std::uint64_t seed, Index dim_max);

/// Ω¹_D(A) = Ω¹₁⊗A₂ + γ₁A₁⊗Ω¹₂ and, when γ₁ ∈ Cl₁, Cl_D(A) = Cl₁⊗Cl₂.
struct OneFormsDecomposition {
  ConditionReport report;
  bool one_forms_match = false;
  std::optional<bool> cliffordproduct;  // absent when γ₁ ∉ Cl₁
  Index dim_one_forms = 0;
  Index dim_clifford = 0;
};
OneFormsDecomposition one_forms_decomposition_check(const FiniteSpectralTriple& t1,
                                                    const FiniteSpectralTriple& t2);

/// Cl_D(A) = Cl₁ ⊙ Cl₂. Needs both factors even.
ConditionReport clifford_graded_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// J Cl_D(A) J⁻¹ = Cl₁° ⊙′ Cl₂° for the koszul real structure.
ConditionReport clifford_conjugation_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// The four generator images under conjugation by the koszul J.
ConditionReport generator_images_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// ε″ = ε₁″ε₂″ always; ε = ε₁ε₂ when ε₁″ = ε₂″ = +1. Reported on the koszul product.
struct ProductSigns {
  ConditionReport report;
  SignReport factor1, factor2, product;
};
ProductSigns product_sign_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// Both factors pass order two ⇒ the koszul product does. The plain product is run too.
struct SecondOrderProduct {
  ConditionReport report;
  bool factors_pass = false;
  ConditionReport koszul, plain;
};
SecondOrderProduct second_order_product_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// J D = ε′ D̃ J for the koszul J, with ε′ = ε₁′, when ε₁′ε₁″ = ε₂′.
struct AltDiracIntertwining {
  ConditionReport report;
  bool applicable = false;
  Sign sign = Sign::Undefined;
};
AltDiracIntertwining alt_dirac_intertwining_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

/// J Cl J⁻¹ = Cl′ on the koszul product.
struct HodgeProduct {
  ConditionReport report;
  Index dim_conjugated = 0;
  Index dim_commutant = 0;
};
HodgeProduct hodge_product_check(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2);

}  // namespace nccheck
