#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nccheck/analysis.hpp"

namespace nccheck {

/// Hermitian conjugation on M₂ ≅ C⁴ (column-major): the swap permutation, as a J kernel.
ComplexMatrix hermitian_conjugation_kernel();
/// L_a and R_a on M₂ ≅ C⁴.
ComplexMatrix left_mult(const ComplexMatrix& a);
ComplexMatrix right_mult(const ComplexMatrix& a);

/// A₁ = M₂ on H₁ = M₂⊗C², D₁(a⊗v) = [σ₁,a]⊗σ₁v, γ₁ = 1⊗σ₃, J₁(a⊗v) = a*⊗v̄.
FiniteSpectralTriple example_evenspin();

/// A = H = M₂, D(a) = [σ₁,a], J(a) = a*. Odd: no grading of H commutes with A
/// and anticommutes with D.
FiniteSpectralTriple example_hodge_m2();

/// A = C² (diagonal, left multiplication) on H = M₂, D = L_{σ₁}, γ = Ad σ₃, J(a) = a*.
/// Even and Hodge; used where an even Hodge factor is needed.
FiniteSpectralTriple example_hodge_two_point();

/// A = M₂ on M₂⊗C², D = [σ₁,·]⊗σ₁ + [σ₂,·]⊗σ₂, γ = 1⊗σ₃, J(a⊗v) = a*⊗σ₂v̄.
/// Spin with γ ∈ Cl_D(A), signs (−1,+1,−1).
FiniteSpectralTriple example_spin_even();

struct TriplePair {
  FiniteSpectralTriple first, second;
};

/// (example_evenspin, example_hodge_m2).
TriplePair example_mixed();
/// Two copies of example_evenspin.
TriplePair example_evenspin_pair();

/// 1⊗σ₁⊗1⊗σ₂ on the evenspin product, and 1⊗σ₁⊗1 on the mixed product.
ComplexMatrix evenspin_pair_witness();
ComplexMatrix mixed_witness();

/// Random A (1–2 generators), random self-adjoint D, optional grading and real
/// structure, all seeded. Only the type invariants are guaranteed.
FiniteSpectralTriple random_triple(std::uint64_t seed, Index dim_min = 2, Index dim_max = 4);

struct NamedExample {
  std::string name;
  std::string summary;
  std::vector<FiniteSpectralTriple> factors;  // one triple, or a product pair
  Verdicts expected;
};

std::vector<std::string> example_names();
NamedExample named_example(const std::string& name);
std::vector<NamedExample> named_examples();

struct ExampleRun {
  std::optional<TripleAnalysis> single;
  std::optional<ProductAnalysis> product;
  Verdicts verdicts;  // analysis verdicts plus witness checks for the product counterexamples
  std::vector<std::string> mismatches;  // "key: expected X, got Y"
};

ExampleRun run_example(const NamedExample& e);

}  // namespace nccheck
