#include "nccheck/catalog.hpp"

#include <random>
#include <stdexcept>

namespace nccheck {

ComplexMatrix hermitian_conjugation_kernel() {
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) p(i + 2 * j, j + 2 * i) = 1.0;
  return p;
}

ComplexMatrix left_mult(const ComplexMatrix& a) { return kron(identity(2), a); }

ComplexMatrix right_mult(const ComplexMatrix& a) { return kron(a.transpose(), identity(2)); }

namespace {

ComplexMatrix inner_derivation(int k) { return left_mult(pauli(k)) - right_mult(pauli(k)); }

}  // namespace

FiniteSpectralTriple example_evenspin() {
  const ComplexMatrix i4 = identity(4);
  std::vector<ComplexMatrix> gens{kron(left_mult(pauli(1)), identity(2)), kron(left_mult(pauli(3)), identity(2))};
  ComplexMatrix d = kron(inner_derivation(1), pauli(1));
  ComplexMatrix g = kron(i4, pauli(3));
  RealStructure j{AntilinearOperator(kron(hermitian_conjugation_kernel(), identity(2))), std::nullopt};
  return FiniteSpectralTriple(std::move(gens), std::move(d), std::move(g), std::move(j));
}

FiniteSpectralTriple example_hodge_m2() {
  std::vector<ComplexMatrix> gens{left_mult(pauli(1)), left_mult(pauli(3))};
  RealStructure j{AntilinearOperator(hermitian_conjugation_kernel()), std::nullopt};
  return FiniteSpectralTriple(std::move(gens), inner_derivation(1), std::nullopt, std::move(j));
}

FiniteSpectralTriple example_hodge_two_point() {
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(0, 0) = 1.0;
  std::vector<ComplexMatrix> gens{left_mult(e)};
  // conjugation by σ₃: vec(σ₃Xσ₃) = (σ₃ᵀ⊗σ₃) vec X
  ComplexMatrix g = kron(pauli(3), pauli(3));
  RealStructure j{AntilinearOperator(hermitian_conjugation_kernel()), std::nullopt};
  return FiniteSpectralTriple(std::move(gens), left_mult(pauli(1)), std::move(g), std::move(j));
}

FiniteSpectralTriple example_spin_even() {
  const ComplexMatrix i4 = identity(4);
  std::vector<ComplexMatrix> gens{kron(left_mult(pauli(1)), identity(2)), kron(left_mult(pauli(3)), identity(2))};
  ComplexMatrix d = kron(inner_derivation(1), pauli(1)) + kron(inner_derivation(2), pauli(2));
  ComplexMatrix g = kron(i4, pauli(3));
  RealStructure j{AntilinearOperator(kron(hermitian_conjugation_kernel(), pauli(2))), std::nullopt};
  return FiniteSpectralTriple(std::move(gens), std::move(d), std::move(g), std::move(j));
}

TriplePair example_mixed() { return {example_evenspin(), example_hodge_m2()}; }

TriplePair example_evenspin_pair() { return {example_evenspin(), example_evenspin()}; }

ComplexMatrix evenspin_pair_witness() {
  const ComplexMatrix one_sigma1 = kron(identity(4), pauli(1));
  const ComplexMatrix one_sigma2 = kron(identity(4), pauli(2));
  return kron(one_sigma1, one_sigma2);
}

ComplexMatrix mixed_witness() { return kron(kron(identity(4), pauli(1)), identity(4)); }

FiniteSpectralTriple random_triple(std::uint64_t seed, Index dim_min, Index dim_max) {
  if (dim_min < 2 || dim_max < dim_min) throw std::invalid_argument("random triple: need 2 <= dim_min <= dim_max");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution coin(0.5), keep(0.5);
  const Index n = std::uniform_int_distribution<Index>(dim_min, dim_max)(rng);
  auto gaussian = [&](bool sparse) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        if (!sparse || keep(rng)) m(i, j) = Complex(normal(rng), normal(rng));
    return m;
  };

  const bool graded = coin(rng);
  const Index plus = std::uniform_int_distribution<Index>(1, n - 1)(rng);
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) g(i, i) = i < plus ? 1.0 : -1.0;

  const int count = std::uniform_int_distribution<int>(1, 2)(rng);
  std::vector<ComplexMatrix> gens;
  for (int k = 0; k < count; ++k) {
    ComplexMatrix a = gaussian(true);
    if (graded) a = (a + g * a * g) / 2.0;
    gens.push_back(a);
  }
  ComplexMatrix x = gaussian(false);
  ComplexMatrix d = (x + x.adjoint()) / 2.0;
  if (graded) d = (d - g * d * g) / 2.0;

  std::optional<RealStructure> real;
  if (coin(rng)) {
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(false));
    real = RealStructure{AntilinearOperator(ComplexMatrix(qr.householderQ())), std::nullopt};
  }
  std::optional<ComplexMatrix> grading;
  if (graded) grading = g;
  return FiniteSpectralTriple(std::move(gens), std::move(d), std::move(grading), std::move(real));
}

namespace {

NamedExample single(std::string name, std::string summary, FiniteSpectralTriple t, Verdicts expected) {
  return NamedExample{std::move(name), std::move(summary), {std::move(t)}, std::move(expected)};
}

NamedExample pair(std::string name, std::string summary, TriplePair p, Verdicts expected) {
  return NamedExample{std::move(name), std::move(summary), {std::move(p.first), std::move(p.second)},
                      std::move(expected)};
}

}  // namespace

std::vector<std::string> example_names() {
  return {"evenspin", "hodge_m2", "hodge_two_point", "spin_even", "mixed", "evenspin_pair", "hodge_two_point_pair",
          "spin_even_x_hodge_two_point"};
}

NamedExample named_example(const std::string& name) {
  if (name == "evenspin") {
    return single(name, "M2 on M2⊗C2, D = [σ1,·]⊗σ1: even-spin, not spin", example_evenspin(),
                  {{"even_spin", "true"}, {"spin", "false"}, {"gamma_in_clifford", "false"},
                   {"dim_one_forms", "4"}, {"dim_clifford", "8"}, {"dim_clifford_gamma", "16"},
                   {"order_zero", "true"}, {"order_one", "true"}, {"order_two", "true"}, {"hodge", "true"},
                   {"epsilon", "+1"}, {"epsilon_prime", "-1"}, {"epsilon_dprime", "+1"}, {"ko", "{0,2}"},
                   {"implications", "true"}});
  }
  if (name == "hodge_m2") {
    return single(name, "A = H = M2, D = [σ1,·], J = Hermitian conjugation: spin and Hodge", example_hodge_m2(),
                  {{"spin", "true"}, {"hodge", "true"}, {"even_spin", "undefined"}, {"even", "false"},
                   {"order_zero", "true"}, {"order_one", "true"}, {"order_two", "true"},
                   {"dim_algebra", "4"}, {"dim_one_forms", "4"}, {"dim_clifford", "4"},
                   {"epsilon", "+1"}, {"epsilon_prime", "-1"}, {"ko", "{1}"}, {"implications", "true"}});
  }
  if (name == "hodge_two_point") {
    return single(name, "C2 on M2, D = L_σ1, γ = Ad σ3: even Hodge factor", example_hodge_two_point(),
                  {{"hodge", "true"}, {"even_spin", "true"}, {"spin", "false"}, {"gamma_in_clifford", "false"},
                   {"order_two", "true"}, {"epsilon", "+1"}, {"epsilon_prime", "undefined"},
                   {"epsilon_dprime", "+1"}, {"ko", "{}"}, {"implications", "true"}});
  }
  if (name == "spin_even") {
    return single(name, "M2 on M2⊗C2 with a two-term D: even spin triple, γ ∈ Cl", example_spin_even(),
                  {{"spin", "true"}, {"even_spin", "true"}, {"hodge", "false"}, {"gamma_in_clifford", "true"},
                   {"order_zero", "true"}, {"order_one", "true"}, {"order_two", "false"},
                   {"dim_clifford", "16"}, {"epsilon", "-1"}, {"epsilon_prime", "+1"}, {"epsilon_dprime", "-1"},
                   {"ko", "{2}"}, {"implications", "true"}});
  }
  if (name == "mixed") {
    return pair(name, "evenspin × hodge_m2, plain real structure", example_mixed(),
                {{"one_forms_product", "true"}, {"clifford_tensor", "skipped"}, {"clifford_graded", "not applicable"},
                 {"plain.even", "false"}, {"plain.even_spin", "undefined"}, {"plain.spin", "true"},
                 {"plain.order_two", "false"}, {"plain.implications", "true"},
                 {"witness_in_commutant", "false"}, {"witness_outside_conjugated_algebra", "true"}});
  }
  if (name == "evenspin_pair") {
    return pair(name, "evenspin × evenspin: product not even-spin", example_evenspin_pair(),
                {{"plain.even_spin", "false"}, {"plain.spin", "false"}, {"plain.order_two", "false"},
                 {"koszul.order_two", "true"}, {"koszul.even_spin", "false"},
                 {"witness_in_commutant", "true"}, {"witness_outside_conjugated_algebra", "true"},
                 {"one_forms_product", "true"}, {"clifford_tensor", "skipped"}, {"clifford_graded", "true"}, {"clifford_conjugation", "true"},
                 {"generator_images", "true"}, {"product_signs", "true"}, {"second_order_product", "true"},
                 {"alt_dirac", "true"}, {"hodge_product", "true"}, {"plain.implications", "true"},
                 {"koszul.implications", "true"}});
  }
  if (name == "hodge_two_point_pair") {
    return pair(name, "hodge_two_point × hodge_two_point: Hodge product",
                {example_hodge_two_point(), example_hodge_two_point()},
                {{"koszul.hodge", "true"}, {"hodge_product", "true"}, {"koszul.order_two", "true"},
                 {"plain.order_two", "false"}, {"plain.hodge", "false"}, {"koszul.epsilon", "+1"},
                 {"koszul.epsilon_dprime", "+1"}, {"one_forms_product", "true"}, {"clifford_tensor", "skipped"},
                 {"clifford_graded", "true"}, {"clifford_conjugation", "true"}, {"generator_images", "true"},
                 {"product_signs", "true"}, {"second_order_product", "true"}, {"plain.implications", "true"},
                 {"koszul.implications", "true"}});
  }
  if (name == "spin_even_x_hodge_two_point") {
    return pair(name, "spin_even × hodge_two_point: factor with ε″ = −1",
                {example_spin_even(), example_hodge_two_point()},
                {{"koszul.epsilon_dprime", "-1"}, {"product_signs", "true"}, {"one_forms_product", "true"},
                 {"clifford_tensor", "true"}, {"clifford_graded", "true"}, {"clifford_conjugation", "true"}, {"generator_images", "true"},
                 {"second_order_product", "true"}, {"koszul.order_two", "false"}, {"plain.implications", "true"},
                 {"koszul.implications", "true"}});
  }
  throw std::invalid_argument("unknown example: " + name);
}

std::vector<NamedExample> named_examples() {
  std::vector<NamedExample> out;
  for (const auto& n : example_names()) out.push_back(named_example(n));
  return out;
}

namespace {

void witness_verdicts(const FiniteSpectralTriple& product, const ComplexMatrix& w, Verdicts& v) {
  const double tol = product.tol();
  const OperatorAlgebra cl = product.grading() ? clifford_gamma(product) : clifford(product);
  double worst = 0.0;
  for (const auto& x : cl.basis()) worst = std::max(worst, operator_norm(commutator(x, w)));
  v["witness_in_commutant"] = verdict(worst <= tol);
  const OperatorAlgebra conj = circ_image(product.j(), product.algebra(), tol);
  v["witness_outside_conjugated_algebra"] = verdict(!conj.contains(w, tol));
  v["witness_outside_algebra"] = verdict(!product.algebra().contains(w, tol));
}

}  // namespace

ExampleRun run_example(const NamedExample& e) {
  ExampleRun r;
  if (e.factors.size() == 1) {
    r.single = analyze(e.factors.front());
    r.verdicts = r.single->verdicts;
  } else if (e.factors.size() == 2) {
    r.product = analyze_product(e.factors[0], e.factors[1]);
    r.verdicts = r.product->verdicts;
    if (e.name == "evenspin_pair" || e.name == "mixed") {
      const FiniteSpectralTriple plain = product_triple(e.factors[0], e.factors[1], JMode::Plain);
      witness_verdicts(plain, e.name == "mixed" ? mixed_witness() : evenspin_pair_witness(), r.verdicts);
    }
  } else {
    throw std::invalid_argument("example " + e.name + " must hold one triple or a pair");
  }
  for (const auto& [key, want] : e.expected) {
    const auto it = r.verdicts.find(key);
    const std::string got = it == r.verdicts.end() ? "<missing>" : it->second;
    if (got != want) r.mismatches.push_back(key + ": expected " + want + ", got " + got);
  }
  return r;
}

}  // namespace nccheck
