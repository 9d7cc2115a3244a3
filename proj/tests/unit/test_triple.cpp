#include <doctest.h>

#include "nccheck/catalog.hpp"
#include "random.hpp"

using namespace nccheck;
using nccheck::testing::random_hermitian;
using nccheck::testing::random_matrix;

namespace {

ComplexMatrix diag(std::initializer_list<double> xs) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(xs.size()), static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) m(i, i) = x, ++i;
  return m;
}

template <typename F>
std::string invariant_of(F&& f) {
  try {
    f();
  } catch (const InvariantViolation& e) {
    return e.invariant();
  }
  return "";
}

// Oracle for Cl_D(A): generate from the full bases of A and Ω¹.
OperatorAlgebra clifford_oracle(const FiniteSpectralTriple& t) {
  std::vector<ComplexMatrix> gens = t.algebra().basis();
  for (const auto& w : one_forms(t).basis_matrices()) gens.push_back(w);
  return generate_star_algebra(t.hilbert_dim(), gens);
}

}  // namespace

TEST_CASE("constructor names the violated invariant") {
  const ComplexMatrix s1 = pauli(1), s3 = pauli(3);
  const RealStructure conj{AntilinearOperator::conjugation(2), std::nullopt};
  ComplexMatrix not_sa = ComplexMatrix::Zero(2, 2);
  not_sa(0, 1) = 1.0;

  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, not_sa); }) == "dirac self-adjoint");
  CHECK(invariant_of([&] { FiniteSpectralTriple({identity(3)}, s1); }) == "generator dimension");
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, s1, 2.0 * s3); }) == "grading involutive");
  CHECK(invariant_of([&] { FiniteSpectralTriple({s1}, ComplexMatrix::Zero(2, 2), s3); }) == "grading commutes with A");
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, s3, s3); }) == "grading anticommutes with D");
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, s1, s1 * pauli(2)); }) == "grading self-adjoint");

  ComplexMatrix nan = s1;
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, nan); }) == "finite entries");

  RealStructure bad_twist{AntilinearOperator::conjugation(2), 2.0 * identity(2)};
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, s1, s3, bad_twist); }) == "twist involutive");
  RealStructure twist_vs_a{AntilinearOperator::conjugation(2), s1};
  CHECK(invariant_of([&] { FiniteSpectralTriple({s3}, s1, s3, twist_vs_a); }) == "twist commutes with A");
  // σ₂ is imaginary: τK = K conj(τ) fails with K = 1
  RealStructure twist_vs_j{AntilinearOperator::conjugation(2), pauli(2)};
  CHECK(invariant_of([&] { FiniteSpectralTriple({identity(2)}, s1, std::nullopt, twist_vs_j); }) ==
        "twist commutes with J");
  CHECK_NOTHROW(FiniteSpectralTriple({s3}, s1, s3, conj));
  CHECK_THROWS_AS(AntilinearOperator(2.0 * identity(2)), InvariantViolation);
}

TEST_CASE("one_forms examples") {
  const FiniteSpectralTriple commuting({diag({1, 2, 3})}, diag({5, -1, 2}));
  CHECK(one_forms(commuting).dim() == 0);

  const FiniteSpectralTriple m2 = example_hodge_m2();
  const MatrixSubspace omega = one_forms(m2);
  CHECK(omega.dim() == 4);
  const MatrixSubspace lefts = span({left_mult(pauli(0)), left_mult(pauli(1)), left_mult(pauli(2)), left_mult(pauli(3))});
  CHECK(subspace_contains(lefts, omega));

  // Ω¹ is the free A-module on ω = 1⊗σ₁.
  const FiniteSpectralTriple es = example_evenspin();
  const ComplexMatrix omega_es = kron(identity(4), pauli(1));
  std::vector<ComplexMatrix> module;
  for (const auto& a : es.algebra().basis()) module.push_back(a * omega_es);
  CHECK(subspace_equal(one_forms(es), span(module)));
  CHECK(one_forms(es).dim() == 4);
}

TEST_CASE("evenspin one-form a[D,b] with a = -iσ3, b = σ2 is 2ω") {
  const FiniteSpectralTriple es = example_evenspin();
  const Complex i(0, 1);
  const ComplexMatrix a = kron(left_mult(-i * pauli(3)), identity(2));
  const ComplexMatrix b = kron(left_mult(pauli(2)), identity(2));
  const ComplexMatrix w = a * commutator(es.dirac(), b);
  // [σ₁, σ₂] = 2iσ₃ gives the factor 2 relative to ω = 1⊗σ₁
  CHECK((w - 2.0 * kron(identity(4), pauli(1))).norm() < 1e-12);
}

TEST_CASE("clifford examples") {
  const FiniteSpectralTriple es = example_evenspin();
  const OperatorAlgebra clg = clifford_gamma(es);
  CHECK(clg.dim() == 16);
  std::vector<ComplexMatrix> all_left;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) all_left.push_back(kron(left_mult(pauli(x)), pauli(y)));
  CHECK(subspace_equal(clg.subspace(), span(all_left)));

  const OperatorAlgebra cl = clifford(es);
  CHECK(cl.dim() < 16);
  CHECK_FALSE(cl.contains(kron(identity(4), pauli(3))));

  CHECK(subspace_equal(commutant(clg).subspace(), circ_image(es.j(), es.algebra()).subspace()));

  const FiniteSpectralTriple flat({pauli(3), pauli(1)}, ComplexMatrix::Zero(2, 2));
  CHECK(subspace_equal(clifford(flat).subspace(), flat.algebra().subspace()));
}

TEST_CASE("property: clifford agrees with the generator-basis oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FiniteSpectralTriple t = random_triple(seed, 2, 5);
    CHECK(subspace_equal(clifford(t).subspace(), clifford_oracle(t).subspace()));
  }
  for (const auto& name : {"evenspin", "hodge_m2", "hodge_two_point", "spin_even"}) {
    const FiniteSpectralTriple t = named_example(name).factors.front();
    CHECK(subspace_equal(clifford(t).subspace(), clifford_oracle(t).subspace()));
  }
}

TEST_CASE("order conditions: commutative algebra, conjugation, D = 0") {
  const FiniteSpectralTriple t({diag({1, 2, 3})}, ComplexMatrix::Zero(3, 3), std::nullopt,
                               RealStructure{AntilinearOperator::conjugation(3), std::nullopt});
  CHECK(check_order_zero(t).holds);
  CHECK(check_order_one(t).holds);
  CHECK(check_order_two(t).holds);
}

TEST_CASE("order conditions: failing pair carries a witness above tolerance") {
  const auto p = example_evenspin_pair();
  const FiniteSpectralTriple plain = product_triple(p.first, p.second, JMode::Plain);
  const ConditionReport r = check_order_two(plain);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->norm > plain.tol());
  CHECK(r.max_violation >= r.witness->norm);
  const auto basis = plain.algebra().basis();
  const auto& a = basis[static_cast<std::size_t>(r.witness->first)];
  const auto& b = basis[static_cast<std::size_t>(r.witness->second)];
  const ComplexMatrix direct = commutator(commutator(plain.dirac(), a), circ(plain.j(), commutator(plain.dirac(), b)));
  CHECK((direct - r.witness->matrix).norm() < 1e-12);
}

TEST_CASE("property: order reports are monotone in the tested family") {
  int failures_seen = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const FiniteSpectralTriple t = random_triple(seed, 2, 4);
    if (!t.real_structure()) continue;
    const auto& gens = t.algebra_generators();
    const bool g0 = check_order_zero(t, gens).holds, g1 = check_order_one(t, gens).holds,
               g2 = check_order_two(t, gens).holds;
    if (!g0) CHECK_FALSE(check_order_zero(t).holds);
    if (!g1) CHECK_FALSE(check_order_one(t).holds);
    if (!g2) CHECK_FALSE(check_order_two(t).holds);
    failures_seen += !g0 + !g1 + !g2;
  }
  CHECK(failures_seen > 0);
}

TEST_CASE("property: order conditions match the Cl° inclusions") {
  auto check = [](const FiniteSpectralTriple& t) {
    const OperatorAlgebra cl = clifford(t);
    const bool o0 = check_order_zero(t).holds, o1 = check_order_one(t).holds, o2 = check_order_two(t).holds;
    CHECK(clifford_circ_commutes_with_algebra(t, cl) == (o0 && o1));
    CHECK(clifford_circ_commutes_with_clifford(t, cl) == (o0 && o1 && o2));
  };
  for (const auto& name : {"evenspin", "hodge_m2", "hodge_two_point", "spin_even"}) check(named_example(name).factors.front());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FiniteSpectralTriple t = random_triple(seed, 2, 4);
    if (t.real_structure()) check(t);
  }
  const auto p = example_evenspin_pair();
  check(product_triple(p.first, p.second, JMode::Plain));
}

TEST_CASE("sign detection") {
  SUBCASE("catalog signs") {
    const SignReport es = check_signs(example_evenspin());
    CHECK(es.epsilon == Sign::Plus);
    CHECK(es.epsilon_prime == Sign::Minus);
    CHECK(*es.epsilon_dprime == Sign::Plus);
    const SignReport se = check_signs(example_spin_even());
    CHECK(se.epsilon == Sign::Minus);
    CHECK(se.epsilon_prime == Sign::Plus);
    CHECK(*se.epsilon_dprime == Sign::Minus);
    CHECK(ko_dimensions(se) == std::set<int>{2});
  }
  SUBCASE("D = 0 is degenerate, not a sign") {
    const FiniteSpectralTriple t({pauli(3)}, ComplexMatrix::Zero(2, 2), pauli(3),
                                 RealStructure{AntilinearOperator::conjugation(2), std::nullopt});
    const SignReport s = check_signs(t);
    CHECK(s.epsilon_prime == Sign::Degenerate);
    CHECK(to_string(s.epsilon_prime) == "undefined-degenerate");
    CHECK(ko_dimensions(s).empty());
  }
  SUBCASE("undefined sign carries a witness") {
    const SignReport s = check_signs(example_hodge_two_point());
    CHECK(s.epsilon_prime == Sign::Undefined);
    REQUIRE(s.epsilon_prime_report.witness);
    CHECK(s.epsilon_prime_report.witness->norm > 0.5);
  }
  SUBCASE("twisted sign uses τ") {
    // σ₃ is real, commutes with A and anticommutes with D = σ₁, so it flips ε′
    const ComplexMatrix d = pauli(1);
    const RealStructure plain{AntilinearOperator::conjugation(2), std::nullopt};
    const RealStructure twisted{AntilinearOperator::conjugation(2), pauli(3)};
    const FiniteSpectralTriple t0({pauli(3)}, d, std::nullopt, plain);
    const FiniteSpectralTriple t1({pauli(3)}, d, std::nullopt, twisted);
    CHECK(check_signs(t0).epsilon_prime == Sign::Plus);
    CHECK(check_signs(t1).twisted);
    CHECK(check_signs(t1).epsilon_prime == Sign::Minus);
  }
}

TEST_CASE("ko_dimensions table lookups") {
  CHECK(ko_dimensions(Sign::Plus, Sign::Plus, Sign::Plus).count(0) == 1);
  CHECK(ko_dimensions(Sign::Plus, Sign::Minus, std::nullopt) == std::set<int>{1});
  CHECK(ko_dimensions(Sign::Minus, Sign::Plus, Sign::Minus).count(2) == 1);
  CHECK(ko_dimensions(Sign::Plus, Sign::Minus, Sign::Plus) == std::set<int>{0, 2});
  CHECK(ko_dimensions(Sign::Minus, Sign::Plus, std::nullopt) == std::set<int>{3});
  CHECK(ko_dimensions(Sign::Minus, Sign::Minus, std::nullopt) == std::set<int>{5});
  CHECK(ko_dimensions(Sign::Plus, Sign::Plus, std::nullopt) == std::set<int>{7});
  CHECK(ko_dimensions(Sign::Minus, Sign::Minus, Sign::Plus) == std::set<int>{4});
  CHECK(ko_dimensions(Sign::Minus, Sign::Minus, Sign::Minus) == std::set<int>{6});
  CHECK(ko_dimensions(Sign::Undefined, Sign::Plus, Sign::Plus).empty());
  // every even tuple lands in some column or none, never outside 0..6 even
  for (Sign a : {Sign::Plus, Sign::Minus})
    for (Sign b : {Sign::Plus, Sign::Minus})
      for (Sign c : {Sign::Plus, Sign::Minus})
        for (int k : ko_dimensions(a, b, c)) CHECK(k % 2 == 0);
}

TEST_CASE("hochschild cycles") {
  const FiniteSpectralTriple m2 = example_hodge_m2();
  SUBCASE("1⊗1 closes but represents nothing") {
    const HochschildReport h = check_hochschild_cycle(m2, {{1.0, {identity(4), identity(4)}}});
    CHECK(h.boundary_norm < 1e-12);
    CHECK(h.image.norm() < 1e-12);
    CHECK(h.represents == "none");
    CHECK_FALSE(h.report.holds);
  }
  SUBCASE("a0⊗a1 with noncommuting entries has boundary a0a1 - a1a0") {
    const ComplexMatrix a0 = left_mult(pauli(1)), a1 = left_mult(pauli(3));
    const HochschildReport h = check_hochschild_cycle(m2, {{1.0, {a0, a1}}});
    CHECK(h.boundary_norm == doctest::Approx(commutator(a0, a1).norm()).epsilon(1e-12));
    CHECK_FALSE(h.report.holds);
    REQUIRE(h.report.witness);
    CHECK((h.report.witness->matrix - commutator(a0, a1)).norm() < 1e-12);
  }
  SUBCASE("the zero chain 1 represents 1") {
    const HochschildReport h = check_hochschild_cycle(m2, {{1.0, {identity(4)}}});
    CHECK(h.represents == "1");
  }
  SUBCASE("entries outside A are rejected") {
    CHECK_THROWS_AS(check_hochschild_cycle(m2, {{1.0, {right_mult(pauli(1)), identity(4)}}}), std::invalid_argument);
  }
}

TEST_CASE("property: spin and order implications on random triples") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FiniteSpectralTriple t = random_triple(seed, 2, 4);
    if (!t.real_structure()) continue;
    const TripleAnalysis a = analyze(t);
    for (const auto& r : a.implications) {
      INFO(seed << " " << r.name << " " << r.detail);
      CHECK(r.holds);
    }
  }
}
