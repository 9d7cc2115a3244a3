#include "nccheck/analysis.hpp"

namespace nccheck {

std::string verdict(bool b) { return b ? "true" : "false"; }

std::string verdict(const std::optional<bool>& b) { return b ? verdict(*b) : "undefined"; }

std::string verdict(const std::set<int>& ko) {
  std::string s = "{";
  for (int k : ko) s += (s.size() > 1 ? "," : "") + std::to_string(k);
  return s + "}";
}

namespace {

ConditionReport implication(const std::string& name, bool premise, bool conclusion, const std::string& detail) {
  ConditionReport r;
  r.name = name;
  r.holds = !premise || conclusion;
  r.detail = std::string(premise ? "" : "vacuous; ") + detail;
  return r;
}

}  // namespace

TripleAnalysis analyze(const FiniteSpectralTriple& t) {
  TripleAnalysis a;
  Verdicts& v = a.verdicts;
  a.hilbert_dim = t.hilbert_dim();
  a.even = t.is_even();
  a.real = t.real_structure().has_value();

  const MatrixSubspace omega = one_forms(t);
  const OperatorAlgebra cl = clifford(t);
  a.dim_algebra = t.algebra().dim();
  a.dim_one_forms = omega.dim();
  a.dim_clifford = cl.dim();
  std::optional<OperatorAlgebra> clg;
  if (t.grading()) {
    a.grading_in_clifford = cl.contains(*t.grading(), t.tol());
    clg = clifford_gamma(t);
    a.dim_clifford_gamma = clg->dim();
  }
  v["dim_algebra"] = std::to_string(a.dim_algebra);
  v["dim_one_forms"] = std::to_string(a.dim_one_forms);
  v["dim_clifford"] = std::to_string(a.dim_clifford);
  v["even"] = verdict(a.even);
  v["gamma_in_clifford"] = verdict(a.grading_in_clifford);
  if (a.dim_clifford_gamma) v["dim_clifford_gamma"] = std::to_string(*a.dim_clifford_gamma);

  if (!a.real) return a;

  a.order_zero = check_order_zero(t);
  a.order_one = check_order_one(t);
  a.order_two = check_order_two(t);
  v["order_zero"] = verdict(a.order_zero->holds);
  v["order_one"] = verdict(a.order_one->holds);
  v["order_two"] = verdict(a.order_two->holds);

  a.signs = check_signs(t);
  a.ko = ko_dimensions(*a.signs);
  v["epsilon"] = to_string(a.signs->epsilon);
  v["epsilon_prime"] = to_string(a.signs->epsilon_prime);
  v["epsilon_dprime"] = a.signs->epsilon_dprime ? to_string(*a.signs->epsilon_dprime) : "undefined";
  v["ko"] = verdict(a.ko);

  a.classification = classify(t, cl, clg, omega.dim());
  const MoritaClassification& c = *a.classification;
  v["spin"] = verdict(c.spin);
  v["even_spin"] = verdict(c.even_spin);
  v["hodge"] = verdict(c.hodge);

  const bool o01 = a.order_zero->holds && a.order_one->holds;
  const bool o012 = o01 && a.order_two->holds;
  const bool gamma_defined = a.signs->epsilon_dprime && is_defined(*a.signs->epsilon_dprime);
  const bool gin = a.grading_in_clifford.value_or(false);

  // the spin implication uses γ° = ±γ, so it is asserted only when ε″ is defined
  a.implications.push_back(implication("spin ⇒ γ ∈ Cl ∧ even-spin", c.spin && gamma_defined,
                                       gin && c.even_spin.value_or(false),
                                       "spin " + verdict(c.spin) + ", γ ∈ Cl " + verdict(a.grading_in_clifford) +
                                           ", even-spin " + verdict(c.even_spin)));
  a.implications.push_back(implication("order two ∧ γ ∈ Cl ⇒ Ω¹ = 0", a.order_two->holds && gin, omega.dim() == 0,
                                       "dim Ω¹ = " + std::to_string(omega.dim())));
  a.implications.push_back(implication("spin or even-spin ⇒ orders zero and one",
                                       c.spin || c.even_spin.value_or(false), o01, "orders 0,1 " + verdict(o01)));
  a.implications.push_back(implication("Hodge ⇒ order two", c.hodge, a.order_two->holds,
                                       "order two " + verdict(a.order_two->holds)));

  ConditionReport eq4;
  eq4.name = "orders zero and one ⟺ Cl° ⊆ A′";
  const bool in4 = clifford_circ_commutes_with_algebra(t, cl);
  eq4.holds = in4 == o01;
  eq4.detail = "orders " + verdict(o01) + ", inclusion " + verdict(in4);
  a.implications.push_back(eq4);

  ConditionReport eq5;
  eq5.name = "orders zero, one, two ⟺ Cl° ⊆ Cl′";
  const bool in5 = clifford_circ_commutes_with_clifford(t, cl);
  eq5.holds = in5 == o012;
  eq5.detail = "orders " + verdict(o012) + ", inclusion " + verdict(in5);
  a.implications.push_back(eq5);

  bool all = true;
  for (const auto& r : a.implications) all = all && r.holds;
  v["implications"] = verdict(all);
  return a;
}

ProductAnalysis analyze_product(const FiniteSpectralTriple& t1, const FiniteSpectralTriple& t2) {
  ProductAnalysis p;
  Verdicts& v = p.verdicts;
  p.plain = analyze(product_triple(t1, t2, JMode::Plain));
  for (const auto& [k, x] : p.plain.verdicts) v["plain." + k] = x;

  auto record = [&](const std::string& key, const ConditionReport& r) {
    p.checks.push_back(r);
    v[key] = verdict(r.holds);
  };

  const OneFormsDecomposition d = one_forms_decomposition_check(t1, t2);
  record("one_forms_product", d.report);
  v["one_forms_product"] = verdict(d.one_forms_match);
  v["clifford_tensor"] = d.cliffordproduct ? verdict(*d.cliffordproduct) : "skipped";

  const bool both_even = t2.grading().has_value();
  const bool both_real = t1.real_structure() && t2.real_structure();
  if (!both_even) {
    for (const char* k : {"clifford_graded", "clifford_conjugation", "generator_images", "product_signs", "second_order_product", "alt_dirac",
                          "hodge_product"}) {
      v[k] = "not applicable";
    }
    return p;
  }
  record("clifford_graded", clifford_graded_check(t1, t2));
  if (!both_real) return p;

  p.koszul = analyze(product_triple(t1, t2, JMode::Koszul));
  for (const auto& [k, x] : p.koszul->verdicts) v["koszul." + k] = x;

  record("clifford_conjugation", clifford_conjugation_check(t1, t2));
  record("generator_images", generator_images_check(t1, t2));
  record("product_signs", product_sign_check(t1, t2).report);
  record("second_order_product", second_order_product_check(t1, t2).report);
  const AltDiracIntertwining alt = alt_dirac_intertwining_check(t1, t2);
  record("alt_dirac", alt.report);
  if (!alt.applicable) v["alt_dirac"] = "not applicable";
  record("hodge_product", hodge_product_check(t1, t2).report);
  return p;
}

}  // namespace nccheck
