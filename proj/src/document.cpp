#include "nccheck/document.hpp"

#include <fstream>
#include <sstream>

#include "nccheck/catalog.hpp"

namespace nccheck::doc {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ParseError(child(path, key), "missing required field");
  return obj.at(key);
}

Json sign_json(Sign s) { return to_string(s); }

Json ko_json(const std::set<int>& ko) {
  Json a = Json::array();
  for (int k : ko) a.push_back(k);
  return a;
}

}  // namespace

// adding 0.0 turns −0.0 into 0.0, keeping golden files free of signed zeros
Json complex_to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path, "expected a complex number [re, im]");
  for (std::size_t k = 0; k < 2; ++k)
    if (!j[k].is_number()) throw ParseError(child(path, k), "expected a number");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError(child(path, 0), "expected a nonempty row");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = child(path, r);
    if (!j[r].is_array()) throw ParseError(rp, "expected a row");
    if (j[r].size() != cols) throw ParseError(rp, "row length " + std::to_string(j[r].size()) + ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = complex_from_json(j[r][c], child(rp, c));
  }
  return m;
}

FiniteSpectralTriple TripleDocument::build(double tol) const {
  std::optional<RealStructure> real;
  if (real_kernel) real = RealStructure{AntilinearOperator(*real_kernel, tol), twist};
  return FiniteSpectralTriple(algebra_generators, dirac, grading, real, tol);
}

std::optional<double> TripleDocument::tolerance() const {
  if (metadata.contains("tol") && metadata.at("tol").is_number()) return metadata.at("tol").get<double>();
  return std::nullopt;
}

Verdicts TripleDocument::expected(const std::string& key) const {
  Verdicts v;
  if (!metadata.contains(key)) return v;
  const Json& e = metadata.at(key);
  if (!e.is_object()) throw ParseError("/metadata/" + key, "expected an object of verdicts");
  for (const auto& [k, val] : e.items()) {
    if (val.is_string()) v[k] = val.get<std::string>();
    else if (val.is_boolean()) v[k] = verdict(val.get<bool>());
    else if (val.is_number_integer()) v[k] = std::to_string(val.get<long long>());
    else throw ParseError("/metadata/" + key + "/" + k, "expected a verdict string");
  }
  return v;
}

TripleDocument from_triple(const FiniteSpectralTriple& t, Json metadata) {
  TripleDocument d;
  d.hilbert_dim = t.hilbert_dim();
  d.algebra_generators = t.algebra_generators();
  d.dirac = t.dirac();
  d.grading = t.grading();
  if (t.real_structure()) {
    d.real_kernel = t.real_structure()->j.kernel();
    d.twist = t.real_structure()->twist;
  }
  d.metadata = std::move(metadata);
  return d;
}

Json to_json(const TripleDocument& d) {
  Json j;
  j["schema_version"] = d.schema_version;
  j["hilbert_dim"] = d.hilbert_dim;
  Json gens = Json::array();
  for (const auto& g : d.algebra_generators) gens.push_back(matrix_to_json(g));
  j["algebra_generators"] = std::move(gens);
  j["dirac"] = matrix_to_json(d.dirac);
  j["grading"] = d.grading ? matrix_to_json(*d.grading) : Json(nullptr);
  if (d.real_kernel) {
    Json r;
    r["kernel"] = matrix_to_json(*d.real_kernel);
    r["twist"] = d.twist ? matrix_to_json(*d.twist) : Json(nullptr);
    j["real_structure"] = std::move(r);
  } else {
    j["real_structure"] = nullptr;
  }
  j["metadata"] = d.metadata;
  return j;
}

TripleDocument parse_triple(const Json& j) {
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  TripleDocument d;
  const Json& version = field(j, "schema_version", "");
  if (!version.is_string()) throw ParseError("/schema_version", "expected a string");
  d.schema_version = version.get<std::string>();
  if (d.schema_version != kSchema)
    throw ParseError("/schema_version", "unsupported schema \"" + d.schema_version + "\", expected \"" + kSchema + "\"");

  const Json& dim = field(j, "hilbert_dim", "");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0)
    throw ParseError("/hilbert_dim", "expected a positive integer");
  d.hilbert_dim = dim.get<Index>();

  auto square = [&](const Json& m, const std::string& path) {
    ComplexMatrix x = matrix_from_json(m, path);
    if (x.rows() != d.hilbert_dim || x.cols() != d.hilbert_dim)
      throw ParseError(path, "matrix is " + std::to_string(x.rows()) + "×" + std::to_string(x.cols()) +
                                 ", expected " + std::to_string(d.hilbert_dim) + "×" + std::to_string(d.hilbert_dim));
    return x;
  };

  const Json& gens = field(j, "algebra_generators", "");
  if (!gens.is_array()) throw ParseError("/algebra_generators", "expected an array of matrices");
  for (std::size_t k = 0; k < gens.size(); ++k)
    d.algebra_generators.push_back(square(gens[k], child("/algebra_generators", k)));
  d.dirac = square(field(j, "dirac", ""), "/dirac");
  if (j.contains("grading") && !j.at("grading").is_null()) d.grading = square(j.at("grading"), "/grading");
  if (j.contains("real_structure") && !j.at("real_structure").is_null()) {
    const Json& r = j.at("real_structure");
    if (!r.is_object()) throw ParseError("/real_structure", "expected an object");
    d.real_kernel = square(field(r, "kernel", "/real_structure"), "/real_structure/kernel");
    if (r.contains("twist") && !r.at("twist").is_null()) d.twist = square(r.at("twist"), "/real_structure/twist");
  }
  if (j.contains("metadata")) {
    if (!j.at("metadata").is_object()) throw ParseError("/metadata", "expected an object");
    d.metadata = j.at("metadata");
    if (d.metadata.contains("tol") && !(d.metadata.at("tol").is_number() && d.metadata.at("tol").get<double>() > 0))
      throw ParseError("/metadata/tol", "expected a positive number");
  }
  return d;
}

TripleDocument parse_triple_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_triple(j);
}

TripleDocument load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_triple_text(buf.str());
}

namespace {

int leaf_depth(const Json& j) {
  if (j.is_object()) return 1000;
  if (!j.is_array()) return 0;
  int d = 0;
  for (const auto& x : j) d = std::max(d, leaf_depth(x));
  return d + 1;
}

// Objects and long arrays are indented; arrays nesting at most two levels of scalars
// (a matrix row of [re, im] pairs) stay on one line.
void pretty(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, val] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      pretty(val, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && leaf_depth(j) > 2) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    std::string flat = j.dump();
    if (j.is_array() && flat.find('"') == std::string::npos) {
      std::string spaced;
      for (char c : flat) spaced += c == ',' ? std::string(", ") : std::string(1, c);
      flat = std::move(spaced);
    }
    out += flat;
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json to_json(const Witness& w, bool with_matrix) {
  Json j;
  j["description"] = w.description;
  j["norm"] = w.norm;
  if (w.first >= 0) j["first"] = w.first;
  if (w.second >= 0) j["second"] = w.second;
  if (with_matrix && w.matrix.size() > 0) j["matrix"] = matrix_to_json(w.matrix);
  return j;
}

Json to_json(const ConditionReport& r, bool with_matrix) {
  Json j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  j["max_violation"] = r.max_violation;
  j["detail"] = r.detail;
  j["witness"] = r.witness ? to_json(*r.witness, with_matrix) : Json(nullptr);
  return j;
}

Json to_json(const SignReport& s) {
  Json j;
  j["epsilon"] = sign_json(s.epsilon);
  j["epsilon_prime"] = sign_json(s.epsilon_prime);
  j["epsilon_dprime"] = s.epsilon_dprime ? sign_json(*s.epsilon_dprime) : Json(nullptr);
  j["twisted"] = s.twisted;
  j["ko"] = ko_json(ko_dimensions(s));
  Json checks = Json::array({to_json(s.epsilon_report), to_json(s.epsilon_prime_report)});
  if (s.epsilon_dprime_report) checks.push_back(to_json(*s.epsilon_dprime_report));
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const MoritaResult& m) {
  Json j;
  j["holds"] = m.holds;
  j["lhs"] = m.lhs;
  j["rhs"] = m.rhs;
  j["dim_lhs"] = m.dim_lhs;
  j["dim_rhs"] = m.dim_rhs;
  j["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
  return j;
}

Json to_json(const TripleAnalysis& a) {
  Json j;
  j["hilbert_dim"] = a.hilbert_dim;
  j["even"] = a.even;
  j["real"] = a.real;
  Json dims;
  dims["algebra"] = a.dim_algebra;
  dims["one_forms"] = a.dim_one_forms;
  dims["clifford"] = a.dim_clifford;
  dims["clifford_gamma"] = a.dim_clifford_gamma ? Json(*a.dim_clifford_gamma) : Json(nullptr);
  j["dimensions"] = std::move(dims);
  j["grading_in_clifford"] = a.grading_in_clifford ? Json(*a.grading_in_clifford) : Json(nullptr);
  Json orders = Json::object();
  if (a.order_zero) orders["zero"] = to_json(*a.order_zero);
  if (a.order_one) orders["one"] = to_json(*a.order_one);
  if (a.order_two) orders["two"] = to_json(*a.order_two);
  j["order_conditions"] = std::move(orders);
  j["signs"] = a.signs ? to_json(*a.signs) : Json(nullptr);
  j["ko"] = ko_json(a.ko);
  if (a.classification) {
    const MoritaClassification& c = *a.classification;
    Json m;
    m["spin"] = to_json(c.spin_result);
    m["even_spin"] = c.even_spin_result ? to_json(*c.even_spin_result) : Json(nullptr);
    m["hodge"] = to_json(c.hodge_result);
    j["classification"] = std::move(m);
  } else {
    j["classification"] = nullptr;
  }
  Json imps = Json::array();
  for (const auto& r : a.implications) imps.push_back(to_json(r));
  j["implications"] = std::move(imps);
  j["verdicts"] = to_json(a.verdicts);
  return j;
}

Json to_json(const ProductAnalysis& p) {
  Json j;
  j["plain"] = to_json(p.plain);
  j["koszul"] = p.koszul ? to_json(*p.koszul) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& r : p.checks) checks.push_back(to_json(r));
  j["checks"] = std::move(checks);
  j["verdicts"] = to_json(p.verdicts);
  return j;
}

Json to_json(const std::vector<torus::SuiteItem>& suite) {
  Json items = Json::array();
  for (const auto& i : suite) {
    Json j;
    j["key"] = i.key;
    j["expected"] = i.expected;
    j["as_expected"] = i.as_expected();
    // witnesses on the torus are operators on H_N; only their norm and location are kept
    j["report"] = to_json(i.report, false);
    items.push_back(std::move(j));
  }
  return items;
}

Json to_json(const GctReport& g) {
  Json j;
  j["holds"] = g.report.holds;
  j["dim_b1"] = g.dim_b1;
  j["dim_b2"] = g.dim_b2;
  j["dim_lhs"] = g.dim_lhs;
  j["dim_rhs"] = g.dim_rhs;
  j["rhs_in_lhs"] = g.rhs_in_lhs;
  j["lhs_in_rhs"] = g.lhs_in_rhs;
  j["detail"] = g.report.detail;
  return j;
}

Json to_json(const Verdicts& v) {
  Json j = Json::object();
  for (const auto& [k, val] : v) j[k] = val;
  return j;
}

ExpectationCheck compare_expected(const Verdicts& expected, const Verdicts& actual) {
  ExpectationCheck c;
  for (const auto& [key, want] : expected) {
    const auto it = actual.find(key);
    const std::string got = it == actual.end() ? "missing" : it->second;
    Json e;
    e["expected"] = want;
    e["actual"] = got;
    e["match"] = got == want;
    c.json[key] = std::move(e);
    if (got != want) c.mismatches.push_back(key + ": expected " + want + ", got " + got);
  }
  return c;
}

std::string golden_name(const NamedExample& e, std::size_t k) {
  if (e.factors.size() == 1) return e.name + ".json";
  return e.name + (k == 0 ? ".first.json" : ".second.json");
}

std::vector<TripleDocument> golden_documents(const NamedExample& e) {
  std::vector<TripleDocument> docs;
  for (std::size_t k = 0; k < e.factors.size(); ++k) {
    Json meta;
    meta["example"] = e.name;
    meta["summary"] = e.summary;
    if (e.factors.size() == 1) {
      meta["expected"] = to_json(e.expected);
    } else {
      meta["role"] = k == 0 ? "first" : "second";
      // product expectations travel with the first factor; the witness checks need the
      // catalog's witness matrices and run under `catalog run` only
      if (k == 0) {
        Verdicts product;
        for (const auto& [key, v] : e.expected)
          if (key.rfind("witness_", 0) != 0) product[key] = v;
        meta["product_expected"] = to_json(product);
      }
    }
    docs.push_back(from_triple(e.factors[k], std::move(meta)));
  }
  return docs;
}

}  // namespace nccheck::doc
