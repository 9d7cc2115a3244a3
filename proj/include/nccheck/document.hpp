#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccheck/catalog.hpp"
#include "nccheck/torus.hpp"

namespace nccheck::doc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nccheck/1";

/// Malformed document; `path()` is the JSON pointer of the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

Json complex_to_json(Complex z);
/// Row-major nested arrays of [re, im].
Json matrix_to_json(const ComplexMatrix& m);
Complex complex_from_json(const Json& j, const std::string& path);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path);

struct TripleDocument {
  std::string schema_version = kSchema;
  Index hilbert_dim = 0;
  std::vector<ComplexMatrix> algebra_generators;
  ComplexMatrix dirac;
  std::optional<ComplexMatrix> grading;
  std::optional<ComplexMatrix> real_kernel;
  std::optional<ComplexMatrix> twist;
  Json metadata = Json::object();

  /// Throws InvariantViolation when the triple is invalid.
  FiniteSpectralTriple build(double tol) const;
  /// metadata.tol, if present.
  std::optional<double> tolerance() const;
  /// metadata.expected as condition → verdict text.
  Verdicts expected(const std::string& key = "expected") const;
};

TripleDocument from_triple(const FiniteSpectralTriple& t, Json metadata = Json::object());
Json to_json(const TripleDocument& d);
/// Throws ParseError with the field path.
TripleDocument parse_triple(const Json& j);
TripleDocument parse_triple_text(const std::string& text);
/// Throws std::runtime_error when the file cannot be read, ParseError otherwise.
TripleDocument load_triple(const std::string& path);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const std::string& text);

Json to_json(const Witness& w, bool with_matrix = true);
Json to_json(const ConditionReport& r, bool with_matrix = true);
Json to_json(const SignReport& s);
Json to_json(const MoritaResult& m);
Json to_json(const TripleAnalysis& a);
Json to_json(const ProductAnalysis& p);
Json to_json(const std::vector<torus::SuiteItem>& suite);
Json to_json(const GctReport& g);
Json to_json(const Verdicts& v);

struct ExpectationCheck {
  std::vector<std::string> mismatches;  // "key: expected X, got Y"
  Json json = Json::object();
};
ExpectationCheck compare_expected(const Verdicts& expected, const Verdicts& actual);

/// Golden file name for factor `k` of a catalog example: `name.json`, or `name.first.json` and `name.second.json`.
std::string golden_name(const NamedExample& e, std::size_t k);
/// TripleDocuments for every factor of a catalog example, with the expected verdicts in the metadata.
std::vector<TripleDocument> golden_documents(const NamedExample& e);

}  // namespace nccheck::doc
