#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "nccheck/catalog.hpp"
#include "nccheck/document.hpp"

using namespace nccheck;
using doc::Json;

namespace {

constexpr int kOk = 0, kFailed = 1, kParse = 2, kInvariant = 3;

double default_tol() {
  if (const char* env = std::getenv("NCCHECK_TOL")) {
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (end != env && *end == '\0' && t > 0) return t;
    std::cerr << "warning: ignoring NCCHECK_TOL=" << env << "\n";
  }
  return kDefaultTol;
}

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json header(const std::string& kind, double tol) {
  Json j;
  j["schema_version"] = doc::kSchema;
  j["kind"] = kind;
  j["tol"] = tol;
  return j;
}

Json zero_timing() {
  Json t;
  t["seconds"] = 0.0;
  return t;
}

std::string mark(bool ok) { return ok ? "ok  " : "FAIL"; }

void print_report(const ConditionReport& r, const std::string& indent = "  ") {
  std::cout << indent << (r.holds ? "holds " : "fails ") << r.name;
  if (!r.detail.empty()) std::cout << " | " << r.detail;
  if (r.witness) std::cout << " | witness " << r.witness->description << ", norm " << r.witness->norm;
  std::cout << "\n";
}

void print_analysis(const TripleAnalysis& a, const std::string& indent = "") {
  std::cout << indent << "H = C^" << a.hilbert_dim << (a.even ? ", even" : ", odd") << (a.real ? ", real" : "") << "\n";
  std::cout << indent << "dim A = " << a.dim_algebra << ", dim Ω¹ = " << a.dim_one_forms << ", dim Cl = " << a.dim_clifford;
  if (a.dim_clifford_gamma) std::cout << ", dim Cl^γ = " << *a.dim_clifford_gamma;
  std::cout << "\n";
  for (const auto* r : {&a.order_zero, &a.order_one, &a.order_two})
    if (*r) print_report(**r, indent + "  ");
  if (a.signs) {
    std::cout << indent << "signs ε = " << to_string(a.signs->epsilon) << ", ε′ = " << to_string(a.signs->epsilon_prime);
    if (a.signs->epsilon_dprime) std::cout << ", ε″ = " << to_string(*a.signs->epsilon_dprime);
    if (a.signs->twisted) std::cout << " (twisted ε′)";
    std::cout << ", KO " << verdict(a.ko) << "\n";
  }
  if (a.classification) {
    const auto& c = *a.classification;
    auto line = [&](const std::string& name, const MoritaResult& m) {
      std::cout << indent << "  " << name << ": " << verdict(m.holds) << " (" << m.lhs << " [" << m.dim_lhs << "] vs "
                << m.rhs << " [" << m.dim_rhs << "])";
      if (m.witness) std::cout << " | witness " << m.witness->description << ", norm " << m.witness->norm;
      std::cout << "\n";
    };
    std::cout << indent << "classification\n";
    line("spin", c.spin_result);
    if (c.even_spin_result) line("even_spin", *c.even_spin_result);
    line("hodge", c.hodge_result);
  }
  for (const auto& r : a.implications) print_report(r, indent + "  ");
}

int report_expectations(const doc::ExpectationCheck& e, std::size_t count) {
  for (const auto& m : e.mismatches) std::cout << "mismatch " << m << "\n";
  if (count > 0) std::cout << "expected verdicts: " << count - e.mismatches.size() << "/" << count << " match\n";
  return e.mismatches.empty() ? kOk : kFailed;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const doc::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kParse;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.invariant() << " (" << e.what() << ")\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
}

int cmd_check(const std::string& path, double tol, bool json) {
  return guarded([&] {
    const Timer timer;
    const doc::TripleDocument d = doc::load_triple(path);
    const double t = d.tolerance().value_or(tol);
    const Verdicts expected = d.expected();
    const FiniteSpectralTriple triple = d.build(t);
    const TripleAnalysis a = analyze(triple);
    const doc::ExpectationCheck e = doc::compare_expected(expected, a.verdicts);
    if (json) {
      Json out = header("check", t);
      out["input"] = path;
      out["analysis"] = doc::to_json(a);
      out["expected"] = e.json;
      out["expected_match"] = e.mismatches.empty();
      out["timing"] = zero_timing();
      std::cout << doc::dump(out);
      return e.mismatches.empty() ? kOk : kFailed;
    }
    std::cout << path << " (tol " << t << ")\n";
    print_analysis(a);
    for (const auto& [k, v] : a.verdicts) std::cout << "  " << k << " = " << v << "\n";
    const int code = report_expectations(e, expected.size());
    std::cout << "elapsed " << timer.seconds() << " s\n";
    return code;
  });
}

int cmd_product(const std::string& p1, const std::string& p2, const std::string& mode_name, const std::string& out_path,
                double tol, bool json) {
  return guarded([&] {
    const Timer timer;
    const doc::TripleDocument d1 = doc::load_triple(p1), d2 = doc::load_triple(p2);
    const double t = std::max(d1.tolerance().value_or(tol), d2.tolerance().value_or(tol));
    const FiniteSpectralTriple t1 = d1.build(t), t2 = d2.build(t);
    const JMode mode = mode_name == "koszul" ? JMode::Koszul : JMode::Plain;
    const FiniteSpectralTriple prod = product_triple(t1, t2, mode);
    if (!out_path.empty()) {
      Json meta;
      meta["product_of"] = Json::array({p1, p2});
      meta["j_mode"] = to_string(mode);
      doc::write_file(out_path, doc::dump(doc::to_json(doc::from_triple(prod, meta))));
    }
    const ProductAnalysis pa = analyze_product(t1, t2);
    const Verdicts expected = d1.expected("product_expected");
    const doc::ExpectationCheck e = doc::compare_expected(expected, pa.verdicts);
    if (json) {
      Json out = header("product", t);
      out["inputs"] = Json::array({p1, p2});
      out["j_mode"] = to_string(mode);
      out["hilbert_dim"] = prod.hilbert_dim();
      out["analysis"] = doc::to_json(pa);
      out["expected"] = e.json;
      out["expected_match"] = e.mismatches.empty();
      out["timing"] = zero_timing();
      std::cout << doc::dump(out);
      return e.mismatches.empty() ? kOk : kFailed;
    }
    std::cout << p1 << " × " << p2 << ", " << to_string(mode) << " real structure, H = C^" << prod.hilbert_dim() << "\n";
    const TripleAnalysis* chosen = mode == JMode::Koszul && pa.koszul ? &*pa.koszul : &pa.plain;
    print_analysis(*chosen, "  ");
    std::cout << "product identities\n";
    for (const auto& r : pa.checks) print_report(r);
    for (const auto& [k, v] : pa.verdicts) std::cout << "  " << k << " = " << v << "\n";
    const int code = report_expectations(e, expected.size());
    std::cout << "elapsed " << timer.seconds() << " s\n";
    return code;
  });
}

int cmd_torus(int band, double tol, bool json) {
  return guarded([&] {
    const Timer timer;
    const auto items = torus::run_torus_suite(band, tol);
    bool all = true;
    for (const auto& i : items) all = all && i.as_expected();
    if (json) {
      Json out = header("torus", tol);
      out["band"] = band;
      out["items"] = doc::to_json(items);
      out["all_as_expected"] = all;
      out["timing"] = zero_timing();
      std::cout << doc::dump(out);
      return all ? kOk : kFailed;
    }
    for (const auto& i : items) {
      std::cout << mark(i.as_expected()) << " " << i.key << ": " << (i.report.holds ? "holds" : "fails")
                << (i.expected ? "" : " (expected to fail)");
      if (!i.report.detail.empty()) std::cout << " | " << i.report.detail;
      if (i.report.witness) std::cout << " | witness " << i.report.witness->description << ", norm " << i.report.witness->norm;
      std::cout << "\n";
    }
    std::size_t good = 0;
    for (const auto& i : items) good += i.as_expected();
    std::cout << good << "/" << items.size() << " items as expected, band " << band << ", " << timer.seconds() << " s\n";
    return all ? kOk : kFailed;
  });
}

int cmd_gct(int trials, int dim_max, std::uint64_t seed, double tol, bool json) {
  return guarded([&] {
    const Timer timer;
    Json rows = Json::array();
    int passed = 0;
    for (int k = 0; k < trials; ++k) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
      const GctReport r = verify_gct(random_graded_pair(s, dim_max), tol);
      passed += r.report.holds;
      Json row = doc::to_json(r);
      row["seed"] = s;
      rows.push_back(std::move(row));
      if (!json)
        std::cout << mark(r.report.holds) << " trial " << k << " seed " << s << ": dim B1 " << r.dim_b1 << ", B2 "
                  << r.dim_b2 << ", (B1⊙B2)′ " << r.dim_lhs << ", B1′⊙′B2′ " << r.dim_rhs << "\n";
    }
    if (json) {
      Json out = header("gct", tol);
      out["trials"] = trials;
      out["dim_max"] = dim_max;
      out["seed"] = seed;
      out["passed"] = passed;
      out["results"] = std::move(rows);
      out["timing"] = zero_timing();
      std::cout << doc::dump(out);
    } else {
      std::cout << passed << "/" << trials << " trials pass, " << timer.seconds() << " s\n";
    }
    return passed == trials ? kOk : kFailed;
  });
}

int cmd_catalog_run(bool json) {
  return guarded([&] {
    Json rows = Json::array();
    bool all = true;
    for (const auto& e : named_examples()) {
      const ExampleRun run = run_example(e);
      all = all && run.mismatches.empty();
      if (json) {
        Json row;
        row["name"] = e.name;
        row["verdicts"] = doc::to_json(run.verdicts);
        row["mismatches"] = run.mismatches;
        rows.push_back(std::move(row));
        continue;
      }
      std::cout << mark(run.mismatches.empty()) << " " << e.name << " (" << e.expected.size() << " expected verdicts)\n";
      for (const auto& m : run.mismatches) std::cout << "     " << m << "\n";
    }
    if (json) {
      Json out = header("catalog", kDefaultTol);
      out["examples"] = std::move(rows);
      out["all_match"] = all;
      std::cout << doc::dump(out);
    }
    return all ? kOk : kFailed;
  });
}

int cmd_catalog_list() {
  for (const auto& e : named_examples())
    std::cout << e.name << (e.factors.size() == 2 ? " (pair)" : "") << ": " << e.summary << "\n";
  return kOk;
}

int cmd_catalog_export(const std::string& dir) {
  return guarded([&] {
    std::filesystem::create_directories(dir);
    for (const auto& e : named_examples()) {
      const auto docs = doc::golden_documents(e);
      for (std::size_t k = 0; k < docs.size(); ++k) {
        const std::string path = (std::filesystem::path(dir) / doc::golden_name(e, k)).string();
        doc::write_file(path, doc::dump(doc::to_json(docs[k])));
        std::cout << path << "\n";
      }
    }
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for finite and band-limited real spectral triples"};
  app.require_subcommand(1);
  double tol = default_tol();
  bool json = false;

  std::string file;
  auto* check = app.add_subcommand("check", "Run every applicable check on a triple document");
  check->add_option("FILE", file, "Triple document (nccheck/1)")->required();
  check->add_option("--tol", tol, "Tolerance (default 1e-9 or NCCHECK_TOL)")->check(CLI::PositiveNumber);
  check->add_flag("--json", json, "Machine-readable report");

  std::string f1, f2, mode = "plain", out;
  auto* product = app.add_subcommand("product", "Build and analyze the product of two triples");
  product->add_option("F1", f1, "First factor")->required();
  product->add_option("F2", f2, "Second factor")->required();
  product->add_option("--j-mode", mode, "Product real structure")
      ->check(CLI::IsMember({"plain", "koszul"}))
      ->required();
  product->add_option("--out", out, "Write the product triple document here");
  product->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  product->add_flag("--json", json, "Machine-readable report");

  int band = 3;
  auto* torus_cmd = app.add_subcommand("torus", "Run the torus suite on a band-limited model");
  torus_cmd->add_option("--band", band, "Fourier band N (at least 3)")->check(CLI::Range(3, 12));
  torus_cmd->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  torus_cmd->add_flag("--json", json, "Machine-readable report");

  int trials = 100, dim_max = 4;
  std::uint64_t seed = 0;
  auto* gct = app.add_subcommand("gct", "Randomized check of the graded commutant theorem");
  gct->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  gct->add_option("--dim-max", dim_max, "Largest factor dimension")->check(CLI::Range(2, 8));
  gct->add_option("--seed", seed, "First seed");
  gct->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  gct->add_flag("--json", json, "Machine-readable report");

  auto* catalog = app.add_subcommand("catalog", "Named examples");
  catalog->require_subcommand(1);
  auto* run = catalog->add_subcommand("run", "Run every example against its expected verdicts");
  run->add_flag("--json", json, "Machine-readable report");
  auto* list = catalog->add_subcommand("list", "List the examples");
  std::string dir;
  auto* exp = catalog->add_subcommand("export", "Write golden triple documents");
  exp->add_option("DIR", dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (*check) return cmd_check(file, tol, json);
  if (*product) return cmd_product(f1, f2, mode, out, tol, json);
  if (*torus_cmd) return cmd_torus(band, tol, json);
  if (*gct) return cmd_gct(trials, dim_max, seed, tol, json);
  if (*run) return cmd_catalog_run(json);
  if (*list) return cmd_catalog_list();
  if (*exp) return cmd_catalog_export(dir);
  return kFailed;
}
