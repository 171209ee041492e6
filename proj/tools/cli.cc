#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "assoclab/ac_explore.h"
#include "assoclab/associativity.h"
#include "assoclab/exterior.h"
#include "assoclab/finite_groupoid.h"
#include "assoclab/geometry.h"
#include "assoclab/ladder.h"
#include "assoclab/lace.h"
#include "assoclab/paren_tree.h"
#include "assoclab/sphere_groupoids.h"
#include "assoclab/torus.h"
#include "assoclab/words.h"

namespace assoclab::cli {

using nlohmann::json;

namespace {

constexpr double kGeometricTolerance = 1e-9;
constexpr double kNumericTolerance = 1e-5;
constexpr double kLatticeTolerance = 1e-6;
constexpr int kLatticeRange = 8;

const char* OriginName(Origin o) {
  switch (o) {
    case Origin::kReference:
      return "reference";
    case Origin::kOracle:
      return "oracle";
    case Origin::kComputed:
      return "computed";
  }
  return "computed";
}

std::string ValueText(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream s;
    s.precision(12);
    s << v.get<double>();
    return s.str();
  }
  return v.dump();
}

std::string Sci(double x) {
  std::ostringstream s;
  s.setf(std::ios::scientific);
  s.precision(2);
  s << x;
  return s.str();
}

std::string Fixed(double x, int digits = 12) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

}  // namespace

void RunReport::AddResult(const std::string& name, json value, Origin origin) {
  results.push_back({{"name", name}, {"value", std::move(value)}, {"origin", OriginName(origin)}});
}

void RunReport::AddCheck(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
}

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

json RunReport::ToJson() const {
  json doc;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["results"] = results;
  doc["checks"] = json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  doc["passed"] = passed();
  if (wall_time_s) doc["wall_time_s"] = *wall_time_s;
  return doc;
}

std::string RunReport::ToText() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& [key, value] : parameters.items()) out << "  " << key << " = " << ValueText(value) << "\n";
  for (const auto& r : results) {
    const json& v = r["value"];
    if (v.is_array() && !v.empty() && v.front().is_object()) continue;  // listed in `text`
    out << r["name"].get<std::string>() << ": " << ValueText(r["value"]) << "\n";
  }
  for (const auto& line : text) out << line << "\n";
  for (const auto& c : checks) {
    out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  if (wall_time_s) out << "wall time: " << Fixed(*wall_time_s, 3) << " s\n";
  return out.str();
}

std::optional<std::pair<long long, long long>> ParseFraction(const std::string& text) {
  static const std::regex kFraction(R"(\s*(-?\d+)\s*/\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kFraction)) return std::nullopt;
  long long p = std::stoll(m[1]), q = std::stoll(m[2]);
  if (q == 0) throw std::invalid_argument("denominator must be non-zero");
  const long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return std::make_pair(p, q);
}

namespace {

struct Globals {
  std::uint64_t seed = 42;
  std::optional<double> tol;
  bool json = false;
  bool timing = false;
};

// ---------------------------------------------------------------------------
// tetrahedron

void RunTetrahedron(const Globals& g, RunReport& report) {
  const double tol = g.tol.value_or(kGeometricTolerance);
  const GDoublePrime grp(kDefaultGroupoidTolerance);
  const auto letters = TetrahedronLetters();
  const auto points = TetrahedronConfiguration();
  auto evaluate = [&](const std::string& text) {
    const auto [tree, names] = ParseParenTree(text);
    std::vector<SphereArrow> word;
    for (char c : names) word.push_back(letters[static_cast<std::size_t>(c - 'A')]);
    return Evaluate(grp, std::span<const SphereArrow>(word), tree);
  };
  const std::string first_text = "F(E((D(CB))A))";
  const std::string second_text = "((F((ED)C))B)A";
  const auto first = evaluate(first_text);
  const auto second = evaluate(second_text);

  const auto labeling = TetrahedronLabeling();
  report.AddResult("vertex labeling", json(labeling));
  report.AddCheck("both products defined", first.has_value() && second.has_value());
  if (!first || !second) return;
  report.AddResult(first_text, first->a, Origin::kReference);
  report.AddResult(second_text, second->a, Origin::kReference);
  const double delta = first->a - second->a;
  report.AddResult("difference", delta, Origin::kReference);
  report.AddCheck(first_text + " = +2π", std::abs(first->a - 2 * kPi) < tol,
                  "error " + Sci(std::abs(first->a - 2 * kPi)));
  report.AddCheck(second_text + " = -2π", std::abs(second->a + 2 * kPi) < tol,
                  "error " + Sci(std::abs(second->a + 2 * kPi)));
  report.AddCheck("Δ = 4π", std::abs(delta - 4 * kPi) < tol);
  const bool ends = grp.ObjectsEqual(first->y, points[6]) && grp.ObjectsEqual(first->x, points[0]) &&
                    grp.ObjectsEqual(second->y, points[6]) && grp.ObjectsEqual(second->x, points[0]);
  report.AddCheck("both products run from x1 to x7", ends);

  std::vector<SphereArrow> word;
  for (char c : std::string("FEDCBA")) word.push_back(letters[static_cast<std::size_t>(c - 'A')]);
  const auto all = AllEvaluations(grp, std::span<const SphereArrow>(word));
  json values = json::array();
  for (const auto& v : all) values.push_back(v.value.a);
  report.AddResult("distinct values over all 42 bracketings", values);
}

// ---------------------------------------------------------------------------
// h-lambda

void RunHLambda(const Globals& g, const std::string& lambda_text, std::size_t max_len, RunReport& report) {
  const double tol = g.tol.value_or(kLatticeTolerance);
  const auto fraction = ParseFraction(lambda_text);
  double lambda;
  if (fraction) {
    lambda = static_cast<double>(fraction->first) / static_cast<double>(fraction->second);
  } else {
    std::size_t used = 0;
    lambda = std::stod(lambda_text, &used);
    if (used != lambda_text.size() || !std::isfinite(lambda)) {
      throw CLI::ValidationError("--lambda", "expected p/q or a decimal number");
    }
  }
  report.parameters["lambda_kind"] = fraction ? "rational" : "real";
  const HLambda grp(lambda);
  const auto records = FindAssociators(grp, HLambdaGadgetAlphabet(), max_len, HLambdaBase());

  const double four_pi = 4 * kPi;
  json found = json::array();
  bool all_in_lattice = true;
  bool has_one = false, has_lambda = false;
  std::vector<std::pair<int, int>> coefficients;
  for (const auto& r : records) {
    const double a = r.g.a;
    json entry = {{"a", a}, {"a_over_4pi", a / four_pi}, {"word_length", r.word.size()}};
    double residual;
    if (fraction) {
      const double step = four_pi / static_cast<double>(fraction->second);
      const double k = std::round(a / step);
      residual = std::abs(a - k * step);
      entry["lattice_multiple_of_4pi_over_q"] = static_cast<long long>(k);
    } else {
      residual = INFINITY;
      std::pair<int, int> best{0, 0};
      for (int n = -kLatticeRange; n <= kLatticeRange; ++n) {
        for (int m = -kLatticeRange; m <= kLatticeRange; ++m) {
          const double d = std::abs(a - four_pi * (n + m * lambda));
          if (d < residual) {
            residual = d;
            best = {n, m};
          }
        }
      }
      entry["n"] = best.first;
      entry["m"] = best.second;
      if (residual <= tol) coefficients.push_back(best);
    }
    entry["residual"] = residual;
    all_in_lattice = all_in_lattice && residual <= tol;
    has_one = has_one || std::abs(std::abs(a) - four_pi) <= tol;
    has_lambda = has_lambda || (lambda != 0 && std::abs(std::abs(a) - four_pi * std::abs(lambda)) <= tol);
    found.push_back(std::move(entry));
    report.text.push_back("associator a = " + Fixed(a) + "  (a/4π = " + Fixed(a / four_pi) +
                          ", residual " + Sci(residual) + ")");
  }
  report.AddResult("associators found", static_cast<long long>(records.size()));
  report.AddResult("values", found);
  report.AddCheck("every value lies in 4π(Z + λZ)", all_in_lattice);
  report.AddCheck("4π realized", has_one);
  report.AddCheck("4πλ realized", has_lambda);
  if (!fraction) {
    bool independent = false;
    for (std::size_t i = 0; i < coefficients.size() && !independent; ++i) {
      for (std::size_t j = i + 1; j < coefficients.size() && !independent; ++j) {
        independent = coefficients[i].first * coefficients[j].second -
                          coefficients[j].first * coefficients[i].second != 0;
      }
    }
    report.AddCheck("two Q-independent values", independent);
  }
}

// ---------------------------------------------------------------------------
// ladder

void RunLadder(const Globals& g, int n, RunReport& report) {
  if (n < 1) throw CLI::ValidationError("--n", "must be at least 1");
  const double tol = g.tol.value_or(kNumericTolerance);
  const LadderConfig cfg = CalibrateLadder(n);
  json amplitudes = json::array();
  bool residuals_ok = true;
  for (int band = 1; band <= n; ++band) {
    const double c = cfg.c[static_cast<std::size_t>(band) - 1];
    const double r = CalibrationResidual(band, c, cfg.step);
    amplitudes.push_back({{"n", band}, {"c", c}, {"residual", r}});
    residuals_ok = residuals_ok && std::abs(r) < kCalibrationTolerance;
  }
  report.AddResult("calibration", amplitudes);
  const auto result = LadderAssociator(n, cfg);
  report.AddResult("inside-out", json::array({result.inside_out.x, result.inside_out.y}));
  report.AddResult("associator", json::array({result.associator.x, result.associator.y}),
                   Origin::kReference);
  const double expected = 1.0 / (100.0 * n);
  report.AddResult("expected", json::array({expected, 0.0}), Origin::kReference);
  report.AddCheck("calibration residuals < 1e-10", residuals_ok);
  report.AddCheck("inside-out = (0, 0)",
                  std::abs(result.inside_out.x) < 1e-8 && std::abs(result.inside_out.y) < 1e-8);
  report.AddCheck("associator = (1/(100n), 0)",
                  std::abs(result.associator.x - expected) < tol && std::abs(result.associator.y) < tol,
                  "error " + Sci(std::abs(result.associator.x - expected)));
}

// ---------------------------------------------------------------------------
// lace

void RunLace(int k, bool verify, RunReport& report) {
  if (k < 1 || k > kMaxSimplexSubdivision) throw CLI::ValidationError("--k", "must be in [1, 64]");
  const EdgePath path = LaceSequence(k);
  json vertices = json::array();
  for (const auto& v : path.Vertices()) vertices.push_back({v.i, v.j});
  report.AddResult("edges", static_cast<long long>(path.edges.size()));
  report.AddResult("path", vertices);
  if (!verify) return;
  const LaceReport r = VerifyLaceSequence(path, k);
  report.AddResult("laces", static_cast<long long>(r.laces.size()));
  report.AddCheck("walk along triangulation edges", r.well_formed);
  report.AddCheck("reduces to the boundary by cancelling inverse pairs", r.reduces_to_boundary);
  report.AddCheck("splits into laces with tails of at most 2k edges", r.decomposes);
  report.AddCheck("each face enclosed exactly once", r.faces_covered,
                  std::to_string(r.laces.size()) + " laces for " + std::to_string(k * k) + " faces");
}

// ---------------------------------------------------------------------------
// torus-check

std::string MatrixText(const RationalMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].get_str();
    s += "]";
  }
  return s;
}

void RunTorusCheck(RunReport& report) {
  const RationalMatrix phi = TorusMap();
  const RationalMatrix induced = InducedMatrix(phi, 2);
  report.AddResult("induced matrix on degree-2 forms", MatrixText(induced), Origin::kReference);
  report.AddCheck("induced matrix matches the reference", induced == TorusReferenceInducedMatrix());
  const auto fixed = FixedVectors(induced);
  report.AddResult("fixed vectors", static_cast<long long>(fixed.size()));
  report.AddCheck("no non-zero fixed points", fixed.empty());
  const FormElement pulled = Pullback(phi, Omega1());
  report.AddResult("φ*ω1", pulled.ToString(), Origin::kReference);
  report.AddCheck("φ*ω1 = ω0", pulled == Omega0());
  const FormElement square = Wedge(OmegaT(), OmegaT());
  const PolyScalar coeff = square.Coefficient(0b1111);
  report.AddResult("ω_t∧ω_t", square.ToString());
  const PolyScalar quadratic = TorusQuadratic();
  report.AddCheck("ω_t∧ω_t = 2(3t^2 - 3t + 1)·dθ1234",
                  square == (PolyScalar(2) * quadratic) * VolumeForm4());
  const auto [q, r] = PolyScalar::DivMod(coeff, quadratic);
  report.AddResult("quadratic factor", quadratic.ToString(), Origin::kReference);
  report.AddResult("overall factor", q.ToString());
  report.AddCheck("wedge coefficient is a constant multiple of 3t^2 - 3t + 1", r.IsZero() && q.Degree() == 0);
  report.text.push_back("note: the exact coefficient is 2(3t^2 - 3t + 1); a bare 3t^2 - 3t + 1 drops the factor 2");
  const int roots = CountRootsIn(quadratic, 0, 1);
  report.AddResult("roots of 3t^2 - 3t + 1 in [0, 1]", roots);
  report.AddCheck("ω_t∧ω_t vanishes nowhere on [0, 1]", roots == 0);
}

// ---------------------------------------------------------------------------
// File-based commands

std::string WordText(const FiniteLocalGroupoid& grp, const Word<ElementId>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + grp.ElementName(w[i]);
  return s + ")";
}

void RunAc(const std::string& file, std::size_t max_len, RunReport& report) {
  const auto grp = LoadGroupoid(file);
  const AcReport r = AcExplore(grp, max_len);
  report.AddResult("classes", static_cast<long long>(r.classes.size()));
  report.AddResult("words", static_cast<long long>(r.words));
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"representative", WordText(grp, c.representative)},
                       {"has_letter", c.has_letter},
                       {"size", c.size}});
    report.text.push_back("class " + WordText(grp, c.representative) + ": " + std::to_string(c.size) +
                          " words" + (c.has_letter ? ", has a single letter" : ""));
  }
  report.AddResult("class list", classes);
  report.AddCheck("enumeration complete", r.complete);
}

void RunValidate(const std::string& file, RunReport& report) {
  const auto grp = LoadGroupoid(file);
  const auto violations = Validate(grp);
  json list = json::array();
  for (const auto& v : violations) {
    list.push_back({{"axiom", v.axiom}, {"ids", v.ids}, {"detail", v.detail}});
    std::string ids;
    for (const auto& id : v.ids) ids += (ids.empty() ? "" : ", ") + id;
    report.text.push_back("violation: " + v.axiom + " [" + ids + "] " + v.detail);
  }
  report.AddResult("violations", list);
  report.AddCheck("axioms hold", violations.empty(), std::to_string(violations.size()) + " violation(s)");
}

void RunAssocCheck(const std::string& file, int n, RunReport& report) {
  if (n < 3 || n > 10) throw CLI::ValidationError("--n", "must be in [3, 10]");
  const auto grp = LoadGroupoid(file);
  const auto w = IsNAssociative(grp, static_cast<std::size_t>(n));
  if (w) {
    std::vector<std::string> names;
    for (ElementId e : w->tuple) names.push_back(grp.ElementName(e));
    report.AddResult("witness", json(names));
    report.AddResult("bracketing a", w->tree_a.Render(names));
    report.AddResult("value a", grp.ElementName(w->value_a));
    report.AddResult("bracketing b", w->tree_b.Render(names));
    report.AddResult("value b", grp.ElementName(w->value_b));
  }
  report.AddCheck(std::to_string(n) + "-associative", !w.has_value());
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local groupoid laboratory: associativity, associators and their combinatorics", "assoclab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  double tol = 0;
  app.add_option("--seed", g.seed, "Seed for randomized steps")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "Override the comparison tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Emit a single JSON report");
  app.add_flag("--timing", g.timing, "Include wall time in the report");

  auto* tetra = app.add_subcommand("tetrahedron", "Two bracketings of the tetrahedron word in G''");

  auto* hl = app.add_subcommand("h-lambda", "Associator search in H(lambda)");
  std::string lambda_text;
  std::size_t max_len = 12;
  hl->add_option("--lambda", lambda_text, "p/q or a decimal")->required();
  hl->add_option("--max-len", max_len, "Longest word searched")->check(CLI::Range(1, 12))->capture_default_str();

  auto* ladder = app.add_subcommand("ladder", "Associators of the ladder local group");
  int ladder_n = 1;
  ladder->add_option("--n", ladder_n, "Band index")->required();

  auto* lace = app.add_subcommand("lace", "Lace sequence of the triangulated simplex");
  int lace_k = 1;
  bool verify = false;
  lace->add_option("--k", lace_k, "Subdivision")->required();
  lace->add_flag("--verify", verify, "Check the block and lace conditions");

  auto* torus = app.add_subcommand("torus-check", "Exterior algebra checks for the torus automorphism");

  auto* ac = app.add_subcommand("ac", "Bounded associative-completion classes of a finite groupoid");
  std::string ac_file;
  std::size_t ac_len = 3;
  ac->add_option("--file", ac_file, "Groupoid JSON file")->required();
  ac->add_option("--max-len", ac_len, "Longest word")->check(CLI::Range(1, 12))->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Axiom report for a finite groupoid");
  std::string validate_file;
  validate->add_option("--file", validate_file, "Groupoid JSON file")->required();

  auto* assoc = app.add_subcommand("assoc-check", "n-associativity of a finite groupoid");
  std::string assoc_file;
  int assoc_n = 3;
  assoc->add_option("--file", assoc_file, "Groupoid JSON file")->required();
  assoc->add_option("--n", assoc_n, "Order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (*tol_opt) g.tol = tol;

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report.parameters["seed"] = g.seed;
    if (g.tol) report.parameters["tol"] = *g.tol;
    if (*tetra) {
      report.command = "tetrahedron";
      RunTetrahedron(g, report);
    } else if (*hl) {
      report.command = "h-lambda";
      report.parameters["lambda"] = lambda_text;
      report.parameters["max_len"] = max_len;
      RunHLambda(g, lambda_text, max_len, report);
    } else if (*ladder) {
      report.command = "ladder";
      report.parameters["n"] = ladder_n;
      RunLadder(g, ladder_n, report);
    } else if (*lace) {
      report.command = "lace";
      report.parameters["k"] = lace_k;
      report.parameters["verify"] = verify;
      RunLace(lace_k, verify, report);
    } else if (*torus) {
      report.command = "torus-check";
      RunTorusCheck(report);
    } else if (*ac) {
      report.command = "ac";
      report.parameters["file"] = ac_file;
      report.parameters["max_len"] = ac_len;
      RunAc(ac_file, ac_len, report);
    } else if (*validate) {
      report.command = "validate";
      report.parameters["file"] = validate_file;
      RunValidate(validate_file, report);
    } else if (*assoc) {
      report.command = "assoc-check";
      report.parameters["file"] = assoc_file;
      report.parameters["n"] = assoc_n;
      RunAssocCheck(assoc_file, assoc_n, report);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  if (g.timing) {
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  if (g.json) {
    out << report.ToJson().dump(2) << "\n";
  } else {
    out << report.ToText();
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace assoclab::cli
