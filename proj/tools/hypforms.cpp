// hypforms: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "hypforms/asymptotics.hpp"
#include "hypforms/certify.hpp"
#include "hypforms/families.hpp"
#include "hypforms/index_classify.hpp"
#include "hypforms/svg.hpp"
#include "hypforms/verify.hpp"

using namespace hypforms;
using nlohmann::json;

namespace {

int cmd_check(const std::string& text) {
  const BinaryForm f = parse_form(text);
  const Certificate h = is_hyperbolic(f);
  const Certificate p = is_hyperbolic_polar(f);
  json out{{"form", format_form(f)}, {"hessian", to_json(h)}, {"polar", to_json(p)}, {"agree", h.verdict == p.verdict}};
  std::cout << out.dump(2) << '\n';
  if (h.verdict != p.verdict) {
    std::cerr << "internal error: hessian and polar certificates disagree\n";
    return 2;
  }
  return 0;
}

int cmd_index(const std::string& text) {
  std::cout << to_json(classify(parse_form(text))).dump(2) << '\n';
  return 0;
}

int cmd_family(const std::string& kind, int degree, int m, int n, int k, bool even) {
  std::vector<FamilyMember> members;
  if (kind == "arnold") {
    members.push_back(arnold(degree, m));
  } else if (kind == "pfact") {
    members.push_back(p_factorized(k, even));
  } else if (kind == "g") {
    members.push_back(g_even(n));
  } else if (kind == "f") {
    members.push_back(f_family(n, k, even));
  } else if (kind == "reps") {
    members = representatives(degree);
  } else {
    throw DomainError("unknown family: " + kind);
  }
  json out = json::array();
  for (const auto& mem : members) out.push_back(to_json(mem));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyParams& params) {
  const SuiteReport rep = run_suite(suite, params);
  std::cout << to_json(rep).dump(2) << '\n';
  std::cerr << rep.suite << ": " << rep.cases.size() - rep.failed() << "/" << rep.cases.size() << " passed in "
            << rep.wall_time << " s\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_curves(const std::string& text, const std::string& out, const std::string& csv, const CurveOptions& opts,
               int grid) {
  const BinaryForm f = parse_form(text);
  if (!is_hyperbolic(f).hyperbolic()) throw DomainError("curves: " + format_form(f) + " is not hyperbolic");
  const auto curves = figure_curves(f, opts, grid);
  SvgOptions so;
  so.viewport = opts.viewport;
  std::ofstream(out) << render_svg(curves, so);
  if (!csv.empty()) std::ofstream(csv) << curves_csv(curves);
  double worst = 0.0;
  for (const auto& c : curves) worst = std::max(worst, max_tangent_residual(f, c));
  std::cout << json{{"form", format_form(f)}, {"curves", curves.size()}, {"max_residual", worst}, {"svg", out}}.dump(2)
            << '\n';
  return 0;
}

int cmd_classify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::cout << "form,degree,hyperbolic,index,component_rank,factor_count\n";
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const BinaryForm f = parse_form(line);
    const bool hyp = f.degree() >= 2 && is_hyperbolic(f).hyperbolic();
    std::cout << '"' << format_form(f) << "\"," << f.degree() << ',' << (hyp ? "true" : "false");
    if (hyp && f.degree() >= 3) {
      const auto r = classify(f);
      std::cout << ',' << r.index << ',' << r.component_rank << ',' << r.factor_count << '\n';
    } else if (hyp) {
      std::cout << ',' << index_gamma(f) << ",," << count_real_linear_factors(f) << '\n';
    } else {
      std::cout << ",,," << count_real_linear_factors(f) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for hyperbolic binary forms"};
  app.require_subcommand(1);
  int rc = 0;

  std::string poly;
  auto* check = app.add_subcommand("check", "Certify hyperbolicity by the Hessian and polar routes");
  check->add_option("poly", poly, "Polynomial text")->required();
  check->callback([&] { rc = cmd_check(poly); });

  auto* index = app.add_subcommand("index", "Index of gamma_f and component report");
  index->add_option("poly", poly, "Polynomial text")->required();
  index->callback([&] { rc = cmd_index(poly); });

  std::string kind;
  int degree = 0, m = 0, n = 0, k = 0;
  bool even = false;
  auto* family = app.add_subcommand("family", "Generate family members");
  family->add_option("kind", kind, "arnold | pfact | g | f | reps")
      ->required()
      ->check(CLI::IsMember({"arnold", "pfact", "g", "f", "reps"}));
  family->add_option("-D,--degree", degree, "Degree (arnold, reps)");
  family->add_option("-m", m, "Arnold exponent m");
  family->add_option("-n", n, "n for g and f");
  family->add_option("-k", k, "k for pfact and f");
  family->add_flag("--even", even, "Even variant of pfact / f");
  family->callback([&] { rc = cmd_family(kind, degree, m, n, k, even); });

  std::string suite;
  VerifyParams vp;
  int d_max = 0, n_max = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* d_opt = verify->add_option("--d-max", d_max, "Largest degree");
  auto* n_opt = verify->add_option("--n-max", n_max, "Largest n");
  verify->add_option("--seed", vp.seed, "Seed for random corpora");
  verify->callback([&] {
    if (*d_opt) vp.d_max = d_max;
    if (*n_opt) vp.n_max = n_max;
    rc = cmd_verify(suite, vp);
  });

  std::string out = "curves.svg", csv;
  CurveOptions co;
  int grid = 5;
  auto* curves = app.add_subcommand("curves", "Asymptotic curves as SVG");
  curves->add_option("--poly", poly, "Polynomial text")->required();
  curves->add_option("--out", out, "SVG output path");
  curves->add_option("--csv", csv, "Optional CSV output path");
  curves->add_option("--step", co.step, "Integration step");
  curves->add_option("--viewport", co.viewport, "Half-width of the square window");
  curves->add_option("--max-len", co.max_len, "Arc length per direction");
  curves->add_option("--standoff", co.standoff, "Stop radius around the origin");
  curves->add_option("--grid", grid, "Seeds per side of the seed grid");
  curves->callback([&] { rc = cmd_curves(poly, out, csv, co, grid); });

  std::string path;
  auto* cls = app.add_subcommand("classify", "Classify one polynomial per line, CSV output");
  cls->add_option("file", path, "Input file")->required();
  cls->callback([&] { rc = cmd_classify(path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
