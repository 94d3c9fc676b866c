#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "cliffop/dsl.hpp"
#include "cliffop/fock.hpp"
#include "cliffop/json_io.hpp"
#include "cliffop/maxwell.hpp"

namespace {

using namespace cliffop;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

int default_degree_bound() {
  if (const char* env = std::getenv("CLIFFOP_DEGREE_BOUND")) {
    int v = std::atoi(env);
    if (v >= 0) return v;
  }
  return 5;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_output(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void print_report_line(const IdentityReport& report) {
  std::cout << identity_report_json(report).dump() << "\n";
}

void print_report_md(const std::vector<IdentityReport>& reports) {
  std::cout << "| identity | tag | n | bound | verdict |\n";
  std::cout << "|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    std::cout << "| `" << r.expr << "` | " << (r.tag.empty() ? "-" : r.tag) << " | " << r.n
              << " | " << r.bound << " | " << (r.zero ? "zero" : "nonzero") << " |\n";
  }
}

int run_verify(const std::string& expr, const std::string& suite, int n, int bound,
               const std::string& report_format) {
  std::vector<IdentityReport> reports;
  if (!expr.empty()) {
    OpPtr ast = parse(expr, n);
    reports.push_back(check_identity_zero(*ast, n, bound, expr, "expr"));
  } else {
    reports = builtin_suite(suite, n, bound);
  }
  if (report_format == "md") {
    print_report_md(reports);
  } else {
    for (const auto& r : reports) print_report_line(r);
  }
  for (const auto& r : reports)
    if (!r.zero) return kExitIdentityFailure;
  return kExitOk;
}

RPoly default_seed(int n) {
  return RPoly::constant(n, Signature(0, n), Rational(1));
}

RPoly load_seed(const std::string& path, int n) {
  if (path.empty()) return default_seed(n);
  RPoly p = poly_from_json(load_json(path));
  if (p.vars() != n) throw Error("seed dimension does not match --n");
  return p;
}

int run_gen_hermite(int n, int k, const std::string& seed_file, const std::string& out) {
  RPoly seed = load_seed(seed_file, n);
  if (!apply(*op::dirac(), seed).is_zero()) seed = monogenic_projection(seed);
  auto states = hermite_sequence(seed, k);
  Json j = Json::array();
  for (const auto& s : states) j.push_back(to_json(s));
  write_output(out, Json{{"n", n}, {"seed", to_json(seed)}, {"states", j}});
  return kExitOk;
}

int run_gen_maxwell(int n, int s, const std::string& seed_file, bool force_general,
                    const std::string& out, bool numeric, std::vector<double> lambdas,
                    int points, unsigned rng_seed) {
  RPoly seed = seed_file.empty() ? default_seed(n) : load_seed(seed_file, n);
  if (seed_file.empty() && s != 0) throw Error("--s > 0 requires --seed-file");
  bool monogenic = !force_general && apply(*op::dirac(), seed).is_zero();
  MaxwellSolution sol = maxwell_solution(seed, s, monogenic);
  Json j = to_json(sol);
  if (numeric) {
    if (lambdas.empty()) lambdas = {1.0};
    Json samples = Json::array();
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    CSPoly value = solution_poly(sol);
    for (double lambda : lambdas) {
      auto specialized =
          value.map_coeffs<double>([&](const CSScalar& c) { return c.eval(lambda, n); });
      for (int p = 0; p < points; ++p) {
        std::vector<double> point(n);
        for (auto& v : point) v = coord(rng);
        auto field = specialized.evaluate(point);
        Json coords = Json::array();
        for (double v : point) coords.push_back(v);
        Json comps = Json::array();
        for (const auto& [mask, c] : field.terms())
          comps.push_back({{"blade", Multivector<double>::blade_str(mask)}, {"value", c}});
        samples.push_back({{"lambda", lambda}, {"point", coords}, {"field", comps}});
      }
    }
    j["numeric"] = Json{{"samples", samples},
                        {"max_pde_residual",
                         numeric_pde_residual(sol, lambdas, points, rng_seed)}};
  }
  write_output(out, j);
  return kExitOk;
}

int run_decompose(const std::string& in, const std::string& out, bool full) {
  RPoly p = poly_from_json(load_json(in));
  Json j;
  if (full) {
    auto tower = fischer_tower(p);
    Json parts = Json::array();
    for (size_t s = 0; s < tower.size(); ++s)
      parts.push_back(Json{{"x_power", s}, {"monogenic", to_json(tower[s])}});
    j = Json{{"tower", parts}};
  } else {
    int k = 0;
    if (!p.is_homogeneous(&k)) throw Error("decompose expects a homogeneous polynomial");
    auto split = fischer_split_harmonic(p);
    j = Json{{"M_k", to_json(split.monogenic)},
             {"x_M_k_minus_1", to_json(split.x_times_lower)},
             {"M_k_minus_1", to_json(split.lower)}};
  }
  write_output(out, j);
  return kExitOk;
}

int run_ck_extend(const std::string& in, const std::string& out) {
  RPoly f = poly_from_json(load_json(in));
  RPoly extended = ck_extension(f);
  write_output(out, Json{{"extension", to_json(extended)}});
  return kExitOk;
}

int run_eval(const std::string& in, const std::vector<std::string>& point_args, int random_points,
             unsigned rng_seed, const std::string& out) {
  RWeighted f = weighted_from_json(load_json(in));
  std::vector<std::vector<double>> points;
  for (const auto& text : point_args) {
    std::vector<double> point;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      point.push_back(std::stod(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (static_cast<int>(point.size()) != f.poly.vars())
      throw Error("point dimension does not match the function");
    points.push_back(point);
  }
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int i = 0; i < random_points; ++i) {
    std::vector<double> point(f.poly.vars());
    for (auto& v : point) v = coord(rng);
    points.push_back(point);
  }
  Json samples = Json::array();
  for (const auto& point : points) {
    auto value = f.evaluate(point);
    Json coords = Json::array();
    for (double v : point) coords.push_back(v);
    Json comps = Json::array();
    for (const auto& [mask, c] : value.terms())
      comps.push_back({{"blade", Multivector<double>::blade_str(mask)}, {"value", c}});
    samples.push_back({{"point", coords}, {"value", comps}});
  }
  write_output(out, Json{{"numeric", samples}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffop: exact operator calculus on Clifford algebra-valued polynomials"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check an operator identity or a named suite");
  std::string expr, suite, report_format = "jsonl";
  int n = 3, bound = default_degree_bound();
  verify->add_option("--expr", expr, "operator expression that must vanish");
  verify->add_option("--suite", suite, "one of: core_relations, osp12, powers_dpm, displaced, landau");
  verify->add_option("--n", n, "dimension")->check(CLI::Range(1, kMaxDimension));
  verify->add_option("--degree", bound, "spanning-set degree bound");
  verify->add_option("--report", report_format, "jsonl (default) or md");

  // gen-hermite
  auto* gen_hermite = app.add_subcommand("gen-hermite", "generate the ladder tower of a seed");
  int hermite_n = 3, hermite_k = 3;
  std::string hermite_seed, hermite_out;
  gen_hermite->add_option("--n", hermite_n, "dimension")->check(CLI::Range(1, kMaxDimension));
  gen_hermite->add_option("--k", hermite_k, "highest ladder index")->required();
  gen_hermite->add_option("--seed-file", hermite_seed, "polynomial JSON; non-monogenic seeds are projected");
  gen_hermite->add_option("--out", hermite_out, "output path (default stdout)");

  // gen-maxwell
  auto* gen_maxwell = app.add_subcommand("gen-maxwell", "closed-form displaced solution candidate");
  int maxwell_n = 3, maxwell_s = 0, maxwell_points = 100;
  unsigned maxwell_rng = 12345;
  bool maxwell_numeric = false, maxwell_general = false;
  std::string maxwell_seed, maxwell_out;
  std::vector<double> maxwell_lambdas;
  gen_maxwell->add_option("--n", maxwell_n, "dimension")->check(CLI::Range(1, kMaxDimension));
  gen_maxwell->add_option("--s", maxwell_s, "seed homogeneity degree");
  gen_maxwell->add_option("--seed-file", maxwell_seed, "homogeneous polynomial JSON");
  gen_maxwell->add_flag("--general-form", maxwell_general,
                        "use the smoothed form even for monogenic seeds");
  gen_maxwell->add_option("--out", maxwell_out, "output path (default stdout)");
  gen_maxwell->add_flag("--numeric", maxwell_numeric, "append numeric samples and residuals");
  gen_maxwell->add_option("--lambda", maxwell_lambdas, "lambda values for numeric sampling");
  gen_maxwell->add_option("--points", maxwell_points, "number of sample points");
  gen_maxwell->add_option("--rng-seed", maxwell_rng, "sampling seed");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "monogenic split of a homogeneous polynomial");
  std::string dec_in, dec_out;
  bool dec_full = false;
  decompose->add_option("--in", dec_in, "polynomial JSON")->required();
  decompose->add_option("--out", dec_out, "output path (default stdout)");
  decompose->add_flag("--full", dec_full, "emit the whole tower p = sum x^s M_{k-s}");

  // ck-extend
  auto* ck = app.add_subcommand("ck-extend", "extension to n+1 variables killing the Cauchy-Riemann operator");
  std::string ck_in, ck_out;
  ck->add_option("--in", ck_in, "polynomial JSON")->required();
  ck->add_option("--out", ck_out, "output path (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "numeric sampling of a stored function");
  std::string eval_in, eval_out;
  std::vector<std::string> eval_points;
  int eval_random = 0;
  unsigned eval_rng = 12345;
  eval->add_option("--in", eval_in, "function JSON")->required();
  eval->add_option("--point", eval_points, "comma-separated coordinates; repeatable");
  eval->add_option("--points", eval_random, "number of random points");
  eval->add_option("--rng-seed", eval_rng, "sampling seed");
  eval->add_option("--out", eval_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (expr.empty() == suite.empty())
        throw Error("verify needs exactly one of --expr or --suite");
      return run_verify(expr, suite, n, bound, report_format);
    }
    if (gen_hermite->parsed())
      return run_gen_hermite(hermite_n, hermite_k, hermite_seed, hermite_out);
    if (gen_maxwell->parsed())
      return run_gen_maxwell(maxwell_n, maxwell_s, maxwell_seed, maxwell_general, maxwell_out,
                             maxwell_numeric, maxwell_lambdas, maxwell_points, maxwell_rng);
    if (decompose->parsed()) return run_decompose(dec_in, dec_out, dec_full);
    if (ck->parsed()) return run_ck_extend(ck_in, ck_out);
    if (eval->parsed()) return run_eval(eval_in, eval_points, eval_random, eval_rng, eval_out);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
