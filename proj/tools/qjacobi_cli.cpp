// qjacobi: evaluate, solve and verify quasi-orthogonal Jacobi polynomials.
//
// Exit codes: 0 verified, 1 a proved claim failed, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qjacobi/qjacobi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  std::string format = "json";
  std::optional<double> tol;
  bool allow_vacuous = false;
};

qjacobi::CheckOptions check_options(const GlobalFlags& g) {
  qjacobi::CheckOptions opt;
  if (g.tol) opt.coprime_tol = *g.tol;
  return opt;
}

bool csv(const GlobalFlags& g) { return g.format == "csv"; }

int cmd_eval(int n, double alpha, double beta, double x, const std::string& method) {
  const auto p = qjacobi::classify(alpha, beta);
  double v = 0.0;
  if (method == "recurrence") {
    v = qjacobi::eval_recurrence(n, p, x);
  } else if (method == "sum") {
    v = qjacobi::eval_sum(n, p, x, qjacobi::SumMode::compensated);
  } else {
    v = qjacobi::eval_derivative(n, p, x);
  }
  std::cout << qjacobi::format_shortest(v) << '\n';
  return kExitOk;
}

int cmd_zeros(const GlobalFlags& g, int n, double alpha, double beta, bool oracle) {
  const auto p = qjacobi::classify(alpha, beta);
  const auto zs = oracle ? qjacobi::oracle_zeros(n, p) : qjacobi::zeros(n, p);
  if (csv(g)) {
    std::cout << "index,zero,residual\n";
    for (std::size_t i = 0; i < zs.size(); ++i) {
      std::cout << i + 1 << ',' << qjacobi::format_sig12(zs.zeros[i]) << ','
                << qjacobi::format_sig12(zs.residuals[i]) << '\n';
    }
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["n"] = zs.n;
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["regime"] = std::string(qjacobi::to_string(p.regime));
  j["method"] = std::string(qjacobi::to_string(zs.method));
  j["zeros"] = zs.zeros;
  j["residuals"] = zs.residuals;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int cmd_bounds(const GlobalFlags& g, int n, double alpha, double beta) {
  const auto p = qjacobi::classify(alpha, beta);
  const auto bc = qjacobi::bound_chain(n, p);
  const double x1 = qjacobi::zeros_quasi(n, p).zeros.front();
  const bool ordered = bc.loose_lower < bc.tight_lower && bc.tight_lower < x1 &&
                       x1 < bc.upper && bc.upper < -1.0;
  if (csv(g)) {
    std::cout << "n,alpha,beta,loose_lower,tight_lower,x1,upper,ordered\n"
              << n << ',' << qjacobi::format_sig12(alpha) << ',' << qjacobi::format_sig12(beta)
              << ',' << qjacobi::format_sig12(bc.loose_lower) << ','
              << qjacobi::format_sig12(bc.tight_lower) << ',' << qjacobi::format_sig12(x1) << ','
              << qjacobi::format_sig12(bc.upper) << ',' << (ordered ? "true" : "false") << '\n';
  } else {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["loose_lower"] = bc.loose_lower;
    j["tight_lower"] = bc.tight_lower;
    j["x1"] = x1;
    j["upper"] = bc.upper;
    j["ordered"] = ordered;
    std::cout << j.dump() << '\n';
  }
  return ordered ? kExitOk : kExitClaimFailed;
}

int verdict_exit(const qjacobi::InterlacingVerdict& v, bool allow_vacuous) {
  if (v.hypothesis_met) return v.holds ? kExitOk : kExitClaimFailed;
  return allow_vacuous ? kExitOk : kExitUsage;
}

int cmd_verify(const GlobalFlags& g, const std::string& claim_name, int n, double alpha,
               double beta, std::optional<double> t) {
  const auto claim = qjacobi::parse_claim(claim_name);
  if (!claim) {
    std::cerr << "unknown claim '" << claim_name << "'\n";
    return kExitUsage;
  }
  const auto p = qjacobi::classify(alpha, beta);
  auto resolved = *claim;
  if (claim_name == "thm51" && t && *t == 1.0) resolved = qjacobi::ClaimId::Thm51i;
  const auto v = qjacobi::verify_claim(resolved, n, p, t, check_options(g));
  if (csv(g)) {
    qjacobi::ReportRow row = qjacobi::make_row(resolved, n, p, t, check_options(g));
    std::cout << qjacobi::kRowCsvHeader << '\n' << qjacobi::to_csv(row) << '\n';
  } else {
    std::cout << qjacobi::to_json(v).dump() << '\n';
  }
  return verdict_exit(v, g.allow_vacuous);
}

// Always CSV.
int cmd_table1() {
  const auto rows = qjacobi::compute_table1();
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.match;
  std::cout << qjacobi::table1_csv(rows);
  return ok ? kExitOk : kExitClaimFailed;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw qjacobi::error(qjacobi::errc::invalid_parameter, "bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<qjacobi::ClaimId> parse_claims(const std::vector<std::string>& names) {
  std::vector<qjacobi::ClaimId> out;
  for (const auto& name : names) {
    const auto c = qjacobi::parse_claim(name);
    if (!c) throw qjacobi::error(qjacobi::errc::invalid_parameter, "unknown claim '" + name + "'");
    out.push_back(*c);
  }
  return out;
}

struct SweepArgs {
  std::string config_path;
  std::string alphas;
  std::string betas;
  std::string ts = "2,2.5,3,3.5,4";
  std::vector<std::string> claims;
  int n_min = 2;
  int n_max = 20;
  int threads = 1;
  std::string out_path;
};

/// Config file keys: alpha, beta, n_min, n_max, t, claims, format, parallelism.
void apply_config_file(const std::string& path, qjacobi::SweepConfig& cfg, GlobalFlags& g) {
  std::ifstream in(path);
  if (!in) throw qjacobi::error(qjacobi::errc::invalid_parameter, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw qjacobi::error(qjacobi::errc::invalid_parameter, std::string("config: ") + e.what());
  }
  try {
    if (j.contains("alpha")) cfg.alpha_list = j.at("alpha").get<std::vector<double>>();
    if (j.contains("beta")) cfg.beta_list = j.at("beta").get<std::vector<double>>();
    if (j.contains("n_min")) cfg.n_min = j.at("n_min").get<int>();
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (j.contains("t")) cfg.t_list = j.at("t").get<std::vector<double>>();
    if (j.contains("claims")) cfg.claims = parse_claims(j.at("claims").get<std::vector<std::string>>());
    if (j.contains("format")) g.format = j.at("format").get<std::string>();
    if (j.contains("parallelism")) cfg.parallelism = j.at("parallelism").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw qjacobi::error(qjacobi::errc::invalid_parameter, std::string("config: ") + e.what());
  }
}

int cmd_sweep(GlobalFlags g, const SweepArgs& a, const CLI::App& sub) {
  qjacobi::SweepConfig cfg;
  if (!a.config_path.empty()) apply_config_file(a.config_path, cfg, g);
  if (sub.count("--alpha")) cfg.alpha_list = parse_list(a.alphas);
  if (sub.count("--beta")) cfg.beta_list = parse_list(a.betas);
  if (sub.count("--t") || a.config_path.empty()) cfg.t_list = parse_list(a.ts);
  if (sub.count("--claims")) cfg.claims = parse_claims(a.claims);
  if (sub.count("--n-min") || a.config_path.empty()) cfg.n_min = a.n_min;
  if (sub.count("--n-max") || a.config_path.empty()) cfg.n_max = a.n_max;
  if (sub.count("--threads")) cfg.parallelism = a.threads;
  if (const char* env = std::getenv("QJACOBI_THREADS"); env != nullptr && *env != '\0') {
    cfg.parallelism = std::atoi(env);
  }
  cfg.output_format = csv(g) ? qjacobi::OutputFormat::CSV : qjacobi::OutputFormat::JSONLines;
  cfg.options = check_options(g);

  const auto rows = qjacobi::run_sweep(cfg);
  const auto text = qjacobi::render_rows(rows, cfg.output_format);
  const auto summary = qjacobi::summarize(rows);
  if (a.out_path.empty()) {
    std::cout << text;
    std::cerr << qjacobi::summary_line(summary) << '\n';
  } else {
    std::ofstream out(a.out_path, std::ios::binary);
    if (!out) throw qjacobi::error(qjacobi::errc::invalid_parameter, "cannot write " + a.out_path);
    out << text;
    std::cout << qjacobi::summary_line(summary) << '\n';
  }
  return summary.unconditional_fails > 0 ? kExitClaimFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-orthogonal Jacobi polynomial toolkit"};
  app.require_subcommand(1);

  GlobalFlags g;
  double tol = 0.0;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "Co-primality separation tolerance");
  app.add_flag("--allow-vacuous", g.allow_vacuous, "Exit 0 when a claim's hypothesis is not met");

  int n = 0;
  double alpha = 0.0, beta = 0.0, x = 0.0;
  std::string method = "recurrence";
  bool oracle = false;
  std::string claim;
  double t = 0.0;

  auto* eval = app.add_subcommand("eval", "Evaluate P_n^(alpha,beta)(x)");
  eval->add_option("--n", n)->required();
  eval->add_option("--alpha", alpha)->required();
  eval->add_option("--beta", beta)->required();
  eval->add_option("--x", x)->required();
  eval->add_option("--method", method)
      ->check(CLI::IsMember({"recurrence", "sum", "derivative"}))
      ->capture_default_str();

  auto* zs = app.add_subcommand("zeros", "All real zeros");
  zs->add_option("--n", n)->required();
  zs->add_option("--alpha", alpha)->required();
  zs->add_option("--beta", beta)->required();
  zs->add_flag("--oracle", oracle, "Use the brute-force sign-scan oracle (n <= 12)");

  auto* bounds = app.add_subcommand("bounds", "Bounds for the zero below -1");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--alpha", alpha)->required();
  bounds->add_option("--beta", beta)->required();

  auto* verify = app.add_subcommand("verify", "Check one interlacing claim");
  verify->add_option("--claim", claim)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--alpha", alpha)->required();
  verify->add_option("--beta", beta)->required();
  auto* t_opt = verify->add_option("--t", t, "Shift for thm51 (1 or [2,4])");

  app.add_subcommand("table1", "Reproduce the degree-15 bound table as CSV");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Check claims over a parameter grid");
  sweep->add_option("--config", sa.config_path, "JSON config file");
  sweep->add_option("--alpha", sa.alphas, "Comma-separated alpha values");
  sweep->add_option("--beta", sa.betas, "Comma-separated beta values");
  sweep->add_option("--t", sa.ts, "Comma-separated shifts for thm51")->capture_default_str();
  sweep->add_option("--claims", sa.claims, "Claim ids")->delimiter(',');
  sweep->add_option("--n-min", sa.n_min)->capture_default_str();
  sweep->add_option("--n-max", sa.n_max)->capture_default_str();
  sweep->add_option("--threads", sa.threads, "Worker threads");
  sweep->add_option("--out", sa.out_path, "Write rows here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (tol_opt->count() > 0) g.tol = tol;

  try {
    if (*eval) return cmd_eval(n, alpha, beta, x, method);
    if (*zs) {
      if (oracle && n > qjacobi::kOracleMaxDegree) {
        std::cerr << "--oracle supports n <= " << qjacobi::kOracleMaxDegree << '\n';
        return kExitUsage;
      }
      return cmd_zeros(g, n, alpha, beta, oracle);
    }
    if (*bounds) return cmd_bounds(g, n, alpha, beta);
    if (*verify) {
      std::optional<double> shift;
      if (t_opt->count() > 0) shift = t;
      return cmd_verify(g, claim, n, alpha, beta, shift);
    }
    if (app.got_subcommand("table1")) return cmd_table1();
    if (*sweep) return cmd_sweep(g, sa, *sweep);
  } catch (const qjacobi::error& e) {
    std::cerr << e.what() << '\n';
    switch (e.code()) {
      case qjacobi::errc::bracket_failure:
      case qjacobi::errc::convergence_failure:
      case qjacobi::errc::oracle_failure:
        return kExitClaimFailed;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
