// bfi — belief-functions toolkit with source-independence handling.
//
// Subcommands: combine, discount, discount-independence, fuse,
// estimate-independence, repro, sweep. Exit codes: 0 success, 1 acceptance
// mismatch, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfi/combination.hpp"
#include "bfi/discounting.hpp"
#include "bfi/format.hpp"
#include "bfi/independence_discounting.hpp"
#include "bfi/json_io.hpp"
#include "bfi/repro.hpp"
#include "bfi/sweep.hpp"

using namespace bfi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::parse_error, out_path + ": cannot open for writing");
  out << text;
}

void emit_mass(const MassFunction& m, const std::string& out_path) {
  std::cout << format_mass_table(m);
  if (!out_path.empty()) write_output(mass_to_json(m).dump(2) + "\n", out_path);
}

struct ParamOptions {
  double alpha = -1, beta = -1, gamma = -1;

  bool any() const { return alpha >= 0 || beta >= 0 || gamma >= 0; }
  bool all() const { return alpha >= 0 && beta >= 0 && gamma >= 0; }
  IndependenceParams params() const { return IndependenceParams(alpha, beta, gamma); }
};

int cmd_combine(const std::string& rule, const std::string& cautious_op,
                const std::vector<std::string>& files, const std::string& out_path) {
  std::vector<MassFunction> masses;
  for (const auto& f : files) masses.push_back(load_mass_file(f));
  CautiousOp op = cautious_op == "max" ? CautiousOp::maximum : CautiousOp::minimum;
  MassFunction acc = masses[0];
  for (std::size_t i = 1; i < masses.size(); ++i) {
    if (rule == "conjunctive") acc = combine_conjunctive(acc, masses[i]);
    else if (rule == "disjunctive") acc = combine_disjunctive(acc, masses[i]);
    else if (rule == "cautious") acc = combine_cautious(acc, masses[i], op);
    else acc = combine_bold(acc, masses[i]);
  }
  emit_mass(acc, out_path);
  return kExitOk;
}

int cmd_discount(const std::string& file, double alpha, const std::string& mode,
                 const std::string& out_path) {
  auto m = load_mass_file(file);
  auto closed = discount(m, alpha);
  auto product = discount_via_product_space(m, alpha);
  double gap = 0.0;
  for (const auto& [bits, value] : closed.entries())
    gap = std::max(gap, std::abs(value - product.mass_bits(bits)));
  for (const auto& [bits, value] : product.entries())
    gap = std::max(gap, std::abs(value - closed.mass_bits(bits)));
  if (gap > 1e-12) {
    std::cerr << "internal disagreement between discounting routes: " << gap << "\n";
    return kExitMismatch;
  }
  emit_mass(mode == "product-space" ? product : closed, out_path);
  return kExitOk;
}

int cmd_discount_independence(const std::string& file, const ParamOptions& p,
                              const std::string& mass_i_path, const std::string& mode,
                              bool trace, const std::string& out_path) {
  auto m = load_mass_file(file);
  std::optional<IndependenceParams> params;
  std::optional<IndependenceMass> mi;
  if (p.any()) {
    if (!p.all()) fail(errc::out_of_range, "--alpha, --beta and --gamma must be given together");
    if (!mass_i_path.empty())
      fail(errc::out_of_range, "--independence excludes --alpha/--beta/--gamma");
    params = p.params();
    mi = params->to_mass();
  } else if (!mass_i_path.empty()) {
    mi = IndependenceMass::from_mass(load_mass_file(mass_i_path));
    if (!mi->is_three_parameter_form())
      std::cerr << "note: independence mass has weight on P∪~P; using the generic "
                   "product-space pipeline\n";
  } else {
    fail(errc::out_of_range, "give --alpha/--beta/--gamma or --independence FILE");
  }
  if (mode == "closed-form" && !params)
    fail(errc::out_of_range, "--mode closed-form needs the three parameters");

  auto traced = discount_by_independence_trace(m, *mi);
  if (params) {
    auto closed = discount_by_independence_closed_form(m, *params);
    double gap = 0.0;
    for (const auto& [bits, value] : closed.entries())
      gap = std::max(gap, std::abs(value - traced.marginal.mass_bits(bits)));
    for (const auto& [bits, value] : traced.marginal.entries())
      gap = std::max(gap, std::abs(value - closed.mass_bits(bits)));
    if (gap > 1e-12) {
      std::cerr << "internal disagreement between pipeline and closed form: " << gap << "\n";
      return kExitMismatch;
    }
    if (mode == "closed-form") {
      if (trace) std::cout << "# closed form; no product-space trace\n";
      emit_mass(closed, out_path);
      return kExitOk;
    }
  }
  if (trace) {
    const auto& pf = traced.pf;
    std::cout << "# factors on the product space\n";
    std::cout << "## independence mass, vacuously extended\n"
              << format_product_mass_table(traced.extended, pf);
    std::cout << "## knowledge given independence, deconditioned\n"
              << format_product_mass_table(traced.given_independent, pf);
    std::cout << "## knowledge given negative dependence, deconditioned\n"
              << format_product_mass_table(traced.given_negative, pf);
    std::cout << "## conjunctive combination\n"
              << format_product_mass_table(traced.combined, pf);
    std::cout << "## marginal\n";
  }
  emit_mass(traced.marginal, out_path);
  return kExitOk;
}

int cmd_fuse(const std::string& file1, const std::string& file2, const ParamOptions& p12,
             const ParamOptions& p21, const std::string& out_path) {
  auto m1 = load_mass_file(file1);
  auto m2 = load_mass_file(file2);
  if (!p12.all()) fail(errc::out_of_range, "--alpha12, --beta12 and --gamma12 are required");
  std::optional<IndependenceParams> second;
  if (p21.any()) {
    if (!p21.all())
      fail(errc::out_of_range, "--alpha21, --beta21 and --gamma21 must be given together");
    second = p21.params();
  }
  auto fused = fuse_with_independence(m1, m2, p12.params(), second);
  if (fused.conflict() > 0.5)
    std::cerr << "warning: conflict mass " << format_number(fused.conflict())
              << " exceeds 0.5; the sources look negatively dependent or unreliable\n";
  emit_mass(fused, out_path);
  return kExitOk;
}

int cmd_estimate(const std::string& file1, const std::string& file2, int k,
                 const std::string& beta_conf, const std::string& orientation,
                 const std::string& out_path) {
  auto ds1 = load_dataset_file(file1);
  auto ds2 = load_dataset_file(file2);
  BetaConfPolicy policy;
  if (beta_conf != "auto") {
    try {
      policy.constant = std::stod(beta_conf);
    } catch (...) {
      fail(errc::parse_error, "--beta-conf expects 'auto' or a number in [0,1]");
    }
  }
  Orientation o = orientation == "overlap-independent"
                      ? Orientation::overlap_means_independence
                      : Orientation::overlap_means_dependence;
  auto est = source_independence_mass(ds1, ds2, k, policy, o);

  std::cout << format_mass_table(est.mass.mass());
  auto sizes1 = est.clusters1.sizes();
  auto sizes2 = est.clusters2.sizes();
  auto print_sizes = [](const char* name, const std::vector<int>& sizes,
                        const std::vector<int>& medoids) {
    std::cout << name << " cluster sizes:";
    for (int s : sizes) std::cout << " " << s;
    std::cout << "  medoids:";
    for (int m : medoids) std::cout << " " << m;
    std::cout << "\n";
  };
  print_sizes("source 1", sizes1, est.clusters1.medoids);
  print_sizes("source 2", sizes2, est.clusters2.medoids);
  for (const auto& pair : est.pairs) {
    std::cout << "pair " << pair.cluster1 << " -> " << pair.cluster2
              << ": overlap = " << format_number(pair.alpha1)
              << ", dist = " << format_number(pair.dist)
              << ", beta_conf = " << format_number(pair.beta_conf);
    if (pair.empty_cluster) std::cout << " [empty cluster]";
    if (pair.no_common_items) std::cout << " [no common items]";
    std::cout << "\n";
  }
  auto rec = params_from_independence_mass(est.mass);
  auto show = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("undefined");
  };
  std::cout << "recovered parameters: alpha = " << show(rec.alpha)
            << ", beta = " << show(rec.beta) << ", gamma = " << show(rec.gamma) << "\n";

  if (!out_path.empty()) {
    nlohmann::json j{{"mass", mass_to_json(est.mass.mass())}};
    j["params"] = nlohmann::json::object();
    if (rec.alpha) j["params"]["alpha"] = *rec.alpha;
    if (rec.beta) j["params"]["beta"] = *rec.beta;
    if (rec.gamma) j["params"]["gamma"] = *rec.gamma;
    j["pairs"] = nlohmann::json::array();
    for (const auto& pair : est.pairs)
      j["pairs"].push_back({{"cluster1", pair.cluster1},
                            {"cluster2", pair.cluster2},
                            {"overlap", pair.alpha1},
                            {"dist", pair.dist},
                            {"beta_conf", pair.beta_conf},
                            {"empty_cluster", pair.empty_cluster},
                            {"no_common_items", pair.no_common_items}});
    write_output(j.dump(2) + "\n", out_path);
  }
  return kExitOk;
}

int cmd_repro(int table) {
  auto report = run_repro(table);
  std::cout << format_repro_report(report);
  return report.ok ? kExitOk : kExitMismatch;
}

int cmd_sweep(const std::vector<std::string>& fixed, const std::vector<std::string>& varying,
              const std::string& base_path, bool full, const std::string& out_path) {
  SweepSpec spec{base_path.empty() ? default_sweep_base() : load_mass_file(base_path),
                 {},
                 {},
                 full};
  for (const auto& item : fixed) {
    auto eq = item.find('=');
    auto param = sweep_param_from_string(item.substr(0, eq));
    if (eq == std::string::npos || !param)
      fail(errc::parse_error, "--fix expects alpha|beta|gamma=VALUE, got '" + item + "'");
    try {
      spec.fixed.emplace_back(*param, std::stod(item.substr(eq + 1)));
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, "--fix value in '" + item + "' is not a number");
    }
  }
  for (const auto& item : varying) {
    auto eq = item.find('=');
    auto param = sweep_param_from_string(item.substr(0, eq));
    if (eq == std::string::npos || !param)
      fail(errc::parse_error, "--vary expects alpha|beta|gamma=STEPS, got '" + item + "'");
    try {
      spec.varying.emplace_back(*param, std::stoi(item.substr(eq + 1)));
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, "--vary step count in '" + item + "' is not an integer");
    }
  }
  auto csv = sweep_to_csv(run_sweep(spec), full);
  std::cout << csv;
  write_output(csv, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief-functions toolkit: combination rules, reliability and "
               "independence discounting, source-independence estimation"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out appear after the subcommand name

  std::string out_path;
  app.add_option("--out", out_path, "write the result (JSON/CSV) to this file")
      ->capture_default_str();

  // combine
  auto* combine = app.add_subcommand("combine", "fold mass functions under one rule");
  std::string rule = "conjunctive";
  std::string cautious_op = "min";
  std::vector<std::string> combine_files;
  combine->add_option("--rule", rule, "conjunctive|disjunctive|cautious|bold")
      ->check(CLI::IsMember({"conjunctive", "disjunctive", "cautious", "bold"}));
  combine->add_option("--cautious-op", cautious_op, "weight aggregation for the cautious rule")
      ->check(CLI::IsMember({"min", "max"}));
  combine->add_option("files", combine_files, "mass-function JSON files (>= 2, same frame)")
      ->required()
      ->expected(2, -1);

  // discount
  auto* disc = app.add_subcommand("discount", "classic reliability discounting");
  std::string disc_file;
  double disc_alpha = 1.0;
  std::string disc_mode = "closed";
  disc->add_option("file", disc_file, "mass-function JSON file")->required();
  disc->add_option("--alpha", disc_alpha, "reliability in [0,1]")->required();
  disc->add_option("--mode", disc_mode, "evaluation route")
      ->check(CLI::IsMember({"closed", "product-space"}));

  // discount-independence
  auto* di = app.add_subcommand("discount-independence",
                                "discount a mass by its source-independence assessment");
  std::string di_file, di_mass_i, di_mode = "pipeline";
  ParamOptions di_params;
  bool di_trace = false;
  di->add_option("file", di_file, "mass-function JSON file")->required();
  di->add_option("--alpha", di_params.alpha, "reliability in [0,1]");
  di->add_option("--beta", di_params.beta, "independence degree in [0,1]");
  di->add_option("--gamma", di_params.gamma, "positive-dependence degree in [0,1]");
  di->add_option("--independence", di_mass_i,
                 "independence mass JSON on the frame {I,P,~P} (alternative to the parameters)");
  di->add_option("--mode", di_mode, "evaluation route")
      ->check(CLI::IsMember({"pipeline", "closed-form"}));
  di->add_flag("--trace", di_trace, "print the intermediate product-space factor tables");

  // fuse
  auto* fuse = app.add_subcommand("fuse", "independence-discount both sources, then combine");
  std::string fuse_file1, fuse_file2;
  ParamOptions fuse_p12, fuse_p21;
  fuse->add_option("m1", fuse_file1, "first source's mass JSON")->required();
  fuse->add_option("m2", fuse_file2, "second source's mass JSON")->required();
  fuse->add_option("--alpha12", fuse_p12.alpha, "reliability of source 1 w.r.t. source 2");
  fuse->add_option("--beta12", fuse_p12.beta, "independence of source 1 w.r.t. source 2");
  fuse->add_option("--gamma12", fuse_p12.gamma, "positive dependence of source 1");
  fuse->add_option("--alpha21", fuse_p21.alpha, "reliability of source 2 w.r.t. source 1");
  fuse->add_option("--beta21", fuse_p21.beta, "independence of source 2 w.r.t. source 1");
  fuse->add_option("--gamma21", fuse_p21.gamma,
                   "positive dependence of source 2 (omit the *21 set to pass source 2 through)");

  // estimate-independence
  auto* est = app.add_subcommand("estimate-independence",
                                 "estimate an independence mass from two aligned datasets");
  std::string est_file1, est_file2, est_beta_conf = "auto",
              est_orientation = "overlap-dependent";
  int est_k = 0;
  est->add_option("ds1", est_file1, "dataset JSON of source 1")->required();
  est->add_option("ds2", est_file2, "dataset JSON of source 2")->required();
  est->add_option("--k", est_k, "cluster count (default: frame size)");
  est->add_option("--beta-conf", est_beta_conf,
                  "'auto' (cluster-size based) or a constant in [0,1]");
  est->add_option("--independence-orientation", est_orientation,
                  "whether cluster overlap counts as dependence (default) or independence")
      ->check(CLI::IsMember({"overlap-dependent", "overlap-independent"}));

  // repro
  auto* repro = app.add_subcommand("repro", "recompute a reference table and compare cells");
  int repro_table = 0;
  repro->add_option("--table", repro_table, "table number (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV grid over the independence parameters");
  std::vector<std::string> sweep_fixed, sweep_vary;
  std::string sweep_base;
  bool sweep_full = false;
  sweep->add_option("--fix", sweep_fixed, "fix a parameter, e.g. alpha=1");
  sweep->add_option("--vary", sweep_vary, "vary a parameter over [0,1], e.g. beta=21");
  sweep->add_option("--base", sweep_base, "base mass JSON (default: a dogmatic 3-atom mass)");
  sweep->add_flag("--full", sweep_full, "append the full mass as a JSON column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;  // flag misuse is an input error
  }

  try {
    if (combine->parsed()) return cmd_combine(rule, cautious_op, combine_files, out_path);
    if (disc->parsed()) return cmd_discount(disc_file, disc_alpha, disc_mode, out_path);
    if (di->parsed())
      return cmd_discount_independence(di_file, di_params, di_mass_i, di_mode, di_trace,
                                       out_path);
    if (fuse->parsed()) return cmd_fuse(fuse_file1, fuse_file2, fuse_p12, fuse_p21, out_path);
    if (est->parsed())
      return cmd_estimate(est_file1, est_file2, est_k, est_beta_conf, est_orientation, out_path);
    if (repro->parsed()) return cmd_repro(repro_table);
    if (sweep->parsed()) return cmd_sweep(sweep_fixed, sweep_vary, sweep_base, sweep_full,
                                          out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
