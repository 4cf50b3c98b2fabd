// Command-line front end: tensor I/O, one subcommand per computation, the
// built-in fixture studies, seeded instance generation, and machine-readable
// verification reports.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "einalg/fixtures.hpp"
#include "einalg/geninv.hpp"
#include "einalg/io.hpp"
#include "einalg/rol.hpp"

namespace {

using namespace einalg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string weight_m, weight_n, weight_p;
  double tol = 1e-8;
  double rank_tol = -1.0;
  std::uint64_t seed = 0;
  std::string out;
  bool allow_non_hpd = false;
  bool emit_report = false;
  std::string case_id;
  std::string fixtures_dir = EINALG_DEFAULT_FIXTURE_DIR;
  std::string row_modes, col_modes;
  bool hpd = false;
  bool real_entries = false;
  int instances = 50;
};

ModeList parse_mode_list(const std::string& text) {
  ModeList modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    modes.push_back(std::stoll(item));
  }
  if (modes.empty()) throw ParseError("empty mode list: '" + text + "'");
  return modes;
}

DenseTensor input_tensor(const RunConfig& cfg, size_t k) {
  if (cfg.inputs.size() <= k) {
    throw ParseError("missing input file (need at least " + std::to_string(k + 1) + ")");
  }
  return read_tensor(cfg.inputs[k]);
}

DenseTensor weight_tensor(const std::string& path, const char* which) {
  if (path.empty()) throw ParseError(std::string("missing --weight-") + which);
  return read_tensor(path);
}

std::string report_json(const std::string& subcommand, double tol,
                        const std::vector<CheckReport>& checks,
                        const std::vector<std::string>& outputs,
                        const CatalogSummary* catalog = nullptr) {
  std::ostringstream os;
  bool all = catalog == nullptr || catalog->all_passed();
  os << "{\n  \"tool\": \"einalg\",\n  \"subcommand\": \"" << subcommand << "\",\n"
     << "  \"tolerance\": " << format_double(tol) << ",\n  \"checks\": [";
  for (size_t k = 0; k < checks.size(); ++k) {
    all = all && checks[k].passed;
    os << (k == 0 ? "\n" : ",\n") << check_report_to_json(checks[k], 4);
  }
  os << (checks.empty() ? "],\n" : "\n  ],\n");
  if (catalog != nullptr) {
    std::istringstream cat(catalog_summary_to_json(*catalog));
    os << "  \"catalog\": ";
    std::string line;
    bool first = true;
    while (std::getline(cat, line)) {
      os << (first ? "" : "\n  ") << line;
      first = false;
    }
    os << ",\n";
  }
  os << "  \"outputs\": [";
  for (size_t k = 0; k < outputs.size(); ++k) {
    os << (k ? ", " : "") << "\"" << outputs[k] << "\"";
  }
  os << "],\n  \"passed\": " << (all ? "true" : "false") << "\n}\n";
  return os.str();
}

void print_checks(const std::vector<CheckReport>& checks) {
  for (const CheckReport& r : checks) {
    std::cout << (r.passed ? "PASS" : "FAIL") << (r.marginal ? " (marginal)" : "") << " "
              << r.name << ": max residual " << format_double(r.max_residual())
              << " at tolerance " << format_double(r.tolerance) << "\n";
  }
}

int finish_checks(const RunConfig& cfg, const std::string& sub,
                  const std::vector<CheckReport>& checks) {
  print_checks(checks);
  if (cfg.emit_report) {
    const std::string text = report_json(sub, cfg.tol, checks, {});
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      write_file(cfg.out, text);
    }
  }
  for (const CheckReport& r : checks) {
    if (!r.passed) return kExitCheckFailed;
  }
  return kExitOk;
}

std::string out_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.out.empty() ? fallback : cfg.out;
}

int write_result(const RunConfig& cfg, const std::string& sub, const DenseTensor& t,
                 const std::string& fallback) {
  const std::string path = out_or(cfg, fallback);
  write_tensor(path, t);
  std::cout << "wrote " << path << "\n";
  if (cfg.emit_report) {
    write_file(path + ".report.json", report_json(sub, cfg.tol, {}, {path}));
  }
  return kExitOk;
}

WeightPair load_weights(const RunConfig& cfg) {
  return WeightPair(weight_tensor(cfg.weight_m, "m"), weight_tensor(cfg.weight_n, "n"),
                    kDefaultPredicateTol, /*require_hpd=*/!cfg.allow_non_hpd);
}

int run_product(const RunConfig& cfg) {
  const DenseTensor c = einstein_product(input_tensor(cfg, 0), input_tensor(cfg, 1));
  return write_result(cfg, "product", c, "product.json");
}

int run_pinv(const RunConfig& cfg) {
  return write_result(cfg, "pinv", mp_inverse(input_tensor(cfg, 0), cfg.rank_tol),
                      "pinv.json");
}

int run_wpinv(const RunConfig& cfg) {
  const DenseTensor a = input_tensor(cfg, 0);
  const WeightPair w = load_weights(cfg);
  return write_result(cfg, "wpinv", wmp_inverse(a, w, cfg.rank_tol), "wpinv.json");
}

int run_hash(const RunConfig& cfg) {
  const DenseTensor a = input_tensor(cfg, 0);
  const DenseTensor x = weighted_conj_transpose(a, weight_tensor(cfg.weight_n, "n"),
                                                weight_tensor(cfg.weight_m, "m"));
  return write_result(cfg, "hash", x, "hash.json");
}

int run_svd(const RunConfig& cfg) {
  const DenseTensor a = input_tensor(cfg, 0);
  const SvdFactors f = tensor_svd(a);
  const std::string prefix = out_or(cfg, "svd");
  write_tensor(prefix + ".u.json", f.u);
  write_tensor(prefix + ".d.json", f.d);
  write_tensor(prefix + ".v.json", f.v);
  std::cout << "sigma:";
  for (double s : f.sigma) std::cout << " " << format_double(s);
  std::cout << "\nwrote " << prefix << ".{u,d,v}.json\n";
  if (cfg.emit_report) {
    write_file(prefix + ".report.json",
               report_json("svd", cfg.tol, {},
                           {prefix + ".u.json", prefix + ".d.json", prefix + ".v.json"}));
  }
  return kExitOk;
}

int run_frd(const RunConfig& cfg) {
  const DenseTensor a = input_tensor(cfg, 0);
  const FrdFactors f = full_rank_decomposition(a, cfg.rank_tol);
  const std::string prefix = out_or(cfg, "frd");
  write_tensor(prefix + ".f.json", f.f);
  write_tensor(prefix + ".g.json", f.g);
  std::cout << "rank: " << f.r << "\nwrote " << prefix << ".{f,g}.json\n";
  if (cfg.emit_report) {
    write_file(prefix + ".report.json",
               report_json("frd", cfg.tol, {}, {prefix + ".f.json", prefix + ".g.json"}));
  }
  return kExitOk;
}

std::vector<CheckReport> rol_report_checks(const RolReport& r, double tol) {
  std::vector<CheckReport> checks = r.condition_checks;
  checks.insert(checks.begin(),
                CheckReport::make("reverse-order-law", {{"residual", r.law_residual}}, tol));
  return checks;
}

int run_check_rol(const RunConfig& cfg) {
  const RolReport r = check_rol(input_tensor(cfg, 0), input_tensor(cfg, 1), cfg.tol);
  std::cout << "law_holds: " << (r.law_holds ? "true" : "false")
            << "\nconditions_hold: " << (r.conditions_hold ? "true" : "false") << "\n";
  return finish_checks(cfg, "check-rol", rol_report_checks(r, cfg.tol));
}

int run_check_wrol(const RunConfig& cfg) {
  const RolReport r =
      check_weighted_rol(input_tensor(cfg, 0), input_tensor(cfg, 1),
                         weight_tensor(cfg.weight_m, "m"), weight_tensor(cfg.weight_n, "n"),
                         weight_tensor(cfg.weight_p, "p"), cfg.tol);
  std::cout << "law_holds: " << (r.law_holds ? "true" : "false")
            << "\nconditions_hold: " << (r.conditions_hold ? "true" : "false") << "\n";
  return finish_checks(cfg, "check-wrol", rol_report_checks(r, cfg.tol));
}

int run_check_triple(const RunConfig& cfg) {
  const RolReport r =
      check_triple_rol(input_tensor(cfg, 0), input_tensor(cfg, 1), input_tensor(cfg, 2),
                       weight_tensor(cfg.weight_m, "m"), weight_tensor(cfg.weight_n, "n"),
                       cfg.tol);
  std::cout << "conditions_hold: " << (r.conditions_hold ? "true" : "false")
            << "\nlaw_holds: " << (r.law_holds ? "true" : "false") << "\n";
  // Without the hypotheses the law is not asserted.
  if (!r.conditions_hold) {
    std::vector<CheckReport> checks = r.condition_checks;
    print_checks(checks);
    if (cfg.emit_report && !cfg.out.empty()) {
      write_file(cfg.out, report_json("check-triple", cfg.tol, checks, {}));
    }
    return kExitCheckFailed;
  }
  return finish_checks(cfg, "check-triple", rol_report_checks(r, cfg.tol));
}

int run_verify(const RunConfig& cfg) {
  const DenseTensor a = input_tensor(cfg, 0);
  const DenseTensor x = input_tensor(cfg, 1);
  std::optional<WeightPair> w;
  if (!cfg.weight_m.empty() || !cfg.weight_n.empty()) {
    w.emplace(weight_tensor(cfg.weight_m, "m"), weight_tensor(cfg.weight_n, "n"),
              kDefaultPredicateTol, !cfg.allow_non_hpd);
  }
  return finish_checks(cfg, "verify", {penrose_report(a, x, w, cfg.tol)});
}

int run_identities(const RunConfig& cfg) {
  const CatalogSummary s = run_catalog(cfg.seed, cfg.instances, cfg.tol, cfg.case_id);
  for (const CaseSummary& c : s.cases) {
    std::cout << (c.failures == 0 ? "PASS" : "FAIL") << " " << c.id << ": " << c.instances
              << " instances, max residual " << format_double(c.max_residual);
    if (c.marginals > 0) std::cout << ", " << c.marginals << " marginal";
    std::cout << "\n";
  }
  const std::string text = report_json("identities", cfg.tol, {}, {}, &s);
  if (!cfg.out.empty()) {
    write_file(cfg.out, text);
    std::cout << "wrote " << cfg.out << "\n";
  } else if (cfg.emit_report) {
    std::cout << text;
  }
  return s.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_gen(const RunConfig& cfg) {
  if (cfg.row_modes.empty()) throw ParseError("gen requires --row-modes");
  const ModeList rows = parse_mode_list(cfg.row_modes);
  Rng rng(cfg.seed);
  DenseTensor t;
  if (cfg.hpd) {
    if (!cfg.col_modes.empty() && parse_mode_list(cfg.col_modes) != rows) {
      throw ParseError("--hpd weights are square; --col-modes must match --row-modes");
    }
    t = random_hpd(rng, rows);
  } else {
    const ModeList cols = cfg.col_modes.empty() ? ModeList{} : parse_mode_list(cfg.col_modes);
    t = random_tensor(rng, EinsteinShape(rows, cols), !cfg.real_entries);
  }
  return write_result(cfg, "gen", t, "gen.json");
}

int run_fixtures(const RunConfig& cfg) {
  std::vector<CheckReport> checks = run_product_example_study(
      load_product_example(cfg.fixtures_dir), 5e-4, 1e-10);
  const std::vector<CheckReport> counter =
      run_counterexample_study(load_counterexample(cfg.fixtures_dir), 1e-10);
  checks.insert(checks.end(), counter.begin(), counter.end());
  return finish_checks(cfg, "fixtures", checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense Einstein-product tensor algebra: reshape-based SVD, full-rank "
               "decomposition, (weighted) Moore-Penrose inverses, and an executable "
               "reverse-order-law identity catalog"};
  app.require_subcommand(1);

  RunConfig cfg;
  int (*handler)(const RunConfig&) = nullptr;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.inputs, "input tensor file (repeatable, ordered)");
    sub->add_option("--weight-m", cfg.weight_m, "row-side weight tensor file");
    sub->add_option("--weight-n", cfg.weight_n, "column-side weight tensor file");
    sub->add_option("--weight-p", cfg.weight_p, "middle weight tensor file");
    sub->add_option("--tol", cfg.tol, "check tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--rank-tol", cfg.rank_tol, "rank truncation threshold override");
    sub->add_option("--seed", cfg.seed, "64-bit seed for generated instances");
    sub->add_option("--out", cfg.out, "output path (tensor, prefix, or report)");
    sub->add_flag("--allow-non-hpd", cfg.allow_non_hpd,
                  "accept Hermitian indefinite weights where possible");
    sub->add_flag("--emit-report", cfg.emit_report, "write the machine-readable JSON report");
  };

  struct SubSpec {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&);
  };
  const std::vector<SubSpec> subs = {
      {"product", "Einstein product of two tensors", run_product},
      {"pinv", "Moore-Penrose inverse", run_pinv},
      {"wpinv", "weighted Moore-Penrose inverse", run_wpinv},
      {"hash", "weighted conjugate transpose", run_hash},
      {"svd", "reshape-based singular value decomposition", run_svd},
      {"frd", "full-rank decomposition", run_frd},
      {"check-rol", "reverse-order law with its range conditions", run_check_rol},
      {"check-wrol", "weighted reverse-order law with its conditions", run_check_wrol},
      {"check-triple", "triple-product reverse-order law", run_check_triple},
      {"verify", "Penrose / weighted-Penrose residuals for a candidate inverse", run_verify},
      {"identities", "run the identity catalog on seeded instances", run_identities},
      {"gen", "emit a seeded random tensor or HPD weight", run_gen},
      {"fixtures", "run the built-in worked-example and counterexample studies", run_fixtures},
  };
  for (const SubSpec& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (std::string(s.name) == "identities") {
      sub->add_option("--case", cfg.case_id, "run a single catalog case");
      sub->add_option("--instances", cfg.instances, "instances per case")
          ->check(CLI::PositiveNumber);
    }
    if (std::string(s.name) == "gen") {
      sub->add_option("--row-modes", cfg.row_modes, "comma-separated row dimensions");
      sub->add_option("--col-modes", cfg.col_modes, "comma-separated column dimensions");
      sub->add_flag("--hpd", cfg.hpd, "emit a random HPD weight over the row modes");
      sub->add_flag("--real", cfg.real_entries, "real entries only");
    }
    if (std::string(s.name) == "fixtures") {
      sub->add_option("--fixtures", cfg.fixtures_dir, "fixture directory");
    }
    sub->callback([&handler, fn = s.fn] { handler = fn; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return handler(cfg);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const HypothesisUnsatisfiable& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ShapeMismatch& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
}
