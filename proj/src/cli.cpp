#include "qvlc/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qvlc/entropy.hpp"
#include "qvlc/io.hpp"
#include "qvlc/verify.hpp"

namespace qvlc {

namespace {

using nlohmann::json;

DensityOperator load_density(const std::string& input) {
  if (input.empty()) throw UsageError("--input is required");
  std::string text;
  if (std::filesystem::exists(input)) {
    text = read_text_file(input);
  } else if (input.find(',') != std::string::npos) {
    text = input; // inline spectrum
  } else {
    throw FileNotFound("cannot open '" + input + "'");
  }
  try {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
      return validate_density(matrix_from_json(parse_json(text)));
    }
    const RealVector spectrum = parse_spectrum(text);
    Matrix m = Matrix::Zero(spectrum.size(), spectrum.size());
    for (int i = 0; i < spectrum.size(); ++i) m(i, i) = spectrum(i);
    return validate_density(m);
  } catch (const FileNotFound&) {
    throw;
  } catch (const MalformedInput&) {
    throw;
  } catch (const Error& e) {
    throw MalformedInput(std::string("not a valid density operator: ") + e.what());
  }
}

std::vector<double> parse_t_list(const std::string& text) {
  std::vector<double> ts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    ts.push_back(parse_t(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return ts;
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw FileNotFound("cannot write '" + cfg.output + "'");
    out << text;
  }
}

std::string fixed6(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << x;
  return os.str();
}

int run_entropy(const CliConfig& cfg) {
  const DensityOperator rho = load_density(cfg.input);
  RealVector alphas;
  try {
    alphas = parse_spectrum(cfg.alpha_list);
  } catch (const MalformedInput& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
  if (alphas.minCoeff() < 0.0 || !alphas.allFinite()) {
    throw UsageError("--alpha orders must be finite reals >= 0");
  }

  if (cfg.format == "json") {
    json rows = json::array();
    for (int i = 0; i < alphas.size(); ++i) {
      rows.push_back(
          {{"order", alphas(i)}, {"value", order_entropy(rho, alphas(i), cfg.k)}});
    }
    emit(cfg, json{{"k", cfg.k}, {"entropies", rows}}.dump(2));
    return 0;
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "alpha,value\n";
    os.precision(17);
    for (int i = 0; i < alphas.size(); ++i) {
      os << alphas(i) << ',' << order_entropy(rho, alphas(i), cfg.k) << '\n';
    }
  } else {
    os << "alpha     entropy (base " << cfg.k << ")\n";
    for (int i = 0; i < alphas.size(); ++i) {
      os << fixed6(alphas(i)) << "  " << fixed6(order_entropy(rho, alphas(i), cfg.k)) << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

int run_build_code(const CliConfig& cfg) {
  const DensityOperator rho = load_density(cfg.input);
  const SpectralDecomposition dec = eigh(rho);
  const double merge_t = std::isinf(cfg.t) ? 64.0 : cfg.t;
  const ClassicalCode code = exp_huffman(make_distribution(dec.eigenvalues), cfg.k, merge_t);
  const LengthVector lengths = code.lengths();
  const QuantumEncoder enc = build_encoder(dec.eigenvectors, code);

  if (cfg.format == "json") {
    // flat object: loadable anywhere a codebook is expected
    json j = code_to_json(code);
    j["spectrum"] = std::vector<double>(dec.eigenvalues.data(),
                                        dec.eigenvalues.data() + dec.eigenvalues.size());
    j["lengths"] = lengths.lengths;
    j["t"] = std::isinf(cfg.t) ? json("inf") : json(cfg.t);
    j["kraft_sum"] = kraft_sum(lengths);
    j["t_avg_length"] = source_t_avg_length(enc, rho, cfg.t);
    emit(cfg, j.dump(2));
    return 0;
  }

  std::ostringstream os;
  os << "symbol  eigenvalue  length  word\n";
  for (int i = 0; i < code.size(); ++i) {
    os << i << "  " << fixed6(dec.eigenvalues(i)) << "  " << lengths.lengths[i] << "  "
       << code.words[i] << '\n';
  }
  os << "kraft_sum " << fixed6(kraft_sum(lengths)) << '\n';
  os << "t_avg_length " << fixed6(source_t_avg_length(enc, rho, cfg.t)) << " (t = "
     << format_t(cfg.t) << ")\n";
  std::cout << os.str();
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw FileNotFound("cannot write '" + cfg.output + "'");
    out << code_to_json(code).dump(2);
  }
  return 0;
}

int run_encode(const CliConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  if (cfg.codebook.empty()) throw UsageError("--codebook is required");
  const SourceEnsemble ensemble = ensemble_from_json(parse_json(read_text_file(cfg.input)));
  const ClassicalCode code = code_from_json(parse_json(read_text_file(cfg.codebook)));
  if (code.size() != ensemble.dim()) {
    throw MalformedInput("codebook has " + std::to_string(code.size()) + " words but states live in dimension " +
                         std::to_string(ensemble.dim()));
  }
  // States are taken in the code's symbol basis: word i encodes coordinate i.
  const QuantumEncoder enc =
      build_encoder(Matrix::Identity(ensemble.dim(), ensemble.dim()), code);
  const DensityOperator rho = induced_density(ensemble);

  json codewords = json::array();
  for (int n = 0; n < ensemble.size(); ++n) {
    codewords.push_back(fock_to_json(encode(enc, ensemble.states.col(n))));
  }
  const double mean = source_t_avg_length(enc, rho, 0.0);
  const double texp = source_t_avg_length(enc, rho, cfg.t);
  const int base = source_base_length(enc, ensemble);

  if (cfg.format == "json") {
    json j{{"codewords", codewords},
           {"mean_length", mean},
           {"t_exponential_length", texp},
           {"t", std::isinf(cfg.t) ? json("inf") : json(cfg.t)},
           {"base_length", base}};
    emit(cfg, j.dump(2));
    return 0;
  }
  std::ostringstream os;
  for (std::size_t n = 0; n < codewords.size(); ++n) {
    os << "state " << n << ": " << codewords[n]["terms"].dump() << '\n';
  }
  os << "mean_length " << fixed6(mean) << '\n';
  os << "t_exponential_length " << fixed6(texp) << " (t = " << format_t(cfg.t) << ")\n";
  os << "base_length " << base << '\n';
  emit(cfg, os.str());
  return 0;
}

int run_verify(const CliConfig& cfg) {
  TrialConfig config = default_trial_config();
  config.master_seed = cfg.seed;
  if (cfg.trials_given) config.trials_per_cell = cfg.trials;
  if (cfg.k_given) config.ks = {cfg.k};
  if (cfg.t_given) {
    if (std::isinf(cfg.t)) throw UsageError("verify needs a finite t");
    config.ts = {cfg.t};
  }
  const std::vector<BoundReport> reports = run_suite(config);

  if (cfg.format == "json") {
    emit(cfg, reports_to_json(reports).dump(2));
  } else if (cfg.format == "csv") {
    emit(cfg, reports_to_csv(reports));
  } else {
    std::map<std::string, std::pair<int, int>> tally; // id -> (total, failed)
    for (const auto& r : reports) {
      auto& [total, failed] = tally[r.theorem_id];
      ++total;
      if (!r.pass()) ++failed;
    }
    std::ostringstream os;
    os << "check            trials  failed\n";
    for (const auto& [id, counts] : tally) {
      os << id << std::string(id.size() < 17 ? 17 - id.size() : 1, ' ') << counts.first << "  "
         << counts.second << '\n';
    }
    for (const auto& r : reports) {
      if (!r.pass()) {
        os << "FAIL " << r.theorem_id << " d=" << r.params.d << " k=" << r.params.k
           << " t=" << format_t(r.params.t) << " seed=" << r.params.seed << " lower=" << r.lower
           << " achieved=" << r.achieved << " upper=" << r.upper << '\n';
      }
    }
    emit(cfg, os.str());
  }
  return all_pass(reports) ? 0 : 1;
}

int run_sweep_t(const CliConfig& cfg) {
  const DensityOperator rho = load_density(cfg.input);
  const std::vector<double> grid = parse_t_list(cfg.t_grid);

  json rows = json::array();
  std::ostringstream table;
  std::ostringstream csv;
  table << "t        renyi_bound  t_opt_length  standard_avg  base_length\n";
  csv << "t,renyi_bound,t_opt_length,standard_avg,base_length\n";
  for (double t : grid) {
    const BoundReport opt = check_optimal_bounds(rho, cfg.k, t);
    const BoundReport tradeoff = check_tradeoff(rho, cfg.k, t);
    rows.push_back({{"t", std::isinf(t) ? json("inf") : json(t)},
                    {"renyi_bound", opt.lower},
                    {"t_opt_length", opt.achieved},
                    {"standard_avg", tradeoff.achieved},
                    {"base_length", tradeoff.base_length}});
    table << fixed6(t) << "  " << fixed6(opt.lower) << "  " << fixed6(opt.achieved) << "  "
          << fixed6(tradeoff.achieved) << "  " << tradeoff.base_length << '\n';
    csv.precision(17);
    csv << format_t(t) << ',' << opt.lower << ',' << opt.achieved << ',' << tradeoff.achieved
        << ',' << tradeoff.base_length << '\n';
  }
  if (cfg.format == "json") {
    emit(cfg, rows.dump(2));
  } else if (cfg.format == "csv") {
    emit(cfg, csv.str());
  } else {
    emit(cfg, table.str());
  }
  return 0;
}

int run_block_limit(const CliConfig& cfg) {
  const DensityOperator rho = load_density(cfg.input);
  const double t = std::isinf(cfg.t) ? 64.0 : cfg.t;
  const auto rows = block_limit_sweep(rho, cfg.k, t, cfg.K_max);
  const double lower = order_entropy(rho, 1.0 / (1.0 + t), cfg.k);

  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& [K, value] : rows) {
      out.push_back({{"K", K},
                     {"per_source_length", value},
                     {"lower", lower},
                     {"upper", lower + 1.0 / K}});
    }
    emit(cfg, out.dump(2));
    return 0;
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "K,per_source_length,lower,upper\n";
    os.precision(17);
    for (const auto& [K, value] : rows) {
      os << K << ',' << value << ',' << lower << ',' << lower + 1.0 / K << '\n';
    }
  } else {
    os << "K  per_source_length  lower  upper\n";
    for (const auto& [K, value] : rows) {
      os << K << "  " << fixed6(value) << "  " << fixed6(lower) << "  "
         << fixed6(lower + 1.0 / K) << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

} // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  std::string t_text = "0";

  CLI::App app{"Lossless variable-length quantum coding toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", cfg.input, "density matrix JSON file or inline spectrum");
    }
    sub->add_option("--k", cfg.k, "alphabet size")->check(CLI::Range(2, 10));
    sub->add_option("--format", cfg.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", cfg.output, "write results to this path");
  };

  CLI::App* entropy = app.add_subcommand("entropy", "Renyi entropies of a source");
  add_common(entropy, true);
  entropy->add_option("--alpha", cfg.alpha_list, "comma-separated Renyi orders");

  CLI::App* build = app.add_subcommand("build-code", "penalty-optimal prefix code for a source");
  add_common(build, true);
  build->add_option("--t", t_text, "penalty parameter (>= 0 or 'inf')");

  CLI::App* enc = app.add_subcommand("encode", "encode an ensemble into Fock codewords");
  add_common(enc, true);
  enc->add_option("--codebook", cfg.codebook, "codebook JSON file");
  enc->add_option("--t", t_text, "penalty parameter (>= 0 or 'inf')");

  CLI::App* verify = app.add_subcommand("verify", "run the randomized bound suite");
  add_common(verify, false);
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--trials", cfg.trials, "trials per (d,k,t) cell")
      ->check(CLI::PositiveNumber);
  verify->add_option("--t", t_text, "restrict the t grid to one value");

  CLI::App* sweep = app.add_subcommand("sweep-t", "length/penalty tradeoff table");
  add_common(sweep, true);
  sweep->add_option("--t-grid", cfg.t_grid, "comma-separated t values");

  CLI::App* block = app.add_subcommand("block-limit", "per-source length of block codes");
  add_common(block, true);
  block->add_option("--t", t_text, "penalty parameter (>= 0 or 'inf')");
  block->add_option("--K-max", cfg.K_max, "largest block size")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    cfg.subcommand = "help";
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  cfg.t = parse_t(t_text);
  for (CLI::App* sub : {entropy, build, enc, verify, sweep, block}) {
    if (sub->count("--k") > 0) cfg.k_given = true;
    if (sub->get_option_no_throw("--t") && sub->count("--t") > 0) cfg.t_given = true;
    if (sub->get_option_no_throw("--trials") && sub->count("--trials") > 0) {
      cfg.trials_given = true;
    }
  }
  return cfg;
}

int execute(const CliConfig& cfg) {
  if (cfg.subcommand == "help") return 0;
  if (cfg.subcommand == "entropy") return run_entropy(cfg);
  if (cfg.subcommand == "build-code") return run_build_code(cfg);
  if (cfg.subcommand == "encode") return run_encode(cfg);
  if (cfg.subcommand == "verify") return run_verify(cfg);
  if (cfg.subcommand == "sweep-t") return run_sweep_t(cfg);
  if (cfg.subcommand == "block-limit") return run_block_limit(cfg);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return execute(parse_args(args));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const FileNotFound& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return 3;
  } catch (const MalformedInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
}

} // namespace qvlc
