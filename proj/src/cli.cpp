#include "hdet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hdet/bound.hpp"
#include "hdet/corollary.hpp"
#include "hdet/figures.hpp"
#include "hdet/oracle.hpp"
#include "hdet/series.hpp"

namespace hdet {
namespace {

using Record = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_value(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) return fmt::format("{:.12g}", v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void emit(const std::vector<Record>& rows, OutputFormat format, bool as_table, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: {
      if (!as_table && rows.size() == 1) {
        out << rows.front().dump(2) << '\n';
      } else {
        out << nlohmann::ordered_json(rows).dump(2) << '\n';
      }
      return;
    }
    case OutputFormat::csv: {
      if (rows.empty()) return;
      bool first = true;
      for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : ",") << csv_field(key);
        first = false;
      }
      out << '\n';
      for (const Record& row : rows) {
        first = true;
        for (const auto& [_, value] : row.items()) {
          out << (first ? "" : ",") << csv_field(format_value(value));
          first = false;
        }
        out << '\n';
      }
      return;
    }
    case OutputFormat::text: {
      if (!as_table && rows.size() == 1) {
        std::size_t width = 0;
        for (const auto& [key, _] : rows.front().items()) width = std::max(width, key.size());
        for (const auto& [key, value] : rows.front().items()) {
          out << fmt::format("{:<{}}  {}\n", key, width, format_value(value));
        }
        return;
      }
      if (rows.empty()) return;
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header;
      for (const auto& [key, _] : rows.front().items()) header.push_back(key);
      cells.push_back(header);
      for (const Record& row : rows) {
        std::vector<std::string> line;
        for (const auto& [_, value] : row.items()) line.push_back(format_value(value));
        cells.push_back(std::move(line));
      }
      std::vector<std::size_t> widths(header.size(), 0);
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          widths[c] = std::max(widths[c], line[c].size());
        }
      }
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          const std::size_t width = c + 1 < line.size() ? widths[c] : 0;
          out << (c ? "  " : "") << fmt::format("{:<{}}", line[c], width);
        }
        out << '\n';
      }
      return;
    }
  }
}

const std::string& single(const std::vector<std::string>& values, const char* flag) {
  if (values.size() != 1) throw UsageError(std::string("--") + flag + " takes a single value here");
  return values.front();
}

Params single_params(const RunConfig& cfg) {
  return parse_params(single(cfg.m, "m"), single(cfg.lambda, "lambda"),
                      single(cfg.gamma, "gamma"), single(cfg.beta, "beta"));
}

void echo_params(Record& r, const Params& p, bool with_beta = true) {
  r["m"] = p.m;
  r["lambda"] = to_double(p.lambda);
  r["gamma"] = p.gamma;
  if (with_beta) r["beta"] = to_double(p.beta);
  r["lambda_exact"] = to_string(p.lambda);
  if (with_beta) r["beta_exact"] = to_string(p.beta);
}

Record bound_record(const Params& p, const BoundResult& b) {
  Record r;
  echo_params(r, p);
  r["value"] = b.value;
  r["branch"] = std::string(branch_name(b.branch));
  r["tau"] = b.tau;
  r["rho_star"] = b.rho_star;
  return r;
}

Rational parse_exact(const std::string& text, Field field) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw RangeError(field, e.what());
  }
}

int run_bound(const RunConfig& cfg, std::ostream& out) {
  const Params p = single_params(cfg);
  Record r;
  r["command"] = "bound";
  r.update(bound_record(p, theorem_bound(p)));
  emit({r}, cfg.output_format, false, out);
  return kExitOk;
}

int run_tau(const RunConfig& cfg, std::ostream& out) {
  const Params p = parse_params(single(cfg.m, "m"), single(cfg.lambda, "lambda"),
                                single(cfg.gamma, "gamma"), "0");
  Record r;
  r["command"] = "tau";
  echo_params(r, p, false);
  r["tau"] = tau(p);
  emit({r}, cfg.output_format, false, out);
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<Record> rows;
  bool failed = false;
  for (const std::string& m : cfg.m) {
    for (const std::string& lambda : cfg.lambda) {
      for (const std::string& gamma : cfg.gamma) {
        for (const std::string& beta : cfg.beta) {
          const Params p = parse_params(m, lambda, gamma, beta);
          const BoundResult b = theorem_bound(p);
          Record r = bound_record(p, b);
          if (cfg.check) {
            const SearchResult s = brute_force_max(p, cfg.rho_steps, cfg.mu_steps, true);
            const double gap = std::abs(s.max_value - b.value) / b.value;
            r["oracle_max"] = s.max_value;
            r["oracle_gap"] = gap;
            r["pass"] = gap <= kSweepGapTolerance;
            failed = failed || gap > kSweepGapTolerance;
          }
          rows.push_back(std::move(r));
        }
      }
    }
  }
  emit(rows, cfg.output_format, true, out);
  return failed ? kExitViolation : kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const Params p = single_params(cfg);
  if (cfg.samples < 1) throw RangeError(Field::argument, "--samples must be >= 1");
  const VerifyReport v = monte_carlo_verify(p, cfg.samples, cfg.seed);
  const BoundResult b = theorem_bound(p);
  Record r;
  r["command"] = "verify";
  echo_params(r, p);
  r["branch"] = std::string(branch_name(b.branch));
  r["tau"] = b.tau;
  r["value"] = b.value;
  r["bound"] = v.bound;
  r["observed_max"] = v.observed_max;
  r["violations"] = v.violations;
  r["surface_violations"] = v.surface_violations;
  r["worst_ratio"] = v.worst_ratio;
  r["samples"] = v.samples;
  r["seed"] = v.seed;
  emit({r}, cfg.output_format, false, out);
  return v.violations == 0 && v.surface_violations == 0 ? kExitOk : kExitViolation;
}

int run_figures(const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_format == OutputFormat::json) throw UsageError("figures emits CSV only");
  const Params shape = parse_params(single(cfg.m, "m"), single(cfg.lambda, "lambda"),
                                    single(cfg.gamma, "gamma"), "0");
  const std::string kind = cfg.kind.empty() ? "Fcurves" : cfg.kind;
  const auto which = parse_figure_kind(kind);
  if (!which) throw UsageError("unknown figure kind '" + kind + "'");
  std::vector<Rational> betas;
  for (const std::string& b : cfg.beta) betas.push_back(parse_exact(b, Field::beta));
  out << emit_figure_data(shape, betas, *which, cfg.rho_steps);
  return kExitOk;
}

int run_corollary(const RunConfig& cfg, std::ostream& out) {
  const auto kind = parse_corollary_kind(cfg.kind);
  if (!kind) throw UsageError("--kind must be one of MFold, General1Fold, Lambda1Fold, Base");
  const Rational m = parse_exact(single(cfg.m, "m"), Field::m);
  const Rational gamma = parse_exact(single(cfg.gamma, "gamma"), Field::gamma);
  if (!is_integral(m)) throw RangeError(Field::m, "m must be an integer");
  if (!is_integral(gamma)) throw RangeError(Field::gamma, "gamma must be an integer");
  CorollaryArgs args;
  args.m = to_double(m) >= 1 ? static_cast<int>(to_double(m)) : 0;
  args.gamma = to_double(gamma) >= 0 ? static_cast<int>(to_double(gamma)) : -1;
  args.lambda = to_double(parse_exact(single(cfg.lambda, "lambda"), Field::lambda));
  args.beta = to_double(parse_exact(single(cfg.beta, "beta"), Field::beta));
  const CorollaryValue v = corollary_bound(*kind, args);
  Record r;
  r["command"] = "corollary";
  r["kind"] = std::string(corollary_name(*kind));
  r["m"] = args.m;
  r["lambda"] = args.lambda;
  r["gamma"] = args.gamma;
  r["beta"] = args.beta;
  r["value"] = v.value;
  r["threshold"] = v.threshold;
  emit({r}, cfg.output_format, false, out);
  return kExitOk;
}

int run_invert(const RunConfig& cfg, std::ostream& out) {
  const Rational m = parse_exact(single(cfg.m, "m"), Field::m);
  if (m < 1 || !is_integral(m)) throw RangeError(Field::m, "m must be an integer >= 1");
  if (cfg.coeffs.size() < 3) throw UsageError("--coeffs needs a_{m+1}, a_{2m+1}, a_{3m+1}");
  std::vector<Rational> a;
  for (const std::string& c : cfg.coeffs) a.push_back(parse_exact(c, Field::argument));
  const MFoldSeries<Rational> f(static_cast<int>(to_double(m)), a);
  const CoefficientTriple<Rational> b = invert_series(f);
  Record r;
  r["command"] = "invert";
  r["m"] = f.m;
  r["a_m1"] = to_string(a[0]);
  r["a_2m1"] = to_string(a[1]);
  r["a_3m1"] = to_string(a[2]);
  r["b_m1"] = to_string(b.a_m1);
  r["b_2m1"] = to_string(b.a_2m1);
  r["b_3m1"] = to_string(b.a_3m1);
  emit({r}, cfg.output_format, false, out);
  return kExitOk;
}

int run_hankel(const RunConfig& cfg, std::ostream& out) {
  std::vector<Rational> a;
  for (const std::string& c : cfg.coeffs) a.push_back(parse_exact(c, Field::argument));
  if (cfg.q < 1 || cfg.n < 1) throw UsageError("--q and --n must be >= 1");
  const Rational det = hankel_determinant<Rational>(a, cfg.q, cfg.n);
  Record r;
  r["command"] = "hankel";
  r["q"] = cfg.q;
  r["n"] = cfg.n;
  r["determinant"] = to_double(det);
  r["determinant_exact"] = to_string(det);
  emit({r}, cfg.output_format, false, out);
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::bound: return run_bound(cfg, out);
    case Command::tau: return run_tau(cfg, out);
    case Command::sweep: return run_sweep(cfg, out);
    case Command::verify: return run_verify(cfg, out);
    case Command::figures: return run_figures(cfg, out);
    case Command::corollary: return run_corollary(cfg, out);
    case Command::invert: return run_invert(cfg, out);
    case Command::hankel: return run_hankel(cfg, out);
  }
  return kExitUsage;
}

}  // namespace

int run_cli(std::span<const std::string> arguments, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Second Hankel determinant bounds for m-fold symmetric bi-univalent classes",
               "hdet"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", output, "write results to this file instead of stdout");
  };
  auto add_class = [&](CLI::App* sub, bool with_beta) {
    sub->add_option("--m", cfg.m, "fold order m >= 1")->delimiter(',');
    sub->add_option("--lambda", cfg.lambda, "weight lambda >= 1 (decimal or p/q)")->delimiter(',');
    sub->add_option("--gamma", cfg.gamma, "Ruscheweyh order gamma >= 0")->delimiter(',');
    if (with_beta) {
      sub->add_option("--beta,--betas", cfg.beta, "order beta in [0, 1) (decimal or p/q)")
          ->delimiter(',');
    }
  };

  struct Entry {
    Command command;
    CLI::App* app;
  };
  std::vector<Entry> subs;

  auto* bound = app.add_subcommand("bound", "evaluate the piecewise bound");
  add_class(bound, true);
  add_common(bound);
  subs.push_back({Command::bound, bound});

  auto* tau_cmd = app.add_subcommand("tau", "branch threshold");
  add_class(tau_cmd, false);
  add_common(tau_cmd);
  subs.push_back({Command::tau, tau_cmd});

  auto* sweep = app.add_subcommand("sweep", "bound over a grid of comma-separated values");
  add_class(sweep, true);
  add_common(sweep);
  sweep->add_flag("--check", cfg.check, "compare every row against the brute-force oracle");
  sweep->add_option("--rho-steps", cfg.rho_steps)->check(CLI::Range(3, 100000));
  sweep->add_option("--mu-steps", cfg.mu_steps)->check(CLI::Range(3, 100000));
  subs.push_back({Command::sweep, sweep});

  auto* verify = app.add_subcommand("verify", "Monte Carlo check of the bound");
  add_class(verify, true);
  add_common(verify);
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", cfg.seed);
  subs.push_back({Command::verify, verify});

  auto* figures = app.add_subcommand("figures", "CSV curves of the F coefficients against rho");
  add_class(figures, true);
  add_common(figures);
  figures->add_option("--which", cfg.kind, "Fcurves, F3plus2F4, F2plus2F3F4 or Kcurve");
  figures->add_option("--rho-steps", cfg.rho_steps)->check(CLI::Range(2, 1000000));
  subs.push_back({Command::figures, figures});

  auto* corollary = app.add_subcommand("corollary", "specialized closed forms");
  add_class(corollary, true);
  add_common(corollary);
  corollary->add_option("--kind", cfg.kind, "MFold, General1Fold, Lambda1Fold or Base")
      ->required();
  subs.push_back({Command::corollary, corollary});

  auto* invert = app.add_subcommand("invert", "coefficients of the inverse series");
  invert->add_option("--m", cfg.m, "fold order m >= 1");
  invert->add_option("--coeffs", cfg.coeffs, "a_{m+1},a_{2m+1},a_{3m+1}")
      ->delimiter(',')
      ->required();
  add_common(invert);
  subs.push_back({Command::invert, invert});

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant H_q(n)");
  hankel->add_option("--coeffs", cfg.coeffs, "a_1,a_2,... (a_1 = 1)")->delimiter(',')->required();
  hankel->add_option("--q", cfg.q);
  hankel->add_option("--n", cfg.n);
  add_common(hankel);
  subs.push_back({Command::hankel, hankel});

  std::vector<const char*> argv{"hdet"};
  for (const std::string& a : arguments) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  for (const Entry& e : subs) {
    if (e.app->parsed()) cfg.command = e.command;
  }
  if (cfg.command == Command::figures && figures->count("--beta") == 0) {
    cfg.beta = {"0", "0.1", "0.2", "0.9"};
  }
  cfg.output_format = format == "json"  ? OutputFormat::json
                      : format == "csv" ? OutputFormat::csv
                                        : OutputFormat::text;
  if (!output.empty()) cfg.output_path = output;

  try {
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file " + *cfg.output_path);
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hdet
