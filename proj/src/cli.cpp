#include "riesz/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "riesz/errors.hpp"
#include "riesz/mobius.hpp"
#include "riesz/pochhammer.hpp"
#include "riesz/zeta.hpp"

namespace riesz::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string catalog_listing() {
  std::string out = "valid experiments:";
  for (const auto& n : experiment_catalog()) out += "\n  " + n;
  return out;
}

Json params_json(const FamilyParams& p) {
  Json j{{"alpha", p.alpha}, {"rho", p.rho}, {"epsilon", p.epsilon}};
  if (std::isinf(p.beta)) {
    j["beta"] = "inf";
  } else {
    j["beta"] = p.beta;
  }
  return j;
}

PrecisionContext context_for(const RunConfig& c) {
  PrecisionContext ctx;
  ctx.precision_bits = c.precision_bits;
  return ctx;
}

CoefficientSeries series_for(const RunConfig& c, const PrecisionContext& ctx,
                             std::optional<MobiusTable>& table) {
  SeriesOptions opts;
  opts.method = c.method;
  opts.threads = c.threads;
  opts.policy = c.precision_explicit ? PrecisionPolicy::Fixed : PrecisionPolicy::RaisePerTerm;
  if (c.method == Method::MobiusTruncated) {
    table.emplace(c.n_max);
    opts.table = &*table;
  }
  return ck_series(c.params, c.k_max, opts, ctx);
}

Json series_meta(const CoefficientSeries& s) {
  Json j{{"params", params_json(s.params)},
         {"method", to_string(s.method)},
         {"k_max", s.k_max},
         {"precision_bits", s.precision_bits_used}};
  if (s.method == Method::MobiusTruncated) {
    j["n_max"] = s.n_max;
    j["truncation_tail_bound"] = s.truncation_tail_bound.to_string(6);
  }
  return j;
}

Dataset run_ck(const RunConfig& c) {
  const PrecisionContext ctx = context_for(c);
  std::optional<MobiusTable> table;
  const CoefficientSeries s = series_for(c, ctx, table);
  Dataset d;
  d.name = "ck";
  Column k{"k", {}, {}};
  Column v{"c_k", {}, {}};
  for (std::uint32_t i = 0; i <= s.k_max; ++i) {
    k.integers.push_back(i);
    v.reals.push_back(s.values[i]);
  }
  d.columns = {std::move(k), std::move(v)};
  d.meta = series_meta(s);
  return d;
}

Dataset run_phi(const RunConfig& c) {
  const PrecisionContext ctx = context_for(c);
  std::optional<MobiusTable> table;
  const CoefficientSeries s = series_for(c, ctx, table);
  const Complex point(c.s_re, c.s_im, ctx.precision_bits);
  const auto partials = phi_partial_sums(point, c.params, c.k_max, s, ctx);
  Dataset d;
  d.name = "phi";
  Column kk{"K", {}, {}};
  Column re{"phi_re", {}, {}};
  Column im{"phi_im", {}, {}};
  Column tail{"term_abs", {}, {}};
  for (const auto& p : partials) {
    kk.integers.push_back(p.terms);
    re.reals.push_back(p.value.re);
    im.reals.push_back(p.value.im);
    tail.reals.push_back(p.term_tail_estimate);
  }
  d.columns = {std::move(kk), std::move(re), std::move(im), std::move(tail)};
  d.meta = series_meta(s);
  d.meta["s"] = {c.s_re, c.s_im};
  if (c.s_im == 0.0 && c.s_re > 1.0) {
    d.meta["inv_zeta_s"] = inv_zeta(Real(c.s_re, 64), ctx).to_string(c.digits);
  }
  return d;
}

Dataset run_zeta(const RunConfig& c) {
  const PrecisionContext ctx = context_for(c);
  Dataset d;
  d.name = "zeta";
  Column sigma{"sigma", {}, {}};
  Column value{"zeta", {}, {}};
  Column bound{"error_bound", {}, {}};
  Column limit{"inv_zeta_minus_one", {}, {}};
  for (double s : c.sigma) {
    ZetaValue z = zeta_real(s, ctx);
    sigma.reals.push_back(Real(s, ctx.precision_bits));
    value.reals.push_back(z.value);
    bound.reals.push_back(z.error_bound);
    limit.reals.push_back(inv_zeta_minus_one(s, ctx));
  }
  d.columns = {std::move(sigma), std::move(value), std::move(bound), std::move(limit)};
  d.meta["precision_bits"] = ctx.precision_bits;
  return d;
}

Dataset run_mobius(const RunConfig& c) {
  const MobiusTable table = mobius_sieve(c.n_max);
  Dataset d;
  d.name = "mobius";
  Column n{"n", {}, {}};
  Column mu{"mu", {}, {}};
  Column m{"mertens", {}, {}};
  long running = 0;
  for (std::uint32_t i = 1; i <= table.limit(); ++i) {
    running += table[i];
    n.integers.push_back(i);
    mu.integers.push_back(table[i]);
    m.integers.push_back(running);
  }
  d.columns = {std::move(n), std::move(mu), std::move(m)};
  d.meta["n_max"] = c.n_max;
  return d;
}

Dataset run_named_experiment(const RunConfig& c) {
  ExperimentSpec spec = default_experiment(c.experiment);
  if (c.k_max_given) spec.k_max = c.k_max;
  if (c.n_max_given) spec.n_max = c.n_max;
  if (c.method_given) spec.method = c.method;
  spec.threads = c.threads;
  return run_experiment(spec, context_for(c));
}

std::string format_cell(const Column& c, std::size_t row, int digits) {
  return c.is_integer() ? std::to_string(c.integers[row]) : c.reals[row].to_string(digits);
}

void check_shape(const Dataset& d) {
  if (d.columns.empty() || d.rows() == 0) throw InvalidArgument("dataset '" + d.name + "' is empty");
  for (const auto& c : d.columns) {
    if (c.size() != d.rows()) {
      throw InvalidArgument("dataset '" + d.name + "': column '" + c.name + "' has " +
                            std::to_string(c.size()) + " rows, expected " + std::to_string(d.rows()));
    }
  }
}

}  // namespace

// ------------------------------------------------------------------ parse

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"High-precision Riesz-type coefficient sequences, 1/zeta reconstruction and decay analysis",
               "riesz"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value file with defaults for the long flags");
  app.get_formatter()->column_width(32);

  std::string command;
  std::string method = "binomial";
  std::string format = "csv";
  std::string output;
  app.add_option("command", command, "ck | phi | zeta | mobius | experiment")
      ->required()
      ->check(CLI::IsMember({"ck", "phi", "zeta", "mobius", "experiment"}));
  app.add_option("name", c.experiment, "experiment name (experiment command)");
  app.add_option("--alpha", c.params.alpha, "alpha")->capture_default_str();
  app.add_option("--beta", c.params.beta, "beta")->capture_default_str();
  app.add_option("--rho", c.params.rho, "half-plane abscissa")->capture_default_str();
  app.add_option("--epsilon", c.params.epsilon, "epsilon in bound exponents")->capture_default_str();
  auto* k_opt = app.add_option("--k-max", c.k_max, "largest k (phi: number of terms K)")->capture_default_str();
  auto* n_opt = app.add_option("--n-max", c.n_max, "Moebius truncation N")->capture_default_str()->check(CLI::Range(2u, 400'000'000u));
  auto* p_opt = app.add_option("--precision-bits", c.precision_bits, "working precision in bits")
                    ->capture_default_str()
                    ->check(CLI::Range(64u, 1u << 24));
  auto* m_opt = app.add_option("--method", method, "mobius | binomial | beta-limit")
                    ->capture_default_str()
                    ->check(CLI::IsMember({"mobius", "binomial", "beta-limit"}));
  app.add_option("--format", format, "csv | json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "output file (default: standard output)");
  app.add_option("--digits", c.digits, "significant digits for reals")->capture_default_str()->check(CLI::Range(1, 10000));
  app.add_option("--threads", c.threads, "worker threads (0: all cores)")->capture_default_str();
  app.add_option("--sigma", c.sigma, "zeta arguments (repeatable)");
  app.add_option("--s-re", c.s_re, "Re s for phi")->capture_default_str();
  app.add_option("--s-im", c.s_im, "Im s for phi")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream os;
    if (e.get_name() == "CallForVersion") {
      os << kVersion << "\n";
    } else {
      os << app.help();
    }
    throw UsageError(os.str(), kSuccess);
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help(), kUsageError);
  }

  c.k_max_given = k_opt->count() > 0;
  c.n_max_given = n_opt->count() > 0;
  c.method_given = m_opt->count() > 0;
  c.precision_explicit = p_opt->count() > 0;
  c.format = format == "json" ? Format::Json : Format::Csv;
  if (!output.empty()) c.output_path = output;
  c.method = method == "mobius"     ? Method::MobiusTruncated
             : method == "binomial" ? Method::BinomialZeta
                                    : Method::BetaLimit;

  static const std::map<std::string, Command> commands = {{"ck", Command::Ck},
                                                          {"phi", Command::Phi},
                                                          {"zeta", Command::Zeta},
                                                          {"mobius", Command::Mobius},
                                                          {"experiment", Command::Experiment}};
  c.command = commands.at(command);

  if (c.command == Command::Experiment) {
    if (c.experiment.empty()) throw UsageError("experiment: missing name\n" + catalog_listing());
    const auto& names = experiment_catalog();
    if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
      throw UsageError("unknown experiment '" + c.experiment + "'\n" + catalog_listing());
    }
  } else if (!c.experiment.empty()) {
    throw UsageError("unexpected argument '" + c.experiment + "' for command " + command);
  }

  if (c.command == Command::Ck || c.command == Command::Phi) {
    try {
      c.params.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!(c.params.alpha > 1.0)) {
      throw UsageError("domain error: alpha must be > 1 (got " + std::to_string(c.params.alpha) +
                       "); the coefficient series diverge otherwise");
    }
  }
  if (c.command == Command::Zeta) {
    if (c.sigma.empty()) c.sigma = {2.0};
    for (double s : c.sigma) {
      if (!(s > 1.0)) throw UsageError("domain error: zeta needs sigma > 1, got " + std::to_string(s));
    }
  }
  return c;
}

// ------------------------------------------------------------------- emit

void write_csv(const Dataset& d, std::ostream& out, int digits) {
  check_shape(d);
  std::string line;
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i) line += ',';
    line += d.columns[i].name;
  }
  out << line << '\n';
  for (std::size_t r = 0; r < d.rows(); ++r) {
    line.clear();
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
      if (i) line += ',';
      line += format_cell(d.columns[i], r, digits);
    }
    out << line << '\n';
  }
}

void write_json(const Dataset& d, std::ostream& out, int digits) {
  check_shape(d);
  Json meta = d.meta;
  meta["dataset"] = d.name;
  meta["digits"] = digits;
  meta["generated_by"] = kVersion;
  Json columns = Json::object();
  for (const auto& c : d.columns) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c.is_integer()) {
        arr.push_back(c.integers[r]);
      } else {
        arr.push_back(c.reals[r].to_string(digits));
      }
    }
    columns[c.name] = std::move(arr);
  }
  Json doc{{"meta", std::move(meta)}, {"columns", std::move(columns)}};
  out << doc.dump(1) << '\n';
}

void emit_dataset(const Dataset& d, Format format, const std::optional<std::string>& path,
                  int digits, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (format == Format::Csv) {
      write_csv(d, os, digits);
    } else {
      write_json(d, os, digits);
    }
  };
  if (!path) {
    write(out);
    out.flush();
    if (!out) throw Error("failed writing to standard output");
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + *path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw Error("failed writing '" + *path + "'");
}

Dataset read_json(const std::string& text, unsigned bits) {
  const Json doc = Json::parse(text);
  Dataset d;
  d.meta = doc.at("meta");
  d.name = d.meta.value("dataset", "");
  for (const auto& [name, values] : doc.at("columns").items()) {
    Column c{name, {}, {}};
    for (const auto& v : values) {
      if (v.is_number_integer()) {
        c.integers.push_back(v.get<long>());
      } else {
        c.reals.emplace_back(v.get<std::string>(), bits);
      }
    }
    d.columns.push_back(std::move(c));
  }
  return d;
}

// -------------------------------------------------------------------- run

Dataset execute(const RunConfig& config) {
  switch (config.command) {
    case Command::Ck: return run_ck(config);
    case Command::Phi: return run_phi(config);
    case Command::Zeta: return run_zeta(config);
    case Command::Mobius: return run_mobius(config);
    case Command::Experiment: return run_named_experiment(config);
  }
  throw InvalidArgument("unknown command");
}

int riesz_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const UsageError& e) {
    std::string msg = e.what();
    if (!msg.empty() && msg.back() != '\n') msg += '\n';
    (e.exit_code() == kSuccess ? out : err) << msg;
    return e.exit_code();
  }
  try {
    const Dataset d = execute(config);
    emit_dataset(d, config.format, config.output_path, config.digits, out);
    return kSuccess;
  } catch (const InsufficientPrecision& e) {
    err << "insufficient precision: " << e.what() << "\n";
    return kInsufficientPrecision;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CatalogError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace riesz::cli
