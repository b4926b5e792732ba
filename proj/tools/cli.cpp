#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <variant>

#include "json.hpp"
#include "multiphase/bounds.hpp"
#include "multiphase/channel.hpp"
#include "multiphase/errors.hpp"
#include "multiphase/hilbert.hpp"
#include "multiphase/information.hpp"
#include "multiphase/optimizer.hpp"
#include "multiphase/probes.hpp"

namespace multiphase::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

Json cell_json(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(long long v) const { return v; }
    Json operator()(double v) const { return std::isfinite(v) ? Json(v) : Json(format_number(v)); }
    Json operator()(const std::string& v) const { return v; }
    Json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

// Streams CSV rows as they are produced; JSON rows are collected and written
// as one array when the sink closes, including after a failure part way.
class RowSink {
 public:
  RowSink(std::vector<std::string> columns, Format format, std::ostream& out)
      : columns_(std::move(columns)), format_(format), out_(out) {
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    }
  }
  RowSink(const RowSink&) = delete;
  RowSink& operator=(const RowSink&) = delete;
  ~RowSink() { close(); }

  void add(const std::vector<Cell>& row) {
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << cell_text(row[i]);
      out_ << '\n';
      out_.flush();
      return;
    }
    Json object = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[columns_[i]] = cell_json(row[i]);
    rows_.push_back(std::move(object));
  }

  void close() {
    if (closed_) return;
    closed_ = true;
    if (format_ == Format::json) out_ << rows_.dump(2) << '\n';
    out_.flush();
  }

 private:
  std::vector<std::string> columns_;
  Format format_;
  std::ostream& out_;
  Json rows_ = Json::array();
  bool closed_ = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Progress {
  std::ostream& log;
  bool quiet;
  template <typename... Args>
  void operator()(const Args&... args) const {
    if (quiet) return;
    ((log << args), ...);
    log << std::endl;
  }
};

std::string probe_name(ProbeChoice p) { return p == ProbeChoice::product ? "product" : "hb"; }

ProbeState make_probe(ProbeChoice p, int k, int n) {
  return p == ProbeChoice::product ? equatorial_product(k, n) : holland_burnett(k, n);
}

std::vector<ProbeChoice> probe_list(const RunConfig& c, ProbeChoice fallback) {
  const ProbeChoice choice = c.probe.value_or(fallback);
  if (choice == ProbeChoice::both) return {ProbeChoice::product, ProbeChoice::hb};
  return {choice};
}

ProbeChoice single_probe(const RunConfig& c, ProbeChoice fallback) {
  const ProbeChoice choice = c.probe.value_or(fallback);
  if (choice == ProbeChoice::both) {
    throw ValidationError(c.command + " takes a single probe: --probe product or --probe hb");
  }
  return choice;
}

std::vector<int> n_values(const RunConfig& c) {
  if (c.n_range) return c.n_range->values();
  if (c.n) return {*c.n};
  throw ValidationError(c.command + " needs --n or --n-range");
}

Format format_of(const RunConfig& c) { return c.format.value_or(Format::csv); }

double mi_tolerance(const RunConfig& c) { return c.tol.value_or(c.k == 1 ? 1e-8 : 1e-6); }

QuadratureResult mi(const RunConfig& c, const ProbeState& probe) {
  MiOptions options;
  options.tol = mi_tolerance(c);
  options.budget = c.budget;
  return mutual_information(probe, options);
}

void require_phases(const RunConfig& c, int lo, int hi) {
  if (c.k < lo || c.k > hi) {
    throw ValidationError(c.command + " supports k in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(c.k));
  }
}

void cmd_scan_mi(const RunConfig& c, std::ostream& out, const Progress& progress) {
  require_phases(c, 1, 2);
  const auto ns = n_values(c);
  const auto probes = probe_list(c, ProbeChoice::both);
  RowSink sink({"N", "probe", "k", "mi_bits", "err_est", "evals", "sql_bits", "hb_bits",
                "bound_bits", "independent_bits"},
               format_of(c), out);
  for (const int n : ns) {
    for (const ProbeChoice p : probes) {
      const Stopwatch clock;
      const QuadratureResult r = mi(c, make_probe(p, c.k, n));
      Cell independent;
      if (c.k == 2 && n % 2 == 0) {
        RunConfig single = c;
        single.k = 1;
        single.tol = mi_tolerance(c);
        independent = 2.0 * mi(single, make_probe(p, 1, n / 2)).value;
      }
      sink.add({static_cast<long long>(n), probe_name(p), static_cast<long long>(c.k), r.value,
                r.abs_error_estimate, static_cast<long long>(r.evaluations),
                n >= 1 ? Cell(c.k * sql(n)) : Cell(), c.k * hb(n), hb_k(c.k, n), independent});
      progress("scan-mi k=", c.k, " N=", n, " probe=", probe_name(p), " mi=", format_number(r.value),
               " evals=", r.evaluations, " ", clock.seconds(), "s");
    }
  }
}

void cmd_bounds(const RunConfig& c, std::ostream& out, const Progress&) {
  std::vector<std::pair<int, int>> points;
  if (c.diagonal) {
    if (!c.n_range) throw ValidationError("bounds --diagonal needs --n-range");
    for (const int n : c.n_range->values()) points.emplace_back(n, n);
  } else if (c.k_range) {
    if (!c.n || c.n_range) throw ValidationError("bounds --k-range needs a single --n");
    for (const int k : c.k_range->values()) points.emplace_back(k, *c.n);
  } else {
    for (const int n : n_values(c)) points.emplace_back(c.k, n);
  }
  RowSink sink({"k", "N", "hb_bits", "hb_per_phase", "regime", "asymptote"}, format_of(c), out);
  for (const auto& [k, n] : points) {
    if (k < 1 || n < 1) throw ValidationError("bounds needs k >= 1 and N >= 1");
    const RegimeAsymptote regime = regime_asymptote(k, n);
    const double total = hb_k(k, n);
    sink.add({static_cast<long long>(k), static_cast<long long>(n), total, total / k,
              std::string(to_string(regime.regime)), regime.per_phase_bits});
  }
}

void cmd_crossover(const RunConfig& c, std::ostream& out, const Progress& progress) {
  require_phases(c, 1, 2);
  if (c.n_range) throw ValidationError("crossover takes --n as the largest N to scan");
  const int n_max = c.n.value_or(c.k == 1 ? 20 : 30);
  const double tol = c.tol.value_or(1e-7);
  const Stopwatch clock;
  const CrossoverResult r = crossover(c.k, n_max, tol);
  for (const CrossoverPoint& p : r.sweep) {
    progress("crossover k=", c.k, " N=", p.n, " product=", format_number(p.product_mi),
             " hb=", format_number(p.hb_mi));
  }
  if (r.n_star) {
    progress("crossover N*=", *r.n_star, r.stable ? " (stable up to N=" : " (not stable up to N=",
             n_max, ") ", clock.seconds(), "s");
  } else {
    progress("crossover: none up to N=", n_max);
  }
  RowSink sink({"k", "N_star"}, format_of(c), out);
  sink.add({static_cast<long long>(c.k), r.n_star ? Cell(static_cast<long long>(*r.n_star)) : Cell()});
}

void cmd_entanglement(const RunConfig& c, std::ostream& out, const Progress& progress) {
  require_phases(c, 1, 2);
  const ProbeChoice p = single_probe(c, ProbeChoice::hb);
  const double tol = c.tol.value_or(1e-13);
  RowSink sink({"k", "N", "eg_exact", "eg_asymptotic", "in_regime"}, format_of(c), out);
  for (const int n : n_values(c)) {
    const Stopwatch clock;
    const EntanglementResult r = geometric_entanglement(make_probe(p, c.k, n), tol);
    Cell asymptote;
    Cell in_regime;
    if (p == ProbeChoice::hb && n >= 1) {
      const AsymptoticValue a = eg_asymptotic(c.k, n);
      asymptote = a.value;
      in_regime = a.in_regime;
    }
    sink.add({static_cast<long long>(c.k), static_cast<long long>(n), r.eg, asymptote, in_regime});
    progress("entanglement k=", c.k, " N=", n, " eg=", format_number(r.eg), " ", clock.seconds(), "s");
  }
}

void cmd_optimize(const RunConfig& c, std::ostream& out, const Progress& progress) {
  require_phases(c, 1, 2);
  if (c.format == Format::csv) throw ValidationError("optimize writes a JSON summary only");
  if (!c.n || c.n_range) throw ValidationError("optimize needs a single --n");
  const double tol = c.tol.value_or(1e-7);
  const Stopwatch clock;
  const OptimizationRun run = optimize_probe(c.k, *c.n, tol, c.starts, c.seed);
  progress("optimize k=", c.k, " N=", *c.n, " best=", format_number(run.best_mi), " evaluations=",
           run.iterations, " ", clock.seconds(), "s");

  const BasisCatalog basis(c.k, *c.n);
  Json amplitudes = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    amplitudes.push_back({{"occupation", std::vector<int>(basis[i].begin(), basis[i].end())},
                          {"amplitude", run.best_probe.amplitudes()[i].real()}});
  }
  Json summary = {{"k", c.k},
                  {"N", *c.n},
                  {"tol", tol},
                  {"starts", run.starts},
                  {"seed", run.seed},
                  {"best_mi", run.best_mi},
                  {"product_mi", run.product_mi},
                  {"hb_mi", run.hb_mi},
                  {"iterations", run.iterations},
                  {"converged", run.converged},
                  {"amplitudes", amplitudes}};
  out << summary.dump(2) << '\n';
}

void cmd_density(const RunConfig& c, std::ostream& out, const Progress&) {
  require_phases(c, 1, 2);
  if (!c.n || c.n_range) throw ValidationError("density needs a single --n");
  const ProbeChoice p = single_probe(c, ProbeChoice::hb);
  const ReducedDensity g(make_probe(p, c.k, *c.n));
  const double unit = c.radians ? 2.0 * std::numbers::pi : 1.0;

  std::vector<std::string> columns =
      c.k == 1 ? std::vector<std::string>{"gamma", "g"} : std::vector<std::string>{"gamma1", "gamma2", "g"};
  RowSink sink(columns, format_of(c), out);
  if (!c.at.empty()) {
    if (c.at.size() != static_cast<std::size_t>(c.k)) {
      throw ValidationError("--at needs " + std::to_string(c.k) + " coordinates");
    }
    std::vector<double> turns;
    for (const double a : c.at) turns.push_back(a / unit);
    std::vector<Cell> row(c.at.begin(), c.at.end());
    row.emplace_back(g(std::span<const double>(turns)));
    sink.add(row);
    return;
  }
  const int samples = c.samples > 0 ? c.samples : (c.k == 1 ? 512 : 64);
  for (int i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / samples;
    if (c.k == 1) {
      sink.add({x * unit, g(x)});
      continue;
    }
    for (int j = 0; j < samples; ++j) {
      const double y = static_cast<double>(j) / samples;
      sink.add({x * unit, y * unit, g(x, y)});
    }
  }
}

void cmd_cost(const RunConfig& c, std::ostream& out, const Progress& progress) {
  require_phases(c, 1, 1);
  const ProbeChoice p = single_probe(c, ProbeChoice::hb);
  CostFunction cost = CostFunction::holevo_sine();
  if (c.cost == "surprise") {
    cost = CostFunction::surprise();
  } else if (c.cost != "holevo-sine") {
    throw ValidationError("unknown cost '" + c.cost + "' (holevo-sine or surprise)");
  }
  std::vector<EstimatorMode> modes;
  if (c.mode == "continuous" || c.mode == "both") modes.push_back(EstimatorMode::continuous);
  if (c.mode == "discrete" || c.mode == "both") modes.push_back(EstimatorMode::discrete);
  if (modes.empty()) throw ValidationError("unknown mode '" + c.mode + "'");
  if (cost.kind() == CostKind::surprise && c.mode != "continuous") {
    throw ValidationError(
        "the surprise cost depends on the density itself, so it has no discrete counterpart; "
        "use --mode continuous");
  }
  const double tol = c.tol.value_or(1e-10);
  RowSink sink({"N", "mode", "cost_value"}, format_of(c), out);
  for (const int n : n_values(c)) {
    for (const EstimatorMode mode : modes) {
      const QuadratureResult r = bayes_cost(make_probe(p, 1, n), cost, mode, tol, c.budget);
      sink.add({static_cast<long long>(n), to_string(mode), r.value});
      progress("cost N=", n, " mode=", to_string(mode), " value=", format_number(r.value));
    }
  }
}

}  // namespace

std::vector<int> Range::values() const {
  std::vector<int> out;
  for (int v = first; v <= last; v += step) out.push_back(v);
  return out;
}

Range parse_range(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    const std::string_view piece = text.substr(start, colon == std::string_view::npos ? colon : colon - start);
    int value = 0;
    const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || end != piece.data() + piece.size() || piece.empty()) {
      throw ValidationError("bad range '" + std::string(text) + "': expected first:last[:step]");
    }
    parts.push_back(value);
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw ValidationError("bad range '" + std::string(text) + "': expected first:last[:step]");
  }
  Range r{parts[0], parts[1], parts.size() == 3 ? parts[2] : 1};
  if (r.first < 0) throw ValidationError("range values must be non-negative");
  if (r.step < 1) throw ValidationError("range step must be positive");
  return r;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"scan-mi",      "bounds",   "crossover", "entanglement",
                                                 "optimize",     "density",  "cost"};
  return names;
}

void validate(const RunConfig& c) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) {
    throw ValidationError("unknown command '" + c.command + "'");
  }
  if (c.k < 1) throw ValidationError("--k must be at least 1");
  if (c.n && *c.n < 0) throw ValidationError("--n must be non-negative");
  if (c.n && c.n_range) {
    throw ValidationError("give either --n or --n-range, not both");
  }
  if (c.tol && !(*c.tol > 0.0 && std::isfinite(*c.tol))) {
    throw ValidationError("--tol must be a positive number");
  }
  if (c.starts < 2) throw ValidationError("--starts must be at least 2");
  if (c.samples < 0) throw ValidationError("--samples must be positive");
}

void run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  const Progress progress{log, config.quiet};
  const std::string& cmd = config.command;
  if (cmd == "scan-mi") return cmd_scan_mi(config, out, progress);
  if (cmd == "bounds") return cmd_bounds(config, out, progress);
  if (cmd == "crossover") return cmd_crossover(config, out, progress);
  if (cmd == "entanglement") return cmd_entanglement(config, out, progress);
  if (cmd == "optimize") return cmd_optimize(config, out, progress);
  if (cmd == "density") return cmd_density(config, out, progress);
  return cmd_cost(config, out, progress);
}

int execute(const RunConfig& config, std::ostream& stdout_stream, std::ostream& log) {
  try {
    validate(config);
    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) {
        log << "error: cannot open '" << config.out << "' for writing" << std::endl;
        return kExitFailure;
      }
    }
    std::ostream& out = config.out.empty() ? stdout_stream : file;
    run(config, out, log);
    if (!out) {
      log << "error: writing output failed" << std::endl;
      return kExitFailure;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    log << "error: " << e.what() << "; partial value " << format_number(e.partial().value)
        << " after " << e.partial().evaluations << " evaluations (raise --budget or --tol)"
        << std::endl;
    return kExitBudget;
  } catch (const DomainError& e) {
    log << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const UnsupportedError& e) {
    log << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const CapacityError& e) {
    log << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << std::endl;
    return kExitFailure;
  }
}

}  // namespace multiphase::cli
