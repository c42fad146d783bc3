#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbnlab/channels.hpp"
#include "rbnlab/correlations.hpp"
#include "rbnlab/io.hpp"
#include "rbnlab/parallel.hpp"
#include "rbnlab/rng.hpp"
#include "rbnlab/security.hpp"
#include "rbnlab/states.hpp"
#include "rbnlab/thermal.hpp"
#include "rbnlab/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rbnlab;

Cell num(double x) {
  if (std::isnan(x)) return Cell{};
  return Cell{x};
}

Cell txt(std::string s) { return Cell{std::move(s)}; }

Cell blank() { return Cell{}; }

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> xs(steps);
  if (steps == 1) {
    xs[0] = lo;
    return xs;
  }
  for (int i = 0; i < steps; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  return xs;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" +
                                  tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) {
    throw std::invalid_argument(std::string(what) + " list is empty");
  }
  return out;
}

OptimizerConfig optimizer_from_params(const ordered_json& p) {
  OptimizerConfig cfg;
  cfg.coarse_grid_per_angle = p.at("grid").get<int>();
  cfg.restarts = p.at("restarts").get<int>();
  cfg.refine_tolerance = p.at("tol").get<double>();
  cfg.max_evals = p.at("max_evals").get<int>();
  cfg.seed = p.at("seed").get<std::uint64_t>();
  return cfg;
}

struct Emitted {
  std::string out;
  OutputFormat format;
};

Emitted emit(const Table& table, const ordered_json& params) {
  const std::string out = params.at("out").get<std::string>();
  const OutputFormat format = parse_format(params.at("format").get<std::string>());
  write_table(table, out, format);
  return {out, format};
}

void finish(const std::string& command, const ordered_json& params,
            const std::string& output,
            std::chrono::steady_clock::time_point start) {
  RunManifest manifest;
  manifest.command = command;
  manifest.params = params;
  manifest.seed = params.contains("seed") ? params.at("seed").get<std::uint64_t>() : 0;
  manifest.rng = kRngId;
  manifest.version = kVersion;
  manifest.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  manifest.output = output;
  write_manifest(manifest);
}

int run_state_rbn(const ordered_json& params) {
  const auto start = std::chrono::steady_clock::now();
  const DensityMatrix rho = load_state_json(params.at("input").get<std::string>());
  const OptimizerResult result = rbn(rho, optimizer_from_params(params));

  std::cout << "state: " << params.at("input").get<std::string>() << " (dims "
            << rho.dim_a() << "x" << rho.dim_b() << ")\n"
            << "rbn: " << format_double(result.value) << "\n"
            << "angles_a: theta=" << format_double(result.angles_a.theta)
            << " phi=" << format_double(result.angles_a.phi) << "\n"
            << "angles_b: theta=" << format_double(result.angles_b.theta)
            << " phi=" << format_double(result.angles_b.phi) << "\n"
            << "evaluations: " << result.evaluations << "\n"
            << "converged: " << (result.converged ? "true" : "false") << "\n";

  if (!params.at("out").is_null()) {
    Table table;
    table.columns = {"value",  "theta_a",     "phi_a",    "theta_b",
                     "phi_b",  "evaluations", "converged"};
    table.add_row({num(result.value), num(result.angles_a.theta),
                   num(result.angles_a.phi), num(result.angles_b.theta),
                   num(result.angles_b.phi),
                   num(static_cast<double>(result.evaluations)),
                   txt(result.converged ? "true" : "false")});
    const Emitted e = emit(table, params);
    finish("state-rbn", params, e.out, start);
  }
  return 0;
}

int run_werner_sweep(const ordered_json& params) {
  const auto start = std::chrono::steady_clock::now();
  const int mu_steps = params.at("mu_steps").get<int>();
  if (mu_steps < 2) {
    throw std::invalid_argument("--mu-steps must be >= 2");
  }
  const std::string channel_str = params.at("channel").get<std::string>();
  std::optional<ChannelKind> kind;
  if (channel_str != "none") {
    kind = parse_channel_name(channel_str);
    if (!kind) {
      throw std::invalid_argument("unknown channel '" + channel_str + "'");
    }
  }
  const bool fixed_p = !params.at("p").is_null();
  const double p = fixed_p ? params.at("p").get<double>() : 0.0;
  const double gamma = params.at("gamma").is_null()
                           ? std::numeric_limits<double>::quiet_NaN()
                           : params.at("gamma").get<double>();
  const long samples = params.at("samples").get<long>();
  if (samples > 0 && !kind) {
    throw std::invalid_argument("--samples requires --channel");
  }
  if (fixed_p && !kind) {
    throw std::invalid_argument("--p requires --channel");
  }
  const OptimizerConfig cfg = optimizer_from_params(params);
  const std::uint64_t seed = params.at("seed").get<std::uint64_t>();

  Table table;
  table.columns = {"kind",        "mu",      "rbn_analytic", "rbn_numeric",
                   "concurrence", "separable", "channel",    "p",
                   "gamma",       "rbn_noisy"};

  const std::vector<double> mus = linspace(0.0, 1.0, mu_steps);
  std::vector<std::vector<Cell>> curve_rows(mus.size());
  parallel_for(static_cast<std::int64_t>(mus.size()), [&](std::int64_t i) {
    const double mu = mus[static_cast<std::size_t>(i)];
    const DensityMatrix rho = werner(mu);
    const double analytic = werner_rbn_closed_form(mu);
    const double numeric = rbn(rho, cfg).value;
    const double conc = concurrence(rho);
    std::vector<Cell> row = {txt("curve"),  num(mu),
                             num(analytic), num(numeric),
                             num(conc),     num(conc == 0.0 ? 1.0 : 0.0),
                             blank(),       blank(),
                             blank(),       blank()};
    if (kind && fixed_p) {
      const double noisy =
          rbn(apply_local(make_channel(*kind, p, gamma), rho), cfg).value;
      row[6] = txt(channel_str);
      row[7] = num(p);
      row[8] = num(gamma);
      row[9] = num(noisy);
    }
    curve_rows[static_cast<std::size_t>(i)] = std::move(row);
  });
  for (auto& row : curve_rows) table.add_row(std::move(row));

  if (samples > 0) {
    std::vector<std::vector<Cell>> scatter_rows(samples);
    parallel_for(samples, [&](std::int64_t k) {
      SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(k));
      const double mu = rng.next_double();
      const double ps = rng.next_double();
      const double gs = *kind == ChannelKind::AmplitudeDamping
                            ? rng.next_double()
                            : std::numeric_limits<double>::quiet_NaN();
      const double noisy =
          rbn(apply_local(make_channel(*kind, ps, gs), werner(mu)), cfg).value;
      scatter_rows[static_cast<std::size_t>(k)] = {
          txt("scatter"), num(mu),  num(werner_rbn_closed_form(mu)),
          blank(),        blank(),  blank(),
          txt(channel_str), num(ps), num(gs),
          num(noisy)};
    });
    for (auto& row : scatter_rows) table.add_row(std::move(row));
  }

  const Emitted e = emit(table, params);
  finish("werner-sweep", params, e.out, start);
  return 0;
}

int run_security(const ordered_json& params) {
  const auto start = std::chrono::steady_clock::now();
  const std::string scenario_str = params.at("scenario").get<std::string>();
  ProtocolConfig cfg;
  if (scenario_str == "ideal") {
    cfg.scenario = Scenario::Ideal;
  } else if (scenario_str == "eve-random") {
    cfg.scenario = Scenario::EveRandom;
  } else if (scenario_str == "eve-aligned") {
    cfg.scenario = Scenario::EveAligned;
  } else {
    throw std::invalid_argument("unknown scenario '" + scenario_str + "'");
  }
  cfg.samples = params.at("samples").get<long>();
  cfg.mu_min = params.at("mu_min").get<double>();
  cfg.mu_max = params.at("mu_max").get<double>();
  cfg.seed = params.at("seed").get<std::uint64_t>();

  const std::vector<ProtocolRecord> records = simulate_protocol(cfg);

  Table table;
  table.columns = {"mu",      "theta_a", "phi_a",     "theta_b",
                   "phi_b",   "theta_e", "phi_e",     "eta",
                   "kind",    "axis_mode", "rbn_werner_analytic",
                   "rbn_eve_analytic"};
  for (const ProtocolRecord& rec : records) {
    table.add_row({num(rec.mu), num(rec.alice.theta), num(rec.alice.phi),
                   num(rec.bob.theta), num(rec.bob.phi),
                   rec.eve ? num(rec.eve->theta) : blank(),
                   rec.eve ? num(rec.eve->phi) : blank(), num(rec.eta_value),
                   txt("record"),
                   txt(rec.axis_mode == AxisMode::Pauli ? "pauli" : "continuous"),
                   blank(), blank()});
  }
  for (const double mu : linspace(0.0, 1.0, 201)) {
    table.add_row({num(mu), blank(), blank(), blank(), blank(), blank(),
                   blank(), blank(), txt("envelope"), blank(),
                   num(werner_rbn_closed_form(mu)),
                   num(rbn_after_eve_analytic(mu))});
  }

  const Emitted e = emit(table, params);
  finish("security", params, e.out, start);
  return 0;
}

int run_thermal(const ordered_json& params) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> energies =
      parse_double_list(params.at("E").get<std::string>(), "--E");
  const double kt_min = params.at("kt_min").get<double>();
  const double kt_max = params.at("kt_max").get<double>();
  const int steps = params.at("steps").get<int>();
  if (!(kt_min > 0.0) || kt_max < kt_min || steps < 1) {
    throw std::invalid_argument("need 0 < kt-min <= kt-max and --steps >= 1");
  }
  const std::vector<double> kt_grid = linspace(kt_min, kt_max, steps);
  const OptimizerConfig cfg = optimizer_from_params(params);
  const std::string channel_str = params.at("channel").get<std::string>();

  Table table;
  table.columns = {"E",    "kT",      "q", "rbn",   "eta_xx", "eta_zz",
                   "gd",   "channel", "p", "gamma", "rbn_noisy"};

  if (channel_str == "none") {
    for (const ThermalRow& row : thermal_sweep(energies, kt_grid, cfg)) {
      table.add_row({num(row.energy), num(row.k_t), num(row.q), num(row.rbn),
                     num(row.eta_xx), num(row.eta_zz), num(row.gd), blank(),
                     blank(), blank(), blank()});
    }
  } else {
    const std::optional<ChannelKind> kind = parse_channel_name(channel_str);
    if (!kind) {
      throw std::invalid_argument("unknown channel '" + channel_str + "'");
    }
    if (params.at("p").is_null()) {
      throw std::invalid_argument("--channel requires --p");
    }
    const std::vector<double> p_list =
        parse_double_list(params.at("p").get<std::string>(), "--p");
    std::vector<std::pair<double, double>> points;
    if (*kind == ChannelKind::AmplitudeDamping) {
      if (params.at("gamma").is_null()) {
        throw std::invalid_argument("AD channel requires --gamma");
      }
      const std::vector<double> g_list =
          parse_double_list(params.at("gamma").get<std::string>(), "--gamma");
      for (const double p : p_list) {
        for (const double g : g_list) points.emplace_back(p, g);
      }
    } else {
      for (const double p : p_list) {
        points.emplace_back(p, std::numeric_limits<double>::quiet_NaN());
      }
    }
    for (const double energy : energies) {
      for (const ThermalNoiseRow& row :
           thermal_noise_sweep(energy, kt_grid, *kind, points, cfg)) {
        table.add_row({num(row.base.energy), num(row.base.k_t),
                       num(row.base.q), num(row.base.rbn), num(row.base.eta_xx),
                       num(row.base.eta_zz), num(row.base.gd),
                       txt(row.channel), num(row.p), num(row.gamma),
                       num(row.rbn_noisy)});
      }
    }
  }

  const Emitted e = emit(table, params);
  finish("thermal", params, e.out, start);
  return 0;
}

int dispatch(const std::string& command, ordered_json params) {
  if (command == "state-rbn") return run_state_rbn(params);
  if (command == "werner-sweep") return run_werner_sweep(params);
  if (command == "security") return run_security(params);
  if (command == "thermal") return run_thermal(params);
  throw ParseError("manifest names unknown command '" + command + "'");
}

int run_rerun(const std::string& manifest_file,
              const std::optional<std::string>& out_override) {
  const RunManifest manifest = load_manifest(manifest_file);
  ordered_json params = manifest.params;
  if (out_override) {
    params["out"] = *out_override;
  }
  return dispatch(manifest.command, std::move(params));
}

void add_optimizer_flags(CLI::App* cmd, int& grid, int& restarts, double& tol,
                         int& max_evals, std::uint64_t& seed) {
  cmd->add_option("--grid", grid, "coarse grid points per angle");
  cmd->add_option("--restarts", restarts, "refinement starts");
  cmd->add_option("--tol", tol, "refinement tolerance on the objective");
  cmd->add_option("--max-evals", max_evals, "refinement evaluation budget");
  cmd->add_option("--seed", seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realism-based nonlocality toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  auto guarded = [&exit_code](auto&& fn) {
    try {
      exit_code = fn();
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 2;
    } catch (const InvalidStateError& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 3;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 4;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  };

  {
    auto* cmd = app.add_subcommand("state-rbn",
                                   "maximize eta over contexts for a state file");
    auto input = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    auto grid = std::make_shared<int>(12);
    auto restarts = std::make_shared<int>(32);
    auto tol_v = std::make_shared<double>(1e-9);
    auto max_evals = std::make_shared<int>(20000);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("input", *input, "state JSON file")->required();
    cmd->add_option("--out", *out, "optional result table path");
    cmd->add_option("--format", *format, "csv|json");
    add_optimizer_flags(cmd, *grid, *restarts, *tol_v, *max_evals, *seed);
    cmd->callback([=, &guarded] {
      ordered_json params;
      params["input"] = *input;
      params["grid"] = *grid;
      params["restarts"] = *restarts;
      params["tol"] = *tol_v;
      params["max_evals"] = *max_evals;
      params["seed"] = *seed;
      params["out"] = out->empty() ? ordered_json(nullptr) : ordered_json(*out);
      params["format"] = *format;
      guarded([&] { return run_state_rbn(params); });
    });
  }

  {
    auto* cmd = app.add_subcommand("werner-sweep",
                                   "analytic/numeric curves and noisy scatter");
    auto mu_steps = std::make_shared<int>(101);
    auto channel = std::make_shared<std::string>("none");
    auto p = std::make_shared<double>();
    auto gamma = std::make_shared<double>();
    auto samples = std::make_shared<long>(0);
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    auto grid = std::make_shared<int>(12);
    auto restarts = std::make_shared<int>(32);
    auto tol_v = std::make_shared<double>(1e-9);
    auto max_evals = std::make_shared<int>(20000);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("--mu-steps", *mu_steps, "points on the mu grid");
    cmd->add_option("--channel", *channel, "none|IB|IF|IBF|DP|AD");
    auto* p_opt = cmd->add_option("--p", *p, "fixed channel strength");
    auto* g_opt = cmd->add_option("--gamma", *gamma, "fixed damping strength (AD)");
    cmd->add_option("--samples", *samples, "random (mu,p,gamma) scatter count");
    cmd->add_option("--out", *out, "output path")->required();
    cmd->add_option("--format", *format, "csv|json");
    add_optimizer_flags(cmd, *grid, *restarts, *tol_v, *max_evals, *seed);
    cmd->callback([=, &guarded] {
      ordered_json params;
      params["mu_steps"] = *mu_steps;
      params["channel"] = *channel;
      params["p"] = p_opt->count() ? ordered_json(*p) : ordered_json(nullptr);
      params["gamma"] =
          g_opt->count() ? ordered_json(*gamma) : ordered_json(nullptr);
      params["samples"] = *samples;
      params["grid"] = *grid;
      params["restarts"] = *restarts;
      params["tol"] = *tol_v;
      params["max_evals"] = *max_evals;
      params["seed"] = *seed;
      params["out"] = *out;
      params["format"] = *format;
      guarded([&] { return run_werner_sweep(params); });
    });
  }

  {
    auto* cmd = app.add_subcommand("security", "Alice/Bob/Eve protocol records");
    auto scenario = std::make_shared<std::string>("ideal");
    auto samples = std::make_shared<long>(100000);
    auto mu_min = std::make_shared<double>(0.0);
    auto mu_max = std::make_shared<double>(1.0);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--scenario", *scenario, "ideal|eve-random|eve-aligned");
    cmd->add_option("--samples", *samples, "protocol rounds");
    cmd->add_option("--mu-min", *mu_min, "lower mu bound");
    cmd->add_option("--mu-max", *mu_max, "upper mu bound");
    cmd->add_option("--seed", *seed, "RNG seed");
    cmd->add_option("--out", *out, "output path")->required();
    cmd->add_option("--format", *format, "csv|json");
    cmd->callback([=, &guarded] {
      ordered_json params;
      params["scenario"] = *scenario;
      params["samples"] = *samples;
      params["mu_min"] = *mu_min;
      params["mu_max"] = *mu_max;
      params["seed"] = *seed;
      params["out"] = *out;
      params["format"] = *format;
      guarded([&] { return run_security(params); });
    });
  }

  {
    auto* cmd = app.add_subcommand("thermal", "thermal-state sweeps");
    auto energies = std::make_shared<std::string>("1,2,3");
    auto kt_min = std::make_shared<double>(0.1);
    auto kt_max = std::make_shared<double>(20.0);
    auto steps = std::make_shared<int>(40);
    auto channel = std::make_shared<std::string>("none");
    auto p = std::make_shared<std::string>();
    auto gamma = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    auto grid = std::make_shared<int>(12);
    auto restarts = std::make_shared<int>(32);
    auto tol_v = std::make_shared<double>(1e-9);
    auto max_evals = std::make_shared<int>(20000);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("--E", *energies, "comma list of level gaps");
    cmd->add_option("--kt-min", *kt_min, "lowest kT");
    cmd->add_option("--kt-max", *kt_max, "highest kT");
    cmd->add_option("--steps", *steps, "kT grid points");
    cmd->add_option("--channel", *channel, "none|IB|IF|IBF|DP|AD");
    auto* p_opt = cmd->add_option("--p", *p, "comma list of channel strengths");
    auto* g_opt =
        cmd->add_option("--gamma", *gamma, "comma list of damping strengths (AD)");
    cmd->add_option("--out", *out, "output path")->required();
    cmd->add_option("--format", *format, "csv|json");
    add_optimizer_flags(cmd, *grid, *restarts, *tol_v, *max_evals, *seed);
    cmd->callback([=, &guarded] {
      ordered_json params;
      params["E"] = *energies;
      params["kt_min"] = *kt_min;
      params["kt_max"] = *kt_max;
      params["steps"] = *steps;
      params["channel"] = *channel;
      params["p"] = p_opt->count() ? ordered_json(*p) : ordered_json(nullptr);
      params["gamma"] =
          g_opt->count() ? ordered_json(*gamma) : ordered_json(nullptr);
      params["grid"] = *grid;
      params["restarts"] = *restarts;
      params["tol"] = *tol_v;
      params["max_evals"] = *max_evals;
      params["seed"] = *seed;
      params["out"] = *out;
      params["format"] = *format;
      guarded([&] { return run_thermal(params); });
    });
  }

  {
    auto* cmd = app.add_subcommand("rerun", "replay a run from its manifest");
    auto manifest = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto* out_opt = cmd->add_option("--out", *out, "override output path");
    cmd->add_option("--manifest", *manifest, "manifest file")->required();
    cmd->callback([=, &guarded] {
      guarded([&] {
        return run_rerun(*manifest, out_opt->count()
                                        ? std::optional<std::string>(*out)
                                        : std::nullopt);
      });
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }
  return exit_code;
}
