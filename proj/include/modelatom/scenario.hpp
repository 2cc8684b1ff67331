#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "modelatom/error.hpp"
#include "modelatom/model_core.hpp"
#include "modelatom/observables.hpp"
#include "modelatom/pulse.hpp"
#include "modelatom/trajectory.hpp"

namespace modelatom {

class ConfigError : public Error {
public:
    using Error::Error;
};

enum class RunKind { modes, static_state, evolve, shift, sweep, figure1, figure2, figure3, validate };
enum class OutputFormat { csv, json };

std::string_view to_string(RunKind kind);
RunKind parse_run_kind(std::string_view name);

struct ScenarioConfig {
    RunKind kind = RunKind::modes;
    ModelParams model;
    double Lambda = 2.0 / 9.0;
    double beta = 3.0;
    PulseShape shape = PulseShape::sech2;
    double beta_min = 0.25;
    double beta_max = 10.0;
    int beta_points = 256;
    double v_min = 4.0;
    double v_max = 12.0;
    int v_points = 81;
    int grid_points = 512;
    int k_max = 40;
    int time_points = 401;
    bool density = false;          ///< static: emit densities on the grid instead of the spectrum
    ReflectionRoute route = ReflectionRoute::analytic;
    IntegrationControls controls;
    std::string trajectory_out;    ///< evolve: optional raw trajectory export
    std::string trajectory_mode = "1";
    std::string out;               ///< empty or "-" writes to the given stream
    OutputFormat format = OutputFormat::csv;
};

/// Figure presets: 1 and 2 sweep β at Λ = ±2/9, 3 sweeps v = β.
ScenarioConfig figure_preset(int figure);

/// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Applies one setting using the CLI flag names without leading dashes.
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Admissibility of every parameter the run will touch, before computing.
void check_config(const ScenarioConfig& cfg);

/// Config echo written into every artifact header.
std::vector<std::pair<std::string, std::string>> describe(const ScenarioConfig& cfg);

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
    bool ok = true; ///< false when a validation check failed
};

/// Computes the table for a scenario. Sweep points are spread over a worker
/// pool (MODELATOM_WORKERS, default hardware concurrency) and reassembled in
/// grid order.
Table build_table(const ScenarioConfig& cfg);

/// 17 significant digits, '\n' endings, comment header then the column row.
void write_csv(std::ostream& out, const ScenarioConfig& cfg, const Table& table);
void write_json(std::ostream& out, const ScenarioConfig& cfg, const Table& table);

std::string format_number(double value);

/// Log-spaced grid of n points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

/// Worker count from MODELATOM_WORKERS.
unsigned worker_count();

/// Runs f(i) for i in [0, n) on the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

/// Exit codes of run().
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_config = 2,
    exit_ionization = 3,
    exit_integration = 4,
    exit_io = 5,
};

/// Executes a scenario. Artifacts are written to a temporary file and renamed
/// on success, so a failed run leaves nothing behind.
int run(const ScenarioConfig& cfg, std::ostream& stdout_stream, std::ostream& diagnostics);

}  // namespace modelatom
