#include "modelatom/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "modelatom/collision.hpp"
#include "modelatom/one_matrix_dynamics.hpp"
#include "modelatom/validation.hpp"

namespace modelatom {

std::string_view to_string(RunKind kind) {
    switch (kind) {
        case RunKind::modes: return "modes";
        case RunKind::static_state: return "static";
        case RunKind::evolve: return "evolve";
        case RunKind::shift: return "shift";
        case RunKind::sweep: return "sweep";
        case RunKind::figure1: return "figure1";
        case RunKind::figure2: return "figure2";
        case RunKind::figure3: return "figure3";
        case RunKind::validate: return "validate";
    }
    return "?";
}

RunKind parse_run_kind(std::string_view name) {
    for (RunKind k : {RunKind::modes, RunKind::static_state, RunKind::evolve, RunKind::shift, RunKind::sweep,
                      RunKind::figure1, RunKind::figure2, RunKind::figure3, RunKind::validate})
        if (to_string(k) == name) return k;
    throw ConfigError("unknown run kind '" + std::string(name) + "'");
}

ScenarioConfig figure_preset(int figure) {
    ScenarioConfig cfg;
    cfg.model = {3.0, 0.375};
    switch (figure) {
        case 1:
            cfg.kind = RunKind::figure1;
            cfg.Lambda = 2.0 / 9.0;
            break;
        case 2:
            cfg.kind = RunKind::figure2;
            cfg.Lambda = -2.0 / 9.0;
            break;
        case 3:
            cfg.kind = RunKind::figure3;
            cfg.Lambda = 2.0 / 9.0;
            break;
        default: throw ConfigError("figure must be 1, 2 or 3, got " + std::to_string(figure));
    }
    cfg.beta_min = 0.25;
    cfg.beta_max = 10.0;
    cfg.beta_points = 256;
    cfg.v_min = 4.0;
    cfg.v_max = 12.0;
    cfg.v_points = 81;
    return cfg;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_plain(std::string_view text, std::string_view key) {
    double v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("cannot parse '" + std::string(text) + "' as a number for '" + std::string(key) + "'");
    return v;
}

// Accepts plain numbers and simple fractions such as "2/9" or "-2/9".
double parse_number(std::string_view text, std::string_view key) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_plain(text, key);
    const double num = parse_plain(text.substr(0, slash), key);
    const double den = parse_plain(text.substr(slash + 1), key);
    if (den == 0.0) throw ConfigError("zero denominator for '" + std::string(key) + "'");
    return num / den;
}

int parse_int(std::string_view text, std::string_view key) {
    int v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("cannot parse '" + std::string(text) + "' as an integer for '" + std::string(key) + "'");
    return v;
}

bool parse_bool(std::string_view text, std::string_view key) {
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw ConfigError("cannot parse '" + std::string(text) + "' as a boolean for '" + std::string(key) + "'");
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty())
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": empty key");
        entries[key] = value;
    }
    return entries;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string value = trim(raw);
    if (key == "omega0") cfg.model.omega0 = parse_number(value, key);
    else if (key == "lambda") cfg.model.lambda = parse_number(value, key);
    else if (key == "Lambda") cfg.Lambda = parse_number(value, key);
    else if (key == "beta") cfg.beta = parse_number(value, key);
    else if (key == "shape") cfg.shape = parse_pulse_shape(value);
    else if (key == "beta-min") cfg.beta_min = parse_number(value, key);
    else if (key == "beta-max") cfg.beta_max = parse_number(value, key);
    else if (key == "beta-points") cfg.beta_points = parse_int(value, key);
    else if (key == "v-min") cfg.v_min = parse_number(value, key);
    else if (key == "v-max") cfg.v_max = parse_number(value, key);
    else if (key == "v-points") cfg.v_points = parse_int(value, key);
    else if (key == "grid-points") cfg.grid_points = parse_int(value, key);
    else if (key == "k-max") cfg.k_max = parse_int(value, key);
    else if (key == "time-points") cfg.time_points = parse_int(value, key);
    else if (key == "density") cfg.density = parse_bool(value, key);
    else if (key == "rtol") cfg.controls.rtol = parse_number(value, key);
    else if (key == "atol") cfg.controls.atol = parse_number(value, key);
    else if (key == "route") {
        if (value == "analytic") cfg.route = ReflectionRoute::analytic;
        else if (value == "ode") cfg.route = ReflectionRoute::ode;
        else throw ConfigError("route must be 'analytic' or 'ode'");
    } else if (key == "trajectory-out") cfg.trajectory_out = value;
    else if (key == "trajectory-mode") {
        if (value != "1" && value != "2" && value != "d")
            throw ConfigError("trajectory-mode must be 1, 2 or d");
        cfg.trajectory_mode = value;
    } else if (key == "out") cfg.out = value;
    else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::csv;
        else if (value == "json") cfg.format = OutputFormat::json;
        else throw ConfigError("format must be 'csv' or 'json'");
    } else {
        throw ConfigError("unknown setting '" + std::string(key) + "'");
    }
}

void check_config(const ScenarioConfig& cfg) {
    const ModeSet modes = derive_modes(cfg.model);
    if (!(cfg.controls.rtol > 0 && cfg.controls.atol > 0))
        throw ConfigError("integrator tolerances must be positive");

    auto check_pulse = [&](double Lambda, double beta) {
        check_admissible(Pulse{Lambda, beta, cfg.shape, cfg.model.omega0, 0.0}, modes);
    };
    switch (cfg.kind) {
        case RunKind::modes:
        case RunKind::validate: break;
        case RunKind::static_state:
            if (cfg.k_max < 0) throw ConfigError("k-max must be nonnegative");
            if (cfg.grid_points < 3) throw ConfigError("grid-points must be at least 3");
            break;
        case RunKind::evolve:
            if (cfg.time_points < 2) throw ConfigError("time-points must be at least 2");
            check_pulse(cfg.Lambda, cfg.beta);
            break;
        case RunKind::shift: check_pulse(cfg.Lambda, cfg.beta); break;
        case RunKind::sweep:
        case RunKind::figure1:
        case RunKind::figure2:
            if (!(cfg.beta_min > 0 && cfg.beta_max > cfg.beta_min) || cfg.beta_points < 2)
                throw ConfigError("beta grid needs 0 < beta-min < beta-max and at least 2 points");
            check_pulse(cfg.Lambda, cfg.beta_min);
            break;
        case RunKind::figure3:
            if (!(cfg.v_min > 0 && cfg.v_max > cfg.v_min) || cfg.v_points < 2)
                throw ConfigError("velocity grid needs 0 < v-min < v-max and at least 2 points");
            check_pulse(std::abs(cfg.Lambda), cfg.v_min);
            break;
    }
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<std::pair<std::string, std::string>> describe(const ScenarioConfig& cfg) {
    const auto n = format_number;
    return {
        {"run", std::string(to_string(cfg.kind))},
        {"omega0", n(cfg.model.omega0)},
        {"lambda", n(cfg.model.lambda)},
        {"Lambda", n(cfg.Lambda)},
        {"beta", n(cfg.beta)},
        {"shape", std::string(to_string(cfg.shape))},
        {"beta-min", n(cfg.beta_min)},
        {"beta-max", n(cfg.beta_max)},
        {"beta-points", std::to_string(cfg.beta_points)},
        {"v-min", n(cfg.v_min)},
        {"v-max", n(cfg.v_max)},
        {"v-points", std::to_string(cfg.v_points)},
        {"grid-points", std::to_string(cfg.grid_points)},
        {"k-max", std::to_string(cfg.k_max)},
        {"time-points", std::to_string(cfg.time_points)},
        {"route", cfg.route == ReflectionRoute::analytic ? "analytic" : "ode"},
        {"rtol", n(cfg.controls.rtol)},
        {"atol", n(cfg.controls.atol)},
    };
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / (n - 1));
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    g.back() = hi;
    return g;
}

unsigned worker_count() {
    if (const char* env = std::getenv("MODELATOM_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

Table modes_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    Table t;
    t.columns = {"quantity", "value"};
    const std::pair<const char*, double> rows[] = {
        {"omega1", m.omega1}, {"omega2", m.omega2}, {"omega_e", m.omega_e}, {"omega_w", m.omega_w},
        {"omega_d", m.omega_d}, {"D", m.D}, {"Z", m.Z}, {"E0", m.E0}, {"C1", m.C1},
    };
    for (auto [name, value] : rows) t.rows.push_back({std::string(name), value});
    return t;
}

Table static_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    Table t;
    const OccupationSpectrum spec = occupation_spectrum(m, cfg.k_max);
    const double orders[] = {0.5, 2.0};
    const Entropies s = entropies(spec, orders);
    t.summary = {
        {"Z", format_number(spec.Z)},
        {"tail_mass", format_number(spec.tail_mass)},
        {"purity", format_number(static_purity(m))},
        {"von_neumann", format_number(s.von_neumann)},
        {"renyi_0.5", format_number(s.renyi[0])},
        {"renyi_2", format_number(s.renyi[1])},
    };
    if (cfg.density) {
        const GridSpec grid = GridSpec::around(m, cfg.grid_points);
        t.columns = {"x", "n_exact", "n_hf", "n_ks", "n_natural"};
        for (double x : grid.points()) {
            const double e = gaussian_orbital(m.omega_e, x);
            const double d = gaussian_orbital(m.omega_d, x);
            const double w = gaussian_orbital(m.omega_w, x);
            t.rows.push_back({x, gamma1_static(m, x, x), e * e, d * d, w * w});
        }
    } else {
        t.columns = {"k", "occupation"};
        for (int k = 0; k <= cfg.k_max; ++k)
            t.rows.push_back({double(k), spec.weights[static_cast<std::size_t>(k)]});
    }
    return t;
}

void write_atomically(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    const std::string tmp = path + ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::ios_base::failure("cannot open '" + tmp + "' for writing");
        try {
            writer(f);
            f.flush();
            if (!f) throw std::ios_base::failure("write to '" + tmp + "' failed");
        } catch (...) {
            f.close();
            std::filesystem::remove(tmp);
            throw;
        }
    }
    std::filesystem::rename(tmp, path);
}

Table evolve_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    const Pulse pulse{cfg.Lambda, cfg.beta, cfg.shape, cfg.model.omega0, 0.0};
    const OneMatrixSeries series(m, pulse, cfg.controls);

    const double h = series.stencil_step();
    const auto times = linear_grid(series.t_start() + 3 * h, series.t_end() - 3 * h, cfg.time_points);

    Table t;
    t.columns = {"t", "omega_d_t", "D_t", "alpha_t", "Z_t", "purity_t", "B1", "Bdot1", "B2", "Bdot2",
                 "berry_1", "berry_2", "energy_ks"};
    t.rows.resize(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
        const double tt = times[i];
        const OneMatrixSnapshot s = series.snapshot(tt);
        t.rows[i] = {tt, s.omega_d_t, s.D_t, s.alpha_t, s.Z_t, s.purity(), s.B1, s.Bdot1, s.B2, s.Bdot2,
                     berry_connection(series.mode1(), tt), berry_connection(series.mode2(), tt),
                     energy_expectation_ks(series, tt)};
    });

    const ReflectionResult r1 = extract_reflection(series.mode1());
    const ReflectionResult r2 = extract_reflection(series.mode2());
    const double total = energy_shift(m.omega1, r1.R) + energy_shift(m.omega2, r2.R);
    t.summary = {
        {"R_omega1", format_number(r1.R)},
        {"R_omega2", format_number(r2.R)},
        {"exact_total_energy", format_number(m.E0 + total)},
    };

    if (!cfg.trajectory_out.empty()) {
        const Trajectory& traj = cfg.trajectory_mode == "2"   ? series.mode2()
                                 : cfg.trajectory_mode == "d" ? series.ks_mode()
                                                              : series.mode1();
        write_atomically(cfg.trajectory_out, [&](std::ostream& o) { traj.write_csv(o); });
    }
    return t;
}

Table shift_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    const Pulse pulse{cfg.Lambda, cfg.beta, cfg.shape, cfg.model.omega0, 0.0};
    const EnergyShiftReport r = energy_shift_report(m, pulse, cfg.route, cfg.controls);
    const double R1 = mode_reflection(m.omega1, pulse, cfg.route, cfg.controls);
    const double R2 = mode_reflection(m.omega2, pulse, cfg.route, cfg.controls);
    const SuddenShift s1 = sudden_shift(m.omega1, pulse);
    const SuddenShift s2 = sudden_shift(m.omega2, pulse);

    Table t;
    t.columns = {"beta", "Lambda", "R_omega1", "R_omega2", "shift_omega1", "shift_omega2", "exact", "hf", "ks",
                 "natural", "born_exact", "sudden_exact", "sudden_valid", "overlap_exact", "overlap_ks",
                 "abrupt_R_omega1", "abrupt_R_omega2"};
    t.rows.push_back({cfg.beta, cfg.Lambda, R1, R2, r.shift_omega1, r.shift_omega2, r.exact, r.hf, r.ks,
                      r.natural, born_shift(m.omega1, pulse) + born_shift(m.omega2, pulse), s1.value + s2.value,
                      double(s1.valid && s2.valid), mode_overlap(R1) * mode_overlap(R2),
                      overlap(m, pulse, OverlapKind::ks, cfg.route, cfg.controls),
                      abrupt_reflection(m.omega1, cfg.Lambda, cfg.model.omega0),
                      abrupt_reflection(m.omega2, cfg.Lambda, cfg.model.omega0)});
    return t;
}

Table sweep_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    const auto betas = log_grid(cfg.beta_min, cfg.beta_max, cfg.beta_points);
    Table t;
    t.columns = {"beta", "exact", "hf", "ks", "natural"};
    t.rows.resize(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
        const Pulse pulse{cfg.Lambda, betas[i], cfg.shape, cfg.model.omega0, 0.0};
        const EnergyShiftReport r = energy_shift_report(m, pulse, cfg.route, cfg.controls);
        t.rows[i] = {betas[i], r.exact, r.hf, r.ks, r.natural};
    });
    return t;
}

Table figure3_table(const ScenarioConfig& cfg) {
    const ModeSet m = derive_modes(cfg.model);
    const auto vs = linear_grid(cfg.v_min, cfg.v_max, cfg.v_points);
    Table t;
    t.columns = {"v", "ratio"};
    t.rows.resize(vs.size());
    parallel_for(vs.size(), [&](std::size_t i) {
        const double v = vs[i];
        const auto row = sign_effect_ratio(m, std::abs(cfg.Lambda), std::span<const double>(&v, 1));
        t.rows[i] = {row[0].v, row[0].ratio};
    });
    return t;
}

Table validate_table(const ScenarioConfig& cfg) {
    Table t;
    t.columns = {"check", "status", "value", "threshold", "detail"};
    for (const CheckResult& c : run_invariant_suite(cfg.controls)) {
        t.rows.push_back({c.name, std::string(c.passed ? "PASS" : "FAIL"), c.value, c.threshold, c.detail});
        t.ok = t.ok && c.passed;
    }
    return t;
}

std::string csv_cell(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return format_number(*d);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

Table build_table(const ScenarioConfig& cfg) {
    check_config(cfg);
    switch (cfg.kind) {
        case RunKind::modes: return modes_table(cfg);
        case RunKind::static_state: return static_table(cfg);
        case RunKind::evolve: return evolve_table(cfg);
        case RunKind::shift: return shift_table(cfg);
        case RunKind::sweep:
        case RunKind::figure1:
        case RunKind::figure2: return sweep_table(cfg);
        case RunKind::figure3: return figure3_table(cfg);
        case RunKind::validate: return validate_table(cfg);
    }
    throw ConfigError("unhandled run kind");
}

void write_csv(std::ostream& out, const ScenarioConfig& cfg, const Table& table) {
    out << "# modelatom " << to_string(cfg.kind) << '\n';
    for (const auto& [k, v] : describe(cfg)) out << "# " << k << " = " << v << '\n';
    for (const auto& [k, v] : table.summary) out << "# summary " << k << " = " << v << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const ScenarioConfig& cfg, const Table& table) {
    nlohmann::ordered_json doc;
    doc["run"] = std::string(to_string(cfg.kind));
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : describe(cfg)) config[k] = v;
    doc["config"] = config;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.summary) summary[k] = v;
    doc["summary"] = summary;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell& c : row) std::visit([&](const auto& v) { r.push_back(v); }, c);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

namespace {

void print_checks(std::ostream& out, const Table& table) {
    std::size_t width = 5;
    for (const auto& row : table.rows) width = std::max(width, std::get<std::string>(row[0]).size());
    for (const auto& row : table.rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << std::get<std::string>(row[0])
            << std::get<std::string>(row[1]) << "  value=" << format_number(std::get<double>(row[2]))
            << "  threshold=" << format_number(std::get<double>(row[3]));
        if (const auto& d = std::get<std::string>(row[4]); !d.empty()) out << "  " << d;
        out << '\n';
    }
    out << (table.ok ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace

int run(const ScenarioConfig& cfg, std::ostream& stdout_stream, std::ostream& diagnostics) {
    try {
        const Table table = build_table(cfg);
        auto emit = [&](std::ostream& o) {
            if (cfg.format == OutputFormat::json) write_json(o, cfg, table);
            else write_csv(o, cfg, table);
        };
        if (cfg.kind == RunKind::validate) print_checks(stdout_stream, table);
        if (!cfg.out.empty() && cfg.out != "-") write_atomically(cfg.out, emit);
        else if (cfg.kind != RunKind::validate) emit(stdout_stream);
        return table.ok ? exit_ok : exit_check_failed;
    } catch (const IonizationRegime& e) {
        diagnostics << "error: " << e.what() << '\n';
        return exit_ionization;
    } catch (const IntegrationFailure& e) {
        diagnostics << "error: integration failed: " << e.what() << '\n';
        return exit_integration;
    } catch (const Error& e) {
        diagnostics << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << '\n';
        return exit_io;
    }
}

}  // namespace modelatom
