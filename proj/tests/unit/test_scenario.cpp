#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modelatom/scenario.hpp"

using namespace modelatom;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "modelatom_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("settings parse and reject") {
    ScenarioConfig cfg;
    apply_setting(cfg, "Lambda", "-2/9");
    CHECK(cfg.Lambda == doctest::Approx(-2.0 / 9.0));
    apply_setting(cfg, "beta-points", " 12 ");
    CHECK(cfg.beta_points == 12);
    apply_setting(cfg, "format", "json");
    CHECK(cfg.format == OutputFormat::json);
    CHECK_THROWS_AS(apply_setting(cfg, "nonsense", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "beta", "abc"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "beta", "1/0"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "route", "fast"), ConfigError);
    CHECK(parse_run_kind("figure2") == RunKind::figure2);
    CHECK_THROWS_AS(parse_run_kind("plot"), ConfigError);
}

TEST_CASE("config file") {
    const auto path = scratch("run.cfg");
    std::ofstream(path) << "# comment\nomega0 = 2.5\n\nLambda=1/10  # trailing\n";
    const auto entries = read_config_file(path);
    CHECK(entries.at("omega0") == "2.5");
    CHECK(entries.at("Lambda") == "1/10");
    std::ofstream(path) << "omega0\n";
    CHECK_THROWS_AS(read_config_file(path), ConfigError);
    CHECK_THROWS_AS(read_config_file(scratch("missing.cfg")), ConfigError);
}

TEST_CASE("admissibility is checked before computing") {
    ScenarioConfig cfg = figure_preset(1);
    cfg.Lambda = 0.3;
    CHECK_THROWS_AS(check_config(cfg), IonizationRegime);
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == exit_ionization);
    CHECK(out.str().empty());
    cfg.Lambda = 0.1;
    cfg.beta_min = -1;
    CHECK(run(cfg, out, err) == exit_config);
    CHECK_THROWS_AS(figure_preset(4), ConfigError);
}

TEST_CASE("grids") {
    const auto g = log_grid(0.25, 10, 256);
    CHECK(g.size() == 256);
    CHECK(g.front() == 0.25);
    CHECK(g.back() == 10);
    CHECK(g[1] / g[0] == doctest::Approx(g[255] / g[254]));
    const auto l = linear_grid(4, 12, 81);
    CHECK(l[10] == doctest::Approx(5.0));
}

TEST_CASE("parallel sweep is deterministic across worker counts") {
    ScenarioConfig cfg = figure_preset(2);
    cfg.beta_points = 40;
    setenv("MODELATOM_WORKERS", "1", 1);
    std::ostringstream a, b, err;
    write_csv(a, cfg, build_table(cfg));
    setenv("MODELATOM_WORKERS", "4", 1);
    write_csv(b, cfg, build_table(cfg));
    unsetenv("MODELATOM_WORKERS");
    CHECK(a.str() == b.str());
}

TEST_CASE("CSV layout") {
    ScenarioConfig cfg;
    cfg.kind = RunKind::modes;
    std::ostringstream out;
    write_csv(out, cfg, build_table(cfg));
    const std::string s = out.str();
    CHECK(s.find("# omega0 = 3\n") != std::string::npos);
    CHECK(s.find("quantity,value\nomega1,3\nomega2,1.5\n") != std::string::npos);
    CHECK(s.find("omega_d,2\n") != std::string::npos);
    CHECK(s.find('\r') == std::string::npos);
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("JSON output") {
    ScenarioConfig cfg = figure_preset(3);
    cfg.v_points = 5;
    std::ostringstream out;
    write_json(out, cfg, build_table(cfg));
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["run"] == "figure3");
    CHECK(doc["columns"] == nlohmann::json({"v", "ratio"}));
    CHECK(doc["rows"].size() == 5);
    CHECK(doc["rows"][0][1].get<double>() > 0.05);
}

TEST_CASE("static and shift tables") {
    ScenarioConfig cfg;
    cfg.kind = RunKind::static_state;
    cfg.k_max = 5;
    Table t = build_table(cfg);
    CHECK(t.rows.size() == 6);
    cfg.density = true;
    cfg.grid_points = 64;
    t = build_table(cfg);
    CHECK(t.columns.size() == 5);
    CHECK(t.rows.size() == 64);

    cfg.kind = RunKind::shift;
    t = build_table(cfg);
    REQUIRE(t.rows.size() == 1);
    CHECK(std::get<double>(t.rows[0][6]) > 0);
}

TEST_CASE("artifacts are written atomically") {
    const auto path = scratch("fig1.csv");
    std::filesystem::remove(path);
    ScenarioConfig cfg = figure_preset(1);
    cfg.beta_points = 8;
    cfg.out = path.string();
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == exit_ok);
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path.string() + ".partial"));
    CHECK(slurp(path).find("beta,exact,hf,ks,natural\n") != std::string::npos);

    const auto bad = scratch("fail.csv");
    std::filesystem::remove(bad);
    cfg.out = bad.string();
    cfg.controls.max_steps = 10;
    cfg.route = ReflectionRoute::ode;
    CHECK(run(cfg, out, err) == exit_integration);
    CHECK_FALSE(std::filesystem::exists(bad));
    CHECK_FALSE(std::filesystem::exists(bad.string() + ".partial"));
}

TEST_CASE("evolve with trajectory export") {
    const auto traj = scratch("traj.csv");
    ScenarioConfig cfg;
    cfg.kind = RunKind::evolve;
    cfg.time_points = 11;
    cfg.trajectory_out = traj.string();
    cfg.trajectory_mode = "2";
    const Table t = build_table(cfg);
    CHECK(t.rows.size() == 11);
    CHECK(slurp(traj).rfind("t,B,Bdot,gamma\n", 0) == 0);
}
