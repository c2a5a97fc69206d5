// SPDX-License-Identifier: Apache-2.0

#include "fairhp/config.hpp"
#include "fairhp/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace fairhp;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("fairhp_" + name);
    std::ofstream(p) << content;
    return p;
}

std::string field_of(const json& j) {
    try {
        config_from_json(j);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<accepted>";
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("empty file gives the reference scenario") {
    const SystemConfig cfg = load_config(temp_file("empty.json", "  \n"));
    CHECK(cfg == SystemConfig{});
    CHECK(cfg.array.antenna_count() == 256);
    REQUIRE(cfg.groups.size() == 2);
    CHECK(cfg.groups[0].mean_aaod_deg == 25.0);
    CHECK(cfg.groups[1].mean_aaod_deg == 205.0);
    CHECK(cfg.groups[1].mean_eaod_deg == 50.0);
    CHECK(cfg.n_rf_per_group == std::vector<std::size_t>{8, 8});
    CHECK(cfg.n_paths == 20);
    CHECK(cfg.pathloss_exponent == 3.76);
    CHECK(cfg.noise_psd_dbm_hz == -174.0);
    CHECK(cfg.bandwidth_hz == 120e3);
    CHECK(cfg.n_realizations == 5000);
    CHECK(cfg.optimizer.n_agents == 100);
    CHECK(cfg.optimizer.iterations == 10);
    CHECK(load_config(temp_file("obj.json", "{}")) == cfg);
}

TEST_CASE("save then load is the identity") {
    SystemConfig cfg;
    cfg.groups = default_groups(3, 2);
    cfg.n_rf_per_group = {2, 3, 4};
    cfg.p_t_dbm = {0.0, 12.5, 40.0};
    cfg.fairness = {FairnessSpec::alpha_fair(0.0), FairnessSpec::alpha_fair(2.5), FairnessSpec::max_min()};
    cfg.algorithms = {Algorithm::fa, Algorithm::gwo};
    cfg.optimizer.hyper.cs.kappa1 = 0.3;
    cfg.pathloss_convention = PathlossConvention::power;
    cfg.master_seed = 18446744073709551557ull;
    cfg.geometry.min_horizontal_m = 0.1 + 0.2;
    const auto p = std::filesystem::temp_directory_path() / "fairhp_roundtrip.json";
    save_config(cfg, p);
    CHECK(load_config(p) == cfg);
}

TEST_CASE("shorthand keys") {
    const SystemConfig cfg = config_from_json(
        json{{"n_groups", 3}, {"ues_per_group", 1}, {"n_rf_per_group", 2}, {"p_t_dbm", 10}, {"fairness", "maxmin"}});
    CHECK(cfg.groups.size() == 3);
    CHECK(cfg.groups[2].mean_aaod_deg == doctest::Approx(265.0));
    CHECK(cfg.ue_count() == 3);
    CHECK(cfg.rf_chain_count() == 6);
    CHECK(cfg.p_t_dbm == std::vector<double>{10.0});
    CHECK(cfg.fairness == std::vector<FairnessSpec>{FairnessSpec::max_min()});
}

TEST_CASE("validation names the offending field") {
    CHECK(field_of(json{{"n_rf_per_group", 4}}) == "n_rf_per_group"); // 10 UEs > 8 chains
    CHECK(field_of(json{{"array", {{"m_x", 2}, {"m_y", 2}}}, {"ues_per_group", 1}}) == "n_rf_per_group");
    CHECK(field_of(json{{"groups", {{{"ue_count", 0}}}}, {"n_rf_per_group", 1}}) == "groups[0].ue_count");
    CHECK(field_of(json{{"bandwidth_hz", -1}}) == "bandwidth_hz");
    CHECK(field_of(json{{"fairness", {0, -2}}}) == "fairness[1]");
    CHECK(field_of(json{{"algorithms", {"pso", "xyz"}}}) == "algorithms[1]");
    CHECK(field_of(json{{"algorithms", {"pso", "pso"}}}) == "algorithms[1]");
    CHECK(field_of(json{{"optimizer", {{"aco", {{"kappa1", 1}}}}}}) == "optimizer.aco.kappa1");
    CHECK(field_of(json{{"optimizer", {{"n_agents", 3}}}, {"algorithms", {"fa"}}}) == "optimizer.n_agents");
    CHECK(field_of(json{{"optimizer", {{"speed", 3}}}}) == "optimizer.speed");
    CHECK(field_of(json{{"n_realizations", 0}}) == "n_realizations");
    CHECK(field_of(json{{"n_paths", "many"}}) == "n_paths");
    CHECK(field_of(json{{"pathloss_convention", "db"}}) == "pathloss_convention");
    CHECK(field_of(json{{"geometry", {{"min_horizontal_m", 50}, {"max_horizontal_m", 20}}}}) ==
          "geometry.max_horizontal_m");
    CHECK(field_of(json{{"groups", json::array()}}) == "groups");
    CHECK(field_of(json{{"n_rf_per_group", {8}}}) == "n_rf_per_group");
    CHECK_THROWS_AS(load_config(temp_file("broken.json", "{\"p_t_dbm\": [1,")), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/fairhp.json"), ConfigError);
}

TEST_CASE("noise power from the scenario") {
    const SystemConfig cfg;
    CHECK(watts_to_dbm(cfg.noise_power_w()) == doctest::Approx(-123.2082).epsilon(1e-6));
}

} // TEST_SUITE
