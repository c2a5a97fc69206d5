// SPDX-License-Identifier: Apache-2.0

#include "fairhp/config.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fairhp {

using nlohmann::json;

namespace {

// Reads typed members of one JSON object and rejects keys nobody asked for.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object())
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    void read(const std::string& key, double& out) {
        if (const json* v = find(key))
            out = as_double(*v, field(key));
    }

    void read(const std::string& key, std::size_t& out) {
        if (const json* v = find(key))
            out = as_count(*v, field(key));
    }

    void read(const std::string& key, std::uint64_t& out, int) {
        if (const json* v = find(key)) {
            if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0))
                throw ConfigError(field(key), "expected a non-negative integer");
            out = v->get<std::uint64_t>();
        }
    }

    void finish() const {
        for (const auto& [k, _] : j_.items())
            if (!seen_.contains(k))
                throw ConfigError(field(k), "unknown key");
    }

    static double as_double(const json& v, const std::string& field) {
        if (!v.is_number())
            throw ConfigError(field, "expected a number");
        return v.get<double>();
    }

    static std::size_t as_count(const json& v, const std::string& field) {
        if (v.is_number_unsigned())
            return v.get<std::size_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::size_t>(v.get<std::int64_t>());
        throw ConfigError(field, "expected a non-negative integer");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

std::string indexed(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

template <class T, class F>
std::vector<T> scalar_or_list(const json& v, const std::string& field, F&& parse_one) {
    std::vector<T> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(parse_one(v[i], indexed(field, i)));
    } else {
        out.push_back(parse_one(v, field));
    }
    return out;
}

FairnessSpec fairness_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_string())
            return FairnessSpec::parse(v.get<std::string>());
        return FairnessSpec::alpha_fair(ObjectReader::as_double(v, field));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, e.what());
    }
}

json fairness_to_json(const FairnessSpec& f) {
    if (f.mode == FairnessSpec::Mode::max_min)
        return "maxmin";
    return f.alpha;
}

std::string_view convention_name(PathlossConvention c) {
    return c == PathlossConvention::amplitude ? "amplitude" : "power";
}

void require(bool ok, const std::string& field, const std::string& message) {
    if (!ok)
        throw ConfigError(field, message);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

std::vector<GroupAngularSpec> default_groups(std::size_t n_groups, std::size_t ues_per_group) {
    std::vector<GroupAngularSpec> groups(n_groups);
    for (std::size_t g = 0; g < n_groups; ++g) {
        groups[g].mean_aaod_deg = 25.0 + 360.0 * static_cast<double>(g) / static_cast<double>(n_groups);
        groups[g].ue_count = ues_per_group;
    }
    return groups;
}

std::size_t SystemConfig::ue_count() const noexcept {
    std::size_t k = 0;
    for (const auto& g : groups)
        k += g.ue_count;
    return k;
}

std::size_t SystemConfig::rf_chain_count() const noexcept {
    std::size_t n = 0;
    for (const auto v : n_rf_per_group)
        n += v;
    return n;
}

ChannelModel SystemConfig::channel_model() const {
    ChannelModel m;
    m.array = array;
    m.groups = groups;
    m.n_paths = n_paths;
    m.pathloss_exponent = pathloss_exponent;
    m.pathloss_convention = pathloss_convention;
    return m;
}

double SystemConfig::noise_power_w() const { return noise_power_watts(noise_psd_dbm_hz, bandwidth_hz); }

void validate(const SystemConfig& cfg) {
    require(cfg.array.m_x >= 1, "array.m_x", "must be at least 1");
    require(cfg.array.m_y >= 1, "array.m_y", "must be at least 1");
    require(finite(cfg.array.spacing) && cfg.array.spacing > 0.0, "array.spacing", "must be positive");

    require(!cfg.groups.empty(), "groups", "at least one group required");
    for (std::size_t g = 0; g < cfg.groups.size(); ++g) {
        const auto& s = cfg.groups[g];
        const std::string f = indexed("groups", g);
        require(s.ue_count >= 1, f + ".ue_count", "must be at least 1");
        require(finite(s.mean_eaod_deg), f + ".mean_eaod_deg", "must be finite");
        require(finite(s.mean_aaod_deg), f + ".mean_aaod_deg", "must be finite");
        require(finite(s.eaod_spread_deg) && s.eaod_spread_deg >= 0.0, f + ".eaod_spread_deg",
                "must be non-negative");
        require(finite(s.aaod_spread_deg) && s.aaod_spread_deg >= 0.0, f + ".aaod_spread_deg",
                "must be non-negative");
    }

    require(cfg.n_rf_per_group.size() == cfg.groups.size(), "n_rf_per_group",
            "needs one entry per group (" + std::to_string(cfg.groups.size()) + ")");
    for (std::size_t g = 0; g < cfg.n_rf_per_group.size(); ++g)
        require(cfg.n_rf_per_group[g] >= 1, indexed("n_rf_per_group", g), "must be at least 1");
    const std::size_t K = cfg.ue_count();
    const std::size_t N = cfg.rf_chain_count();
    const std::size_t M = cfg.array.antenna_count();
    require(K <= N, "n_rf_per_group",
            "total RF chains " + std::to_string(N) + " below total UEs " + std::to_string(K));
    require(N <= M, "n_rf_per_group",
            "total RF chains " + std::to_string(N) + " exceed antennas " + std::to_string(M));

    require(!cfg.p_t_dbm.empty(), "p_t_dbm", "at least one transmit power required");
    for (std::size_t i = 0; i < cfg.p_t_dbm.size(); ++i)
        require(finite(cfg.p_t_dbm[i]), indexed("p_t_dbm", i), "must be finite");
    require(finite(cfg.noise_psd_dbm_hz), "noise_psd_dbm_hz", "must be finite");
    require(finite(cfg.bandwidth_hz) && cfg.bandwidth_hz > 0.0, "bandwidth_hz", "must be positive");
    require(finite(cfg.pathloss_exponent) && cfg.pathloss_exponent >= 0.0, "pathloss_exponent",
            "must be non-negative");
    require(cfg.n_paths >= 1, "n_paths", "must be at least 1");

    require(!cfg.fairness.empty(), "fairness", "at least one fairness level required");
    require(!cfg.algorithms.empty(), "algorithms", "at least one algorithm required");
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(cfg.algorithms[i] != cfg.algorithms[j], indexed("algorithms", i), "duplicate algorithm");

    const auto& o = cfg.optimizer;
    require(o.n_agents >= 2, "optimizer.n_agents", "must be at least 2");
    require(o.hyper.pso.vel_min <= o.hyper.pso.vel_max, "optimizer.pso.vel_min", "must not exceed vel_max");
    require(o.hyper.aco.kappa1 >= 2, "optimizer.aco.kappa1", "archive size must be at least 2");
    require(o.hyper.aco.kappa2 > 0.0, "optimizer.aco.kappa2", "must be positive");
    require(o.hyper.cs.kappa1 >= 0.0 && o.hyper.cs.kappa1 <= 1.0, "optimizer.cs.kappa1", "must lie in [0, 1]");
    require(o.hyper.cs.kappa2 > 0.0 && o.hyper.cs.kappa2 <= 2.0, "optimizer.cs.kappa2", "must lie in (0, 2]");
    require(o.hyper.fa.kappa1 >= 0.0, "optimizer.fa.kappa1", "must be non-negative");
    require(o.hyper.fa.kappa2 >= 0.0 && o.hyper.fa.kappa2 <= 1.0, "optimizer.fa.kappa2", "must lie in [0, 1]");
    for (const Algorithm a : cfg.algorithms) {
        if (a == Algorithm::aco)
            require(o.hyper.aco.kappa1 <= o.n_agents, "optimizer.aco.kappa1", "archive size exceeds n_agents");
        if (a == Algorithm::fa)
            require(o.n_agents >= 4, "optimizer.n_agents", "firefly search needs at least 4 agents");
    }

    require(cfg.n_realizations >= 1, "n_realizations", "must be at least 1");

    const auto& b = cfg.geometry;
    require(finite(b.min_horizontal_m) && b.min_horizontal_m >= 0.0, "geometry.min_horizontal_m",
            "must be non-negative");
    require(finite(b.max_horizontal_m) && b.max_horizontal_m >= b.min_horizontal_m, "geometry.max_horizontal_m",
            "must not be below min_horizontal_m");
    require(finite(b.bs_height_m), "geometry.bs_height_m", "must be finite");
    require(finite(b.min_ue_height_m), "geometry.min_ue_height_m", "must be finite");
    require(finite(b.max_ue_height_m) && b.max_ue_height_m >= b.min_ue_height_m, "geometry.max_ue_height_m",
            "must not be below min_ue_height_m");
    require(b.min_horizontal_m > 0.0 || b.bs_height_m != b.min_ue_height_m || b.bs_height_m != b.max_ue_height_m,
            "geometry", "UEs could coincide with the base station");

    require(finite(cfg.p_rf_w) && cfg.p_rf_w >= 0.0, "p_rf_w", "must be non-negative");
}

json to_json(const SystemConfig& cfg) {
    json groups = json::array();
    for (const auto& g : cfg.groups)
        groups.push_back({{"mean_eaod_deg", g.mean_eaod_deg},
                          {"eaod_spread_deg", g.eaod_spread_deg},
                          {"mean_aaod_deg", g.mean_aaod_deg},
                          {"aaod_spread_deg", g.aaod_spread_deg},
                          {"ue_count", g.ue_count}});
    json fairness = json::array();
    for (const auto& f : cfg.fairness)
        fairness.push_back(fairness_to_json(f));
    json algorithms = json::array();
    for (const Algorithm a : cfg.algorithms)
        algorithms.push_back(std::string(to_string(a)));
    const auto& h = cfg.optimizer.hyper;

    return {
        {"array", {{"m_x", cfg.array.m_x}, {"m_y", cfg.array.m_y}, {"spacing", cfg.array.spacing}}},
        {"groups", groups},
        {"n_rf_per_group", cfg.n_rf_per_group},
        {"p_t_dbm", cfg.p_t_dbm},
        {"noise_psd_dbm_hz", cfg.noise_psd_dbm_hz},
        {"bandwidth_hz", cfg.bandwidth_hz},
        {"pathloss_exponent", cfg.pathloss_exponent},
        {"pathloss_convention", std::string(convention_name(cfg.pathloss_convention))},
        {"n_paths", cfg.n_paths},
        {"fairness", fairness},
        {"algorithms", algorithms},
        {"optimizer",
         {{"n_agents", cfg.optimizer.n_agents},
          {"iterations", cfg.optimizer.iterations},
          {"pso", {{"vel_min", h.pso.vel_min}, {"vel_max", h.pso.vel_max}}},
          {"aco", {{"kappa1", h.aco.kappa1}, {"kappa2", h.aco.kappa2}}},
          {"cs", {{"kappa1", h.cs.kappa1}, {"kappa2", h.cs.kappa2}}},
          {"fa", {{"kappa1", h.fa.kappa1}, {"kappa2", h.fa.kappa2}}}}},
        {"n_realizations", cfg.n_realizations},
        {"master_seed", cfg.master_seed},
        {"geometry",
         {{"min_horizontal_m", cfg.geometry.min_horizontal_m},
          {"max_horizontal_m", cfg.geometry.max_horizontal_m},
          {"bs_height_m", cfg.geometry.bs_height_m},
          {"min_ue_height_m", cfg.geometry.min_ue_height_m},
          {"max_ue_height_m", cfg.geometry.max_ue_height_m}}},
        {"p_rf_w", cfg.p_rf_w},
    };
}

SystemConfig config_from_json(const json& j) {
    SystemConfig cfg;
    ObjectReader root(j, "");

    if (const json* a = root.find("array")) {
        ObjectReader r(*a, "array");
        r.read("m_x", cfg.array.m_x);
        r.read("m_y", cfg.array.m_y);
        r.read("spacing", cfg.array.spacing);
        r.finish();
    }

    const json* groups = root.find("groups");
    const json* n_groups = root.find("n_groups");
    const json* ues_per_group = root.find("ues_per_group");
    if (groups) {
        if (n_groups || ues_per_group)
            throw ConfigError("groups", "give either groups or n_groups/ues_per_group, not both");
        if (!groups->is_array())
            throw ConfigError("groups", "expected a list");
        cfg.groups.clear();
        for (std::size_t g = 0; g < groups->size(); ++g) {
            // Omitted angles follow the default layout for this many groups.
            GroupAngularSpec s = default_groups(groups->size(), 5)[g];
            ObjectReader r((*groups)[g], indexed("groups", g));
            r.read("mean_eaod_deg", s.mean_eaod_deg);
            r.read("eaod_spread_deg", s.eaod_spread_deg);
            r.read("mean_aaod_deg", s.mean_aaod_deg);
            r.read("aaod_spread_deg", s.aaod_spread_deg);
            r.read("ue_count", s.ue_count);
            r.finish();
            cfg.groups.push_back(s);
        }
    } else if (n_groups || ues_per_group) {
        const std::size_t G = n_groups ? ObjectReader::as_count(*n_groups, "n_groups") : 2;
        const std::size_t Kg = ues_per_group ? ObjectReader::as_count(*ues_per_group, "ues_per_group") : 5;
        cfg.groups = default_groups(G, Kg);
    }

    if (const json* v = root.find("n_rf_per_group")) {
        if (v->is_array()) {
            cfg.n_rf_per_group = scalar_or_list<std::size_t>(*v, "n_rf_per_group", ObjectReader::as_count);
        } else {
            cfg.n_rf_per_group.assign(cfg.groups.size(), ObjectReader::as_count(*v, "n_rf_per_group"));
        }
    } else {
        cfg.n_rf_per_group.assign(cfg.groups.size(), 8);
    }

    if (const json* v = root.find("p_t_dbm"))
        cfg.p_t_dbm = scalar_or_list<double>(*v, "p_t_dbm", ObjectReader::as_double);
    root.read("noise_psd_dbm_hz", cfg.noise_psd_dbm_hz);
    root.read("bandwidth_hz", cfg.bandwidth_hz);
    root.read("pathloss_exponent", cfg.pathloss_exponent);
    if (const json* v = root.find("pathloss_convention")) {
        const std::string name = v->is_string() ? v->get<std::string>() : "";
        if (name == "amplitude")
            cfg.pathloss_convention = PathlossConvention::amplitude;
        else if (name == "power")
            cfg.pathloss_convention = PathlossConvention::power;
        else
            throw ConfigError("pathloss_convention", "expected \"amplitude\" or \"power\"");
    }
    root.read("n_paths", cfg.n_paths);

    if (const json* v = root.find("fairness"))
        cfg.fairness = scalar_or_list<FairnessSpec>(*v, "fairness", fairness_from_json);
    if (const json* v = root.find("algorithms")) {
        cfg.algorithms = scalar_or_list<Algorithm>(*v, "algorithms", [](const json& x, const std::string& f) {
            if (!x.is_string())
                throw ConfigError(f, "expected an algorithm name");
            try {
                return parse_algorithm(x.get<std::string>());
            } catch (const ConfigError& e) {
                throw ConfigError(f, e.message());
            }
        });
    }

    if (const json* v = root.find("optimizer")) {
        ObjectReader r(*v, "optimizer");
        auto& o = cfg.optimizer;
        r.read("n_agents", o.n_agents);
        r.read("iterations", o.iterations);
        if (const json* p = r.find("pso")) {
            ObjectReader s(*p, "optimizer.pso");
            s.read("vel_min", o.hyper.pso.vel_min);
            s.read("vel_max", o.hyper.pso.vel_max);
            s.finish();
        }
        if (const json* p = r.find("aco")) {
            ObjectReader s(*p, "optimizer.aco");
            s.read("kappa1", o.hyper.aco.kappa1);
            s.read("kappa2", o.hyper.aco.kappa2);
            s.finish();
        }
        if (const json* p = r.find("cs")) {
            ObjectReader s(*p, "optimizer.cs");
            s.read("kappa1", o.hyper.cs.kappa1);
            s.read("kappa2", o.hyper.cs.kappa2);
            s.finish();
        }
        if (const json* p = r.find("fa")) {
            ObjectReader s(*p, "optimizer.fa");
            s.read("kappa1", o.hyper.fa.kappa1);
            s.read("kappa2", o.hyper.fa.kappa2);
            s.finish();
        }
        r.finish();
    }

    root.read("n_realizations", cfg.n_realizations);
    root.read("master_seed", cfg.master_seed, 0);

    if (const json* v = root.find("geometry")) {
        ObjectReader r(*v, "geometry");
        r.read("min_horizontal_m", cfg.geometry.min_horizontal_m);
        r.read("max_horizontal_m", cfg.geometry.max_horizontal_m);
        r.read("bs_height_m", cfg.geometry.bs_height_m);
        r.read("min_ue_height_m", cfg.geometry.min_ue_height_m);
        r.read("max_ue_height_m", cfg.geometry.max_ue_height_m);
        r.finish();
    }
    root.read("p_rf_w", cfg.p_rf_w);
    root.finish();

    validate(cfg);
    return cfg;
}

SystemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
        return config_from_json(json::object());
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("JSON parse error: ") + e.what());
    }
    return config_from_json(j);
}

void save_config(const SystemConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_config: cannot write " + path.string());
    out << to_json(cfg).dump(2) << '\n';
    if (!out)
        throw std::runtime_error("save_config: write failed for " + path.string());
}

} // namespace fairhp
