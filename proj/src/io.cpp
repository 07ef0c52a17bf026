#include "cgzic/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cgzic/errors.hpp"

namespace cgzic::io {

double round9(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

namespace {

std::vector<double> real_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw InvalidChannel(std::string("channel JSON: \"") + key + "\" must be an array");
    }
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) {
            throw InvalidChannel(std::string("channel JSON: \"") + key + "\" holds a non-number");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

Json rounded(const std::vector<double>& xs) {
    Json arr = Json::array();
    for (double x : xs) {
        arr.push_back(round9(x));
    }
    return arr;
}

} // namespace

ChannelConfig parse_channel(const Json& j) {
    if (!j.is_object()) {
        throw InvalidChannel("channel JSON must be an object");
    }
    if (j.contains("general")) {
        const Json& g = j.at("general");
        if (!g.is_object()) {
            throw InvalidChannel("channel JSON: \"general\" must be an object");
        }
        GeneralChannel gc;
        gc.direct = real_array(g, "d");
        gc.cross = real_array(g, "c");
        gc.noise_var = real_array(g, "sigma2");
        gc.power = real_array(g, "Q");
        gc.num_users = gc.direct.size();
        return to_standard_form(gc);
    }
    if (!j.contains("K") || !j.at("K").is_number_integer()) {
        throw InvalidChannel("channel JSON: \"K\" must be an integer");
    }
    const auto k = j.at("K").get<long long>();
    if (k < 0) {
        throw InvalidChannel("channel JSON: \"K\" must be nonnegative");
    }
    ChannelConfig cfg{static_cast<std::size_t>(k), real_array(j, "a"), real_array(j, "P")};
    require_valid(cfg);
    return cfg;
}

ChannelConfig load_channel(const std::string& spec) {
    const auto first = spec.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && spec[first] == '{') {
        text = spec;
    } else {
        std::ifstream in(spec);
        if (!in) {
            throw InvalidChannel("cannot open channel file '" + spec + "'");
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidChannel(std::string("channel JSON parse error: ") + e.what());
    }
    return parse_channel(j);
}

Json to_json(const ChannelConfig& cfg) {
    Json j;
    j["K"] = cfg.num_users;
    j["a"] = rounded(cfg.interference);
    j["P"] = rounded(cfg.power);
    return j;
}

Json to_json(const RegimeReport& rep) {
    Json j;
    j["splitting_regime"] = std::string(to_string(rep.splitting_regime));
    j["capacity_status"] = std::string(to_string(rep.capacity_status));
    j["achievable"] = round9(rep.achievable);
    j["upper"] = round9(rep.upper);
    j["upper_kind"] = rep.capacity_status == CapacityStatus::AchievableOnly ? "interference_free_bound"
                                                                            : "regime_result";
    Json conds = Json::array();
    for (const auto& c : rep.conditions) {
        conds.push_back({{"name", c.name}, {"holds", c.holds}});
    }
    j["conditions"] = conds;
    return j;
}

Json to_json(const SumRateResult& res) {
    Json j;
    j["sum_rate"] = round9(res.sum_rate);
    j["h"] = rounded(res.gains.amplitude);
    j["r_star"] = rounded(res.gains.rate);
    j["gamma"] = rounded(res.split.common_fraction);
    return j;
}

Json to_json(const Segmentation& seg) {
    Json j;
    Json segs = Json::array();
    for (const auto& s : seg.segments) {
        segs.push_back({{"range", {s.first, s.last}},
                        {"value", round9(s.value)},
                        {"status", std::string(to_string(s.status))}});
    }
    j["segments"] = segs;
    Json cuts = Json::array();
    for (const auto& c : seg.cuts) {
        cuts.push_back({{"after", c.after}, {"reason", std::string(to_string(c.reason))}});
    }
    j["cuts"] = cuts;
    j["total"] = seg.total ? Json(round9(*seg.total)) : Json(nullptr);
    return j;
}

Json to_json(const OracleReport& rep) {
    Json j;
    j["best_sum"] = round9(rep.best_sum);
    j["best_split"] = rounded(rep.best_split.common_fraction);
    j["closed_form"] = round9(rep.closed_form);
    j["max_violation"] = round9(rep.max_violation);
    j["optimal_split_lp"] = round9(rep.optimal_split_lp);
    j["grid_step"] = round9(rep.grid_step);
    j["grid_points"] = rep.grid_points;
    return j;
}

Json to_json(const VerifyReport& rep) {
    Json j;
    const VerifyOptions& o = rep.options;
    Json opts;
    opts["count"] = o.count;
    opts["k_min"] = o.k_min;
    opts["k_max"] = o.k_max;
    opts["grid_step"] = round9(o.grid_step);
    opts["seed"] = o.seed;
    opts["p_min"] = round9(o.p_min);
    opts["p_max"] = round9(o.p_max);
    opts["tolerance"] = round9(o.tolerance);
    opts["rng"] = "mt19937_64";
    opts["fixed_channel"] = o.fixed ? to_json(*o.fixed) : Json(nullptr);
    j["options"] = opts;
    j["instances"] = rep.instances.size();
    j["failures"] = rep.failures;
    j["worst_max_violation"] = round9(rep.worst_max_violation);
    j["worst_optimal_gap"] = round9(rep.worst_optimal_gap);
    Json failed = Json::array();
    for (std::size_t i = 0; i < rep.instances.size(); ++i) {
        const auto& inst = rep.instances[i];
        if (inst.passed) {
            continue;
        }
        Json f;
        f["index"] = i;
        f["channel"] = to_json(inst.channel);
        f["oracle"] = to_json(inst.report);
        failed.push_back(f);
    }
    j["failed"] = failed;
    if (rep.instances.size() == 1) {
        j["oracle"] = to_json(rep.instances.front().report);
    }
    return j;
}

} // namespace cgzic::io
