#include "cgzic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "cgzic/chain_decompose.hpp"
#include "cgzic/errors.hpp"
#include "cgzic/hk_core.hpp"
#include "cgzic/hk_polytope.hpp"
#include "cgzic/io.hpp"
#include "cgzic/regimes3.hpp"
#include "cgzic/sweep.hpp"

namespace cgzic::cli {

namespace {

using io::Json;

Json envelope(const char* kind) {
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["kind"] = kind;
    return j;
}

void merge(Json& into, const Json& from) {
    for (auto it = from.begin(); it != from.end(); ++it) {
        into[it.key()] = it.value();
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool has_very_strong(const ChannelConfig& cfg) {
    for (std::size_t l = 0; l < cfg.links(); ++l) {
        if (is_very_strong_link(cfg, l)) {
            return true;
        }
    }
    return false;
}

int cmd_analyze(const std::string& channel, double slack, std::ostream& out) {
    const ChannelConfig cfg = io::load_channel(channel);
    if (cfg.num_users == 3 && !has_very_strong(cfg)) {
        Json j = envelope("regime_report");
        j["channel"] = io::to_json(cfg);
        merge(j, io::to_json(classify(cfg, slack)));
        emit(out, j);
        return kOk;
    }
    Json j = envelope("sum_rate");
    j["channel"] = io::to_json(cfg);
    merge(j, io::to_json(max_sum_rate(cfg)));
    j["segmentation"] = io::to_json(decompose(cfg, slack));
    emit(out, j);
    return kOk;
}

int cmd_decompose(const std::string& channel, double slack, std::ostream& out) {
    const ChannelConfig cfg = io::load_channel(channel);
    Json j = envelope("segmentation");
    j["channel"] = io::to_json(cfg);
    merge(j, io::to_json(decompose(cfg, slack)));
    emit(out, j);
    return kOk;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

struct OracleArgs {
    std::string channel;
    double grid_step = 0.05;
    double tolerance = tol::kOracleViolation;
    std::size_t max_cells = tol::kMaxGridCells;
    std::string dump_csv;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    const ChannelConfig cfg = io::load_channel(a.channel);
    GridOptions opts;
    opts.max_cells = a.max_cells;
    opts.keep_values = !a.dump_csv.empty();
    const OracleReport rep = grid_oracle(cfg, a.grid_step, opts);
    const bool ok = rep.max_violation <= a.tolerance &&
                    std::abs(rep.optimal_split_lp - rep.closed_form) <= tol::kIdentity;

    if (!a.dump_csv.empty()) {
        const SplitGrid grid(cfg.num_users, a.grid_step);
        std::ostringstream csv;
        for (std::size_t u = 0; u < cfg.num_users; ++u) {
            csv << "gamma" << (u + 1) << ',';
        }
        csv << "lp_value\n";
        char buf[32];
        for (std::size_t i = 0; i < rep.values.size(); ++i) {
            for (double g : grid.at(i).common_fraction) {
                std::snprintf(buf, sizeof buf, "%.9g", g);
                csv << buf << ',';
            }
            std::snprintf(buf, sizeof buf, "%.9g", rep.values[i]);
            csv << buf << '\n';
        }
        write_file(a.dump_csv, csv.str());
    }

    Json j = envelope("oracle_report");
    j["channel"] = io::to_json(cfg);
    merge(j, io::to_json(rep));
    j["tolerance"] = io::round9(a.tolerance);
    j["passed"] = ok;
    emit(out, j);
    return ok ? kOk : kVerificationFailed;
}

struct VerifyArgs {
    VerifyOptions opts;
    std::string channel;
    std::string out_path;
    bool serial = false;
};

int cmd_verify(VerifyArgs a, std::ostream& out) {
    if (!a.channel.empty()) {
        a.opts.fixed = io::load_channel(a.channel);
    }
    const VerifyReport rep = a.serial ? run_verify_serial(a.opts) : run_verify(a.opts);
    Json j = envelope("verify_report");
    merge(j, io::to_json(rep));
    if (a.out_path.empty()) {
        emit(out, j);
    } else {
        write_file(a.out_path, j.dump(2) + "\n");
    }
    return rep.failures == 0 ? kOk : kVerificationFailed;
}

struct MapArgs {
    std::vector<double> power{3.0, 3.0, 3.0};
    std::vector<double> a1{0.0, 2.0, 100.0};
    std::vector<double> a2{0.0, 2.0, 100.0};
    bool include_very_strong = false;
    bool serial = false;
    double slack = tol::kRegimeSlack;
    std::string out_path;
};

AxisRange axis(const std::vector<double>& v, const char* name) {
    if (v.size() != 3 || v[2] < 1.0 || v[2] != std::floor(v[2])) {
        throw std::invalid_argument(std::string("--") + name +
                                    " expects min,max,steps with integer steps >= 1");
    }
    return AxisRange{v[0], v[1], static_cast<std::size_t>(v[2])};
}

int cmd_regime_map(const MapArgs& a, std::ostream& out) {
    if (a.power.size() != 3) {
        throw std::invalid_argument("--P expects three powers");
    }
    SweepSpec spec;
    spec.power = {a.power[0], a.power[1], a.power[2]};
    spec.a1 = axis(a.a1, "a1");
    spec.a2 = axis(a.a2, "a2");
    spec.include_very_strong = a.include_very_strong;
    const auto cells = a.serial ? regime_map_serial(spec, a.slack) : regime_map(spec, a.slack);
    const std::string csv = "# schema_version=" + std::to_string(io::kSchemaVersion) + "\n" +
                            regime_map_csv(cells);
    if (a.out_path.empty()) {
        out << csv;
    } else {
        write_file(a.out_path, csv);
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sum-rate and sum-capacity analysis of cascade Gaussian Z-interference channels",
                 "cgzic"};
    app.require_subcommand(1);

    std::string channel;
    double slack = tol::kRegimeSlack;

    auto* analyze = app.add_subcommand("analyze", "Regime report (K=3) or sum rate + segmentation");
    analyze->add_option("--channel", channel, "Channel JSON file or inline JSON")->required();
    analyze->add_option("--tolerance", slack, "Slack added to regime thresholds (default 0)");

    auto* decomp = app.add_subcommand("decompose", "Very-strong removal and chain segmentation");
    decomp->add_option("--channel", channel, "Channel JSON file or inline JSON")->required();
    decomp->add_option("--tolerance", slack, "Slack added to regime thresholds (default 0)");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Grid-search LP oracle for one channel");
    oracle->add_option("--channel", oa.channel, "Channel JSON file or inline JSON")->required();
    oracle->add_option("--grid-step", oa.grid_step, "Power-split grid step")->capture_default_str();
    oracle->add_option("--tolerance", oa.tolerance, "Allowed LP excess over the closed form")
        ->capture_default_str();
    oracle->add_option("--max-cells", oa.max_cells, "Grid size cap")->capture_default_str();
    oracle->add_option("--dump-csv", oa.dump_csv, "Write gamma_1..gamma_K,lp_value rows here");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Randomized closed-form vs LP-oracle campaign");
    verify->add_option("--count", va.opts.count, "Number of random channels")->capture_default_str();
    verify->add_option("--k-min", va.opts.k_min, "Smallest K")->capture_default_str();
    verify->add_option("--k-max", va.opts.k_max, "Largest K")->capture_default_str();
    verify->add_option("--grid-step", va.opts.grid_step, "Power-split grid step")
        ->capture_default_str();
    verify->add_option("--seed", va.opts.seed, "mt19937_64 seed")->capture_default_str();
    verify->add_option("--p-min", va.opts.p_min, "Log-uniform power range, low end")
        ->capture_default_str();
    verify->add_option("--p-max", va.opts.p_max, "Log-uniform power range, high end")
        ->capture_default_str();
    verify->add_option("--tolerance", va.opts.tolerance, "Allowed LP excess over the closed form")
        ->capture_default_str();
    verify->add_option("--max-cells", va.opts.max_cells, "Grid size cap")->capture_default_str();
    verify->add_option("--channel", va.channel, "Use this channel for every instance");
    verify->add_option("--out", va.out_path, "Write the JSON report here instead of stdout");
    verify->add_flag("--serial", va.serial, "Use the serial reference kernel");

    MapArgs ma;
    auto* map = app.add_subcommand("regime-map", "Regime classification over an (a1, a2) grid");
    map->add_option("--P", ma.power, "Powers P1,P2,P3")->delimiter(',')->capture_default_str();
    map->add_option("--a1", ma.a1, "a1 axis as min,max,steps (half-open)")
        ->delimiter(',')
        ->capture_default_str();
    map->add_option("--a2", ma.a2, "a2 axis as min,max,steps (half-open)")
        ->delimiter(',')
        ->capture_default_str();
    map->add_flag("--include-very-strong", ma.include_very_strong,
                  "Allow cells at or beyond the very-strong threshold");
    map->add_option("--tolerance", ma.slack, "Slack added to regime thresholds (default 0)");
    map->add_option("--out", ma.out_path, "CSV output path (stdout when omitted)");
    map->add_flag("--serial", ma.serial, "Use the serial reference kernel");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*analyze) {
            return cmd_analyze(channel, slack, out);
        }
        if (*decomp) {
            return cmd_decompose(channel, slack, out);
        }
        if (*oracle) {
            return cmd_oracle(oa, out);
        }
        if (*verify) {
            return cmd_verify(va, out);
        }
        if (*map) {
            return cmd_regime_map(ma, out);
        }
    } catch (const std::exception& e) {
        err << "cgzic: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace cgzic::cli
