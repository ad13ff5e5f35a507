#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <optional>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "adcmimo/simulation.hpp"

namespace {

using namespace adcmimo;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc | std::ios::binary);
        if (!f) throw IoError("cannot open for writing: " + tmp);
        f << content;
        if (!f) throw IoError("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path + ": " + ec.message());
}

std::string alloc_field(const BitAllocation& b) {
    bool all_inf = true;
    for (int bi : b.bits) all_inf = all_inf && bi == kInfiniteBits;
    return all_inf ? "inf" : b.to_string();
}

std::string report_csv(const MseReport& rep) {
    std::ostringstream out;
    out << "# normalization=" << rep.normalization << "\n";
    out << "scheme,snr_db,mse_closed_form,mse_empirical,b_chosen,"
           "evaluations,channel_kappa,seed\n";
    for (const MseRow& row : rep.rows) {
        out << to_string(row.scheme) << ',' << fmt_double(row.snr_db) << ','
            << fmt_double(row.mse_closed_form) << ','
            << fmt_double(row.mse_empirical) << ',' << alloc_field(row.b_chosen)
            << ',' << row.evaluations << ',' << fmt_double(row.channel_kappa)
            << ',' << rep.seed << "\n";
    }
    return out.str();
}

std::string report_detail_csv(const MseReport& rep) {
    std::ostringstream out;
    out << "scheme,snr_db,trial,b,j\n";
    for (const DetailRow& row : rep.detail) {
        out << to_string(row.scheme) << ',' << fmt_double(row.snr_db) << ','
            << row.trial << ',' << alloc_field(row.b) << ','
            << fmt_double(row.j) << "\n";
    }
    return out.str();
}

std::string report_plot_csv(const MseReport& rep) {
    std::ostringstream out;
    out << "scheme,snr_db,mse\n";
    for (const MseRow& row : rep.rows) {
        out << to_string(row.scheme) << ',' << fmt_double(row.snr_db) << ','
            << fmt_double(row.mse_closed_form) << "\n";
    }
    return out.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Flat `key = value` config with mandatory `schema = 1`; unknown keys are
/// rejected.
struct SweepFileConfig {
    SweepConfig cfg;
    std::string out;
    std::string plot_out;
    std::string detail_out;
};

SweepFileConfig parse_sweep_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = line.substr(0, eq);
            value = line.substr(eq + 1);
        } else {
            key = line;
        }
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key.empty()) continue;
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        }
        kv[key] = value;
    }

    if (!kv.count("schema") || kv["schema"] != "1") {
        throw ConfigError("config must declare schema = 1");
    }
    kv.erase("schema");

    SweepFileConfig out;
    SweepConfig& cfg = out.cfg;
    auto take = [&](const char* key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    if (auto v = take("n")) cfg.n = std::stoul(*v);
    if (auto v = take("snr_db_grid")) {
        cfg.snr_db_grid.clear();
        for (const std::string& tok : split(*v, ','))
            cfg.snr_db_grid.push_back(std::stod(tok));
    }
    if (auto v = take("symbols_per_trial")) cfg.symbols_per_trial = std::stoul(*v);
    if (auto v = take("trials")) cfg.trials = std::stoul(*v);
    if (auto v = take("channel_seed")) cfg.channel.seed = std::stoull(*v);
    if (auto v = take("channel_model"))
        cfg.channel.model = channel_model_from_string(*v);
    if (auto v = take("kappa_target")) cfg.channel.kappa_target = std::stod(*v);
    if (auto v = take("schemes")) {
        cfg.schemes.clear();
        for (const std::string& tok : split(*v, ','))
            cfg.schemes.push_back(scheme_from_string(tok));
    }
    cfg.ga = GaParams::defaults_for(cfg.n);
    if (auto v = take("ga_k")) cfg.ga.k = std::stoul(*v);
    if (auto v = take("ga_l")) cfg.ga.l = std::stoul(*v);
    if (auto v = take("ga_t")) cfg.ga.t = std::stod(*v);
    if (auto v = take("ga_p_cross")) cfg.ga.p_cross = std::stod(*v);
    if (auto v = take("ga_p_mut")) cfg.ga.p_mut = std::stod(*v);
    if (auto v = take("ga_seed")) cfg.ga.seed = std::stoull(*v);
    cfg.pm = PowerModel::default_budget(cfg.n);
    if (auto v = take("pm_c")) cfg.pm.c = std::stod(*v);
    if (auto v = take("pm_fs")) cfg.pm.f_s = std::stod(*v);
    if (auto v = take("pm_budget")) {
        cfg.pm.p_adc = std::stod(*v);
    } else if (kv.count("pm_c") || true) {
        cfg.pm.p_adc = cfg.pm.c * double(cfg.n) * cfg.pm.f_s * 4.0;
    }
    if (auto v = take("seed")) cfg.seed = std::stoull(*v);
    if (auto v = take("redraw_channel")) cfg.redraw_channel = (*v == "true" || *v == "1");
    if (auto v = take("out")) out.out = *v;
    if (auto v = take("plot_out")) out.plot_out = *v;
    if (auto v = take("detail_out")) out.detail_out = *v;

    if (!kv.empty()) {
        throw ConfigError("unknown config key: " + kv.begin()->first);
    }
    return out;
}

int cmd_gen_channel(std::size_t n, double kappa, std::uint64_t seed,
                    const std::string& model, const std::string& out) {
    ChannelMatrix ch = (model == "rayleigh")
                           ? gen_rayleigh(n, seed)
                           : gen_ill_conditioned(n, kappa, seed);
    save_channel(ch, out);
    std::cout << "wrote " << out << " n=" << n
              << " kappa=" << fmt_double(ch.kappa) << "\n";
    return 0;
}

int cmd_allocate(const std::string& channel_path, double snr_db,
                 const std::string& method, double budget, double pm_c,
                 double pm_fs, const GaParams& ga, const std::string& format) {
    const ChannelMatrix ch = load_channel(channel_path);
    PowerModel pm{pm_c, pm_fs, budget};
    if (budget <= 0.0) pm = PowerModel::default_budget(ch.n(), pm_c, pm_fs);
    const double p_u = std::pow(10.0, snr_db / 10.0);
    const double sigma2 = 1.0;

    GaParams params = ga;
    if (params.k == 0) params.k = GaParams::defaults_for(ch.n()).k;
    const SearchOutcome out = (method == "ga")
                                  ? ga_search(ch, p_u, sigma2, pm, params)
                                  : full_search(ch, p_u, sigma2, pm);
    if (format == "csv") {
        std::cout << "b_star,j_star,evaluations,halted_by\n"
                  << out.b_star.to_string() << ',' << fmt_double(out.j_star)
                  << ',' << out.evaluations << ',' << to_string(out.halted_by)
                  << "\n";
    } else {
        std::cout << "b*          = " << out.b_star.to_string() << "\n"
                  << "J(b*)       = " << fmt_double(out.j_star) << "\n"
                  << "evaluations = " << out.evaluations << "\n"
                  << "halted_by   = " << to_string(out.halted_by) << "\n";
    }
    return 0;
}

int cmd_enumerate(std::size_t n, double budget, double pm_c, double pm_fs,
                  bool list) {
    PowerModel pm{pm_c, pm_fs, budget};
    if (budget <= 0.0) pm = PowerModel::default_budget(n, pm_c, pm_fs);
    const std::vector<BitAllocation> bset = enumerate_bset(n, pm);
    std::cout << bset.size() << "\n";
    if (list) {
        for (const BitAllocation& b : bset) std::cout << b.to_string() << "\n";
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const SweepConfig& flag_cfg,
              const std::map<std::string, bool>& flag_set,
              const std::string& out_flag, const std::string& plot_out_flag,
              const std::string& detail_out_flag) {
    SweepFileConfig file_cfg;
    file_cfg.cfg.pm = PowerModel::default_budget(file_cfg.cfg.n);
    if (!config_path.empty()) file_cfg = parse_sweep_config(config_path);

    SweepConfig cfg = file_cfg.cfg;
    // flags override file values
    auto on = [&](const char* k) {
        const auto it = flag_set.find(k);
        return it != flag_set.end() && it->second;
    };
    if (on("n")) {
        cfg.n = flag_cfg.n;
        cfg.pm = PowerModel::default_budget(cfg.n);
        cfg.ga = GaParams::defaults_for(cfg.n);
    }
    if (on("trials")) cfg.trials = flag_cfg.trials;
    if (on("symbols")) cfg.symbols_per_trial = flag_cfg.symbols_per_trial;
    if (on("seed")) cfg.seed = flag_cfg.seed;
    if (on("kappa")) cfg.channel.kappa_target = flag_cfg.channel.kappa_target;
    if (on("channel-seed")) cfg.channel.seed = flag_cfg.channel.seed;
    if (on("ga-seed")) cfg.ga.seed = flag_cfg.ga.seed;

    std::string out = out_flag.empty() ? file_cfg.out : out_flag;
    if (out.empty()) throw ConfigError("sweep needs an output path (--out)");
    std::string plot_out =
        plot_out_flag.empty() ? file_cfg.plot_out : plot_out_flag;
    if (plot_out.empty()) plot_out = out + ".plot.csv";

    const std::string detail_out =
        detail_out_flag.empty() ? file_cfg.detail_out : detail_out_flag;

    const MseReport rep = run_sweep(cfg);
    atomic_write(out, report_csv(rep));
    atomic_write(plot_out, report_plot_csv(rep));
    if (!detail_out.empty()) atomic_write(detail_out, report_detail_csv(rep));

    std::cout << "scheme        snr_db   mse_closed_form\n";
    for (const MseRow& row : rep.rows) {
        std::printf("%-13s %7.1f  %.6g\n", to_string(row.scheme).c_str(),
                    row.snr_db, row.mse_closed_form);
    }
    std::cout << "wrote " << out << " and " << plot_out << "\n";
    return 0;
}

/// Checks the closed-form curve ordering
/// infinite <= full-search <= ga <= two-bit <= one-bit per SNR point.
int cmd_verify_report(const std::string& path, double tol) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::string line;
    std::map<double, std::map<std::string, double>> by_snr;
    bool saw_header = false;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line.rfind("scheme,", 0) != 0)
                throw FormatError("missing CSV header row");
            saw_header = true;
            continue;
        }
        const std::vector<std::string> cols = split(line, ',');
        if (cols.size() != 8) throw FormatError("expected 8 CSV columns");
        by_snr[std::stod(cols[1])][cols[0]] = std::stod(cols[2]);
    }
    static const char* kOrder[] = {"infinite", "full-search", "ga", "two-bit",
                                   "one-bit"};
    bool ok = true;
    for (const auto& [snr, schemes] : by_snr) {
        double prev = -std::numeric_limits<double>::infinity();
        for (const char* name : kOrder) {
            const auto it = schemes.find(name);
            if (it == schemes.end()) continue;
            if (it->second + tol < prev) {
                std::cout << "ordering violated at snr_db=" << snr << " ("
                          << name << ")\n";
                ok = false;
            }
            prev = std::max(prev, it->second);
        }
    }
    std::cout << (ok ? "ordering ok\n" : "ordering FAILED\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantization-aware MMSE combining and ADC bit allocation"};
    app.require_subcommand(1);

    // gen-channel
    auto* gen = app.add_subcommand("gen-channel", "generate a channel file");
    std::size_t gen_n = 8;
    double gen_kappa = 1000.0;
    std::uint64_t gen_seed = 0;
    std::string gen_model = "synthetic-ill-conditioned";
    std::string gen_out;
    gen->add_option("--n", gen_n, "matrix size")->check(CLI::PositiveNumber);
    gen->add_option("--kappa", gen_kappa, "target condition number");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--model", gen_model, "rayleigh | synthetic-ill-conditioned");
    gen->add_option("--out", gen_out, "output path")->required();

    // allocate
    auto* alloc = app.add_subcommand("allocate", "search for a bit allocation");
    std::string alloc_channel;
    double alloc_snr = 0.0;
    std::string alloc_method = "full";
    double alloc_budget = 0.0;
    double alloc_c = 1.0, alloc_fs = 1.0;
    std::string alloc_format = "human";
    GaParams alloc_ga;
    alloc_ga.k = 0; // 0 = Table II defaults for the channel size
    alloc->add_option("--channel", alloc_channel, "channel file")->required();
    alloc->add_option("--snr-db", alloc_snr, "SNR in dB")->required();
    alloc->add_option("--method", alloc_method, "full | ga")
        ->check(CLI::IsMember({"full", "ga"}));
    alloc->add_option("--budget", alloc_budget, "ADC power budget (default all-2)");
    alloc->add_option("--c", alloc_c, "power per conversion step");
    alloc->add_option("--fs", alloc_fs, "sampling rate");
    alloc->add_option("--ga-k", alloc_ga.k, "initial population size");
    alloc->add_option("--ga-l", alloc_ga.l, "max iterations");
    alloc->add_option("--ga-t", alloc_ga.t, "fitness threshold");
    alloc->add_option("--ga-p-cross", alloc_ga.p_cross, "crossover probability");
    alloc->add_option("--ga-p-mut", alloc_ga.p_mut, "mutation probability");
    alloc->add_option("--seed", alloc_ga.seed, "GA seed");
    alloc->add_option("--format", alloc_format, "csv | human")
        ->check(CLI::IsMember({"csv", "human"}));

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "count/list the feasible set");
    std::size_t enu_n = 8;
    double enu_budget = 0.0;
    double enu_c = 1.0, enu_fs = 1.0;
    bool enu_list = false;
    enu->add_option("--n", enu_n, "path count")->check(CLI::PositiveNumber);
    enu->add_option("--budget", enu_budget, "power budget (default all-2)");
    enu->add_option("--c", enu_c, "power per conversion step");
    enu->add_option("--fs", enu_fs, "sampling rate");
    enu->add_flag("--list", enu_list, "stream allocations lexicographically");

    // sweep
    auto* swp = app.add_subcommand("sweep", "MSE-vs-SNR sweep across schemes");
    std::string swp_config, swp_out, swp_plot_out, swp_detail_out;
    SweepConfig swp_flags;
    std::map<std::string, bool> swp_set;
    swp->add_option("--config", swp_config, "config file (schema = 1)");
    swp->add_option("--out", swp_out, "report CSV path");
    swp->add_option("--plot-out", swp_plot_out, "long-format plot CSV path");
    swp->add_option("--detail-out", swp_detail_out,
                    "per-trial allocation detail CSV path");
    swp->add_option("--n", swp_flags.n)->each([&](const std::string&) { swp_set["n"] = true; });
    swp->add_option("--trials", swp_flags.trials)->each([&](const std::string&) { swp_set["trials"] = true; });
    swp->add_option("--symbols", swp_flags.symbols_per_trial)->each([&](const std::string&) { swp_set["symbols"] = true; });
    swp->add_option("--seed", swp_flags.seed)->each([&](const std::string&) { swp_set["seed"] = true; });
    swp->add_option("--kappa", swp_flags.channel.kappa_target)->each([&](const std::string&) { swp_set["kappa"] = true; });
    swp->add_option("--channel-seed", swp_flags.channel.seed)->each([&](const std::string&) { swp_set["channel-seed"] = true; });
    swp->add_option("--ga-seed", swp_flags.ga.seed)->each([&](const std::string&) { swp_set["ga-seed"] = true; });

    // verify-report
    auto* ver = app.add_subcommand("verify-report", "check curve ordering");
    std::string ver_in;
    double ver_tol = 1e-9;
    ver->add_option("--in", ver_in, "report CSV")->required();
    ver->add_option("--tol", ver_tol, "tie tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen_channel(gen_n, gen_kappa, gen_seed, gen_model, gen_out);
        if (alloc->parsed())
            return cmd_allocate(alloc_channel, alloc_snr, alloc_method,
                                alloc_budget, alloc_c, alloc_fs, alloc_ga,
                                alloc_format);
        if (enu->parsed())
            return cmd_enumerate(enu_n, enu_budget, enu_c, enu_fs, enu_list);
        if (swp->parsed())
            return cmd_sweep(swp_config, swp_flags, swp_set, swp_out,
                             swp_plot_out, swp_detail_out);
        if (ver->parsed()) return cmd_verify_report(ver_in, ver_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
