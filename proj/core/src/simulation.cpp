#include "adcmimo/simulation.hpp"

#include <cmath>
#include <map>

namespace adcmimo {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::one_bit: return "one-bit";
        case Scheme::two_bit: return "two-bit";
        case Scheme::infinite: return "infinite";
        case Scheme::full_search: return "full-search";
        case Scheme::ga: return "ga";
    }
    return "two-bit";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "one-bit") return Scheme::one_bit;
    if (s == "two-bit") return Scheme::two_bit;
    if (s == "infinite") return Scheme::infinite;
    if (s == "full-search") return Scheme::full_search;
    if (s == "ga") return Scheme::ga;
    throw ConfigError("unknown scheme: " + s);
}

void SweepConfig::validate() const {
    if (snr_db_grid.empty()) throw ConfigError("snr_db_grid must be nonempty");
    for (std::size_t i = 1; i < snr_db_grid.size(); ++i) {
        if (!(snr_db_grid[i] > snr_db_grid[i - 1])) {
            throw ConfigError("snr_db_grid must be strictly increasing");
        }
    }
    if (symbols_per_trial < 1 || trials < 1) {
        throw ConfigError("symbols_per_trial and trials must be >= 1");
    }
    if (n < 1) throw ConfigError("n must be >= 1");
    if (schemes.empty()) throw ConfigError("at least one scheme required");
}

CMatrix gen_qam64(std::size_t n, std::size_t count_symbols, Rng& rng) {
    if (n < 1 || count_symbols < 1) {
        throw DimensionError("counts must be >= 1");
    }
    // levels {-7,-5,...,7} / sqrt(42): unit average symbol energy
    const double scale = 1.0 / std::sqrt(42.0);
    CMatrix x(n, count_symbols);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < count_symbols; ++c) {
            const double re = double(2 * int(rng.below(8)) - 7) * scale;
            const double im = double(2 * int(rng.below(8)) - 7) * scale;
            x.at(r, c) = cplx{re, im};
        }
    }
    return x;
}

double empirical_mse(const ChannelMatrix& h, const BitAllocation& b,
                     double p_u, double sigma2, std::size_t symbols,
                     std::size_t trials, Rng& rng) {
    const std::size_t n = h.n();
    const CombinerResult comb = mmse_combiner(h, b, p_u, sigma2);
    const CMatrix ch = comb.c.adjoint();
    const double amp = std::sqrt(p_u);
    const double noise_sd = std::sqrt(sigma2 / 2.0);

    double acc = 0.0;
    std::vector<cplx> r(n);
    for (std::size_t t = 0; t < trials; ++t) {
        const CMatrix x = gen_qam64(n, symbols, rng);
        for (std::size_t s = 0; s < symbols; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                cplx hx{};
                for (std::size_t k = 0; k < n; ++k)
                    hx += h.h.at(i, k) * x.at(k, s);
                r[i] = amp * hx +
                       cplx{noise_sd * rng.gauss(), noise_sd * rng.gauss()};
            }
            const std::vector<cplx> z = quantize(r, h, b, p_u, sigma2, rng);
            for (std::size_t i = 0; i < n; ++i) {
                cplx y{};
                for (std::size_t k = 0; k < n; ++k) y += ch.at(i, k) * z[k];
                acc += std::norm(y - x.at(i, s));
            }
        }
    }
    return acc / (double(trials) * double(symbols) * double(n));
}

namespace {

ChannelMatrix draw_channel(const SweepConfig& cfg, std::size_t trial) {
    const std::uint64_t seed =
        cfg.redraw_channel ? Rng::derive(cfg.channel.seed, 0xc4a2, trial)
                           : cfg.channel.seed;
    switch (cfg.channel.model) {
        case ChannelModel::rayleigh: return gen_rayleigh(cfg.n, seed);
        case ChannelModel::synthetic_ill_conditioned:
            return gen_ill_conditioned(cfg.n, cfg.channel.kappa_target, seed);
        case ChannelModel::file:
            throw ConfigError("sweep cannot draw channels with model 'file'");
    }
    throw ConfigError("invalid channel model");
}

} // namespace

MseReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();

    // channels are matched across SNR points and schemes within a trial
    std::vector<ChannelMatrix> channels;
    channels.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        channels.push_back(draw_channel(cfg, t));
    }

    MseReport report;
    report.seed = cfg.seed;
    for (std::size_t si = 0; si < cfg.snr_db_grid.size(); ++si) {
        const double snr_db = cfg.snr_db_grid[si];
        const double p_u = std::pow(10.0, snr_db / 10.0);
        const double sigma2 = 1.0;
        for (std::size_t sc = 0; sc < cfg.schemes.size(); ++sc) {
            const Scheme scheme = cfg.schemes[sc];
            double sum_closed = 0.0;
            double sum_emp = 0.0;
            double sum_kappa = 0.0;
            std::map<BitAllocation, std::size_t> alloc_counts;
            std::map<std::size_t, std::size_t> eval_counts;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const ChannelMatrix& h = channels[t];
                BitAllocation b = BitAllocation::uniform(cfg.n, 2);
                std::size_t evals = 1;
                switch (scheme) {
                    case Scheme::one_bit:
                        b = BitAllocation::uniform(cfg.n, 1);
                        break;
                    case Scheme::two_bit:
                        break;
                    case Scheme::infinite:
                        b = BitAllocation::infinite(cfg.n);
                        break;
                    case Scheme::full_search: {
                        const SearchOutcome out =
                            full_search(h, p_u, sigma2, cfg.pm);
                        b = out.b_star;
                        evals = out.evaluations;
                        break;
                    }
                    case Scheme::ga: {
                        GaParams ga = cfg.ga;
                        ga.seed = Rng::derive(cfg.ga.seed, si, t);
                        const SearchOutcome out =
                            ga_search(h, p_u, sigma2, cfg.pm, ga);
                        b = out.b_star;
                        evals = out.evaluations;
                        break;
                    }
                }
                const double j = cost_j(h, b, p_u, sigma2);
                sum_closed += j / double(cfg.n);
                report.detail.push_back(DetailRow{scheme, snr_db, t, b, j});
                Rng emp_rng(Rng::derive(cfg.seed, si * 1024 + t, sc));
                sum_emp += empirical_mse(h, b, p_u, sigma2,
                                         cfg.symbols_per_trial, 1, emp_rng);
                sum_kappa += h.kappa;
                alloc_counts[b] += 1;
                eval_counts[evals] += 1;
            }
            auto modal = [](const auto& counts) {
                auto best = counts.begin();
                for (auto it = counts.begin(); it != counts.end(); ++it)
                    if (it->second > best->second) best = it;
                return best->first;
            };
            report.rows.push_back(MseRow{
                scheme, snr_db, sum_closed / double(cfg.trials),
                sum_emp / double(cfg.trials), modal(alloc_counts),
                modal(eval_counts), sum_kappa / double(cfg.trials)});
        }
    }
    return report;
}

} // namespace adcmimo
