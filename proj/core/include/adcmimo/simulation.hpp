#ifndef ADCMIMO_SIMULATION_HPP_
#define ADCMIMO_SIMULATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "adcmimo/allocation.hpp"

namespace adcmimo {

enum class Scheme { one_bit, two_bit, infinite, full_search, ga };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

struct ChannelSpec {
    std::uint64_t seed = 0;
    ChannelModel model = ChannelModel::synthetic_ill_conditioned;
    double kappa_target = 1000.0;
};

struct SweepConfig {
    std::size_t n = 8;
    std::vector<double> snr_db_grid = {-5, 0, 5, 10, 15, 20, 25, 30};
    std::size_t symbols_per_trial = 400;
    std::size_t trials = 100;
    ChannelSpec channel;
    std::vector<Scheme> schemes = {Scheme::one_bit, Scheme::two_bit,
                                   Scheme::infinite, Scheme::full_search,
                                   Scheme::ga};
    GaParams ga;
    PowerModel pm = PowerModel::default_budget(8);
    std::uint64_t seed = 0;
    /// redraw the channel each trial (default) or hold channel.seed fixed
    bool redraw_channel = true;

    void validate() const;
};

struct MseRow {
    Scheme scheme;
    double snr_db;
    double mse_closed_form; // per-stream (J / N)
    double mse_empirical;   // per-stream
    BitAllocation b_chosen; // modal allocation for search schemes
    std::size_t evaluations;
    double channel_kappa; // mean measured kappa over trials
};

/// One search result per (scheme, snr, trial); backs the optional
/// detail output.
struct DetailRow {
    Scheme scheme;
    double snr_db;
    std::size_t trial;
    BitAllocation b;
    double j; // closed-form J(b), unnormalized
};

struct MseReport {
    std::string normalization = "per-stream"; // MSE divided by N
    std::uint64_t seed = 0;
    std::vector<MseRow> rows;
    std::vector<DetailRow> detail;
};

/// 64-QAM symbols, unit average energy (levels {+-1,+-3,+-5,+-7}/sqrt(42)
/// per axis), n x count matrix.
CMatrix gen_qam64(std::size_t n, std::size_t count_symbols, Rng& rng);

/// Monte-Carlo estimate of E||C^H z - x||^2 / N with the combiner built once
/// and fresh AWGN + quantization noise per trial.
double empirical_mse(const ChannelMatrix& h, const BitAllocation& b,
                     double p_u, double sigma2, std::size_t symbols,
                     std::size_t trials, Rng& rng);

MseReport run_sweep(const SweepConfig& cfg);

} // namespace adcmimo

#endif // ADCMIMO_SIMULATION_HPP_
