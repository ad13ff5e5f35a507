#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "adcmimo/simulation.hpp"

using namespace adcmimo;

TEST_CASE("gen_qam64: 64 distinct points, unit energy, zero mean") {
    Rng rng(9);
    const CMatrix x = gen_qam64(1, 100000, rng);
    std::set<std::pair<double, double>> points;
    double energy = 0.0;
    cplx mean{};
    for (const cplx& s : x.entries()) {
        points.insert({s.real(), s.imag()});
        energy += std::norm(s);
        mean += s;
    }
    CHECK(points.size() == 64);
    energy /= 1e5;
    CHECK(energy == doctest::Approx(1.0).epsilon(0.01));
    mean /= 1e5;
    CHECK(std::abs(mean.real()) < 0.01);
    CHECK(std::abs(mean.imag()) < 0.01);
}

TEST_CASE("empirical_mse: matches the closed form within 2%") {
    const ChannelMatrix h = gen_ill_conditioned(8, 1000.0, 5);
    const BitAllocation b{{1, 2, 3, 4, 2, 2, 1, 2}};
    const double p_u = 10.0; // SNR 10 dB, sigma2 = 1
    Rng rng(31);
    const double emp = empirical_mse(h, b, p_u, 1.0, 400, 100, rng);
    const double closed = cost_j(h, b, p_u, 1.0) / 8.0;
    CHECK(emp == doctest::Approx(closed).epsilon(0.02));
}

TEST_CASE("empirical_mse: noiseless invertible limit") {
    const ChannelMatrix h = gen_ill_conditioned(4, 2.0, 8); // well-conditioned
    Rng rng(3);
    const double emp =
        empirical_mse(h, BitAllocation::infinite(4), 1.0, 1e-13, 50, 5, rng);
    CHECK(emp < 1e-6);
}

TEST_CASE("empirical_mse: more trials shrink the closed-form deviation") {
    const ChannelMatrix h = gen_ill_conditioned(8, 1000.0, 14);
    const BitAllocation b = BitAllocation::uniform(8, 2);
    const double closed = cost_j(h, b, 10.0, 1.0) / 8.0;
    auto mean_abs_dev = [&](std::size_t trials) {
        double acc = 0.0;
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            Rng rng(seed);
            acc += std::abs(empirical_mse(h, b, 10.0, 1.0, 50, trials, rng) -
                            closed);
        }
        return acc / 8.0;
    };
    CHECK(mean_abs_dev(16) < mean_abs_dev(1));
}

namespace {

SweepConfig small_sweep() {
    SweepConfig cfg;
    cfg.n = 4;
    cfg.snr_db_grid = {0.0, 10.0};
    cfg.symbols_per_trial = 20;
    cfg.trials = 3;
    cfg.channel.kappa_target = 800.0;
    cfg.pm = PowerModel::default_budget(4);
    cfg.ga.k = 8;
    cfg.ga.t = 1e-300;
    return cfg;
}

} // namespace

TEST_CASE("run_sweep: single scheme, single SNR, single trial") {
    SweepConfig cfg = small_sweep();
    cfg.schemes = {Scheme::two_bit};
    cfg.snr_db_grid = {5.0};
    cfg.trials = 1;
    const MseReport rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].b_chosen.bits == std::vector<int>{2, 2, 2, 2});
    CHECK(rep.rows[0].scheme == Scheme::two_bit);
}

TEST_CASE("run_sweep: closed-form scheme ordering at every SNR") {
    const MseReport rep = run_sweep(small_sweep());
    REQUIRE(rep.rows.size() == 10); // 5 schemes x 2 SNRs
    for (const double snr : {0.0, 10.0}) {
        double mse[5];
        for (const MseRow& row : rep.rows) {
            if (row.snr_db == snr) mse[std::size_t(row.scheme)] = row.mse_closed_form;
        }
        CHECK(mse[std::size_t(Scheme::infinite)] <=
              mse[std::size_t(Scheme::full_search)] + 1e-9);
        CHECK(mse[std::size_t(Scheme::full_search)] <=
              mse[std::size_t(Scheme::ga)] + 1e-9);
        CHECK(mse[std::size_t(Scheme::ga)] <=
              mse[std::size_t(Scheme::two_bit)] + 1e-9);
        CHECK(mse[std::size_t(Scheme::two_bit)] <=
              mse[std::size_t(Scheme::one_bit)] + 1e-9);
    }
}

TEST_CASE("run_sweep: MSE non-increasing in SNR per scheme") {
    SweepConfig cfg = small_sweep();
    cfg.snr_db_grid = {-5.0, 5.0, 15.0, 25.0};
    const MseReport rep = run_sweep(cfg);
    for (const Scheme s :
         {Scheme::one_bit, Scheme::two_bit, Scheme::infinite,
          Scheme::full_search, Scheme::ga}) {
        double prev = 1e300;
        for (const MseRow& row : rep.rows) {
            if (row.scheme != s) continue;
            CHECK(row.mse_closed_form <= prev + 1e-9);
            prev = row.mse_closed_form;
        }
    }
}

TEST_CASE("run_sweep: GA evaluation count with Table II defaults, N=8") {
    SweepConfig cfg;
    cfg.n = 8;
    cfg.snr_db_grid = {10.0};
    cfg.symbols_per_trial = 10;
    cfg.trials = 2;
    cfg.schemes = {Scheme::ga};
    cfg.pm = PowerModel::default_budget(8);
    cfg.ga = GaParams::defaults_for(8);
    cfg.ga.t = 1e-300;
    const MseReport rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].evaluations == 324);
}

TEST_CASE("run_sweep: deterministic per seed") {
    const SweepConfig cfg = small_sweep();
    const MseReport a = run_sweep(cfg);
    const MseReport b = run_sweep(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].mse_closed_form == b.rows[i].mse_closed_form);
        CHECK(a.rows[i].mse_empirical == b.rows[i].mse_empirical);
        CHECK(a.rows[i].b_chosen.bits == b.rows[i].b_chosen.bits);
    }
}

TEST_CASE("SweepConfig: validation rejects bad grids") {
    SweepConfig cfg = small_sweep();
    cfg.snr_db_grid = {};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.snr_db_grid = {5.0, 5.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
