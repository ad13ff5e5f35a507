#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "adcmimo/channel.hpp"

using namespace adcmimo;

TEST_CASE("gen_rayleigh: reproducible 1x1 scalar") {
    const ChannelMatrix a = gen_rayleigh(1, 5);
    const ChannelMatrix b = gen_rayleigh(1, 5);
    CHECK(a.h.at(0, 0) == b.h.at(0, 0));
    CHECK(a.model_tag == ChannelModel::rayleigh);
}

TEST_CASE("gen_rayleigh: kappa finite and recorded") {
    const ChannelMatrix ch = gen_rayleigh(8, 11);
    CHECK(std::isfinite(ch.kappa));
    CHECK(ch.kappa == doctest::Approx(condition_number(ch.h)).epsilon(1e-6));
}

TEST_CASE("gen_rayleigh: empirical unit variance") {
    double var = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChannelMatrix ch = gen_rayleigh(10, seed);
        for (const cplx& e : ch.h.entries()) var += std::norm(e);
        count += 100;
    }
    var /= double(count);
    CHECK(var > 0.98);
    CHECK(var < 1.02);
}

TEST_CASE("gen_ill_conditioned: kappa hits the target") {
    const ChannelMatrix ch = gen_ill_conditioned(8, 1000.0, 7);
    CHECK(ch.kappa > 990.0);
    CHECK(ch.kappa < 1010.0);
}

TEST_CASE("gen_ill_conditioned: kappa grid property") {
    for (const double kt : {500.0, 1000.0, 5000.0}) {
        for (const int n : {4, 8, 12}) {
            const ChannelMatrix ch =
                gen_ill_conditioned(std::size_t(n), kt, 3 * n + 1);
            CHECK(ch.kappa == doctest::Approx(kt).epsilon(0.01));
        }
    }
}

TEST_CASE("gen_ill_conditioned: degenerate spectrum is unitary up to scale") {
    const ChannelMatrix ch = gen_ill_conditioned(2, 1.0, 9);
    CHECK(ch.kappa == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gen_ill_conditioned: Frobenius normalization over 100 draws") {
    double acc = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChannelMatrix ch = gen_ill_conditioned(8, 1000.0, seed);
        acc += ch.h.frob2() / 64.0;
    }
    acc /= 100.0;
    CHECK(acc > 0.95);
    CHECK(acc < 1.05);
}

TEST_CASE("gen_ill_conditioned: rejects bad kappa") {
    CHECK_THROWS_AS(gen_ill_conditioned(4, 0.5, 1), BadKappaError);
}

TEST_CASE("generators: distinct seeds give distinct channels") {
    std::set<double> seen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        seen.insert(gen_rayleigh(4, seed).h.at(0, 0).real());
        seen.insert(gen_ill_conditioned(4, 700.0, seed).h.at(0, 0).real());
    }
    CHECK(seen.size() == 200);
}

TEST_CASE("save/load: round-trip") {
    const std::string path = "chan_roundtrip.tmp.chan";
    const ChannelMatrix ch = gen_ill_conditioned(5, 800.0, 21);
    save_channel(ch, path);
    const ChannelMatrix back = load_channel(path);
    CHECK((ch.h - back.h).max_abs() <= 1e-15);
    CHECK(back.seed == ch.seed);
    CHECK(back.model_tag == ch.model_tag);
    CHECK(back.kappa == doctest::Approx(ch.kappa).epsilon(1e-9));
    std::remove(path.c_str());
}

TEST_CASE("load: non-square data is a DimensionError") {
    const std::string path = "chan_badshape.tmp.chan";
    {
        std::ofstream f(path);
        f << "n 3\nseed 0\nmodel_tag file\nh\n";
        f << "1 0 0 0\n0 0 1 0\n0 0 0 0\n"; // 3 rows x 2 cols
    }
    CHECK_THROWS_AS(load_channel(path), DimensionError);
    std::remove(path.c_str());
}

TEST_CASE("load: hand-written identity has kappa 1") {
    const std::string path = "chan_identity.tmp.chan";
    {
        std::ofstream f(path);
        f << "n 2\nseed 0\nmodel_tag file\nh\n";
        f << "1 0 0 0\n0 0 1 0\n";
    }
    const ChannelMatrix ch = load_channel(path);
    CHECK(ch.kappa == doctest::Approx(1.0));
    std::remove(path.c_str());
}

TEST_CASE("load: missing file and malformed header") {
    CHECK_THROWS_AS(load_channel("does_not_exist.chan"), IoError);
    const std::string path = "chan_malformed.tmp.chan";
    {
        std::ofstream f(path);
        f << "rows 2\n";
    }
    CHECK_THROWS_AS(load_channel(path), FormatError);
    std::remove(path.c_str());
}
