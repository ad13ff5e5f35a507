#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adcmimo/allocation.hpp"
#include "adcmimo/combiner.hpp"

using namespace adcmimo;

namespace {

ChannelMatrix unit_channel(std::size_t n) {
    return ChannelMatrix{CMatrix::identity(n), 0, 1.0, ChannelModel::file};
}

/// Classical unquantized MMSE: tr((I + (p_u/sigma2) H^H H)^-1).
double unquantized_mse(const ChannelMatrix& h, double p_u, double sigma2) {
    const std::size_t n = h.n();
    const CMatrix gram = (h.h.adjoint() * h.h).scaled(p_u / sigma2);
    const CMatrix a = gram + CMatrix::identity(n);
    return hermitian_solve(a, CMatrix::identity(n)).trace().real();
}

/// All allocations in {1..4}^n, unconstrained.
std::vector<BitAllocation> all_allocations(std::size_t n) {
    std::vector<BitAllocation> out;
    std::vector<int> cur(n, 1);
    while (true) {
        out.push_back(BitAllocation{cur});
        std::size_t i = 0;
        while (i < n && cur[i] == 4) cur[i++] = 1;
        if (i == n) break;
        ++cur[i];
    }
    return out;
}

} // namespace

TEST_CASE("cross_cov_zx: examples") {
    const ChannelMatrix h = gen_rayleigh(3, 4);
    const CMatrix rzx = cross_cov_zx(h, BitAllocation::infinite(3), 1.0);
    CHECK((rzx - h.h).max_abs() == doctest::Approx(0.0));

    const ChannelMatrix s = unit_channel(1);
    CHECK(cross_cov_zx(s, BitAllocation{{1}}, 1.0).at(0, 0).real() ==
          doctest::Approx(0.6366));
    CHECK(cross_cov_zx(s, BitAllocation{{1}}, 4.0).at(0, 0).real() ==
          doctest::Approx(1.2732));
}

TEST_CASE("cov_zz: scalar algebra and identity-channel case") {
    const ChannelMatrix s = unit_channel(1);
    // 2 alpha^2 + 2 alpha beta = 2 alpha
    CHECK(cov_zz(s, BitAllocation{{1}}, 1.0, 1.0).at(0, 0).real() ==
          doctest::Approx(2.0 * 0.6366).epsilon(1e-10));

    const CMatrix z =
        cov_zz(unit_channel(2), BitAllocation::infinite(2), 1.0, 1.0);
    CHECK((z - CMatrix::identity(2).scaled(2.0)).max_abs() ==
          doctest::Approx(0.0));
}

TEST_CASE("cov_zz: Hermitian by construction") {
    const ChannelMatrix h = gen_rayleigh(8, 91);
    const CMatrix z = cov_zz(h, BitAllocation{{1, 2, 3, 4, 4, 3, 2, 1}}, 2.5, 0.7);
    CHECK((z - z.adjoint()).max_abs() < 1e-12);
}

TEST_CASE("mmse_combiner: scalar closed forms") {
    const ChannelMatrix s = unit_channel(1);
    const CombinerResult r1 = mmse_combiner(s, BitAllocation{{1}}, 1.0, 1.0);
    CHECK(r1.c.at(0, 0).real() == doctest::Approx(0.5));
    CHECK(r1.mse == doctest::Approx(1.0 - 0.6366 / 2.0).epsilon(1e-10));
    CHECK(r1.mse == doctest::Approx(0.6817).epsilon(1e-4));

    const CombinerResult r2 = mmse_combiner(s, BitAllocation{{2}}, 1.0, 1.0);
    CHECK(r2.mse == doctest::Approx(1.0 - 0.8825 / 2.0).epsilon(1e-10));
    CHECK(r2.mse == doctest::Approx(0.55875).epsilon(1e-4));
}

TEST_CASE("mmse_combiner: infinite bits reproduce the unquantized MMSE") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ChannelMatrix h = gen_rayleigh(8, seed + 60);
        const double p_u = 3.0, sigma2 = 0.8;
        const CombinerResult r =
            mmse_combiner(h, BitAllocation::infinite(8), p_u, sigma2);
        CHECK(r.mse ==
              doctest::Approx(unquantized_mse(h, p_u, sigma2)).epsilon(1e-10));
    }
}

TEST_CASE("cost_j: decreases when any bit increases (N=4 exhaustive)") {
    const ChannelMatrix h = gen_rayleigh(4, 123);
    for (const BitAllocation& b : all_allocations(4)) {
        const double j = cost_j(h, b, 1.0, 1.0);
        for (std::size_t i = 0; i < 4; ++i) {
            if (b.bits[i] == 4) continue;
            BitAllocation up = b;
            up.bits[i] += 1;
            CHECK(cost_j(h, up, 1.0, 1.0) <= j + 1e-9);
        }
    }
}

TEST_CASE("cost_j: p_u -> 0 limit gives J -> N") {
    const ChannelMatrix h = gen_rayleigh(4, 8);
    CHECK(cost_j(h, BitAllocation{{2, 2, 2, 2}}, 1e-12, 1.0) ==
          doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("cost_j: bounds 0 <= J <= N") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ChannelMatrix h = gen_rayleigh(6, seed);
        const double p_u = std::pow(10.0, double(seed % 5) - 2.0);
        const double j = cost_j(h, BitAllocation{{1, 2, 3, 4, 2, 1}}, p_u, 1.0);
        CHECK(j >= 0.0);
        CHECK(j <= 6.0);
    }
}

TEST_CASE("argmin is invariant to scaling R_zx (N=3 exhaustive)") {
    // gamma-scaled cross covariance changes J but not the minimizer:
    // J_gamma(b) = N - gamma^2 (N - J(b)) is a decreasing affine map of
    // N - J(b), so the ordering of allocations is preserved. Verify the
    // argmin over the exhaustive N=3 set matches between two gammas via
    // the affine identity.
    const ChannelMatrix h = gen_rayleigh(3, 55);
    const double p_u = 2.0, sigma2 = 1.0, gamma = 0.6;
    BitAllocation best_plain{{1, 1, 1}};
    BitAllocation best_scaled{{1, 1, 1}};
    double jp = 1e300, js = 1e300;
    for (const BitAllocation& b : all_allocations(3)) {
        const CombinerResult r = mmse_combiner(h, b, p_u, sigma2);
        const double j_scaled = 3.0 - gamma * gamma * (3.0 - r.mse);
        if (r.mse < jp) {
            jp = r.mse;
            best_plain = b;
        }
        if (j_scaled < js) {
            js = j_scaled;
            best_scaled = b;
        }
    }
    CHECK(best_plain.bits == best_scaled.bits);
}
