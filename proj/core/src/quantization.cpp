#include "adcmimo/quantization.hpp"

#include <cmath>
#include <string>

namespace adcmimo {

void BitAllocation::validate() const {
    for (int b : bits) {
        if (b != kInfiniteBits && b < 1) {
            throw BadResolutionError("resolution must be >= 1 or infinite");
        }
    }
}

std::string BitAllocation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) s += '-';
        s += (bits[i] == kInfiniteBits) ? "inf" : std::to_string(bits[i]);
    }
    return s;
}

double beta(int b) {
    // tabulated values for a non-uniform MMSE quantizer, b = 1..5
    static constexpr double kTable[5] = {0.3634, 0.1175, 0.03454, 0.009497,
                                         0.002499};
    if (b == kInfiniteBits) return 0.0;
    if (b < 1) throw BadResolutionError("resolution must be >= 1");
    if (b <= 5) return kTable[b - 1];
    // pi*sqrt(3)/2 * 2^(-2b)
    return 2.7206990463513268 * std::exp2(-2.0 * b);
}

double alpha(int b) { return 1.0 - beta(b); }

std::vector<double> alpha_diag(const BitAllocation& b) {
    b.validate();
    std::vector<double> d(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) d[i] = alpha(b.bits[i]);
    return d;
}

std::vector<double> quant_noise_cov(const ChannelMatrix& h,
                                    const BitAllocation& b, double p_u,
                                    double sigma2) {
    const std::size_t n = h.n();
    if (b.size() != n) throw DimensionError("allocation/channel size mismatch");
    if (!(p_u > 0.0) || !(sigma2 > 0.0))
        throw DimensionError("p_u and sigma2 must be > 0");
    b.validate();
    std::vector<double> cov(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row_energy = 0.0; // (H H^H)_ii
        for (std::size_t j = 0; j < n; ++j) row_energy += std::norm(h.h.at(i, j));
        cov[i] = alpha(b.bits[i]) * beta(b.bits[i]) *
                 (p_u * row_energy + sigma2);
    }
    return cov;
}

std::vector<cplx> quantize(const std::vector<cplx>& r, const ChannelMatrix& h,
                           const BitAllocation& b, double p_u, double sigma2,
                           Rng& rng) {
    const std::size_t n = h.n();
    if (r.size() != n || b.size() != n)
        throw DimensionError("vector/allocation/channel size mismatch");
    const std::vector<double> cov = quant_noise_cov(h, b, p_u, sigma2);
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = alpha(b.bits[i]);
        cplx nq{0.0, 0.0};
        if (cov[i] > 0.0) {
            const double comp_sd = std::sqrt(cov[i] / 2.0);
            nq = cplx{comp_sd * rng.gauss(), comp_sd * rng.gauss()};
        }
        z[i] = a * r[i] + nq;
    }
    return z;
}

} // namespace adcmimo
