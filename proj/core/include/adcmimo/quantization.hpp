#ifndef ADCMIMO_QUANTIZATION_HPP_
#define ADCMIMO_QUANTIZATION_HPP_

#include <vector>

#include "adcmimo/channel.hpp"
#include "adcmimo/linalg.hpp"
#include "adcmimo/rng.hpp"

namespace adcmimo {

/// Marker for an ideal (unquantized) path: alpha = 1, beta = 0 exactly.
inline constexpr int kInfiniteBits = -1;

/// Per-path ADC resolutions, bits per I and Q component each.
struct BitAllocation {
    std::vector<int> bits;

    static BitAllocation uniform(std::size_t n, int b) {
        return BitAllocation{std::vector<int>(n, b)};
    }
    static BitAllocation infinite(std::size_t n) {
        return uniform(n, kInfiniteBits);
    }

    std::size_t size() const { return bits.size(); }
    bool operator==(const BitAllocation& o) const { return bits == o.bits; }
    /// Lexicographic, used for deterministic tie-breaking.
    bool operator<(const BitAllocation& o) const { return bits < o.bits; }

    void validate() const;

    /// "b1-b2-...-bN", with "inf" for the infinite-resolution marker.
    std::string to_string() const;
};

/// Distortion factor of a non-uniform MMSE quantizer at resolution b:
/// tabulated for b in 1..5, (pi*sqrt(3)/2) * 2^(-2b) beyond, 0 for the
/// infinite marker.
double beta(int b);

/// alpha = 1 - beta.
double alpha(int b);

/// Diagonal of W_alpha(b).
std::vector<double> alpha_diag(const BitAllocation& b);

/// Diagonal quantization-noise covariance:
/// alpha_i * beta_i * (p_u * (H H^H)_ii + sigma2).
std::vector<double> quant_noise_cov(const ChannelMatrix& h,
                                    const BitAllocation& b, double p_u,
                                    double sigma2);

/// AQNM quantization of a received vector (N x 1): W_alpha * r + n_q with
/// n_q a fresh complex Gaussian draw of covariance quant_noise_cov.
std::vector<cplx> quantize(const std::vector<cplx>& r, const ChannelMatrix& h,
                           const BitAllocation& b, double p_u, double sigma2,
                           Rng& rng);

} // namespace adcmimo

#endif // ADCMIMO_QUANTIZATION_HPP_
