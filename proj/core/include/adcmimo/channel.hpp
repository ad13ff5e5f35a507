#ifndef ADCMIMO_CHANNEL_HPP_
#define ADCMIMO_CHANNEL_HPP_

#include <cstdint>
#include <string>

#include "adcmimo/linalg.hpp"

namespace adcmimo {

enum class ChannelModel { rayleigh, synthetic_ill_conditioned, file };

std::string to_string(ChannelModel m);
ChannelModel channel_model_from_string(const std::string& s);

/// A square channel realization with its provenance and measured 2-norm
/// condition number.
struct ChannelMatrix {
    CMatrix h;
    std::uint64_t seed;
    double kappa;
    ChannelModel model_tag;

    std::size_t n() const { return h.rows(); }
};

/// i.i.d. unit-variance complex Gaussian entries.
ChannelMatrix gen_rayleigh(std::size_t n, std::uint64_t seed);

/// H = U diag(s) V^H with random unitaries and a geometric singular-value
/// profile spanning kappa_target, Frobenius-normalized so the mean squared
/// entry is 1.
ChannelMatrix gen_ill_conditioned(std::size_t n, double kappa_target,
                                  std::uint64_t seed);

void save_channel(const ChannelMatrix& ch, const std::string& path);
ChannelMatrix load_channel(const std::string& path);

} // namespace adcmimo

#endif // ADCMIMO_CHANNEL_HPP_
