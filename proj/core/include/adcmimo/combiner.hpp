#ifndef ADCMIMO_COMBINER_HPP_
#define ADCMIMO_COMBINER_HPP_

#include "adcmimo/quantization.hpp"

namespace adcmimo {

/// MMSE combiner C (applied as C^H z) together with the closed-form MSE
/// J(b) = tr(I - R_zx^H R_zz^-1 R_zx) and the covariances it came from.
struct CombinerResult {
    CMatrix c;
    double mse;
    CMatrix r_zz;
    CMatrix r_zx;
};

/// R_zx = sqrt(p_u) * W_alpha(b) * H  (unit-power symbols).
CMatrix cross_cov_zx(const ChannelMatrix& h, const BitAllocation& b,
                     double p_u);

/// R_zz = p_u W_a H H^H W_a + sigma2 W_a^2 + diag(quant_noise_cov).
CMatrix cov_zz(const ChannelMatrix& h, const BitAllocation& b, double p_u,
               double sigma2);

CombinerResult mmse_combiner(const ChannelMatrix& h, const BitAllocation& b,
                             double p_u, double sigma2);

/// Closed-form MSE cost; the fitness function for every allocation search.
double cost_j(const ChannelMatrix& h, const BitAllocation& b, double p_u,
              double sigma2);

} // namespace adcmimo

#endif // ADCMIMO_COMBINER_HPP_
