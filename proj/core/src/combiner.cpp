#include "adcmimo/combiner.hpp"

#include <cmath>

namespace adcmimo {

CMatrix cross_cov_zx(const ChannelMatrix& h, const BitAllocation& b,
                     double p_u) {
    const std::size_t n = h.n();
    if (b.size() != n) throw DimensionError("allocation/channel size mismatch");
    if (!(p_u > 0.0)) throw DimensionError("p_u must be > 0");
    const std::vector<double> a = alpha_diag(b);
    const double amp = std::sqrt(p_u);
    CMatrix out = h.h;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) *= amp * a[r];
    return out;
}

CMatrix cov_zz(const ChannelMatrix& h, const BitAllocation& b, double p_u,
               double sigma2) {
    const std::size_t n = h.n();
    if (b.size() != n) throw DimensionError("allocation/channel size mismatch");
    if (!(p_u > 0.0) || !(sigma2 > 0.0))
        throw DimensionError("p_u and sigma2 must be > 0");
    const std::vector<double> a = alpha_diag(b);
    const std::vector<double> nq = quant_noise_cov(h, b, p_u, sigma2);

    CMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            cplx hh{}; // (H H^H)_rc
            for (std::size_t k = 0; k < n; ++k)
                hh += h.h.at(r, k) * std::conj(h.h.at(c, k));
            out.at(r, c) = p_u * a[r] * hh * a[c];
        }
        out.at(r, r) += sigma2 * a[r] * a[r] + nq[r];
    }
    return out;
}

CombinerResult mmse_combiner(const ChannelMatrix& h, const BitAllocation& b,
                             double p_u, double sigma2) {
    const std::size_t n = h.n();
    CMatrix rzz = cov_zz(h, b, p_u, sigma2);
    CMatrix rzx = cross_cov_zx(h, b, p_u);

    CMatrix c = [&] {
        try {
            return hermitian_solve(rzz, rzx);
        } catch (const SingularError& e) {
            throw NotPositiveDefiniteError(e.what());
        }
    }();

    // J = tr(I - R_zx^H R_zz^-1 R_zx), clamped against roundoff negatives
    double mse = double(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx t{};
        for (std::size_t k = 0; k < n; ++k)
            t += std::conj(rzx.at(k, j)) * c.at(k, j);
        mse -= t.real();
    }
    if (mse < 0.0) mse = 0.0;
    return CombinerResult{std::move(c), mse, std::move(rzz), std::move(rzx)};
}

double cost_j(const ChannelMatrix& h, const BitAllocation& b, double p_u,
              double sigma2) {
    return mmse_combiner(h, b, p_u, sigma2).mse;
}

} // namespace adcmimo
