#include "adcmimo/channel.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adcmimo/rng.hpp"

namespace adcmimo {

std::string to_string(ChannelModel m) {
    switch (m) {
        case ChannelModel::rayleigh: return "rayleigh";
        case ChannelModel::synthetic_ill_conditioned:
            return "synthetic-ill-conditioned";
        case ChannelModel::file: return "file";
    }
    return "rayleigh";
}

ChannelModel channel_model_from_string(const std::string& s) {
    if (s == "rayleigh") return ChannelModel::rayleigh;
    if (s == "synthetic-ill-conditioned")
        return ChannelModel::synthetic_ill_conditioned;
    if (s == "file") return ChannelModel::file;
    throw FormatError("unknown channel model tag: " + s);
}

ChannelMatrix gen_rayleigh(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw DimensionError("n must be >= 1");
    CMatrix h = gaussian_cmatrix(n, n, 1.0, seed);
    return ChannelMatrix{h, seed, condition_number(h), ChannelModel::rayleigh};
}

namespace {

/// Haar-like random unitary: modified Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    CMatrix g = gaussian_cmatrix(n, n, 1.0, seed);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx proj{};
            for (std::size_t r = 0; r < n; ++r)
                proj += std::conj(g.at(r, prev)) * g.at(r, c);
            for (std::size_t r = 0; r < n; ++r)
                g.at(r, c) -= proj * g.at(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(g.at(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < n; ++r) g.at(r, c) *= inv;
    }
    return g;
}

} // namespace

ChannelMatrix gen_ill_conditioned(std::size_t n, double kappa_target,
                                  std::uint64_t seed) {
    if (n < 2) throw DimensionError("n must be >= 2");
    if (!(kappa_target >= 1.0)) throw BadKappaError("kappa_target must be >= 1");

    const CMatrix u = random_unitary(n, Rng::derive(seed, 0x55));
    const CMatrix v = random_unitary(n, Rng::derive(seed, 0xaa));

    // geometric singular-value profile from 1 down to 1/kappa_target
    std::vector<double> s(n);
    const double ratio =
        (n > 1) ? std::pow(1.0 / kappa_target, 1.0 / double(n - 1)) : 1.0;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::pow(ratio, double(i));
        sum2 += s[i] * s[i];
    }
    // unitaries preserve the Frobenius norm, so scaling s sets the mean
    // squared entry of H to 1
    const double scale = std::sqrt(double(n * n) / sum2);
    for (double& si : s) si *= scale;

    const CMatrix h = u * CMatrix::diagonal(s) * v.adjoint();
    return ChannelMatrix{h, seed, condition_number(h),
                         ChannelModel::synthetic_ill_conditioned};
}

void save_channel(const ChannelMatrix& ch, const std::string& path) {
    std::ostringstream out;
    const std::size_t n = ch.n();
    out << "n " << n << "\n";
    out << "seed " << ch.seed << "\n";
    out << "model_tag " << to_string(ch.model_tag) << "\n";
    out << "h\n";
    char buf[64];
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const cplx e = ch.h.at(r, c);
            std::snprintf(buf, sizeof buf, "%.17g %.17g", e.real(), e.imag());
            out << buf;
            out << (c + 1 == n ? "\n" : " ");
        }
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw IoError("cannot open for writing: " + tmp);
        f << out.str();
        if (!f) throw IoError("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path + ": " + ec.message());
}

ChannelMatrix load_channel(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);

    std::string key;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string tag;
    if (!(f >> key) || key != "n" || !(f >> n))
        throw FormatError("expected 'n <count>'");
    if (!(f >> key) || key != "seed" || !(f >> seed))
        throw FormatError("expected 'seed <integer>'");
    if (!(f >> key) || key != "model_tag" || !(f >> tag))
        throw FormatError("expected 'model_tag <string>'");
    if (!(f >> key) || key != "h") throw FormatError("expected 'h'");
    if (n < 1) throw DimensionError("n must be >= 1");

    std::vector<cplx> entries;
    entries.reserve(n * n);
    double re, im;
    while (f >> re >> im) entries.emplace_back(re, im);
    if (entries.size() != n * n) {
        throw DimensionError("channel data is not n x n");
    }
    CMatrix h(n, n, std::move(entries));
    return ChannelMatrix{h, seed, condition_number(h),
                         channel_model_from_string(tag)};
}

} // namespace adcmimo
