#include "adcmimo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adcmimo/rng.hpp"

namespace adcmimo {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw DimensionError("matrix dimensions must be >= 1");
    }
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {
    check_dims(rows, cols);
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("entry count does not match rows * cols");
    }
    check_finite();
}

void CMatrix::check_finite() const {
    for (const cplx& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw DimensionError("matrix entries must be finite");
        }
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.at(c, r) = std::conj(at(r, c));
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("incompatible product dims");
    CMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = at(r, k);
            if (a == cplx{}) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("incompatible sum dims");
    CMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += rhs.entries_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("incompatible difference dims");
    CMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] -= rhs.entries_[i];
    return out;
}

CMatrix CMatrix::scaled(cplx s) const {
    CMatrix out = *this;
    for (cplx& e : out.entries_) e *= s;
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double CMatrix::frob2() const {
    double s = 0.0;
    for (const cplx& e : entries_) s += std::norm(e);
    return s;
}

cplx CMatrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace needs a square matrix");
    cplx t{};
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CMatrix hermitian_solve(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("A must be square");
    if (b.rows() != n) throw DimensionError("B rows must match A");

    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            asym = std::max(asym, std::abs(a.at(r, c) - std::conj(a.at(c, r))));
    if (asym > 1e-10) {
        throw NotHermitianError("matrix is not Hermitian within 1e-10");
    }

    // Cholesky: A = L L^H, lower triangular L.
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a.at(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l.at(j, k));
        if (!(d > 1e-28)) {
            // pivot magnitude would be sqrt(d) < 1e-14 (or A is indefinite)
            throw SingularError("pivot below 1e-14 during factorization");
        }
        const double ljj = std::sqrt(d);
        l.at(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= l.at(i, k) * std::conj(l.at(j, k));
            l.at(i, j) = s / ljj;
        }
    }

    // Forward substitution L Y = B, then back substitution L^H X = Y.
    CMatrix x = b;
    const std::size_t m = b.cols();
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = x.at(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= l.at(i, k) * x.at(k, c);
            x.at(i, c) = s / l.at(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx s = x.at(ii, c);
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= std::conj(l.at(k, ii)) * x.at(k, c);
            x.at(ii, c) = s / l.at(ii, ii);
        }
    }
    return x;
}

namespace {

/// Jacobi eigenvalue iteration on a Hermitian matrix; returns eigenvalues.
std::vector<double> hermitian_eigenvalues(CMatrix m) {
    const std::size_t n = m.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += std::norm(m.at(p, q));
        if (off < 1e-30 * std::max(1.0, m.frob2())) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m.at(p, q);
                if (std::abs(apq) == 0.0) continue;
                const double app = m.at(p, p).real();
                const double aqq = m.at(q, q).real();
                // unitary 2x2 rotation zeroing (p,q): phase then Jacobi angle
                const cplx phase = apq / std::abs(apq);
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx mkp = m.at(k, p);
                    const cplx mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - std::conj(sp) * mkq;
                    m.at(k, q) = sp * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx mpk = m.at(p, k);
                    const cplx mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - sp * mqk;
                    m.at(q, k) = std::conj(sp) * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m.at(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

} // namespace

std::vector<double> singular_values(const CMatrix& m) {
    // eigenvalues of the Gram matrix; clamp tiny negatives from roundoff
    const bool tall = m.rows() >= m.cols();
    const CMatrix gram = tall ? m.adjoint() * m : m * m.adjoint();
    std::vector<double> ev = hermitian_eigenvalues(gram);
    for (double& v : ev) v = std::sqrt(std::max(v, 0.0));
    return ev;
}

double condition_number(const CMatrix& m) {
    if (m.max_abs() == 0.0) {
        throw DimensionError("condition number of the zero matrix");
    }
    const std::vector<double> sv = singular_values(m);
    const double smax = sv.front();
    const double smin = sv.back();
    if (smin < 1e-300) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

CMatrix gaussian_cmatrix(std::size_t rows, std::size_t cols, double variance,
                         std::uint64_t seed) {
    if (!(variance > 0.0)) throw DimensionError("variance must be > 0");
    Rng rng(seed);
    const double comp_sd = std::sqrt(variance / 2.0);
    std::vector<cplx> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        e.emplace_back(comp_sd * rng.gauss(), comp_sd * rng.gauss());
    }
    return CMatrix(rows, cols, std::move(e));
}

} // namespace adcmimo
