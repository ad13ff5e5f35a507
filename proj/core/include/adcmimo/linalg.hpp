#ifndef ADCMIMO_LINALG_HPP_
#define ADCMIMO_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "adcmimo/errors.hpp"

namespace adcmimo {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Entries are validated finite on
/// construction; instances are treated as immutable values by the rest of
/// the library.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<cplx>& entries() const { return entries_; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(cplx s) const;

    double max_abs() const;

    /// Frobenius norm squared.
    double frob2() const;

    /// Trace (square matrices only).
    cplx trace() const;

    void check_finite() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> entries_;
};

/// Solve A X = B for Hermitian positive-definite A via Cholesky.
/// Throws NotHermitianError if max |A - A^H| > 1e-10, SingularError if a
/// pivot falls below 1e-14.
CMatrix hermitian_solve(const CMatrix& a, const CMatrix& b);

/// 2-norm condition number sigma_max / sigma_min. Returns +inf when
/// sigma_min < 1e-300.
double condition_number(const CMatrix& m);

/// Singular values in descending order (via Jacobi eigenvalues of M^H M).
std::vector<double> singular_values(const CMatrix& m);

/// i.i.d. circularly-symmetric complex Gaussian entries with the given
/// per-entry variance (variance/2 on each of the real and imaginary parts).
CMatrix gaussian_cmatrix(std::size_t rows, std::size_t cols, double variance,
                         std::uint64_t seed);

} // namespace adcmimo

#endif // ADCMIMO_LINALG_HPP_
