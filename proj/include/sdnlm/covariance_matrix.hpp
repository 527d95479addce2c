#ifndef SDNLM_COVARIANCE_MATRIX_HPP
#define SDNLM_COVARIANCE_MATRIX_HPP

#include <complex>

#include "sdnlm/errors.hpp"

namespace sdnlm {

using Complex = std::complex<double>;

/// 3x3 Hermitian matrix stored as its upper triangle: real diagonal
/// c11, c22, c33 and complex cross terms c12, c13, c23.  The lower
/// triangle is implied by conjugate symmetry, so the type is Hermitian
/// by construction.
struct CovarianceMatrix {
    double c11 = 0.0;
    double c22 = 0.0;
    double c33 = 0.0;
    Complex c12{0.0, 0.0};
    Complex c13{0.0, 0.0};
    Complex c23{0.0, 0.0};

    static CovarianceMatrix identity() {
        CovarianceMatrix m;
        m.c11 = m.c22 = m.c33 = 1.0;
        return m;
    }

    static CovarianceMatrix diagonal(double a, double b, double c) {
        CovarianceMatrix m;
        m.c11 = a;
        m.c22 = b;
        m.c33 = c;
        return m;
    }

    /// Full-matrix accessor, row/col in {0,1,2}.
    Complex at(int row, int col) const;

    double trace() const { return c11 + c22 + c33; }

    CovarianceMatrix& operator+=(const CovarianceMatrix& rhs);
    CovarianceMatrix& operator-=(const CovarianceMatrix& rhs);
    CovarianceMatrix& operator*=(double s);
    CovarianceMatrix& operator/=(double s);

    friend CovarianceMatrix operator+(CovarianceMatrix lhs, const CovarianceMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend CovarianceMatrix operator-(CovarianceMatrix lhs, const CovarianceMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend CovarianceMatrix operator*(CovarianceMatrix lhs, double s) {
        lhs *= s;
        return lhs;
    }
    friend CovarianceMatrix operator*(double s, CovarianceMatrix rhs) {
        rhs *= s;
        return rhs;
    }

    bool all_finite() const;
};

// Absolute determinant floor below which a matrix is treated as singular.
inline constexpr double kDetEpsilon = 1e-300;

/// Determinant via the closed 3x3 Hermitian expansion.  Real by
/// construction; may come out <= 0 for inputs that are not positive
/// definite, callers validate.
double hermitian_det(const CovarianceMatrix& m);

/// Inverse via the Hermitian-specialized adjugate.  Throws
/// SingularMatrix when the determinant is at or below kDetEpsilon.
CovarianceMatrix hermitian_inv(const CovarianceMatrix& m);

/// Relative positive-definiteness test: all leading principal minors
/// positive with a tolerance scaled by the trace.
bool is_positive_definite(const CovarianceMatrix& m);

/// Lower-triangular complex Cholesky factor L with m = L L^H.
/// Throws DomainError when a pivot is not strictly positive.
struct CholeskyFactor {
    double l11, l22, l33;
    Complex l21, l31, l32;
};
CholeskyFactor hermitian_cholesky(const CovarianceMatrix& m);

} // namespace sdnlm

#endif
