#include "sdnlm/covariance_matrix.hpp"

#include <cmath>

namespace sdnlm {

Complex CovarianceMatrix::at(int row, int col) const {
    switch (row * 3 + col) {
        case 0: return {c11, 0.0};
        case 1: return c12;
        case 2: return c13;
        case 3: return std::conj(c12);
        case 4: return {c22, 0.0};
        case 5: return c23;
        case 6: return std::conj(c13);
        case 7: return std::conj(c23);
        case 8: return {c33, 0.0};
    }
    throw DomainError("CovarianceMatrix::at: index out of range");
}

CovarianceMatrix& CovarianceMatrix::operator+=(const CovarianceMatrix& rhs) {
    c11 += rhs.c11;
    c22 += rhs.c22;
    c33 += rhs.c33;
    c12 += rhs.c12;
    c13 += rhs.c13;
    c23 += rhs.c23;
    return *this;
}

CovarianceMatrix& CovarianceMatrix::operator-=(const CovarianceMatrix& rhs) {
    c11 -= rhs.c11;
    c22 -= rhs.c22;
    c33 -= rhs.c33;
    c12 -= rhs.c12;
    c13 -= rhs.c13;
    c23 -= rhs.c23;
    return *this;
}

CovarianceMatrix& CovarianceMatrix::operator*=(double s) {
    c11 *= s;
    c22 *= s;
    c33 *= s;
    c12 *= s;
    c13 *= s;
    c23 *= s;
    return *this;
}

CovarianceMatrix& CovarianceMatrix::operator/=(double s) {
    c11 /= s;
    c22 /= s;
    c33 /= s;
    c12 /= s;
    c13 /= s;
    c23 /= s;
    return *this;
}

bool CovarianceMatrix::all_finite() const {
    return std::isfinite(c11) && std::isfinite(c22) && std::isfinite(c33) &&
           std::isfinite(c12.real()) && std::isfinite(c12.imag()) &&
           std::isfinite(c13.real()) && std::isfinite(c13.imag()) &&
           std::isfinite(c23.real()) && std::isfinite(c23.imag());
}

double hermitian_det(const CovarianceMatrix& m) {
    // |M| = c11 c22 c33 + 2 Re(c12 c23 conj(c13))
    //       - c11 |c23|^2 - c22 |c13|^2 - c33 |c12|^2
    return m.c11 * m.c22 * m.c33 + 2.0 * std::real(m.c12 * m.c23 * std::conj(m.c13)) -
           m.c11 * std::norm(m.c23) - m.c22 * std::norm(m.c13) - m.c33 * std::norm(m.c12);
}

CovarianceMatrix hermitian_inv(const CovarianceMatrix& m) {
    const double det = hermitian_det(m);
    if (!(det > kDetEpsilon)) {
        throw SingularMatrix("hermitian_inv: determinant not above epsilon");
    }
    const double inv_det = 1.0 / det;
    CovarianceMatrix r;
    r.c11 = (m.c22 * m.c33 - std::norm(m.c23)) * inv_det;
    r.c22 = (m.c11 * m.c33 - std::norm(m.c13)) * inv_det;
    r.c33 = (m.c11 * m.c22 - std::norm(m.c12)) * inv_det;
    r.c12 = (m.c13 * std::conj(m.c23) - m.c12 * m.c33) * inv_det;
    r.c13 = (m.c12 * m.c23 - m.c13 * m.c22) * inv_det;
    r.c23 = (m.c13 * std::conj(m.c12) - m.c11 * m.c23) * inv_det;
    return r;
}

bool is_positive_definite(const CovarianceMatrix& m) {
    const double scale = m.trace();
    if (!(scale > 0.0) || !m.all_finite()) return false;
    const double tol = 1e-12 * scale;
    if (m.c11 <= tol * 1e-6) return false;  // first minor, scaled loosely
    const double minor2 = m.c11 * m.c22 - std::norm(m.c12);
    if (minor2 <= 0.0) return false;
    const double det = hermitian_det(m);
    return det > kDetEpsilon && det > 0.0;
}

CholeskyFactor hermitian_cholesky(const CovarianceMatrix& m) {
    CholeskyFactor f;
    if (!(m.c11 > 0.0)) throw DomainError("cholesky: pivot 1 not positive");
    f.l11 = std::sqrt(m.c11);
    f.l21 = std::conj(m.c12) / f.l11;
    f.l31 = std::conj(m.c13) / f.l11;
    const double d2 = m.c22 - std::norm(f.l21);
    if (!(d2 > 0.0)) throw DomainError("cholesky: pivot 2 not positive");
    f.l22 = std::sqrt(d2);
    f.l32 = (std::conj(m.c23) - f.l31 * std::conj(f.l21)) / f.l22;
    const double d3 = m.c33 - std::norm(f.l31) - std::norm(f.l32);
    if (!(d3 > 0.0)) throw DomainError("cholesky: pivot 3 not positive");
    f.l33 = std::sqrt(d3);
    return f;
}

} // namespace sdnlm
