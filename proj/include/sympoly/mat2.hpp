#pragma once

#include <algorithm>
#include <cmath>

#include "sympoly/types.hpp"

namespace sympoly {

/// 2x2 complex matrix with value semantics. Everything downstream (defect
/// operators, Moebius transformations, Schur families, contraction tuples)
/// is built from this type; no general linear algebra is needed.
struct Mat2 {
    Cplx a11{}, a12{}, a21{}, a22{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(Cplx a, Cplx d) { return {a, 0.0, 0.0, d}; }
    /// [[0, b],[c, 0]]
    static Mat2 antidiag(Cplx b, Cplx c) { return {0.0, b, c, 0.0}; }

    Cplx det() const { return a11 * a22 - a12 * a21; }
    Cplx trace() const { return a11 + a22; }
    double frobenius_sq() const {
        return std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22);
    }

    /// Conjugate transpose.
    Mat2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    /// Adjugate: adj(A) * A = det(A) * I.
    Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }
    friend Mat2 operator-(const Mat2& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Mat2 operator*(Cplx s, const Mat2& x) {
        return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
    }
};

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    return std::max(std::max(std::abs(x.a11 - y.a11), std::abs(x.a12 - y.a12)),
                    std::max(std::abs(x.a21 - y.a21), std::abs(x.a22 - y.a22)));
}

/// Largest singular value. For a 2x2 matrix the pair (sigma1, sigma2) is
/// determined by T = ||A||_F^2 = sigma1^2 + sigma2^2 and D = |det A| =
/// sigma1 * sigma2, so sigma1^2 = (T + sqrt(T^2 - 4 D^2)) / 2.
inline double op_norm(const Mat2& m) {
    const double t = m.frobenius_sq();
    const double d = std::abs(m.det());
    const double disc = std::max(0.0, t * t - 4.0 * d * d);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

/// PSD square root of a Hermitian PSD matrix via the trace/det closed form:
/// sqrt(A) = (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A)).
/// Eigenvalues of the result are (lambda_i + s)/denominator >= 0.
inline Mat2 psd_sqrt(const Mat2& a) {
    const double t = std::max(0.0, a.trace().real());
    const double d = std::max(0.0, a.det().real());
    const double s = std::sqrt(d);
    const double denom_sq = t + 2.0 * s;
    if (denom_sq <= 1e-30) return Mat2::zero();
    const double inv = 1.0 / std::sqrt(denom_sq);
    Mat2 r = a + Mat2::diag(s, s);
    return Cplx(inv, 0.0) * r;
}

/// Defect operator D_Z = (1 - Z^* Z)^(1/2) of a contraction.
inline Mat2 defect(const Mat2& z) {
    if (op_norm(z) > 1.0 + kContractionTol)
        throw NotAContraction("defect: operator norm exceeds 1");
    return psd_sqrt(Mat2::identity() - z.adjoint() * z);
}

/// D_{Z^*} = (1 - Z Z^*)^(1/2).
inline Mat2 defect_adj(const Mat2& z) {
    if (op_norm(z) > 1.0 + kContractionTol)
        throw NotAContraction("defect_adj: operator norm exceeds 1");
    return psd_sqrt(Mat2::identity() - z * z.adjoint());
}

inline Mat2 inverse(const Mat2& m) {
    const Cplx d = m.det();
    const double scale = std::max(1.0, m.frobenius_sq());
    if (std::abs(d) < 1e-14 * scale)
        throw SingularResolvent("inverse: matrix is numerically singular");
    return (1.0 / d) * m.adjugate();
}

/// Matrix Moebius transformation of the 2x2 contractive ball,
///   M_Z(X) = -Z + D_{Z^*} X (1 - Z^* X)^(-1) D_Z,
/// the ball automorphism sending Z to 0, with inverse M_{-Z}. Z with norm
/// exactly 1 is accepted as long as the resolvent stays regular; this admits
/// the degenerate Schur families used by the interpolant construction.
inline Mat2 mobius(const Mat2& z, const Mat2& x) {
    if (op_norm(z) > 1.0 + kContractionTol)
        throw NotAContraction("mobius: base point is not a contraction");
    if (op_norm(x) > 1.0 + kContractionTol)
        throw NotAContraction("mobius: argument is not a contraction");
    const Mat2 resolvent = Mat2::identity() - z.adjoint() * x;
    return -z + defect_adj(z) * x * inverse(resolvent) * defect(z);
}

/// Central Parrott completion of the 2x2 scalar corner problem: given the
/// column (p, r) and the row (r, s), both contractive, fills the top-right
/// entry of [[p, q],[r, s]] with q = -p conj(r) s / (1 - |r|^2).
///
/// Writing c = sqrt(1 - |r|^2), p = c a, s = c b factors the completed
/// matrix as diag(a, 1) * [[c, -conj(r)],[r, c]] * diag(1, b); the middle
/// factor is unitary, so the result is always a contraction.
inline Cplx parrott_central(Cplx p, Cplx r, Cplx s) {
    const double col = std::norm(p) + std::norm(r);
    const double row = std::norm(r) + std::norm(s);
    const double bound = 1.0 + 2.0 * kContractionTol;
    if (col > bound || row > bound)
        throw RowColumnNotContractive("parrott_central: column or row exceeds unit norm");
    const double denom = 1.0 - std::norm(r);
    // |r| = 1 forces p = 0; any admissible q works and 0 is the canonical one.
    if (denom <= kContractionTol) return Cplx(0.0, 0.0);
    return -p * std::conj(r) * s / denom;
}

} // namespace sympoly
