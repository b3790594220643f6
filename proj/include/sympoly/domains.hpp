#pragma once

#include <span>
#include <string>
#include <vector>

#include "sympoly/mat2.hpp"
#include "sympoly/types.hpp"

namespace sympoly {

/// Point (y_1, ..., y_{n-1}, q) of the ambient space of the extended
/// symmetrized polydisc with index n >= 2. y holds the first n-1
/// coordinates, q the last.
struct DomainPoint {
    int n = 2;
    std::vector<Cplx> y;
    Cplx q{};

    static DomainPoint origin(int n);
    /// Coordinate by 1-based index; index n yields q.
    Cplx coord(int j) const { return j == n ? q : y.at(static_cast<std::size_t>(j) - 1); }
};

/// Throws if the shape or finiteness invariants are broken.
void validate(const DomainPoint& p);

enum class Verdict { Inside, OnBoundaryOrOutside, Indeterminate };

std::string to_string(Verdict v);

/// Outcome of a membership test. margin is the signed slack of the binding
/// inequality (positive inside), binding_j the 1-based index of the
/// tightest constraint.
struct MembershipVerdict {
    Verdict verdict = Verdict::Indeterminate;
    double margin = 0.0;
    int binding_j = 0;

    bool inside() const { return verdict == Verdict::Inside; }
};

/// Solution of the linear system y_j = beta_j + conj(beta_{n-j}) q.
struct BetaDecomposition {
    std::vector<Cplx> betas;
};

/// Witness tuple B_1, ..., B_[n/2] for condition (5): common determinant q,
/// diagonals carrying y_j / C(n,j) and y_{n-j} / C(n,j), all strict
/// contractions.
struct ContractionTuple {
    std::vector<Mat2> mats;
};

/// Elementary symmetric functions (s_1, ..., s_{n-1}) and the product,
/// assembled as a DomainPoint of index n = zs.size().
DomainPoint symmetrize(std::span<const Cplx> zs);

/// The fractional linear map Phi_j(z, y). The degenerate-product branch
/// (y_j y_{n-j} = C(n,j)^2 q) returns y_j / C(n,j); the excluded pole
/// configuration throws PoleAtZ.
Cplx phi(int j, Cplx z, const DomainPoint& y);

/// Closed-form H-infinity norm of Phi_j(., y):
///   [ C |y_j - conj(y_{n-j}) q| + |y_j y_{n-j} - C^2 q| ] / (C^2 - |y_{n-j}|^2),
/// valid under the guard |y_{n-j}| < C(n,j); throws GuardViolated otherwise.
double phi_hinf(int j, const DomainPoint& y);

/// beta_j = (y_j - conj(y_{n-j}) q) / (1 - |q|^2); throws QOnCircle for |q| >= 1.
BetaDecomposition beta_solve(const DomainPoint& y);

/// Rebuild y_j = beta_j + conj(beta_{n-j}) q from a beta vector.
DomainPoint point_from_betas(int n, std::span<const Cplx> betas, Cplx q);

/// Membership in the open extended symmetrized polydisc, by the pairwise
/// modulus condition |y_{n-j} - conj(y_j) q| + |y_j - conj(y_{n-j}) q| <
/// C(n,j) (1 - |q|^2) for every j <= n/2.
MembershipVerdict in_gtilde(const DomainPoint& y);

/// Membership in the closure. For |q| on the unit circle the linear beta
/// system degenerates; the limiting criterion forces y_j = conj(y_{n-j}) q
/// and checks |y_j| <= C(n,j).
MembershipVerdict in_gammatilde(const DomainPoint& y);

/// One-sided sampling oracle for the zero-freeness condition
///   C(n,j) - y_j z - y_{n-j} w + C(n,j) q z w != 0  on the closed bidisc.
/// The polynomial is bi-affine, so any zero inside the bidisc continues to a
/// zero on one of the two boundary faces |z| = 1 or |w| = 1; each face is
/// scanned with grid_n angles, the remaining affine variable is minimized in
/// closed form, and the best angles are refined by golden section. Certifies
/// failure when a value drops below kBoundaryTol; otherwise reports
/// Inside as sampled. margin carries the smallest modulus found.
MembershipVerdict char2_oracle(const DomainPoint& y, int grid_n);

/// Membership by the either/or modulus inequalities of condition (3).
MembershipVerdict char3(const DomainPoint& y);

/// Constructs the condition-(5) witness tuple. For each j the diagonal and
/// the product of the off-diagonal entries are forced, and the operator norm
/// depends on the free entries only through |b|^2 + |c|^2, minimized at
/// |b| = |c| = sqrt(|b c|). Throws ConstructionFailed when the minimum
/// cannot reach norm < 1 - 1e-9 (boundary proximity or non-membership).
ContractionTuple char5_construct(const DomainPoint& y);

/// Membership in the (open or closed) symmetrized polydisc: all roots of
/// z^n - y_1 z^(n-1) + y_2 z^(n-2) - ... + (-1)^n q inside the disk.
/// margin = 1 - max |root|; Indeterminate if the root finder fails.
MembershipVerdict in_gn(const DomainPoint& y, bool closed = false);

/// Proportionality-constrained subset J_n of the extended domain.
bool in_jn(const DomainPoint& y, double tol = kPropTol);

/// The K_n constraint set on x in C^n: the J_n-style proportionality rules
/// plus max{|x_1|/n, |x_{n-1}|/n} + |x_n| <= 1.
bool in_kn(std::span<const Cplx> x, double tol = kPropTol);

} // namespace sympoly
