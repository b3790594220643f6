#pragma once

#include <vector>

#include "sympoly/domains.hpp"
#include "sympoly/mat2.hpp"
#include "sympoly/types.hpp"

namespace sympoly {

/// Prescribed derivative x = (x_1, ..., x_n) at the origin for an analytic
/// map of the disk into the extended symmetrized polydisc of index n.
struct DerivativeData {
    int n = 3;
    std::vector<Cplx> x;
};

void validate(const DerivativeData& d);

/// One-parameter family of 2x2 Schur-class values W(lambda) = M_{-Z}(lambda B)
/// built from degree-3 derivative data. Z = [[0, sigma],[0, 0]] with
/// sigma = sqrt(1 - |x_dom|/3); when |x_2| > |x_1| the construction runs on
/// the swapped data and conjugates by the flip [[0,1],[1,0]], which swaps the
/// diagonal while preserving norm and determinant. The degenerate case
/// x_1 = x_2 = 0 keeps sigma = 1 (W(lambda) = [[0,1],[-lambda x_3, 0]]).
struct SchurFamily {
    Mat2 Z;
    Mat2 B;
    // closed-form data, stored in the dominant (possibly swapped) order
    std::vector<Cplx> x;  // original data (x_1, x_2, x_3)
    double sigma = 1.0;
    Cplx rho{};
    Cplx l{};  // degree-3 interpolation coefficient l_x
    bool swapped = false;
    bool trivial = false;  // x_1 = x_2 = 0
};

/// Derivative data plus the interpolation coefficient r_x (equals l_x when
/// n = 3). Fully determines the closed-form interpolant.
struct InterpolantSpec {
    DerivativeData data;
    Cplx r{};
};

/// Tuple of 2x2 matrices with pairwise equal determinants, feeding the
/// dimension lifts pi_{2k} and pi_{2k+1}.
struct LiftInput {
    std::vector<Mat2> mats;
};

struct ConditionCheck {
    bool ok = false;
    double margin = 0.0;
};

/// The derivative bound max_j |x_j| / C(n,j) + |x_n| <= 1, necessary for an
/// origin-fixing analytic interpolant; margin = 1 - LHS.
ConditionCheck necessary_condition(const DerivativeData& d);

/// Two-point norm condition: max_j of the H-infinity norms of Phi_j(., y0)
/// does not exceed |lambda0|.
bool two_point_norm_check(Cplx lambda0, const DomainPoint& y0);

/// Closed-form coefficient r_x (three branches on |x_1| vs |x_{n-1}|).
/// Throws DegenerateDenominator when n - |x_dom| - n |x_n|^2 vanishes, which
/// happens only when the derivative bound is tight.
Cplx r_coeff(const DerivativeData& d);

/// The explicit interpolant psi(lambda); psi(0) is the origin and
/// psi'(0) = x for admissible data.
DomainPoint interpolant_eval(const InterpolantSpec& spec, Cplx lambda);

/// Closed-form derivative psi'(lambda); the last coordinate is
/// (x_n + lambda r (2 + lambda conj(x_n) r)) / (1 + lambda conj(x_n) r)^2.
std::vector<Cplx> interpolant_derivative(const InterpolantSpec& spec, Cplx lambda);

/// Builds the Schur family realizing degree-3 data: sigma, the Parrott
/// completion rho of the forced column/row, and the direction matrix B_rho.
SchurFamily build_schur(const DerivativeData& d3);

/// Evaluates W(lambda) along both routes (Moebius transform and the explicit
/// rational closed form); throws ClosedFormMismatch if they disagree beyond
/// kDualPathAlarm, returns the Moebius value.
Mat2 schur_eval(const SchurFamily& f, Cplx lambda);

/// W(lambda) by the rational closed form alone.
Mat2 schur_closed_form(const SchurFamily& f, Cplx lambda);

/// W'(0) = D_{Z^*} B D_Z.
Mat2 schur_wprime0(const SchurFamily& f);

/// pi_{2k+1}: (C(n,1)[B_1]_11, ..., C(n,k)[B_k]_11, C(n,k)[B_k]_22, ...,
/// C(n,1)[B_1]_22, det B_1) with n = 2k+1.
DomainPoint lift_odd(const LiftInput& t);

/// pi_{2k}: as lift_odd with the averaged middle coordinate
/// C(n,k) ([B_k]_11 + [B_k]_22) / 2 and n = 2k.
DomainPoint lift_even(const LiftInput& t);

/// Full realization: closed-form spec plus the Schur family whose lift
/// reproduces it.
struct FullInterpolation {
    InterpolantSpec spec;
    SchurFamily family;
};

/// Degree reduction to n = 3, Schur-family build, and lift with floor(n/2)
/// copies. Throws NotInKn when x violates the K_n constraints.
FullInterpolation interpolate_full(const DerivativeData& d);

/// psi(lambda) through the lifted Schur-family route.
DomainPoint lift_family_eval(const SchurFamily& f, int n, Cplx lambda);

/// psi'(0) of a lifted family, from W(0) and W'(0) alone.
std::vector<Cplx> lift_family_derivative0(const Mat2& w0, const Mat2& wp0, int n);

} // namespace sympoly
