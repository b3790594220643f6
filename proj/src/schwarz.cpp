#include "sympoly/schwarz.hpp"

#include <algorithm>
#include <cmath>

namespace sympoly {

namespace {

const Mat2 kFlip = Mat2::antidiag(1.0, 1.0);

// conjugation by the flip swaps both the diagonal and the antidiagonal;
// norm and determinant are preserved
Mat2 flip(const Mat2& m) { return kFlip * m * kFlip; }

} // namespace

void validate(const DerivativeData& d) {
    if (d.n < 2) throw std::invalid_argument("DerivativeData: n must be >= 2");
    if (d.x.size() != static_cast<std::size_t>(d.n))
        throw std::invalid_argument("DerivativeData: expected n entries");
    require_finite(d.x, "DerivativeData");
}

ConditionCheck necessary_condition(const DerivativeData& d) {
    validate(d);
    double lead = 0.0;
    for (int j = 1; j <= d.n - 1; ++j)
        lead = std::max(lead, std::abs(d.x[static_cast<std::size_t>(j) - 1]) / binom(d.n, j));
    const double lhs = lead + std::abs(d.x[static_cast<std::size_t>(d.n) - 1]);
    return {lhs <= 1.0 + kContractionTol, 1.0 - lhs};
}

bool two_point_norm_check(Cplx lambda0, const DomainPoint& y0) {
    const double mod = std::abs(lambda0);
    if (mod <= 0.0 || mod >= 1.0)
        throw std::invalid_argument("two_point_norm_check: need 0 < |lambda0| < 1");
    double worst = 0.0;
    for (int j = 1; j <= y0.n - 1; ++j) worst = std::max(worst, phi_hinf(j, y0));
    return worst <= mod + kContractionTol;
}

Cplx r_coeff(const DerivativeData& d) {
    validate(d);
    const int n = d.n;
    const Cplx x1 = d.x[0];
    const Cplx xl = d.x[static_cast<std::size_t>(n) - 2];
    const Cplx xn = d.x[static_cast<std::size_t>(n) - 1];
    const double a1 = std::abs(x1);
    const double al = std::abs(xl);
    if (a1 == 0.0 && al == 0.0) return Cplx(0.0, 0.0);
    const double dom = std::max(a1, al);
    const double denom = n - dom - n * std::norm(xn);
    if (denom <= 1e-12)
        throw DegenerateDenominator("r_coeff: n - |x_dom| - n |x_n|^2 vanishes");
    return x1 * xl * (n - dom) / (n * dom * denom);
}

namespace {

/// Shared coordinate layout of the closed-form interpolant and its
/// derivative: coordinate j carries C(n,j) x_1 / n up to the middle,
/// C(n,j) x_{n-1} / n past it, and the averaged value at j = n/2 for even n.
std::vector<Cplx> display_coords(int n, Cplx x1, Cplx xl) {
    std::vector<Cplx> c(static_cast<std::size_t>(n) - 1);
    const bool even = n % 2 == 0;
    const int half = n / 2;
    for (int j = 1; j <= n - 1; ++j) {
        Cplx v;
        if (even && j == half)
            v = binom(n, half) * (x1 + xl) / (2.0 * n);
        else if (j <= half)
            v = binom(n, j) * x1 / double(n);
        else
            v = binom(n, j) * xl / double(n);
        c[static_cast<std::size_t>(j) - 1] = v;
    }
    return c;
}

Cplx prefactor_denom(const InterpolantSpec& spec, Cplx lambda) {
    const Cplx xn = spec.data.x[static_cast<std::size_t>(spec.data.n) - 1];
    const Cplx den = Cplx(1.0, 0.0) + lambda * std::conj(xn) * spec.r;
    if (std::abs(den) < kPoleTol)
        throw PoleHit("interpolant: prefactor pole hit");
    return den;
}

} // namespace

DomainPoint interpolant_eval(const InterpolantSpec& spec, Cplx lambda) {
    validate(spec.data);
    require_finite(lambda, "interpolant_eval");
    const int n = spec.data.n;
    const Cplx x1 = spec.data.x[0];
    const Cplx xl = spec.data.x[static_cast<std::size_t>(n) - 2];
    const Cplx xn = spec.data.x[static_cast<std::size_t>(n) - 1];
    const Cplx pref = lambda / prefactor_denom(spec, lambda);

    DomainPoint p;
    p.n = n;
    p.y = display_coords(n, x1, xl);
    for (Cplx& v : p.y) v *= pref;
    p.q = pref * (xn + lambda * spec.r);
    return p;
}

std::vector<Cplx> interpolant_derivative(const InterpolantSpec& spec, Cplx lambda) {
    validate(spec.data);
    require_finite(lambda, "interpolant_derivative");
    const int n = spec.data.n;
    const Cplx x1 = spec.data.x[0];
    const Cplx xl = spec.data.x[static_cast<std::size_t>(n) - 2];
    const Cplx xn = spec.data.x[static_cast<std::size_t>(n) - 1];
    const Cplx den = prefactor_denom(spec, lambda);
    const Cplx den2 = den * den;

    std::vector<Cplx> d = display_coords(n, x1, xl);
    for (Cplx& v : d) v /= den2;
    d.push_back((xn + lambda * spec.r * (2.0 + lambda * std::conj(xn) * spec.r)) / den2);
    return d;
}

SchurFamily build_schur(const DerivativeData& d3) {
    validate(d3);
    if (d3.n != 3) throw std::invalid_argument("build_schur: expects n = 3 data");
    const Cplx x1 = d3.x[0], x2 = d3.x[1], x3 = d3.x[2];
    if (std::max(std::abs(x1), std::abs(x2)) / 3.0 + std::abs(x3) > 1.0 + kContractionTol)
        throw NotInKn("build_schur: derivative bound violated");

    SchurFamily f;
    f.x = {x1, x2, x3};

    if (x1 == Cplx(0.0, 0.0) && x2 == Cplx(0.0, 0.0)) {
        // degenerate limit sigma -> 1 of the generic build; realizes
        // psi(lambda) = (0, 0, lambda x_3) through the same lift
        f.trivial = true;
        f.sigma = 1.0;
        f.rho = Cplx(0.0, 0.0);
        f.l = Cplx(0.0, 0.0);
        f.Z = Mat2::antidiag(Cplx(1.0, 0.0), Cplx(0.0, 0.0));
        f.B = Mat2::antidiag(Cplx(0.0, 0.0), -x3);
        return f;
    }

    f.swapped = std::abs(x2) > std::abs(x1);
    const Cplx a = f.swapped ? x2 : x1;  // dominant coordinate
    const Cplx b = f.swapped ? x1 : x2;
    const double am = std::abs(a);
    const double denom = 3.0 - am - 3.0 * std::norm(x3);
    if (denom <= 1e-12)
        throw DegenerateDenominator("build_schur: 3 - |x_dom| - 3 |x_3|^2 vanishes");

    f.sigma = std::sqrt(1.0 - am / 3.0);
    const double s3a = std::sqrt(3.0 * am);
    const Cplx col_top = a / s3a;
    const Cplx corner = -x3 / f.sigma;
    const Cplx row_end = b / s3a;
    f.rho = parrott_central(col_top, corner, row_end);
    f.l = a * b * (3.0 - am) / (3.0 * am * denom);

    Mat2 z = Mat2::antidiag(Cplx(f.sigma, 0.0), Cplx(0.0, 0.0));
    Mat2 dir{col_top, f.rho, corner, row_end};
    if (f.swapped) {
        z = flip(z);
        dir = flip(dir);
    }
    f.Z = z;
    f.B = dir;
    return f;
}

Mat2 schur_closed_form(const SchurFamily& f, Cplx lambda) {
    const Cplx a = f.swapped ? f.x[1] : f.x[0];
    const Cplx b = f.swapped ? f.x[0] : f.x[1];
    const Cplx x3 = f.x[2];
    const Cplx den = Cplx(1.0, 0.0) + lambda * f.rho * f.sigma;
    if (std::abs(den) < kPoleTol) throw PoleHit("schur_closed_form: pole hit");
    const Cplx pref = lambda / den;
    const Cplx v = -x3 / f.sigma - lambda * f.sigma * f.l;
    const Mat2 w{pref * a / 3.0, Cplx(f.sigma, 0.0) + pref * f.rho * std::abs(a) / 3.0,
                 pref * v, pref * b / 3.0};
    return f.swapped ? flip(w) : w;
}

Mat2 schur_eval(const SchurFamily& f, Cplx lambda) {
    require_finite(lambda, "schur_eval");
    const Mat2 via_mobius = mobius(-f.Z, lambda * f.B);
    const Mat2 via_closed = schur_closed_form(f, lambda);
    if (max_abs_diff(via_mobius, via_closed) > kDualPathAlarm)
        throw ClosedFormMismatch("schur_eval: Moebius and closed-form values disagree");
    return via_mobius;
}

Mat2 schur_wprime0(const SchurFamily& f) {
    return defect_adj(f.Z) * f.B * defect(f.Z);
}

namespace {

Cplx common_det(const std::vector<Mat2>& mats) {
    if (mats.empty()) throw std::invalid_argument("lift: need at least one matrix");
    const Cplx d0 = mats[0].det();
    for (const Mat2& m : mats)
        if (std::abs(m.det() - d0) > kDetAgreeTol * std::max(1.0, std::abs(d0)))
            throw DetMismatch("lift: determinants disagree");
    return d0;
}

} // namespace

DomainPoint lift_odd(const LiftInput& t) {
    const Cplx q = common_det(t.mats);
    const int k = static_cast<int>(t.mats.size());
    const int n = 2 * k + 1;
    DomainPoint p = DomainPoint::origin(n);
    for (int j = 1; j <= k; ++j) {
        const double c = binom(n, j);
        const Mat2& m = t.mats[static_cast<std::size_t>(j) - 1];
        p.y[static_cast<std::size_t>(j) - 1] = c * m.a11;
        p.y[static_cast<std::size_t>(n - j) - 1] = c * m.a22;
    }
    p.q = q;
    return p;
}

DomainPoint lift_even(const LiftInput& t) {
    const Cplx q = common_det(t.mats);
    const int k = static_cast<int>(t.mats.size());
    const int n = 2 * k;
    DomainPoint p = DomainPoint::origin(n);
    for (int j = 1; j < k; ++j) {
        const double c = binom(n, j);
        const Mat2& m = t.mats[static_cast<std::size_t>(j) - 1];
        p.y[static_cast<std::size_t>(j) - 1] = c * m.a11;
        p.y[static_cast<std::size_t>(n - j) - 1] = c * m.a22;
    }
    const Mat2& mid = t.mats[static_cast<std::size_t>(k) - 1];
    p.y[static_cast<std::size_t>(k) - 1] = binom(n, k) * (mid.a11 + mid.a22) / 2.0;
    p.q = q;
    return p;
}

FullInterpolation interpolate_full(const DerivativeData& d) {
    validate(d);
    if (!in_kn(d.x)) throw NotInKn("interpolate_full: x is not in K_n");
    const int n = d.n;
    DerivativeData d3{3,
                      {3.0 * d.x[0] / double(n),
                       3.0 * d.x[static_cast<std::size_t>(n) - 2] / double(n),
                       d.x[static_cast<std::size_t>(n) - 1]}};
    FullInterpolation out{InterpolantSpec{d, r_coeff(d)}, build_schur(d3)};
    return out;
}

DomainPoint lift_family_eval(const SchurFamily& f, int n, Cplx lambda) {
    if (n < 2) throw std::invalid_argument("lift_family_eval: n must be >= 2");
    const Mat2 w = schur_eval(f, lambda);
    LiftInput input{std::vector<Mat2>(static_cast<std::size_t>(n / 2), w)};
    return n % 2 == 1 ? lift_odd(input) : lift_even(input);
}

std::vector<Cplx> lift_family_derivative0(const Mat2& w0, const Mat2& wp0, int n) {
    const int k = n / 2;
    std::vector<Cplx> x(static_cast<std::size_t>(n));
    for (int j = 1; j <= k; ++j) {
        const double c = binom(n, j);
        if (n % 2 == 0 && j == k)
            x[static_cast<std::size_t>(j) - 1] = c * (wp0.a11 + wp0.a22) / 2.0;
        else
            x[static_cast<std::size_t>(j) - 1] = c * wp0.a11;
        if (j < k || n % 2 == 1) x[static_cast<std::size_t>(n - j) - 1] = c * wp0.a22;
    }
    // (det W)'(0) = tr(adj(W(0)) W'(0))
    x[static_cast<std::size_t>(n) - 1] = w0.a22 * wp0.a11 - w0.a12 * wp0.a21 -
                                         w0.a21 * wp0.a12 + w0.a11 * wp0.a22;
    return x;
}

} // namespace sympoly
