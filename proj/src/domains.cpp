#include "sympoly/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sympoly/poly.hpp"

namespace sympoly {

DomainPoint DomainPoint::origin(int n) {
    DomainPoint p;
    p.n = n;
    p.y.assign(static_cast<std::size_t>(n) - 1, Cplx(0.0, 0.0));
    p.q = Cplx(0.0, 0.0);
    return p;
}

void validate(const DomainPoint& p) {
    if (p.n < 2) throw std::invalid_argument("DomainPoint: index n must be >= 2");
    if (p.y.size() != static_cast<std::size_t>(p.n) - 1)
        throw std::invalid_argument("DomainPoint: expected n-1 coordinates");
    require_finite(p.y, "DomainPoint");
    require_finite(p.q, "DomainPoint");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "Inside";
        case Verdict::OnBoundaryOrOutside: return "OnBoundaryOrOutside";
        default: return "Indeterminate";
    }
}

DomainPoint symmetrize(std::span<const Cplx> zs) {
    const int n = static_cast<int>(zs.size());
    if (n < 2) throw std::invalid_argument("symmetrize: need at least two entries");
    require_finite(zs, "symmetrize");
    // incremental expansion of prod (1 + z_i t): e[i] accumulates the
    // elementary symmetric function of order i
    std::vector<Cplx> e(static_cast<std::size_t>(n) + 1, Cplx(0.0, 0.0));
    e[0] = Cplx(1.0, 0.0);
    for (int m = 0; m < n; ++m)
        for (int i = m + 1; i >= 1; --i) e[i] += zs[static_cast<std::size_t>(m)] * e[i - 1];
    DomainPoint p;
    p.n = n;
    p.y.assign(e.begin() + 1, e.begin() + n);
    p.q = e[static_cast<std::size_t>(n)];
    return p;
}

Cplx phi(int j, Cplx z, const DomainPoint& y) {
    validate(y);
    if (j < 1 || j > y.n - 1) throw std::invalid_argument("phi: j out of range");
    require_finite(z, "phi");
    const double c = binom(y.n, j);
    const Cplx yj = y.coord(j);
    const Cplx ynj = y.coord(y.n - j);
    const Cplx prod_gap = yj * ynj - c * c * y.q;
    const double scale = std::max({1.0, std::abs(yj * ynj), c * c * std::abs(y.q)});
    if (std::abs(prod_gap) <= 1e-14 * scale) return yj / c;
    const Cplx den = ynj * z - c;
    if (std::abs(den) <= kPoleTol * std::max(1.0, c))
        throw PoleAtZ("phi: z is a pole of Phi_j(., y)");
    return (c * y.q * z - yj) / den;
}

double phi_hinf(int j, const DomainPoint& y) {
    validate(y);
    if (j < 1 || j > y.n - 1) throw std::invalid_argument("phi_hinf: j out of range");
    const double c = binom(y.n, j);
    const Cplx yj = y.coord(j);
    const Cplx ynj = y.coord(y.n - j);
    const double denom = c * c - std::norm(ynj);
    if (denom <= 0.0)
        throw GuardViolated("phi_hinf: |y_{n-j}| >= binom(n, j)");
    return (c * std::abs(yj - std::conj(ynj) * y.q) + std::abs(yj * ynj - c * c * y.q)) / denom;
}

BetaDecomposition beta_solve(const DomainPoint& y) {
    validate(y);
    const double d = 1.0 - std::norm(y.q);
    if (d <= 0.0) throw QOnCircle("beta_solve: |q| >= 1");
    BetaDecomposition b;
    b.betas.resize(static_cast<std::size_t>(y.n) - 1);
    for (int j = 1; j <= y.n - 1; ++j)
        b.betas[static_cast<std::size_t>(j) - 1] =
            (y.coord(j) - std::conj(y.coord(y.n - j)) * y.q) / d;
    return b;
}

DomainPoint point_from_betas(int n, std::span<const Cplx> betas, Cplx q) {
    if (static_cast<int>(betas.size()) != n - 1)
        throw std::invalid_argument("point_from_betas: expected n-1 betas");
    DomainPoint p;
    p.n = n;
    p.q = q;
    p.y.resize(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j <= n - 1; ++j)
        p.y[static_cast<std::size_t>(j) - 1] =
            betas[static_cast<std::size_t>(j) - 1] +
            std::conj(betas[static_cast<std::size_t>(n - j) - 1]) * q;
    return p;
}

MembershipVerdict in_gtilde(const DomainPoint& y) {
    validate(y);
    const double one_minus_q2 = 1.0 - std::norm(y.q);
    double margin = 0.0;
    int bind = 0;
    for (int j = 1; j <= y.n / 2; ++j) {
        const double c = binom(y.n, j);
        const Cplx yj = y.coord(j);
        const Cplx ynj = y.coord(y.n - j);
        const double slack = c * one_minus_q2 - std::abs(ynj - std::conj(yj) * y.q) -
                             std::abs(yj - std::conj(ynj) * y.q);
        if (bind == 0 || slack < margin) {
            margin = slack;
            bind = j;
        }
    }
    const Verdict v = margin >= kStrictBand ? Verdict::Inside : Verdict::OnBoundaryOrOutside;
    return {v, margin, bind};
}

MembershipVerdict in_gammatilde(const DomainPoint& y) {
    validate(y);
    const double aq = std::abs(y.q);
    if (aq > 1.0 + kClosedBand) return {Verdict::OnBoundaryOrOutside, 1.0 - aq, 0};

    const double one_minus_q2 = 1.0 - std::norm(y.q);
    double margin = 0.0;
    int bind = 0;
    for (int j = 1; j <= y.n / 2; ++j) {
        const double c = binom(y.n, j);
        const Cplx yj = y.coord(j);
        const Cplx ynj = y.coord(y.n - j);
        const double slack = c * one_minus_q2 - std::abs(ynj - std::conj(yj) * y.q) -
                             std::abs(yj - std::conj(ynj) * y.q);
        if (bind == 0 || slack < margin) {
            margin = slack;
            bind = j;
        }
    }
    if (aq >= 1.0 - kClosedBand) {
        // |q| on the circle: the pairwise condition degenerates to
        // y_j = conj(y_{n-j}) q and leaves the coordinate caps to check.
        for (int j = 1; j <= y.n - 1; ++j) {
            const double cap = binom(y.n, j) - std::abs(y.coord(j));
            if (cap < margin) {
                margin = cap;
                bind = j;
            }
        }
    }
    const Verdict v = margin >= -kClosedBand ? Verdict::Inside : Verdict::OnBoundaryOrOutside;
    return {v, margin, bind};
}

namespace {

// Minimum modulus over the closed unit disk in the affine variable:
// min_{|w| <= 1} |alpha + beta w| = max(0, |alpha| - |beta|).
struct FaceScan {
    Cplx coeff_z;  // multiplies z in alpha(z) = c - coeff_z * z
    Cplx coeff_w;  // constant part of beta(z) = cq * z - coeff_w
    double c;
    Cplx cq;

    double at(double theta) const {
        const Cplx z = std::polar(1.0, theta);
        const double a = std::abs(Cplx(c, 0.0) - coeff_z * z);
        const double b = std::abs(cq * z - coeff_w);
        return std::max(0.0, a - b);
    }

    // |dm/dtheta| bound
    double lipschitz() const { return std::abs(coeff_z) + std::abs(cq); }
};

/// Shrinks the bracket by repeated sub-grid scans (robust against several
/// basins inside one grid cell), then polishes with golden section.
double refine_min(const FaceScan& f, double lo, double hi) {
    double best = std::min(f.at(lo), f.at(hi));
    for (int round = 0; round < 3 && best >= 0.5 * kBoundaryTol; ++round) {
        constexpr int kSub = 16;
        double round_best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int i = 0; i <= kSub; ++i) {
            const double v = f.at(lo + (hi - lo) * i / kSub);
            if (v < round_best) {
                round_best = v;
                arg = i;
            }
        }
        best = std::min(best, round_best);
        const double width = (hi - lo) / kSub;
        const double mid = lo + (hi - lo) * arg / kSub;
        lo = mid - width;
        hi = mid + width;
    }
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f.at(x1), f2 = f.at(x2);
    best = std::min(best, std::min(f1, f2));
    for (int i = 0; i < 48 && best >= 0.5 * kBoundaryTol; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f.at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f.at(x2);
        }
        best = std::min(best, std::min(f1, f2));
    }
    return best;
}

} // namespace

MembershipVerdict char2_oracle(const DomainPoint& y, int grid_n) {
    validate(y);
    if (grid_n < 8) throw std::invalid_argument("char2_oracle: grid_n must be >= 8");

    double global_min = std::numeric_limits<double>::infinity();
    int bind = 0;
    std::vector<double> m(static_cast<std::size_t>(grid_n));
    std::vector<std::pair<double, int>> candidates;
    const double step = 2.0 * M_PI / grid_n;

    for (int j = 1; j <= y.n / 2; ++j) {
        const double c = binom(y.n, j);
        const Cplx yj = y.coord(j);
        const Cplx ynj = y.coord(y.n - j);
        // two scans cover the faces |z| = 1 and |w| = 1 of the bidisc; a zero
        // curve of the bi-affine polynomial cannot avoid both faces
        for (int face = 0; face < 2; ++face) {
            const FaceScan scan{face == 0 ? yj : ynj, face == 0 ? ynj : yj, c,
                                Cplx(c, 0.0) * y.q};
            for (int i = 0; i < grid_n; ++i) {
                m[static_cast<std::size_t>(i)] = scan.at(i * step);
                if (m[static_cast<std::size_t>(i)] < kBoundaryTol)
                    return {Verdict::OnBoundaryOrOutside, m[static_cast<std::size_t>(i)], j};
                if (m[static_cast<std::size_t>(i)] < global_min) {
                    global_min = m[static_cast<std::size_t>(i)];
                    bind = j;
                }
            }
            // candidates: local minima of the angular profile, plus any node a
            // hidden zero could sit next to (value within one Lipschitz step)
            candidates.clear();
            const double reach = scan.lipschitz() * step + kBoundaryTol;
            for (int i = 0; i < grid_n; ++i) {
                const double here = m[static_cast<std::size_t>(i)];
                const double prev = m[static_cast<std::size_t>((i + grid_n - 1) % grid_n)];
                const double next = m[static_cast<std::size_t>((i + 1) % grid_n)];
                const bool local_min =
                    (here < prev && here <= next) || (here <= prev && here < next);
                if (local_min || here <= reach) candidates.emplace_back(here, i);
            }
            std::sort(candidates.begin(), candidates.end());
            const std::size_t limit = std::min<std::size_t>(candidates.size(), 6);
            for (std::size_t ci = 0; ci < limit; ++ci) {
                const auto [value, i] = candidates[ci];
                if (value > reach && ci > 0) break;  // cannot hide a zero
                const double refined = refine_min(scan, (i - 1) * step, (i + 1) * step);
                if (refined < global_min) {
                    global_min = refined;
                    bind = j;
                }
                if (refined < kBoundaryTol)
                    return {Verdict::OnBoundaryOrOutside, refined, j};
            }
        }
    }
    return {Verdict::Inside, global_min, bind};
}

MembershipVerdict char3(const DomainPoint& y) {
    validate(y);
    double margin = 0.0;
    int bind = 0;
    for (int j = 1; j <= y.n / 2; ++j) {
        const double c = binom(y.n, j);
        const Cplx yj = y.coord(j);
        const Cplx ynj = y.coord(y.n - j);
        const double cross = std::abs(yj * ynj - c * c * y.q);
        const double slack_a =
            c * c - std::norm(ynj) - c * std::abs(yj - std::conj(ynj) * y.q) - cross;
        const double slack_b =
            c * c - std::norm(yj) - c * std::abs(ynj - std::conj(yj) * y.q) - cross;
        const double slack = std::max(slack_a, slack_b);
        if (bind == 0 || slack < margin) {
            margin = slack;
            bind = j;
        }
    }
    const Verdict v = margin >= kStrictBand ? Verdict::Inside : Verdict::OnBoundaryOrOutside;
    return {v, margin, bind};
}

ContractionTuple char5_construct(const DomainPoint& y) {
    validate(y);
    ContractionTuple t;
    t.mats.reserve(static_cast<std::size_t>(y.n / 2));
    for (int j = 1; j <= y.n / 2; ++j) {
        const double c = binom(y.n, j);
        const Cplx a = y.coord(j) / c;
        const Cplx d = y.coord(y.n - j) / c;
        const Cplx p = a * d - y.q;  // required product of the off-diagonals
        // op_norm depends on (b, c) only through |b|^2 + |c|^2 once b c = p
        // is fixed (det is then constant), so |b| = |c| = sqrt(|p|) is the
        // exact minimizer; no search is needed.
        const double r = std::sqrt(std::abs(p));
        const Mat2 b = r > 0.0 ? Mat2{a, Cplx(r, 0.0), p / r, d} : Mat2{a, 0.0, 0.0, d};
        if (op_norm(b) >= 1.0 - 1e-9)
            throw ConstructionFailed(
                "char5_construct: no strict contraction with the required "
                "diagonal and determinant at j = " +
                std::to_string(j));
        t.mats.push_back(b);
    }
    return t;
}

MembershipVerdict in_gn(const DomainPoint& y, bool closed) {
    validate(y);
    MonicPoly p;
    p.coeffs.resize(static_cast<std::size_t>(y.n));
    for (int i = 0; i < y.n; ++i)
        p.coeffs[static_cast<std::size_t>(i)] =
            (i % 2 == 0 ? -1.0 : 1.0) * y.coord(i + 1);
    std::vector<Cplx> rs;
    try {
        rs = roots(p);
    } catch (const NoConvergence&) {
        return {Verdict::Indeterminate, 0.0, 0};
    }
    double max_mod = 0.0;
    int bind = 0;
    for (int i = 0; i < static_cast<int>(rs.size()); ++i) {
        const double mod = std::abs(rs[static_cast<std::size_t>(i)]);
        if (mod > max_mod) {
            max_mod = mod;
            bind = i + 1;
        }
    }
    const double margin = 1.0 - max_mod;
    const bool inside = closed ? margin >= -kStrictBand : margin >= kStrictBand;
    return {inside ? Verdict::Inside : Verdict::OnBoundaryOrOutside, margin, bind};
}

namespace {

bool close_rel(Cplx actual, Cplx expected, double tol) {
    return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
}

/// Shared proportionality pattern of J_n and K_n on coordinates 1..n-1.
bool proportional(int n, const std::vector<Cplx>& v, double tol) {
    const Cplx first = v[0];
    const Cplx last = v[static_cast<std::size_t>(n) - 2];
    const int half = n / 2;
    const int upper = n % 2 == 1 ? half : half - 1;
    for (int j = 2; j <= upper; ++j) {
        const double c = binom(n, j);
        if (!close_rel(v[static_cast<std::size_t>(j) - 1], c * first / double(n), tol))
            return false;
        if (!close_rel(v[static_cast<std::size_t>(n - j) - 1], c * last / double(n), tol))
            return false;
    }
    if (n % 2 == 0 && n >= 4) {
        const double c = binom(n, half);
        if (!close_rel(v[static_cast<std::size_t>(half) - 1],
                       c * (first + last) / (2.0 * n), tol))
            return false;
    }
    return true;
}

} // namespace

bool in_jn(const DomainPoint& y, double tol) {
    validate(y);
    if (y.n < 3) return in_gtilde(y).inside();
    if (!proportional(y.n, y.y, tol)) return false;
    return in_gtilde(y).inside();
}

bool in_kn(std::span<const Cplx> x, double tol) {
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("in_kn: need at least two entries");
    require_finite(x, "in_kn");
    if (n >= 4) {
        std::vector<Cplx> head(x.begin(), x.end() - 1);
        if (!proportional(n, head, tol)) return false;
    }
    const double lead = std::max(std::abs(x[0]), std::abs(x[static_cast<std::size_t>(n) - 2]));
    return lead / n + std::abs(x[static_cast<std::size_t>(n) - 1]) <= 1.0 + kContractionTol;
}

} // namespace sympoly
