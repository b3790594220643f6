#include "sympoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "sympoly/geometry.hpp"
#include "sympoly/json_io.hpp"
#include "sympoly/schwarz.hpp"

namespace sympoly {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

constexpr double kInsideHeadroom = 1e-6;  // keeps constructive samples off the boundary

// uniform on the triangle a + b < 1 by folding the unit square
void triangle(Rng& rng, double& a, double& b) {
    a = rng.u01();
    b = rng.u01();
    if (a + b > 1.0) {
        a = 1.0 - a;
        b = 1.0 - b;
    }
}

DomainPoint sample_beta_flavor(const SampleConfig& cfg, int index, bool near) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    const int n = cfg.n;
    const Cplx q = rng.disk(0.95);
    std::vector<Cplx> betas(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j <= n / 2; ++j) {
        const double cap = binom(n, j);
        double a, b;
        triangle(rng, a, b);
        if (near) {
            const double target = 1.0 - cfg.near_eps;
            const double s = std::max(a + b, 1e-12);
            a *= target / s;
            b *= target / s;
        } else {
            const double s = a + b;
            if (s > 1.0 - kInsideHeadroom) {
                const double shrink = (1.0 - kInsideHeadroom) / s;
                a *= shrink;
                b *= shrink;
            }
        }
        if (2 * j == n) {
            const double t = near ? 1.0 - cfg.near_eps : rng.u01() * (1.0 - kInsideHeadroom);
            betas[static_cast<std::size_t>(j) - 1] = rng.circle(cap * t / 2.0);
        } else {
            betas[static_cast<std::size_t>(j) - 1] = rng.circle(cap * a);
            betas[static_cast<std::size_t>(n - j) - 1] = rng.circle(cap * b);
        }
    }
    return point_from_betas(n, betas, q);
}

DomainPoint sample_poly_flavor(const SampleConfig& cfg, int index, bool near) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    std::vector<Cplx> zs(static_cast<std::size_t>(cfg.n));
    for (Cplx& z : zs)
        z = near ? rng.circle(1.0 - cfg.near_eps) : rng.disk(1.0 - kInsideHeadroom);
    return symmetrize(zs);
}

DomainPoint sample_ambient_one(const SampleConfig& cfg, int index) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    DomainPoint p = DomainPoint::origin(cfg.n);
    for (int j = 1; j <= cfg.n - 1; ++j)
        p.y[static_cast<std::size_t>(j) - 1] = rng.disk(cfg.box_scale * binom(cfg.n, j));
    p.q = rng.disk(cfg.box_scale);
    return p;
}

} // namespace

DomainPoint sample_point(const SampleConfig& cfg, int index) {
    switch (cfg.mode) {
        case SampleMode::InsideBeta: return sample_beta_flavor(cfg, index, false);
        case SampleMode::NearBoundary: return sample_beta_flavor(cfg, index, true);
        case SampleMode::InsidePolydisc: return sample_poly_flavor(cfg, index, false);
        case SampleMode::AmbientBox: return sample_ambient_one(cfg, index);
    }
    throw std::invalid_argument("sample_point: unknown mode");
}

std::vector<DomainPoint> sample_inside_gtilde(const SampleConfig& cfg) {
    if (cfg.mode != SampleMode::InsideBeta && cfg.mode != SampleMode::NearBoundary)
        throw std::invalid_argument("sample_inside_gtilde: mode must be InsideBeta or NearBoundary");
    std::vector<DomainPoint> out;
    out.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i)
        out.push_back(sample_beta_flavor(cfg, i, cfg.mode == SampleMode::NearBoundary));
    return out;
}

std::vector<DomainPoint> sample_inside_gn(const SampleConfig& cfg) {
    if (cfg.mode != SampleMode::InsidePolydisc && cfg.mode != SampleMode::NearBoundary)
        throw std::invalid_argument(
            "sample_inside_gn: mode must be InsidePolydisc or NearBoundary");
    std::vector<DomainPoint> out;
    out.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i)
        out.push_back(sample_poly_flavor(cfg, i, cfg.mode == SampleMode::NearBoundary));
    return out;
}

std::vector<DomainPoint> sample_ambient(const SampleConfig& cfg) {
    std::vector<DomainPoint> out;
    out.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) out.push_back(sample_ambient_one(cfg, i));
    return out;
}

namespace {

unsigned worker_count() {
    if (const char* env = std::getenv("SYMPOLY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 16u);
}

struct Accumulator {
    double max_residual = 0.0;
    long failure_count = 0;
    std::vector<Failure> stored;

    void add(TrialResult&& r) {
        max_residual = std::max(max_residual, r.residual);
        if (r.failure) {
            ++failure_count;
            if (stored.size() < 64) stored.push_back(std::move(*r.failure));
        }
    }

    void merge(Accumulator&& other) {
        max_residual = std::max(max_residual, other.max_residual);
        failure_count += other.failure_count;
        for (Failure& f : other.stored)
            if (stored.size() < 64) stored.push_back(std::move(f));
    }
};

} // namespace

VerificationReport run_trials(const std::string& suite, long count,
                              const std::function<TrialResult(long)>& trial) {
    const unsigned workers = worker_count();
    Accumulator total;
    if (workers <= 1 || count < 512) {
        for (long i = 0; i < count; ++i) total.add(trial(i));
    } else {
        std::vector<Accumulator> parts(workers);
        std::vector<std::thread> pool;
        const long chunk = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                const long lo = w * chunk;
                const long hi = std::min<long>(count, lo + chunk);
                for (long i = lo; i < hi; ++i) parts[w].add(trial(i));
            });
        }
        for (std::thread& t : pool) t.join();
        for (Accumulator& p : parts) total.merge(std::move(p));
    }

    // unordered merge contract: canonicalize by input hash before reporting
    std::sort(total.stored.begin(), total.stored.end(),
              [](const Failure& a, const Failure& b) {
                  const std::size_t ha = std::hash<std::string>{}(a.input);
                  const std::size_t hb = std::hash<std::string>{}(b.input);
                  if (ha != hb) return ha < hb;
                  if (a.input != b.input) return a.input < b.input;
                  return a.observed < b.observed;
              });
    if (total.stored.size() > 16) total.stored.resize(16);

    VerificationReport rep;
    rep.suite = suite;
    rep.trials = count;
    rep.failures = std::move(total.stored);
    rep.failure_count = total.failure_count;
    rep.max_residual = total.max_residual;
    return rep;
}

namespace {

std::vector<int> pick_ns(const SampleConfig& cfg, std::vector<int> fallback) {
    if (cfg.n >= 2) return {cfg.n};
    return fallback;
}

void merge_reports(VerificationReport& total, VerificationReport&& part) {
    total.trials += part.trials;
    total.failure_count += part.failure_count;
    total.max_residual = std::max(total.max_residual, part.max_residual);
    for (Failure& f : part.failures)
        if (total.failures.size() < 16) total.failures.push_back(std::move(f));
}

Failure make_failure(const DomainPoint& p, std::string observed, std::string expected,
                     double residual) {
    return Failure{to_json(p).dump(), std::move(observed), std::move(expected), residual};
}

/// Mixed inside / ambient / near-boundary draw for the equivalence suite.
DomainPoint draw_mixed(int n, std::uint64_t seed, long i) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    const int kind = static_cast<int>(i % 5);
    if (kind <= 1)
        cfg.mode = SampleMode::InsideBeta;
    else if (kind <= 3)
        cfg.mode = SampleMode::AmbientBox;
    else
        cfg.mode = SampleMode::NearBoundary;
    return sample_point(cfg, static_cast<int>(i));
}

/// Constructive draw from K_n with derivative-bound margin >= ~3e-3.
std::vector<Cplx> draw_kn(int n, Rng& rng) {
    const double lead = rng.u01() * 0.997;
    const double tail = rng.u01() * (0.997 - lead);
    const bool first_dominant = rng.u01() < 0.5;
    const double m1 = lead * n;
    const double m2 = lead * n * rng.u01();
    std::vector<Cplx> x(static_cast<std::size_t>(n));
    x[0] = rng.circle(first_dominant ? m1 : m2);
    x[static_cast<std::size_t>(n) - 2] = rng.circle(first_dominant ? m2 : m1);
    x[static_cast<std::size_t>(n) - 1] = rng.circle(tail);
    const Cplx x1 = x[0];
    const Cplx xl = x[static_cast<std::size_t>(n) - 2];
    const int half = n / 2;
    for (int j = 2; j <= n - 2; ++j) {
        Cplx v;
        if (n % 2 == 0 && j == half)
            v = binom(n, half) * (x1 + xl) / (2.0 * n);
        else if (j <= half)
            v = binom(n, j) * x1 / double(n);
        else
            v = binom(n, j) * xl / double(n);
        x[static_cast<std::size_t>(j) - 1] = v;
    }
    return x;
}

double max_coord_diff(const DomainPoint& a, const DomainPoint& b) {
    double d = std::abs(a.q - b.q);
    for (std::size_t i = 0; i < a.y.size(); ++i) d = std::max(d, std::abs(a.y[i] - b.y[i]));
    return d;
}

VerificationReport suite_equivalence(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "equivalence-345";
    for (int n : pick_ns(cfg, {3, 4, 5, 6})) {
        const std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n));
        auto trial = [&, n, seed](long i) -> TrialResult {
            TrialResult r;
            const DomainPoint y = draw_mixed(n, seed, i);
            const MembershipVerdict v4 = in_gtilde(y);
            if (std::abs(v4.margin) <= 1e-3) return r;  // boundary band excluded

            const MembershipVerdict v3 = char3(y);
            if (v3.inside() != v4.inside()) {
                r.failure = make_failure(y, "char3 " + to_string(v3.verdict),
                                         "char3 agrees with condition (4)",
                                         std::abs(v4.margin));
                return r;
            }
            const MembershipVerdict v2 = char2_oracle(y, 64);
            if (v2.inside() != v4.inside()) {
                r.failure = make_failure(y, "char2 " + to_string(v2.verdict),
                                         "grid oracle agrees with condition (4)",
                                         std::abs(v4.margin));
                return r;
            }
            // condition (5): construction succeeds exactly on the inside
            bool constructed = true;
            ContractionTuple tuple;
            try {
                tuple = char5_construct(y);
            } catch (const ConstructionFailed&) {
                constructed = false;
            }
            if (constructed != v4.inside()) {
                r.failure = make_failure(
                    y, constructed ? "construction succeeded" : "ConstructionFailed",
                    v4.inside() ? "witness tuple" : "no witness tuple", std::abs(v4.margin));
                return r;
            }
            if (constructed) {
                for (std::size_t j = 0; j < tuple.mats.size(); ++j) {
                    const Mat2& b = tuple.mats[j];
                    const double c = binom(n, static_cast<int>(j) + 1);
                    // diagonal must be exact: same expression as the construction
                    const double diag_err =
                        std::max(std::abs(b.a11 - y.coord(static_cast<int>(j) + 1) / c),
                                 std::abs(b.a22 - y.coord(n - static_cast<int>(j) - 1) / c));
                    const double det_err = std::abs(b.det() - y.q);
                    r.residual = std::max({r.residual, diag_err, det_err});
                    if (diag_err > 0.0 || det_err > kDetAgreeTol || op_norm(b) >= 1.0 - 1e-9) {
                        r.failure = make_failure(y, "witness postcondition violated",
                                                 "diagonal exact, det 1e-10, norm < 1-1e-9",
                                                 std::max(diag_err, det_err));
                        return r;
                    }
                }
                LiftInput li{tuple.mats};
                const DomainPoint back = n % 2 == 1 ? lift_odd(li) : lift_even(li);
                const double round = max_coord_diff(back, y);
                r.residual = std::max(r.residual, round);
                if (round > 1e-10) {
                    r.failure =
                        make_failure(y, "lift round-trip drift", "reproduces point", round);
                    return r;
                }
            }
            return r;
        };
        merge_reports(total, run_trials(total.suite, cfg.count, trial));
    }
    return total;
}

VerificationReport suite_inclusion(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "inclusion-gn-gtilde";
    for (int n : pick_ns(cfg, {3, 4, 5, 6})) {
        SampleConfig draw = cfg;
        draw.n = n;
        draw.mode = SampleMode::InsidePolydisc;
        draw.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n));
        auto trial = [&, draw](long i) -> TrialResult {
            TrialResult r;
            const DomainPoint y = sample_point(draw, static_cast<int>(i));
            const MembershipVerdict vg = in_gn(y, false);
            const MembershipVerdict vt = in_gtilde(y);
            r.residual = std::max(-vg.margin, -vt.margin);
            if (!vg.inside() || !vt.inside())
                r.failure = make_failure(
                    y, "gn " + to_string(vg.verdict) + ", gtilde " + to_string(vt.verdict),
                    "both Inside", r.residual);
            return r;
        };
        merge_reports(total, run_trials(total.suite, cfg.count, trial));
    }

    // fixed strictness witness (1, 1, 0): in the extension, on the boundary
    // of the open symmetrized polydisc, in the closed one
    DomainPoint w = DomainPoint::origin(3);
    w.y = {Cplx(1.0, 0.0), Cplx(1.0, 0.0)};
    w.q = Cplx(0.0, 0.0);
    total.trials += 1;
    const MembershipVerdict wt = in_gtilde(w);
    const MembershipVerdict wo = in_gn(w, false);
    const MembershipVerdict wc = in_gn(w, true);
    const bool witness_ok = wt.inside() && !wo.inside() && wc.inside() &&
                            std::abs(wo.margin) <= 1e-9;
    if (!witness_ok) {
        total.failure_count += 1;
        total.failures.push_back(make_failure(
            w,
            "gtilde " + to_string(wt.verdict) + ", open " + to_string(wo.verdict) +
                ", closed " + to_string(wc.verdict),
            "Inside / OnBoundaryOrOutside (|margin| <= 1e-9) / Inside",
            std::abs(wo.margin)));
    }
    total.max_residual = std::max(total.max_residual, std::abs(wo.margin));
    return total;
}

VerificationReport suite_interpolant(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "interpolant-roundtrip";
    for (int n : pick_ns(cfg, {3, 4, 5, 6})) {
        const std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n) + 100);
        auto trial = [&, n, seed](long i) -> TrialResult {
            TrialResult r;
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
            DerivativeData d{n, draw_kn(n, rng)};
            const FullInterpolation full = interpolate_full(d);
            DomainPoint failing = DomainPoint::origin(n);

            // psi(0) is exactly the origin
            const DomainPoint at0 = interpolant_eval(full.spec, Cplx(0.0, 0.0));
            double zero_err = std::abs(at0.q);
            for (const Cplx& v : at0.y) zero_err = std::max(zero_err, std::abs(v));
            if (zero_err != 0.0) {
                r.failure = make_failure(at0, "psi(0) != 0", "exact origin", zero_err);
                return r;
            }

            // psi'(0) = x, closed form
            const std::vector<Cplx> d0 = interpolant_derivative(full.spec, Cplx(0.0, 0.0));
            double deriv_err = 0.0;
            for (std::size_t k = 0; k < d.x.size(); ++k)
                deriv_err = std::max(deriv_err, std::abs(d0[k] - d.x[k]));
            r.residual = std::max(r.residual, deriv_err);
            if (deriv_err > 1e-8) {
                r.failure = make_failure(failing, "psi'(0) drift (closed form)",
                                         "matches x to 1e-8", deriv_err);
                return r;
            }

            // psi'(0) by central differences in the real and imaginary steps
            const double h = 1e-5;
            double fd_err = 0.0;
            const DomainPoint pr = interpolant_eval(full.spec, Cplx(h, 0.0));
            const DomainPoint mr = interpolant_eval(full.spec, Cplx(-h, 0.0));
            const DomainPoint pi = interpolant_eval(full.spec, Cplx(0.0, h));
            const DomainPoint mi = interpolant_eval(full.spec, Cplx(0.0, -h));
            for (int k = 1; k <= n; ++k) {
                const Cplx dre = (pr.coord(k) - mr.coord(k)) / (2.0 * h);
                const Cplx dim = (pi.coord(k) - mi.coord(k)) / (Cplx(0.0, 2.0 * h));
                fd_err = std::max(fd_err, std::abs(dre - d.x[static_cast<std::size_t>(k) - 1]));
                fd_err = std::max(fd_err, std::abs(dim - d.x[static_cast<std::size_t>(k) - 1]));
            }
            r.residual = std::max(r.residual, fd_err);
            if (fd_err > 1e-5) {
                r.failure = make_failure(failing, "psi'(0) drift (finite differences)",
                                         "matches x to 1e-5", fd_err);
                return r;
            }

            // image stays inside up to |lambda| = 0.999
            static const double radii[] = {0.1, 0.2, 0.3, 0.4, 0.5,
                                           0.6, 0.7, 0.8, 0.9, 0.999};
            const int angles = 64;
            for (double rad : radii) {
                for (int a = 0; a < angles; ++a) {
                    const Cplx lam = std::polar(rad, 2.0 * M_PI * a / angles);
                    const DomainPoint img = interpolant_eval(full.spec, lam);
                    const MembershipVerdict v = in_gtilde(img);
                    if (!v.inside()) {
                        r.failure = make_failure(img, "psi(lambda) left the domain",
                                                 "Inside on the grid", -v.margin);
                        return r;
                    }
                }
            }

            // lifted Schur route matches the closed form
            for (int a = 0; a < 32; ++a) {
                const Cplx lam = std::polar(0.97 * (a + 1) / 32.0, 0.37 + 0.41 * a);
                const DomainPoint lifted = lift_family_eval(full.family, n, lam);
                const DomainPoint direct = interpolant_eval(full.spec, lam);
                const double gap = max_coord_diff(lifted, direct);
                r.residual = std::max(r.residual, gap);
                if (gap > kDualPathTol) {
                    r.failure = make_failure(direct, "lifted path drift",
                                             "matches closed form to 1e-10", gap);
                    return r;
                }
            }
            return r;
        };
        merge_reports(total, run_trials(total.suite, cfg.count, trial));
    }
    return total;
}

VerificationReport suite_schur_dualpath(const SampleConfig& cfg) {
    auto trial = [&](long i) -> TrialResult {
        TrialResult r;
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(i) + 7));
        const std::vector<Cplx> x = draw_kn(3, rng);
        const DerivativeData d{3, x};
        const SchurFamily fam = build_schur(d);
        const Cplx lam = rng.disk(0.995);

        const Mat2 via_mobius = mobius(-fam.Z, lam * fam.B);
        const Mat2 via_closed = schur_closed_form(fam, lam);
        const double gap = max_abs_diff(via_mobius, via_closed);
        r.residual = gap;

        const Cplx x3 = x[2];
        const Cplx den = Cplx(1.0, 0.0) + lam * std::conj(x3) * fam.l;
        const double det_err = std::abs(via_mobius.det() - lam * (x3 + lam * fam.l) / den);
        const double d11_err = std::abs(via_mobius.a11 - lam * x[0] / (3.0 * den));
        const double d22_err = std::abs(via_mobius.a22 - lam * x[1] / (3.0 * den));
        const double w0_err = max_abs_diff(schur_eval(fam, Cplx(0.0, 0.0)), fam.Z);
        const double worst = std::max({gap, det_err, d11_err, d22_err, w0_err});
        r.residual = worst;
        if (worst > kDualPathTol) {
            DomainPoint tag = DomainPoint::origin(3);
            tag.y = {x[0], x[1]};
            tag.q = x[2];
            r.failure = make_failure(tag, "dual-path or determinant identity drift",
                                     "all identities to 1e-10", worst);
        }
        return r;
    };
    return run_trials("schur-dualpath", cfg.count, trial);
}

VerificationReport suite_parrott(const SampleConfig& cfg) {
    auto trial = [&](long i) -> TrialResult {
        TrialResult r;
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(i) + 13));
        // admissible data: |x2| <= |x1| != 0 with slack in the derivative bound
        const double a1 = 1e-3 + rng.u01() * (3.0 - 2e-3);
        const double a2 = a1 * rng.u01();
        const double a3 = rng.u01() * (1.0 - a1 / 3.0 - 1e-3);
        const Cplx x1 = rng.circle(a1);
        const Cplx x2 = rng.circle(a2);
        const Cplx x3 = rng.circle(std::max(a3, 0.0));

        const double sigma = std::sqrt(1.0 - std::abs(x1) / 3.0);
        const double s3a = std::sqrt(3.0 * std::abs(x1));
        const Cplx rho = parrott_central(x1 / s3a, -x3 / sigma, x2 / s3a);
        const Cplx rho_reference =
            x1 * x2 * std::conj(x3) * std::sqrt(3.0 - std::abs(x1)) /
            (std::sqrt(3.0) * std::abs(x1) *
             (3.0 - std::abs(x1) - 3.0 * std::norm(x3)));
        const double gap = std::abs(rho - rho_reference);

        const Mat2 b{x1 / s3a, rho, -x3 / sigma, x2 / s3a};
        const double norm_excess = op_norm(b) - 1.0;
        r.residual = std::max(gap, norm_excess);
        if (gap > 1e-12 || norm_excess > 1e-12) {
            DomainPoint tag = DomainPoint::origin(3);
            tag.y = {x1, x2};
            tag.q = x3;
            r.failure = make_failure(tag, "central completion drift",
                                     "matches closed-form coefficient to 1e-12",
                                     std::max(gap, norm_excess));
        }
        return r;
    };
    return run_trials("parrott-xi", cfg.count, trial);
}

VerificationReport suite_hinf(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "hinf-supremum";
    for (int n : pick_ns(cfg, {3, 4, 5})) {
        SampleConfig draw = cfg;
        draw.n = n;
        draw.mode = SampleMode::InsideBeta;
        draw.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n) + 40);
        auto trial = [&, draw, n](long i) -> TrialResult {
            TrialResult r;
            const DomainPoint y = sample_point(draw, static_cast<int>(i));
            constexpr int kBoundarySamples = 4096;
            for (int j = 1; j <= n - 1; ++j) {
                const double formula = phi_hinf(j, y);
                double sup = 0.0;
                for (int a = 0; a < kBoundarySamples; ++a) {
                    const Cplx z = std::polar(1.0, 2.0 * M_PI * a / kBoundarySamples);
                    sup = std::max(sup, std::abs(phi(j, z, y)));
                }
                r.residual = std::max(r.residual, formula - sup);
                if (sup > formula + 1e-9 || formula > sup + 1e-3) {
                    r.failure = make_failure(
                        y, "formula " + format_double(formula) + ", sampled sup " +
                               format_double(sup),
                        "sup <= formula <= sup + 1e-3", std::abs(formula - sup));
                    return r;
                }
            }
            return r;
        };
        merge_reports(total, run_trials(total.suite, cfg.count, trial));
    }
    return total;
}

VerificationReport suite_embeddings(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "embeddings-s5";
    for (const ShiftMapInfo& info : shift_map_registry()) {
        for (bool closed : {false, true}) {
            merge_reports(total,
                          shift_verify(ShiftMapId{info.id, closed}, cfg.count,
                                       mix_seed(cfg.seed, static_cast<std::uint64_t>(
                                                              info.id) * 2 + closed)));
        }
    }

    // linearity in y with q fixed
    auto linear_trial = [&](long i) -> TrialResult {
        TrialResult r;
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(i) + 900));
        for (const ShiftMapInfo& info : shift_map_registry()) {
            const int n = info.min_n + 2 * static_cast<int>(i % 2);
            SampleConfig draw;
            draw.n = n;
            draw.mode = SampleMode::AmbientBox;
            draw.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i) * 31 +
                                               static_cast<std::uint64_t>(info.id));
            DomainPoint u = sample_point(draw, 0);
            DomainPoint v = sample_point(draw, 1);
            v.q = u.q;
            const Cplx alpha = rng.disk(2.0);
            const Cplx beta = rng.disk(2.0);
            DomainPoint comb = u;
            for (std::size_t k = 0; k < comb.y.size(); ++k)
                comb.y[k] = alpha * u.y[k] + beta * v.y[k];
            const DomainPoint lhs = shift(info.id, comb);
            const DomainPoint su = shift(info.id, u);
            const DomainPoint sv = shift(info.id, v);
            double gap = 0.0;
            for (std::size_t k = 0; k < lhs.y.size(); ++k)
                gap = std::max(gap, std::abs(lhs.y[k] - (alpha * su.y[k] + beta * sv.y[k])));
            r.residual = std::max(r.residual, gap);
            if (gap > 1e-13) {
                r.failure = make_failure(u, std::string("linearity drift in ") + info.name,
                                         "exact to 1e-13", gap);
                return r;
            }
        }
        return r;
    };
    merge_reports(total, run_trials(total.suite, std::min<long>(cfg.count, 2000), linear_trial));

    // derived composition identity: contracting a padded point rescales each
    // coordinate by (n + 1 - min(i, n - i)) / (n + 1)
    auto comp_trial = [&](long i) -> TrialResult {
        TrialResult r;
        const int n = i % 2 == 0 ? 4 : 6;
        SampleConfig draw;
        draw.n = n;
        draw.mode = SampleMode::InsideBeta;
        draw.seed = mix_seed(cfg.seed, 7777);
        const DomainPoint y = sample_point(draw, static_cast<int>(i));
        const DomainPoint back = shift(ShiftMap::ContractEven, shift(ShiftMap::PadEven, y));
        double gap = std::abs(back.q - y.q);
        for (int k = 1; k <= n - 1; ++k) {
            const double c = double(n + 1 - std::min(k, n - k)) / double(n + 1);
            gap = std::max(gap, std::abs(back.coord(k) - c * y.coord(k)));
        }
        r.residual = gap;
        if (gap > 1e-13)
            r.failure = make_failure(y, "composition scaling drift",
                                     "diagonal rescaling to 1e-13", gap);
        return r;
    };
    merge_reports(total, run_trials(total.suite, std::min<long>(cfg.count, 2000), comp_trial));
    return total;
}

VerificationReport suite_necessity(const SampleConfig& cfg) {
    VerificationReport total;
    total.suite = "schwarz-necessity";
    for (int n : pick_ns(cfg, {3, 4, 5, 6})) {
        const std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n) + 500);
        auto trial = [&, n, seed](long i) -> TrialResult {
            TrialResult r;
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
            const double sigma = rng.u01() * 0.95;
            const Mat2 z = Mat2::antidiag(Cplx(sigma, 0.0), Cplx(0.0, 0.0));
            Mat2 b{rng.disk(1.0), rng.disk(1.0), rng.disk(1.0), rng.disk(1.0)};
            const double scale = (i % 5 == 0 ? 1.0 : rng.u01()) / (op_norm(b) + 1e-15);
            b = Cplx(scale, 0.0) * b;

            const Mat2 wp0 = defect_adj(z) * b * defect(z);
            const std::vector<Cplx> x = lift_family_derivative0(z, wp0, n);
            const ConditionCheck nc = necessary_condition(DerivativeData{n, x});
            r.residual = std::max(0.0, -nc.margin);
            if (nc.margin < -1e-10) {
                DomainPoint tag = DomainPoint::origin(n);
                for (int k = 1; k <= n - 1; ++k)
                    tag.y[static_cast<std::size_t>(k) - 1] = x[static_cast<std::size_t>(k) - 1];
                tag.q = x[static_cast<std::size_t>(n) - 1];
                r.failure = make_failure(tag, "necessary condition violated",
                                         "slack >= -1e-10", -nc.margin);
            }
            return r;
        };
        merge_reports(total, run_trials(total.suite, cfg.count, trial));
    }
    return total;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"equivalence-345", "inclusion-gn-gtilde", "interpolant-roundtrip",
            "schur-dualpath",  "embeddings-s5",       "parrott-xi",
            "hinf-supremum",   "schwarz-necessity"};
}

VerificationReport run_suite(const std::string& name, const SampleConfig& cfg) {
    if (name == "equivalence-345") return suite_equivalence(cfg);
    if (name == "inclusion-gn-gtilde") return suite_inclusion(cfg);
    if (name == "interpolant-roundtrip") return suite_interpolant(cfg);
    if (name == "schur-dualpath") return suite_schur_dualpath(cfg);
    if (name == "embeddings-s5" || name == "embeddings") return suite_embeddings(cfg);
    if (name == "parrott-xi") return suite_parrott(cfg);
    if (name == "hinf-supremum") return suite_hinf(cfg);
    if (name == "schwarz-necessity") return suite_necessity(cfg);
    throw UnknownSuite("run_suite: no suite named '" + name + "'");
}

} // namespace sympoly
