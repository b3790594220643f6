#include <doctest.h>

#include "oracles.hpp"
#include "sympoly/domains.hpp"
#include "sympoly/schwarz.hpp"
#include "sympoly/verify.hpp"

using namespace sympoly;

namespace {

DomainPoint make_point(std::vector<Cplx> y, Cplx q) {
    DomainPoint p;
    p.n = static_cast<int>(y.size()) + 1;
    p.y = std::move(y);
    p.q = q;
    return p;
}

const DomainPoint kWitness = make_point({Cplx(1, 0), Cplx(1, 0)}, Cplx(0, 0));

} // namespace

TEST_CASE("symmetrize") {
    std::vector<Cplx> zeros(4, Cplx(0, 0));
    const DomainPoint origin = symmetrize(zeros);
    CHECK(origin.n == 4);
    for (const Cplx& v : origin.y) CHECK(v == Cplx(0, 0));
    CHECK(origin.q == Cplx(0, 0));

    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const Cplx a = rng.disk(1.0), b = rng.disk(1.0);
        const std::vector<Cplx> zs{a, b};
        const DomainPoint p = symmetrize(zs);
        CHECK(std::abs(p.y[0] - (a + b)) < 1e-15);
        CHECK(std::abs(p.q - a * b) < 1e-15);
    }

    const std::vector<Cplx> half(3, Cplx(0.5, 0.0));
    const DomainPoint p3 = symmetrize(half);
    CHECK(std::abs(p3.y[0] - Cplx(1.5, 0.0)) < 1e-15);
    CHECK(std::abs(p3.y[1] - Cplx(0.75, 0.0)) < 1e-15);
    CHECK(std::abs(p3.q - Cplx(0.125, 0.0)) < 1e-15);
}

TEST_CASE("phi branches") {
    // all coordinates zero: degenerate-product branch gives 0 everywhere
    const DomainPoint zero = DomainPoint::origin(3);
    CHECK(phi(1, Cplx(0.3, 0.7), zero) == Cplx(0, 0));

    // y = (0, 0, q): Phi_1(z) = -q z
    Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        const Cplx q = rng.disk(0.9);
        const DomainPoint p = make_point({Cplx(0, 0), Cplx(0, 0)}, q);
        const Cplx z = rng.disk(1.0);
        CHECK(std::abs(phi(1, z, p) - (-q * z)) < 1e-15);
    }

    // coincidence y_1 y_2 = 9 q: both branches agree
    for (int i = 0; i < 50; ++i) {
        const Cplx y1 = rng.disk(2.0);
        const Cplx y2 = rng.disk(2.0);
        const DomainPoint p = make_point({y1, y2}, y1 * y2 / 9.0);
        const Cplx z = rng.disk(1.0);
        const Cplx general = (3.0 * p.q * z - y1) / (y2 * z - 3.0);
        CHECK(std::abs(phi(1, z, p) - y1 / 3.0) < 1e-14);
        CHECK(std::abs(general - y1 / 3.0) < 1e-13);
    }

    // pole configuration: y_2 z = 3 while y_1 y_2 != 9 q
    const DomainPoint pole = make_point({Cplx(0, 0), Cplx(2, 0)}, Cplx(0.5, 0));
    CHECK_THROWS_AS(phi(1, Cplx(1.5, 0.0), pole), PoleAtZ);
}

TEST_CASE("phi_hinf closed form") {
    for (int n = 3; n <= 6; ++n) {
        DomainPoint p = DomainPoint::origin(n);
        for (int j = 1; j <= n - 1; ++j) CHECK(phi_hinf(j, p) == 0.0);
        p.q = Cplx(0.3, -0.4);
        for (int j = 1; j <= n - 1; ++j)
            CHECK(phi_hinf(j, p) == doctest::Approx(0.5).epsilon(1e-14));
    }

    const DomainPoint guard = make_point({Cplx(0, 0), Cplx(3.0, 0)}, Cplx(0, 0));
    CHECK_THROWS_AS(phi_hinf(1, guard), GuardViolated);

    SUBCASE("stays below one across the domain") {
        for (int n : {3, 4, 5, 6}) {
            SampleConfig cfg;
            cfg.n = n;
            cfg.seed = mix_seed(30, static_cast<std::uint64_t>(n));
            for (int i = 0; i < 2500; ++i) {
                const DomainPoint p = sample_point(cfg, i);
                for (int j = 1; j <= n - 1; ++j) CHECK(phi_hinf(j, p) < 1.0);
            }
        }
    }

    SUBCASE("matches the boundary supremum") {
        for (int n : {3, 4, 5}) {
            SampleConfig cfg;
            cfg.n = n;
            cfg.seed = 33;
            for (int i = 0; i < 50; ++i) {
                const DomainPoint p = sample_point(cfg, i);
                for (int j = 1; j <= n - 1; ++j) {
                    const double formula = phi_hinf(j, p);
                    double sup = 0.0;
                    for (int a = 0; a < 4096; ++a) {
                        const Cplx z = std::polar(1.0, 2.0 * M_PI * a / 4096);
                        sup = std::max(sup, std::abs(phi(j, z, p)));
                    }
                    CHECK(sup <= formula + 1e-9);
                    CHECK(formula <= sup + 1e-3);
                }
            }
        }
    }
}

TEST_CASE("beta_solve") {
    // q = 0 returns y verbatim
    const DomainPoint p = make_point({Cplx(1, 0), Cplx(1, 0)}, Cplx(0, 0));
    const BetaDecomposition b = beta_solve(p);
    CHECK(b.betas[0] == Cplx(1, 0));
    CHECK(b.betas[1] == Cplx(1, 0));

    SUBCASE("round trip from prescribed betas") {
        Rng rng(34);
        for (int i = 0; i < 10000; ++i) {
            const int n = 3 + static_cast<int>(rng.u01() * 4);
            std::vector<Cplx> betas;
            for (int j = 0; j < n - 1; ++j) betas.push_back(rng.disk(2.0));
            const Cplx q = rng.disk(0.95);
            const DomainPoint built = point_from_betas(n, betas, q);
            const BetaDecomposition solved = beta_solve(built);
            for (int j = 0; j < n - 1; ++j)
                CHECK(std::abs(solved.betas[static_cast<std::size_t>(j)] -
                               betas[static_cast<std::size_t>(j)]) < 1e-12);
        }
    }

    SUBCASE("conditioning-aware round trip near the circle") {
        // the solve divides by 1 - |q|^2, so rounding in y is amplified by
        // exactly that factor; the identity holds up to it
        Rng rng(35);
        for (int i = 0; i < 2000; ++i) {
            const int n = 3 + static_cast<int>(rng.u01() * 4);
            std::vector<Cplx> betas;
            for (int j = 0; j < n - 1; ++j) betas.push_back(rng.disk(2.0));
            const Cplx q = rng.circle(1.0 - 1e-6 * rng.u01() - 1e-9);
            const double amplification = 1.0 / (1.0 - std::norm(q));
            const DomainPoint built = point_from_betas(n, betas, q);
            const BetaDecomposition solved = beta_solve(built);
            for (int j = 0; j < n - 1; ++j)
                CHECK(std::abs(solved.betas[static_cast<std::size_t>(j)] -
                               betas[static_cast<std::size_t>(j)]) <
                      1e-13 * amplification + 1e-12);
        }
    }

    DomainPoint circle = make_point({Cplx(0, 0), Cplx(0, 0)}, Cplx(1, 0));
    CHECK_THROWS_AS(beta_solve(circle), QOnCircle);
}

TEST_CASE("in_gtilde pinned verdicts") {
    for (int n = 2; n <= 6; ++n) {
        const MembershipVerdict v = in_gtilde(DomainPoint::origin(n));
        CHECK(v.inside());
        CHECK(v.margin == doctest::Approx(double(n)).epsilon(1e-15));
        CHECK(v.binding_j == 1);
    }
    CHECK(in_gtilde(kWitness).inside());
    CHECK(in_gtilde(kWitness).margin == doctest::Approx(1.0).epsilon(1e-15));
    const DomainPoint corner = make_point({Cplx(3, 0), Cplx(3, 0)}, Cplx(1, 0));
    CHECK_FALSE(in_gtilde(corner).inside());
}

TEST_CASE("in_gammatilde pinned verdicts") {
    CHECK(in_gammatilde(DomainPoint::origin(4)).inside());
    // (3, 3, 1) is the symmetrization of (1, 1, 1): boundary of the closure
    const DomainPoint corner = make_point({Cplx(3, 0), Cplx(3, 0)}, Cplx(1, 0));
    CHECK(in_gammatilde(corner).inside());
    const DomainPoint far = make_point({Cplx(0, 0), Cplx(0, 0)}, Cplx(1.5, 0));
    CHECK_FALSE(in_gammatilde(far).inside());
    // |q| = 1 with matched phases but coordinates beyond the cap
    const Cplx q = std::polar(1.0, 0.7);
    const DomainPoint big = make_point({Cplx(10, 0), 10.0 * q}, q);
    CHECK_FALSE(in_gammatilde(big).inside());
    // origin with unimodular q stays in the closure
    const DomainPoint rim = make_point({Cplx(0, 0), Cplx(0, 0)}, q);
    CHECK(in_gammatilde(rim).inside());
}

TEST_CASE("char2 oracle") {
    const DomainPoint inside = make_point({Cplx(0, 0), Cplx(0, 0)}, Cplx(0.6, 0.2));
    CHECK(char2_oracle(inside, 64).inside());

    const DomainPoint rim = make_point({Cplx(0, 0), Cplx(0, 0)}, Cplx(1, 0));
    const MembershipVerdict v = char2_oracle(rim, 64);
    CHECK_FALSE(v.inside());
    CHECK(v.margin < kBoundaryTol);

    CHECK_THROWS_AS(char2_oracle(inside, 4), std::invalid_argument);

    SUBCASE("agrees with the pairwise condition away from the boundary band") {
        for (int n : {3, 4, 5, 6}) {
            const std::uint64_t seed = mix_seed(35, static_cast<std::uint64_t>(n));
            for (int i = 0; i < 300; ++i) {
                SampleConfig cfg;
                cfg.n = n;
                cfg.seed = seed;
                cfg.mode = i % 2 == 0 ? SampleMode::InsideBeta : SampleMode::AmbientBox;
                const DomainPoint p = sample_point(cfg, i);
                const MembershipVerdict v4 = in_gtilde(p);
                if (std::abs(v4.margin) <= 1e-3) continue;
                CHECK(char2_oracle(p, 64).inside() == v4.inside());
            }
        }
    }

    SUBCASE("detects zeros for points just past the margin band") {
        // one beta pair driven to a prescribed signed margin, the rest slack;
        // the hardest regime for the face scan
        for (int n : {3, 4, 5, 6}) {
            for (int i = 0; i < 600; ++i) {
                Rng rng(mix_seed(777 + n, static_cast<std::uint64_t>(i)));
                const Cplx q = rng.disk(0.93);
                const double target = 1.15e-3 + rng.u01() * 4e-3;
                const bool outside = i % 2 == 0;
                std::vector<Cplx> betas(static_cast<std::size_t>(n) - 1, Cplx(0, 0));
                const int jt = 1 + static_cast<int>(rng.u01() * (n / 2));
                for (int j = 1; j <= n / 2; ++j) {
                    const double cap = binom(n, j);
                    const double sum =
                        j == jt ? cap - (outside ? -target : target) / (1.0 - std::norm(q))
                                : cap * (0.2 + 0.5 * rng.u01());
                    if (2 * j == n) {
                        betas[static_cast<std::size_t>(j) - 1] = rng.circle(sum / 2.0);
                    } else {
                        const double split = rng.u01();
                        betas[static_cast<std::size_t>(j) - 1] = rng.circle(sum * split);
                        betas[static_cast<std::size_t>(n - j) - 1] =
                            rng.circle(sum * (1.0 - split));
                    }
                }
                const DomainPoint y = point_from_betas(n, betas, q);
                const MembershipVerdict v4 = in_gtilde(y);
                if (std::abs(v4.margin) <= 1e-3) continue;
                CHECK(char2_oracle(y, 64).inside() == v4.inside());
            }
        }
    }
}

TEST_CASE("char3 either-or condition") {
    CHECK(char3(DomainPoint::origin(5)).inside());
    // (1, 1, 0): first inequality at j = 1 reads 3 + 1 < 9 - 1
    const MembershipVerdict v = char3(kWitness);
    CHECK(v.inside());
    CHECK(v.margin == doctest::Approx(4.0).epsilon(1e-15));

    SUBCASE("agrees with the pairwise condition") {
        for (int n : {3, 4, 5, 6}) {
            const std::uint64_t seed = mix_seed(36, static_cast<std::uint64_t>(n));
            for (int i = 0; i < 2000; ++i) {
                SampleConfig cfg;
                cfg.n = n;
                cfg.seed = seed;
                cfg.mode = i % 2 == 0 ? SampleMode::InsideBeta : SampleMode::AmbientBox;
                const DomainPoint p = sample_point(cfg, i);
                const MembershipVerdict v4 = in_gtilde(p);
                if (std::abs(v4.margin) <= 1e-9) continue;
                CHECK(char3(p).inside() == v4.inside());
            }
        }
    }
}

TEST_CASE("char5 witness construction") {
    SUBCASE("origin gives zero matrices") {
        const ContractionTuple t = char5_construct(DomainPoint::origin(6));
        REQUIRE(t.mats.size() == 3);
        for (const Mat2& m : t.mats) CHECK(max_abs_diff(m, Mat2::zero()) == 0.0);
    }

    SUBCASE("pure-q points get antidiagonal witnesses of norm sqrt|q|") {
        Rng rng(37);
        for (int n : {3, 4, 5}) {
            for (int i = 0; i < 50; ++i) {
                const Cplx q = rng.disk(0.95);
                DomainPoint p = DomainPoint::origin(n);
                p.q = q;
                const ContractionTuple t = char5_construct(p);
                for (const Mat2& m : t.mats) {
                    CHECK(std::abs(m.det() - q) < 1e-14);
                    // coincident singular values cost sqrt(eps) in the closed form
                    CHECK(op_norm(m) ==
                          doctest::Approx(std::sqrt(std::abs(q))).epsilon(1e-7));
                }
            }
        }
    }

    SUBCASE("round trip through the lift") {
        for (int n : {3, 4, 5, 6}) {
            SampleConfig cfg;
            cfg.n = n;
            cfg.seed = mix_seed(38, static_cast<std::uint64_t>(n));
            for (int i = 0; i < 1000; ++i) {
                const DomainPoint p = sample_point(cfg, i);
                const ContractionTuple t = char5_construct(p);
                for (const Mat2& m : t.mats) CHECK(op_norm(m) < 1.0 - 1e-9);
                const LiftInput li{t.mats};
                const DomainPoint back = n % 2 == 1 ? lift_odd(li) : lift_even(li);
                CHECK(oracles::point_gap(back, p) <= 1e-10);
            }
        }
    }

    SUBCASE("fails off the domain") {
        const DomainPoint corner = make_point({Cplx(3, 0), Cplx(3, 0)}, Cplx(1, 0));
        CHECK_THROWS_AS(char5_construct(corner), ConstructionFailed);
        const DomainPoint far = make_point({Cplx(0, 0), Cplx(0, 0)}, Cplx(2, 0));
        CHECK_THROWS_AS(char5_construct(far), ConstructionFailed);
    }
}

TEST_CASE("in_gn root criterion") {
    const MembershipVerdict origin = in_gn(DomainPoint::origin(4), false);
    CHECK(origin.inside());
    CHECK(origin.margin == doctest::Approx(1.0).epsilon(1e-12));

    // strictness witness: inside the extension, boundary of the open domain
    const MembershipVerdict open_v = in_gn(kWitness, false);
    const MembershipVerdict closed_v = in_gn(kWitness, true);
    CHECK_FALSE(open_v.inside());
    CHECK(closed_v.inside());
    CHECK(std::abs(open_v.margin) <= 1e-9);
    CHECK(in_gtilde(kWitness).inside());

    SUBCASE("symmetrized polydisc tuples are inside") {
        for (int n : {3, 4, 5, 6}) {
            SampleConfig cfg;
            cfg.n = n;
            cfg.seed = mix_seed(39, static_cast<std::uint64_t>(n));
            cfg.mode = SampleMode::InsidePolydisc;
            for (int i = 0; i < 1000; ++i) {
                const DomainPoint p = sample_point(cfg, i);
                CHECK(in_gn(p, false).inside());
                CHECK(in_gtilde(p).inside());
            }
        }
    }
}

TEST_CASE("proportionality subsets") {
    SUBCASE("J_n") {
        CHECK(in_jn(DomainPoint::origin(5)));
        // n = 4 requires the averaged middle coordinate
        DomainPoint p4 = make_point({Cplx(0.2, 0), Cplx(0.9, 0), Cplx(0.1, 0)},
                                    Cplx(0.05, 0));
        CHECK_FALSE(in_jn(p4));
        p4.y[1] = binom(4, 2) * (p4.y[0] + p4.y[2]) / 8.0;
        CHECK(in_jn(p4));
        // n = 3 carries no proportionality constraints
        CHECK(in_jn(kWitness));

        // n = 5 built by the rules with small q
        Rng rng(40);
        for (int i = 0; i < 50; ++i) {
            const Cplx y1 = rng.disk(0.4);
            const Cplx y4 = rng.disk(0.4);
            DomainPoint p5 = make_point({y1, 2.0 * y1, 2.0 * y4, y4}, rng.disk(0.05));
            CHECK(in_jn(p5));
        }
    }

    SUBCASE("K_n") {
        Rng rng(41);
        for (int n : {3, 4, 5, 6}) {
            std::vector<Cplx> x(static_cast<std::size_t>(n), Cplx(0, 0));
            x.back() = rng.circle(1.0);
            CHECK(in_kn(x));
            x.back() = rng.circle(1.0 + 1e-6);
            CHECK_FALSE(in_kn(x));
        }
        // degree 3: only the modulus constraint applies
        for (int i = 0; i < 100; ++i) {
            const Cplx x1 = rng.disk(3.0);
            const Cplx x2 = rng.disk(3.0);
            const double room = 1.0 - std::max(std::abs(x1), std::abs(x2)) / 3.0;
            const Cplx x3 = rng.circle(rng.u01() * room);
            CHECK(in_kn(std::vector<Cplx>{x1, x2, x3}));
        }
        // the pinned degree-5 corner case
        const std::vector<Cplx> x5{Cplx(5, 0), Cplx(10, 0), Cplx(10, 0), Cplx(5, 0),
                                   Cplx(0, 0)};
        CHECK(in_kn(x5));
        std::vector<Cplx> bad = x5;
        bad[1] = Cplx(9.5, 0);
        CHECK_FALSE(in_kn(bad));
    }
}
