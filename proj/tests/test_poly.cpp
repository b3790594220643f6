#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sympoly/poly.hpp"
#include "sympoly/verify.hpp"

using namespace sympoly;

namespace {

// multiset match up to tolerance
double root_set_gap(std::vector<Cplx> got, std::vector<Cplx> want) {
    REQUIRE(got.size() == want.size());
    double worst = 0.0;
    for (const Cplx& w : got) {
        std::size_t best = 0;
        double dist = 1e300;
        for (std::size_t i = 0; i < want.size(); ++i) {
            const double d = std::abs(w - want[i]);
            if (d < dist) {
                dist = d;
                best = i;
            }
        }
        worst = std::max(worst, dist);
        want.erase(want.begin() + static_cast<long>(best));
    }
    return worst;
}

} // namespace

TEST_CASE("roots of z^2 - 1") {
    const MonicPoly p{{Cplx(0, 0), Cplx(-1, 0)}};
    CHECK(root_set_gap(roots(p), {Cplx(1, 0), Cplx(-1, 0)}) < 1e-12);
}

TEST_CASE("roots of z^3 - z^2 + z sit on the closed disk boundary") {
    // z (z^2 - z + 1); quadratic factor checked against the formula oracle
    const MonicPoly p{{Cplx(-1, 0), Cplx(1, 0), Cplx(0, 0)}};
    const auto [r1, r2] = oracles::quadratic_roots(Cplx(-1, 0), Cplx(1, 0));
    const double gap = root_set_gap(roots(p), {Cplx(0, 0), r1, r2});
    CHECK(gap < 1e-10);
    CHECK(std::abs(r1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(r2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("degree one is solved directly") {
    const MonicPoly p{{Cplx(3.5, -2.0)}};
    const auto rs = roots(p);
    REQUIRE(rs.size() == 1);
    CHECK(std::abs(rs[0] + Cplx(3.5, -2.0)) == 0.0);
}

TEST_CASE("product reconstruction on random monic cubics") {
    Rng rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        MonicPoly p{{rng.disk(2.0), rng.disk(2.0), rng.disk(2.0)}};
        const auto rs = roots(p);
        const auto back = oracles::expand_roots(rs);
        const double scale = std::max(1.0, p.max_coeff_abs());
        for (std::size_t i = 0; i < back.size(); ++i)
            CHECK(std::abs(back[i] - p.coeffs[i]) <= 1e-8 * scale);
        // residual postcondition
        for (const Cplx& r : rs) CHECK(std::abs(p.eval(r)) <= 1e-9 * scale);
    }
}

TEST_CASE("vieta round trip from prescribed roots") {
    Rng rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 2 + static_cast<int>(rng.u01() * 5);
        std::vector<Cplx> want;
        for (int i = 0; i < d; ++i) want.push_back(rng.disk(1.5));
        const MonicPoly p = MonicPoly::from_roots(want);
        CHECK(root_set_gap(roots(p), want) < 1e-7);
    }
}
