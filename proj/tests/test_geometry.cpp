#include <doctest.h>

#include "oracles.hpp"
#include "sympoly/geometry.hpp"
#include "sympoly/verify.hpp"

using namespace sympoly;

namespace {

DomainPoint rand_point(int n, std::uint64_t seed, int index, SampleMode mode) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.mode = mode;
    return sample_point(cfg, index);
}

} // namespace

TEST_CASE("registry and naming") {
    CHECK(shift_map_registry().size() == 10);
    CHECK(shift_map_by_name("hat-up-even") == ShiftMap::HatUpEven);
    CHECK(shift_map_by_name("HatUpEven") == ShiftMap::HatUpEven);
    CHECK(shift_map_by_name("normalize-sharp-odd") == ShiftMap::NormalizeSharpOdd);
    CHECK_THROWS_AS(shift_map_by_name("no-such-map"), std::invalid_argument);
}

TEST_CASE("origin is fixed by every map") {
    for (const ShiftMapInfo& info : shift_map_registry()) {
        for (int n : {info.min_n, info.min_n + 2}) {
            const DomainPoint image = shift(info.id, DomainPoint::origin(n));
            CHECK(image.n == n + info.delta);
            CHECK(oracles::point_gap(image, DomainPoint::origin(n + info.delta)) == 0.0);
        }
    }
}

TEST_CASE("pinned shift displays") {
    SUBCASE("index-2 point lifts to a duplicated scaled coordinate") {
        DomainPoint p = DomainPoint::origin(2);
        p.y[0] = Cplx(0.4, -0.2);
        p.q = Cplx(0.1, 0.3);
        const DomainPoint up = shift(ShiftMap::HatUpEven, p);
        REQUIRE(up.n == 3);
        CHECK(std::abs(up.y[0] - 1.5 * p.y[0]) < 1e-15);
        CHECK(std::abs(up.y[1] - 1.5 * p.y[0]) < 1e-15);
        CHECK(up.q == p.q);
    }

    SUBCASE("normalized sharp drop from index 5 to 4") {
        DomainPoint p = DomainPoint::origin(5);
        p.y = {Cplx(1, 1), Cplx(2, -1), Cplx(3, 0.5), Cplx(4, 0)};
        p.q = Cplx(0.2, 0.1);
        const DomainPoint down = shift(ShiftMap::NormalizeSharpEven, p);
        REQUIRE(down.n == 4);
        CHECK(std::abs(down.y[0] - p.y[0] / 5.0) < 1e-15);
        CHECK(std::abs(down.y[1] - (p.y[1] / 10.0 + p.y[2] / 10.0) / 2.0) < 1e-15);
        CHECK(std::abs(down.y[2] - p.y[3] / 5.0) < 1e-15);
        CHECK(down.q == p.q);
    }

    SUBCASE("every coefficient table, on explicit points") {
        const Cplx y1(0.31, -0.27), y2(0.12, 0.44), y3(-0.52, 0.06), y4(0.2, 0.9);
        const Cplx q(0.15, -0.35);
        auto mk = [&](std::vector<Cplx> ys) {
            DomainPoint p;
            p.n = static_cast<int>(ys.size()) + 1;
            p.y = std::move(ys);
            p.q = q;
            return p;
        };
        auto expect = [](const DomainPoint& got, const std::vector<Cplx>& want) {
            REQUIRE(got.y.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                CHECK(std::abs(got.y[i] - want[i]) < 1e-15);
        };

        // index 4 -> 5: scale by C(5,j)/C(4,j), middle duplicated
        expect(shift(ShiftMap::HatUpEven, mk({y1, y2, y3})),
               {1.25 * y1, 5.0 / 3.0 * y2, 5.0 / 3.0 * y2, 1.25 * y3});
        // index 3 -> 4: scaled outer pair, summed middle
        expect(shift(ShiftMap::StarUpOdd, mk({y1, y2})),
               {4.0 / 3.0 * y1, y1 + y2, 4.0 / 3.0 * y2});
        // index 4 -> 3: middle dropped
        expect(shift(ShiftMap::CheckDownEven, mk({y1, y2, y3})),
               {0.75 * y1, 0.75 * y3});
        // index 5 -> 4: averaged middle pair with (n+1)/(2n)
        expect(shift(ShiftMap::TildeDownOdd, mk({y1, y2, y3, y4})),
               {0.8 * y1, 0.3 * (y2 + y3), 0.8 * y4});
        // index 4 -> 5 and 3 -> 4: plain padding
        expect(shift(ShiftMap::PadEven, mk({y1, y2, y3})), {y1, y2, y2, y3});
        expect(shift(ShiftMap::PadOdd, mk({y1, y2})), {y1, 0.5 * (y1 + y2), y2});
        // index 5 -> 4 and 4 -> 3: contracted pairs
        expect(shift(ShiftMap::ContractEven, mk({y1, y2, y3, y4})),
               {0.8 * y1, 0.3 * (y2 + y3), 0.8 * y4});
        expect(shift(ShiftMap::ContractOdd, mk({y1, y2, y3})), {0.75 * y1, 0.75 * y3});
        // binomial normalization then averaged / dropped middle
        expect(shift(ShiftMap::NormalizeSharpEven, mk({y1, y2, y3, y4})),
               {y1 / 5.0, (y2 / 10.0 + y3 / 10.0) / 2.0, y4 / 5.0});
        expect(shift(ShiftMap::NormalizeSharpOdd, mk({y1, y2, y3})),
               {y1 / 4.0, y3 / 4.0});
    }

    SUBCASE("parity is enforced") {
        CHECK_THROWS_AS(shift(ShiftMap::HatUpEven, DomainPoint::origin(3)), ParityMismatch);
        CHECK_THROWS_AS(shift(ShiftMap::StarUpOdd, DomainPoint::origin(4)), ParityMismatch);
        CHECK_THROWS_AS(shift(ShiftMap::CheckDownEven, DomainPoint::origin(2)),
                        ParityMismatch);
        CHECK_THROWS_AS(shift(ShiftMap::ContractOdd, DomainPoint::origin(2)),
                        ParityMismatch);
    }
}

TEST_CASE("shift maps are linear in y with q fixed") {
    Rng rng(71);
    for (const ShiftMapInfo& info : shift_map_registry()) {
        for (int i = 0; i < 50; ++i) {
            const int n = info.min_n + 2 * (i % 2);
            DomainPoint u = rand_point(n, 72 + i, i, SampleMode::AmbientBox);
            DomainPoint v = rand_point(n, 73 + i, i, SampleMode::AmbientBox);
            v.q = u.q;
            const Cplx alpha = rng.disk(2.0);
            const Cplx beta = rng.disk(2.0);
            DomainPoint comb = u;
            for (std::size_t k = 0; k < comb.y.size(); ++k)
                comb.y[k] = alpha * u.y[k] + beta * v.y[k];
            const DomainPoint lhs = shift(info.id, comb);
            const DomainPoint su = shift(info.id, u);
            const DomainPoint sv = shift(info.id, v);
            for (std::size_t k = 0; k < lhs.y.size(); ++k)
                CHECK(std::abs(lhs.y[k] - (alpha * su.y[k] + beta * sv.y[k])) <= 1e-13);
            CHECK(lhs.q == u.q);
        }
    }
}

TEST_CASE("contracting a padded point rescales coordinates diagonally") {
    // derived from the two coefficient tables: coordinate i picks up
    // (n + 1 - min(i, n - i)) / (n + 1)
    for (int n : {4, 6, 8}) {
        for (int i = 0; i < 100; ++i) {
            const DomainPoint y = rand_point(n, 74, i, SampleMode::InsideBeta);
            const DomainPoint back =
                shift(ShiftMap::ContractEven, shift(ShiftMap::PadEven, y));
            REQUIRE(back.n == n);
            CHECK(back.q == y.q);
            for (int k = 1; k <= n - 1; ++k) {
                const double c = double(n + 1 - std::min(k, n - k)) / double(n + 1);
                CHECK(std::abs(back.coord(k) - c * y.coord(k)) <= 1e-13);
            }
        }
    }
}

TEST_CASE("membership claims hold on samples") {
    for (const ShiftMapInfo& info : shift_map_registry()) {
        const VerificationReport open_rep =
            shift_verify(ShiftMapId{info.id, false}, 500, 75);
        CHECK(open_rep.pass());
        const VerificationReport closed_rep =
            shift_verify(ShiftMapId{info.id, true}, 500, 76);
        CHECK(closed_rep.pass());
    }
}
