#include "sympoly/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "sympoly/json_io.hpp"

namespace sympoly {

const std::vector<ShiftMapInfo>& shift_map_registry() {
    static const std::vector<ShiftMapInfo> registry = {
        {ShiftMap::HatUpEven, "hat-up-even", 0, +1, true, 2},
        {ShiftMap::StarUpOdd, "star-up-odd", 1, +1, true, 3},
        {ShiftMap::CheckDownEven, "check-down-even", 0, -1, false, 4},
        {ShiftMap::TildeDownOdd, "tilde-down-odd", 1, -1, false, 3},
        {ShiftMap::PadEven, "pad-even", 0, +1, false, 2},
        {ShiftMap::ContractEven, "contract-even", 1, -1, false, 3},
        {ShiftMap::NormalizeSharpEven, "normalize-sharp-even", 1, -1, false, 3},
        {ShiftMap::PadOdd, "pad-odd", 1, +1, false, 3},
        {ShiftMap::ContractOdd, "contract-odd", 0, -1, false, 4},
        {ShiftMap::NormalizeSharpOdd, "normalize-sharp-odd", 0, -1, false, 4},
    };
    return registry;
}

const ShiftMapInfo& shift_map_info(ShiftMap id) {
    for (const ShiftMapInfo& info : shift_map_registry())
        if (info.id == id) return info;
    throw std::invalid_argument("shift_map_info: unknown map");
}

ShiftMap shift_map_by_name(const std::string& name) {
    std::string key;
    for (char c : name)
        key += (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c;
    for (const ShiftMapInfo& info : shift_map_registry()) {
        std::string flat;
        for (const char* p = info.name; *p; ++p)
            if (*p != '-') flat += *p;
        std::string key_flat;
        for (char c : key)
            if (c != '-' && c != '_') key_flat += c;
        if (key == info.name || key_flat == flat) return info.id;
    }
    throw std::invalid_argument("unknown shift map: " + name);
}

namespace {

// scaled-copy coefficient shared by every up/down map
double ratio(int out_n, int in_n, int j) { return binom(out_n, j) / binom(in_n, j); }

ShiftRow one(double c, int src) { return ShiftRow{{{c, src}}}; }
ShiftRow two(double c1, int s1, double c2, int s2) {
    return ShiftRow{{{c1, s1}, {c2, s2}}};
}

} // namespace

ShiftPlan shift_plan(ShiftMap id, int m) {
    const ShiftMapInfo& info = shift_map_info(id);
    if (m % 2 != info.input_parity || m < info.min_n)
        throw ParityMismatch(std::string("shift: map ") + info.name +
                             " does not accept ambient index " + std::to_string(m));
    ShiftPlan plan;
    plan.in_n = m;
    plan.out_n = m + info.delta;
    plan.rows.resize(static_cast<std::size_t>(plan.out_n) - 1);
    auto row = [&plan](int i) -> ShiftRow& {
        return plan.rows[static_cast<std::size_t>(i) - 1];
    };

    switch (id) {
        case ShiftMap::HatUpEven:
            for (int j = 1; j <= m / 2; ++j) {
                const double c = ratio(m + 1, m, j);
                row(j) = one(c, j);
                row(m + 1 - j) = one(c, m - j);
            }
            break;
        case ShiftMap::StarUpOdd: {
            for (int j = 1; j <= (m - 1) / 2; ++j) {
                const double c = ratio(m + 1, m, j);
                row(j) = one(c, j);
                row(m + 1 - j) = one(c, m - j);
            }
            const int mid = (m + 1) / 2;
            const double c = binom(m + 1, mid) / (2.0 * binom(m, mid - 1));
            row(mid) = two(c, mid - 1, c, mid);
            break;
        }
        case ShiftMap::CheckDownEven:
            for (int j = 1; j <= m / 2 - 1; ++j) {
                const double c = ratio(m - 1, m, j);
                row(j) = one(c, j);
                row(m - 1 - j) = one(c, m - j);
            }
            break;
        case ShiftMap::TildeDownOdd:
        case ShiftMap::ContractEven: {
            for (int j = 1; j <= (m - 3) / 2; ++j) {
                const double c = ratio(m - 1, m, j);
                row(j) = one(c, j);
                row(m - 1 - j) = one(c, m - j);
            }
            const int mid = (m - 1) / 2;
            const double c = binom(m - 1, mid) / (2.0 * binom(m, mid));
            row(mid) = two(c, mid, c, mid + 1);
            break;
        }
        case ShiftMap::NormalizeSharpEven: {
            const int mid = (m - 1) / 2;
            for (int i = 1; i < mid; ++i) row(i) = one(1.0 / binom(m, i), i);
            row(mid) = two(0.5 / binom(m, mid), mid, 0.5 / binom(m, mid + 1), mid + 1);
            for (int i = mid + 1; i <= m - 2; ++i) row(i) = one(1.0 / binom(m, i + 1), i + 1);
            break;
        }
        case ShiftMap::PadEven:
            for (int j = 1; j <= m / 2; ++j) row(j) = one(1.0, j);
            row(m / 2 + 1) = one(1.0, m / 2);
            for (int i = m / 2 + 2; i <= m; ++i) row(i) = one(1.0, i - 1);
            break;
        case ShiftMap::PadOdd: {
            const int h = (m - 1) / 2;
            for (int j = 1; j <= h; ++j) row(j) = one(1.0, j);
            row(h + 1) = two(0.5, h, 0.5, h + 1);
            for (int i = h + 2; i <= m; ++i) row(i) = one(1.0, i - 1);
            break;
        }
        case ShiftMap::ContractOdd:
            for (int j = 1; j <= m / 2 - 1; ++j) {
                const double c = ratio(m - 1, m, j);
                row(j) = one(c, j);
                row(m - 1 - j) = one(c, m - j);
            }
            break;
        case ShiftMap::NormalizeSharpOdd: {
            const int h = m / 2 - 1;
            for (int i = 1; i <= h; ++i) row(i) = one(1.0 / binom(m, i), i);
            for (int i = h + 1; i <= m - 2; ++i) row(i) = one(1.0 / binom(m, i + 1), i + 1);
            break;
        }
    }
    return plan;
}

DomainPoint shift(ShiftMap id, const DomainPoint& y) {
    validate(y);
    const ShiftPlan plan = shift_plan(id, y.n);
    DomainPoint out = DomainPoint::origin(plan.out_n);
    for (int i = 1; i <= plan.out_n - 1; ++i) {
        Cplx acc(0.0, 0.0);
        for (const auto& [c, src] : plan.rows[static_cast<std::size_t>(i) - 1].terms)
            acc += c * y.coord(src);
        out.y[static_cast<std::size_t>(i) - 1] = acc;
    }
    out.q = y.q;
    return out;
}

namespace {

/// Closed-domain sample with boundary stress: beta sums up to the cap and
/// |q| pinned to the circle on a third of the draws.
DomainPoint sample_closed(int n, Rng& rng, bool on_circle) {
    std::vector<Cplx> betas(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j <= n / 2; ++j) {
        const double cap = binom(n, j);
        double a = rng.u01(), b = rng.u01();
        if (a + b > 1.0) {
            a = 1.0 - a;
            b = 1.0 - b;
        }
        const double total = rng.u01() < 0.25 ? 1.0 : rng.u01();
        const double denom = std::max(a + b, 1e-12);
        a *= total / denom;
        b *= total / denom;
        if (2 * j == n) {
            betas[static_cast<std::size_t>(j) - 1] = rng.circle(cap * total / 2.0);
        } else {
            betas[static_cast<std::size_t>(j) - 1] = rng.circle(cap * a);
            betas[static_cast<std::size_t>(n - j) - 1] = rng.circle(cap * b);
        }
    }
    const Cplx q = on_circle ? rng.circle(1.0) : rng.disk(1.0);
    return point_from_betas(n, betas, q);
}

} // namespace

VerificationReport shift_verify(ShiftMapId map, int samples, std::uint64_t seed) {
    const ShiftMapInfo& info = shift_map_info(map.id);
    const int n_lo = info.min_n;
    const int n_hi = info.min_n + 2;

    auto trial = [&](long i) -> TrialResult {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const int n = i % 2 == 0 ? n_lo : n_hi;
        TrialResult result;

        DomainPoint y;
        if (map.closed) {
            y = sample_closed(n, rng, i % 3 == 0);
        } else {
            SampleConfig cfg;
            cfg.n = n;
            cfg.mode = SampleMode::InsideBeta;
            cfg.seed = mix_seed(seed, static_cast<std::uint64_t>(i) * 2 + 1);
            y = sample_point(cfg, 0);
        }
        const DomainPoint image = shift(map.id, y);
        const MembershipVerdict forward =
            map.closed ? in_gammatilde(image) : in_gtilde(image);
        result.residual = std::max(result.residual, -forward.margin);
        if (!forward.inside()) {
            result.failure = Failure{to_json(y).dump(), to_json(forward).dump(),
                                     "image Inside", -forward.margin};
            return result;
        }

        if (info.iff) {
            SampleConfig cfg;
            cfg.n = n;
            cfg.mode = SampleMode::AmbientBox;
            cfg.seed = mix_seed(seed, static_cast<std::uint64_t>(i) * 2);
            const DomainPoint probe = sample_point(cfg, 0);
            const DomainPoint probe_image = shift(map.id, probe);
            const MembershipVerdict before =
                map.closed ? in_gammatilde(probe) : in_gtilde(probe);
            const MembershipVerdict after =
                map.closed ? in_gammatilde(probe_image) : in_gtilde(probe_image);
            if (std::abs(before.margin) > 1e-3 && std::abs(after.margin) > 1e-3 &&
                before.inside() != after.inside()) {
                result.failure =
                    Failure{to_json(probe).dump(),
                            to_string(before.verdict) + " vs " + to_string(after.verdict),
                            "matching verdicts", std::abs(before.margin)};
            }
        }
        return result;
    };

    std::string label = std::string("embedding-") + info.name;
    if (map.closed) label += "-closed";
    return run_trials(label, samples, trial);
}

} // namespace sympoly
