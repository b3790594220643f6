#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sympoly/geometry.hpp"
#include "sympoly/json_io.hpp"
#include "sympoly/schwarz.hpp"
#include "sympoly/verify.hpp"

namespace {

using namespace sympoly;

Json read_json(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
}

Cplx parse_lambda(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::string csv_row(int n, double k_re, double k_im, double v_re, double v_im,
                    double margin) {
    return format_double(n) + "," + format_double(k_re) + "," + format_double(k_im) +
           "," + format_double(v_re) + "," + format_double(v_im) + "," +
           format_double(margin) + "\n";
}

constexpr const char* kCsvHeader = "n,key_re,key_im,value_re,value_im,margin\n";

int cmd_check(const std::string& point_path, const std::string& domain,
              bool expect_inside, double prop_tol, int grid, bool csv) {
    const DomainPoint p = point_from_json(read_json(point_path));
    MembershipVerdict v;
    if (domain == "gtilde") {
        v = in_gtilde(p);
    } else if (domain == "gammatilde") {
        v = in_gammatilde(p);
    } else if (domain == "gn") {
        v = in_gn(p, false);
    } else if (domain == "gamman") {
        v = in_gn(p, true);
    } else if (domain == "gtilde2") {
        v = char2_oracle(p, grid);
    } else if (domain == "gtilde3") {
        v = char3(p);
    } else if (domain == "jn") {
        const bool member = in_jn(p, prop_tol);
        v.verdict = member ? Verdict::Inside : Verdict::OnBoundaryOrOutside;
        v.margin = in_gtilde(p).margin;
        v.binding_j = 0;
    } else {  // kn
        std::vector<Cplx> x(p.y);
        x.push_back(p.q);
        const bool member = in_kn(x, prop_tol);
        const double lead =
            std::max(std::abs(x[0]), std::abs(x[static_cast<std::size_t>(p.n) - 2])) / p.n;
        v.verdict = member ? Verdict::Inside : Verdict::OnBoundaryOrOutside;
        v.margin = 1.0 - lead - std::abs(p.q);
        v.binding_j = 0;
    }
    Json out = to_json(v);
    out["domain"] = domain;
    out["n"] = p.n;
    if (csv) {
        std::cout << kCsvHeader
                  << csv_row(p.n, v.binding_j, 0.0, v.margin, 0.0, v.margin);
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return expect_inside && v.verdict != Verdict::Inside ? 1 : 0;
}

int cmd_norm(const std::string& point_path, int j, bool csv) {
    const DomainPoint p = point_from_json(read_json(point_path));
    Json values = Json::array();
    std::string rows;
    const int lo = j == 0 ? 1 : j;
    const int hi = j == 0 ? p.n - 1 : j;
    for (int k = lo; k <= hi; ++k) {
        const double h = phi_hinf(k, p);
        values.push_back(Json{{"j", k}, {"hinf", h}});
        rows += csv_row(p.n, k, 0.0, h, 0.0, 1.0 - h);
    }
    if (csv) {
        std::cout << kCsvHeader << rows;
    } else if (j != 0) {
        Json out = values[0];
        out["n"] = p.n;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << Json{{"n", p.n}, {"values", values}}.dump(2) << "\n";
    }
    return 0;
}

/// Grid verification used by `interpolate --verify-grid`: membership of
/// psi(lambda) on angles x radii up to 0.999 and dual-path agreement.
VerificationReport verify_interpolant(const FullInterpolation& full, int angles) {
    VerificationReport rep;
    rep.suite = "interpolant-grid";
    const int n = full.spec.data.n;
    static const double radii[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.999};
    for (double rad : radii) {
        for (int a = 0; a < angles; ++a) {
            const Cplx lam = std::polar(rad, 2.0 * M_PI * a / angles);
            const DomainPoint img = interpolant_eval(full.spec, lam);
            const MembershipVerdict v = in_gtilde(img);
            ++rep.trials;
            if (!v.inside()) {
                ++rep.failure_count;
                if (rep.failures.size() < 16)
                    rep.failures.push_back(Failure{to_json(img).dump(),
                                                   to_string(v.verdict), "Inside",
                                                   -v.margin});
            }
        }
    }
    for (int a = 0; a < 32; ++a) {
        const Cplx lam = std::polar(0.97 * (a + 1) / 32.0, 0.37 + 0.41 * a);
        const DomainPoint lifted = lift_family_eval(full.family, n, lam);
        const DomainPoint direct = interpolant_eval(full.spec, lam);
        double gap = std::abs(lifted.q - direct.q);
        for (std::size_t k = 0; k < lifted.y.size(); ++k)
            gap = std::max(gap, std::abs(lifted.y[k] - direct.y[k]));
        rep.max_residual = std::max(rep.max_residual, gap);
        ++rep.trials;
        if (gap > kDualPathTol) {
            ++rep.failure_count;
            if (rep.failures.size() < 16)
                rep.failures.push_back(Failure{to_json(direct).dump(), "dual-path drift",
                                               "agree to 1e-10", gap});
        }
    }
    return rep;
}

int cmd_interpolate(const std::string& x_path, const std::optional<std::string>& lambda,
                    int verify_grid, bool csv) {
    const InterpolantSpec spec = interpolant_spec_from_json(read_json(x_path));
    const FullInterpolation full = interpolate_full(spec.data);
    Json out = to_json(full.spec);
    std::string rows;
    if (lambda) {
        const Cplx lam = parse_lambda(*lambda);
        const DomainPoint psi = interpolant_eval(full.spec, lam);
        out["lambda"] = to_json(lam);
        out["psi"] = to_json(psi);
        const double margin = in_gtilde(psi).margin;
        for (int k = 1; k <= psi.n; ++k)
            rows += csv_row(psi.n, lam.real(), lam.imag(), psi.coord(k).real(),
                            psi.coord(k).imag(), margin);
    }
    int rc = 0;
    if (verify_grid > 0) {
        const VerificationReport rep = verify_interpolant(full, verify_grid);
        out["verification"] = to_json(rep);
        rc = rep.pass() ? 0 : 1;
    }
    if (csv) {
        std::cout << kCsvHeader << rows;
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return rc;
}

int cmd_embed(const std::string& map_name, const std::string& in_path,
              const std::string& out_path) {
    const ShiftMap map = shift_map_by_name(map_name);
    const DomainPoint p = point_from_json(read_json(in_path));
    const DomainPoint image = shift(map, p);
    write_text(out_path, to_json(image).dump(2) + "\n");
    return 0;
}

int cmd_sample(const std::string& mode, int n, int count, std::uint64_t seed,
               double near_eps, double box_scale, const std::string& out_path, bool csv) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.count = count;
    cfg.seed = seed;
    cfg.near_eps = near_eps;
    cfg.box_scale = box_scale;
    std::vector<DomainPoint> points;
    if (mode == "insidebeta") {
        cfg.mode = SampleMode::InsideBeta;
        points = sample_inside_gtilde(cfg);
    } else if (mode == "nearboundary-beta") {
        cfg.mode = SampleMode::NearBoundary;
        points = sample_inside_gtilde(cfg);
    } else if (mode == "insidepolydisc") {
        cfg.mode = SampleMode::InsidePolydisc;
        points = sample_inside_gn(cfg);
    } else if (mode == "nearboundary-polydisc") {
        cfg.mode = SampleMode::NearBoundary;
        points = sample_inside_gn(cfg);
    } else {  // ambientbox
        cfg.mode = SampleMode::AmbientBox;
        points = sample_ambient(cfg);
    }
    std::string text;
    if (csv) {
        text = kCsvHeader;
        for (int i = 0; i < static_cast<int>(points.size()); ++i) {
            const DomainPoint& p = points[static_cast<std::size_t>(i)];
            text += csv_row(p.n, i, 0.0, p.q.real(), p.q.imag(), in_gtilde(p).margin);
        }
    } else {
        for (const DomainPoint& p : points) text += to_json(p).dump() + "\n";
    }
    write_text(out_path, text);
    return 0;
}

int cmd_verify(const std::string& suite, int count, std::uint64_t seed, int n) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.count = count;
    cfg.seed = seed;
    bool ok = true;
    Json out;
    if (suite == "all") {
        out = Json::array();
        for (const std::string& name : suite_names()) {
            const VerificationReport rep = run_suite(name, cfg);
            ok = ok && rep.pass();
            out.push_back(to_json(rep));
        }
    } else {
        const VerificationReport rep = run_suite(suite, cfg);
        ok = rep.pass();
        out = to_json(rep);
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational kernel for the symmetrized polydisc and its extension"};
    app.require_subcommand(1);
    bool csv = false;
    const char* csv_help = "emit flat CSV (n, key re/im, value re/im, margin)";
    app.add_flag("--csv", csv, csv_help);
    app.add_option("--strict-band", kStrictBand,
                   "open-domain strictness band (default 1e-9)");
    app.add_option("--closed-band", kClosedBand,
                   "closed-domain tolerance band (default 1e-9)");
    app.add_option("--boundary-tol", kBoundaryTol,
                   "zero-detection threshold of the bidisc oracle (default 1e-10)");

    auto* check = app.add_subcommand("check", "membership verdict for a point");
    check->fallthrough();
    std::string check_point, check_domain = "gtilde";
    bool expect_inside = false;
    double prop_tol = kPropTol;
    int check_grid = 64;
    check->add_option("--point", check_point, "point JSON (or - for stdin)")->required();
    check->add_option("--domain", check_domain, "target domain")
        ->check(CLI::IsMember(
            {"gtilde", "gammatilde", "gn", "gamman", "jn", "kn", "gtilde2", "gtilde3"}));
    check->add_flag("--expect-inside", expect_inside, "exit 1 unless Inside");
    check->add_option("--prop-tol", prop_tol, "relative proportionality tolerance");
    check->add_option("--grid", check_grid, "angular grid for the zero-freeness oracle");
    check->add_flag("--csv", csv, csv_help);

    auto* norm = app.add_subcommand("norm", "H-infinity norm of Phi_j(., y)");
    norm->fallthrough();
    std::string norm_point;
    int norm_j = 0;
    norm->add_option("--point", norm_point)->required();
    norm->add_option("--j", norm_j, "coordinate index (default: all)");
    norm->add_flag("--csv", csv, csv_help);

    auto* interp = app.add_subcommand("interpolate", "construct the explicit interpolant");
    interp->fallthrough();
    std::string interp_x;
    std::optional<std::string> interp_lambda;
    int interp_grid = 0;
    interp->add_option("--x", interp_x, "derivative data JSON {n, x}")->required();
    interp->add_option("--lambda", interp_lambda, "evaluate psi at lambda (re[,im])");
    interp->add_option("--verify-grid", interp_grid,
                       "membership/dual-path verification with this many angles");
    interp->add_flag("--csv", csv, csv_help);

    auto* embed = app.add_subcommand("embed", "apply a dimension-shift map");
    embed->fallthrough();
    std::string embed_map, embed_in, embed_out = "-";
    embed->add_option("--map", embed_map, "map id, e.g. hat-up-even")->required();
    embed->add_option("--in", embed_in, "input point JSON")->required();
    embed->add_option("--out", embed_out, "output path (default stdout)");

    auto* sample = app.add_subcommand("sample", "emit seeded samples as JSONL");
    sample->fallthrough();
    std::string sample_mode = "insidebeta", sample_out = "-";
    int sample_n = 3, sample_count = 10;
    std::uint64_t sample_seed = 0;
    double near_eps = 1e-4;
    sample->add_option("--mode", sample_mode)
        ->check(CLI::IsMember({"insidebeta", "insidepolydisc", "ambientbox",
                               "nearboundary-beta", "nearboundary-polydisc"}));
    sample->add_option("--n", sample_n, "ambient index")->check(CLI::Range(2, 32));
    sample->add_option("--count", sample_count)->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_seed)->envname("SYMPOLY_SEED");
    sample->add_option("--near-eps", near_eps, "NearBoundary pinch");
    double box_scale = 1.5;
    sample->add_option("--box-scale", box_scale, "AmbientBox radius multiple");
    sample->add_option("--out", sample_out, "output path (default stdout)");
    sample->add_flag("--csv", csv, csv_help);

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    std::string verify_suite;
    int verify_count = 1000, verify_n = 0;
    std::uint64_t verify_seed = 0;
    verify->add_option("--suite", verify_suite, "suite name or 'all'")->required();
    verify->add_option("--count", verify_count, "trials per ambient index");
    verify->add_option("--seed", verify_seed)->envname("SYMPOLY_SEED");
    verify->add_option("--n", verify_n, "restrict to one ambient index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check)
            return cmd_check(check_point, check_domain, expect_inside, prop_tol,
                             check_grid, csv);
        if (*norm) return cmd_norm(norm_point, norm_j, csv);
        if (*interp) return cmd_interpolate(interp_x, interp_lambda, interp_grid, csv);
        if (*embed) return cmd_embed(embed_map, embed_in, embed_out);
        if (*sample)
            return cmd_sample(sample_mode, sample_n, sample_count, sample_seed,
                              near_eps, box_scale, sample_out, csv);
        if (*verify) return cmd_verify(verify_suite, verify_count, verify_seed, verify_n);
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
