#include "sympoly/json_io.hpp"

#include <charconv>

namespace sympoly {

Json to_json(Cplx v) { return Json::array({v.real(), v.imag()}); }

Cplx cplx_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const DomainPoint& p) {
    Json ys = Json::array();
    for (const Cplx& v : p.y) ys.push_back(to_json(v));
    return Json{{"n", p.n}, {"y", std::move(ys)}, {"q", to_json(p.q)}};
}

DomainPoint point_from_json(const Json& j) {
    DomainPoint p;
    p.n = j.at("n").get<int>();
    for (const Json& v : j.at("y")) p.y.push_back(cplx_from_json(v));
    p.q = cplx_from_json(j.at("q"));
    validate(p);
    return p;
}

Json to_json(const MembershipVerdict& v) {
    return Json{{"verdict", to_string(v.verdict)},
                {"margin", v.margin},
                {"binding_j", v.binding_j}};
}

Json to_json(const InterpolantSpec& s) {
    Json xs = Json::array();
    for (const Cplx& v : s.data.x) xs.push_back(to_json(v));
    return Json{{"n", s.data.n}, {"x", std::move(xs)}, {"r", to_json(s.r)}};
}

InterpolantSpec interpolant_spec_from_json(const Json& j) {
    DerivativeData d;
    d.n = j.at("n").get<int>();
    for (const Json& v : j.at("x")) d.x.push_back(cplx_from_json(v));
    validate(d);
    return InterpolantSpec{d, r_coeff(d)};
}

Json to_json(const Mat2& m) {
    return Json::array(
        {Json::array({to_json(m.a11), to_json(m.a12)}),
         Json::array({to_json(m.a21), to_json(m.a22)})});
}

Json to_json(const ContractionTuple& t) {
    Json mats = Json::array();
    for (const Mat2& m : t.mats) mats.push_back(to_json(m));
    return Json{{"mats", std::move(mats)}};
}

Json to_json(const Failure& f) {
    return Json{{"input", f.input},
                {"observed", f.observed},
                {"expected", f.expected},
                {"residual", f.residual}};
}

Json to_json(const VerificationReport& r) {
    Json fails = Json::array();
    for (const Failure& f : r.failures) fails.push_back(to_json(f));
    return Json{{"suite", r.suite},
                {"trials", r.trials},
                {"failures", std::move(fails)},
                {"failure_count", r.failure_count},
                {"max_residual", r.max_residual},
                {"pass", r.pass()}};
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace sympoly
