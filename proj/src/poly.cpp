#include "sympoly/poly.hpp"

#include <algorithm>
#include <cmath>

namespace sympoly {

double MonicPoly::max_coeff_abs() const {
    double m = 0.0;
    for (const Cplx& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

MonicPoly MonicPoly::from_roots(std::span<const Cplx> rs) {
    std::vector<Cplx> c{Cplx(1.0, 0.0)};
    for (const Cplx& r : rs) {
        c.push_back(Cplx(0.0, 0.0));
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= r * c[i - 1];
    }
    return MonicPoly{std::vector<Cplx>(c.begin() + 1, c.end())};
}

std::vector<Cplx> roots(const MonicPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("roots: degree must be >= 1");
    if (d == 1) return {-p.coeffs[0]};

    const double radius = 1.0 + p.max_coeff_abs();
    std::vector<Cplx> w(d);
    for (int k = 0; k < d; ++k) {
        // offset keeps starting points off any root symmetry axis
        const double angle = 2.0 * M_PI * k / d + 0.4;
        w[k] = std::polar(radius, angle);
    }

    constexpr int kBudget = 500;
    constexpr double kStepTol = 1e-13;
    bool converged = false;
    for (int it = 0; it < kBudget && !converged; ++it) {
        double max_step = 0.0;
        for (int k = 0; k < d; ++k) {
            Cplx denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= w[k] - w[j];
            if (denom == Cplx(0.0, 0.0))
                throw NoConvergence("roots: coincident iterates");
            const Cplx step = p.eval(w[k]) / denom;
            w[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < kStepTol;
    }

    // the step size can plateau just above the tolerance on root clusters
    // (rounding noise divided by small separations), so the residual
    // postcondition decides acceptance, not the step criterion
    const double residual_tol = 1e-9 * std::max(1.0, p.max_coeff_abs());
    for (const Cplx& r : w)
        if (std::abs(p.eval(r)) > residual_tol)
            throw NoConvergence("roots: residual check failed after iteration budget");
    return w;
}

} // namespace sympoly
