#pragma once

#include <span>
#include <vector>

#include "sympoly/types.hpp"

namespace sympoly {

/// Monic polynomial z^d + coeffs[0] z^(d-1) + ... + coeffs[d-1].
/// Coefficients are stored from z^(d-1) down to the constant term; the
/// leading coefficient is implicitly 1.
struct MonicPoly {
    std::vector<Cplx> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }

    Cplx eval(Cplx z) const {
        Cplx acc(1.0, 0.0);
        for (const Cplx& c : coeffs) acc = acc * z + c;
        return acc;
    }

    double max_coeff_abs() const;

    /// Expand prod (z - r_i) back into monic coefficients.
    static MonicPoly from_roots(std::span<const Cplx> rs);
};

/// All roots with multiplicity, by Durand-Kerner iteration: simultaneous
/// updates w_k <- w_k - p(w_k) / prod_{j != k} (w_k - w_j) from distinct
/// starting points on a circle of radius 1 + max |coeff|. Budget 500
/// iterations, converged when the largest step is below 1e-13.
/// Throws NoConvergence if the budget runs out or the residual check
/// max |p(root)| <= 1e-9 * max(1, max |coeff|) fails.
std::vector<Cplx> roots(const MonicPoly& p);

} // namespace sympoly
