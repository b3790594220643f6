#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "sympoly/errors.hpp"

namespace sympoly {

using Cplx = std::complex<double>;

// Tolerance policy, shared by all modules.
//
//   * a closed bound "<= 1" accepts up to 1 + kContractionTol;
//   * a strict bound "< 1" for open-domain membership demands slack of at
//     least kStrictBand, so membership is never claimed at numerical
//     boundaries;
//   * kClosedBand is the symmetric allowance for closed-domain membership.
//
// The strictness bands are design constants, not mathematical facts, so the
// CLI may override them at startup; set them before spawning workers.
inline constexpr double kContractionTol = 1e-12;
inline double kStrictBand = 1e-9;
inline double kClosedBand = 1e-9;
inline constexpr double kDetAgreeTol = 1e-10;
inline constexpr double kDualPathTol = 1e-10;   // Moebius path vs closed form
inline constexpr double kDualPathAlarm = 1e-8;  // hard error past this gap
inline double kPropTol = 1e-9;                  // proportionality defaults
inline double kBoundaryTol = 1e-10;             // zero detection on the bidisc
inline constexpr double kPoleTol = 1e-14;

inline bool is_finite(Cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_finite(Cplx v, const char* what) {
    if (!is_finite(v)) throw NonFiniteInput(std::string(what) + ": non-finite value");
}

inline void require_finite(std::span<const Cplx> vs, const char* what) {
    for (Cplx v : vs) require_finite(v, what);
}

/// Binomial coefficient as a double; exact for the n this library meets.
inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return std::round(r);
}

} // namespace sympoly
