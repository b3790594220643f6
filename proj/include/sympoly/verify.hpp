#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sympoly/domains.hpp"
#include "sympoly/types.hpp"

namespace sympoly {

/// Deterministic random source. The raw engine output is mapped to doubles
/// by an explicit shift-and-scale so streams are identical across platforms
/// and thread counts; distribution adapters from <random> are avoided.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    /// Uniform on the disk of the given radius (radius = sqrt transform).
    Cplx disk(double radius) {
        const double r = radius * std::sqrt(u01());
        const double a = 2.0 * M_PI * u01();
        return std::polar(r, a);
    }

    Cplx circle(double radius) { return std::polar(radius, 2.0 * M_PI * u01()); }

  private:
    std::mt19937_64 gen_;
};

/// Stream splitter: derives an independent sub-seed for (seed, index) so
/// trials can run in any order or in parallel without changing results.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

enum class SampleMode { InsideBeta, InsidePolydisc, AmbientBox, NearBoundary };

struct SampleConfig {
    int n = 3;
    int count = 1;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::InsideBeta;
    double near_eps = 1e-4;   // NearBoundary: beta sums pinned at (1-eps) C(n,j)
    double box_scale = 1.5;   // AmbientBox: radius multiple of the coordinate bound
};

/// Single draw, index-addressable for parallel use.
DomainPoint sample_point(const SampleConfig& cfg, int index);

/// Constructive sampler from the beta parameterization; every output is
/// strictly inside the extended symmetrized polydisc.
/// Modes: InsideBeta, NearBoundary.
std::vector<DomainPoint> sample_inside_gtilde(const SampleConfig& cfg);

/// Symmetrization of uniform polydisc tuples; inside both the symmetrized
/// polydisc and its extension. Modes: InsidePolydisc, NearBoundary
/// (moduli pinned at 1 - eps).
std::vector<DomainPoint> sample_inside_gn(const SampleConfig& cfg);

/// Unconstrained ambient draws for mixed inside/outside testing.
std::vector<DomainPoint> sample_ambient(const SampleConfig& cfg);

struct Failure {
    std::string input;
    std::string observed;
    std::string expected;
    double residual = 0.0;
};

struct VerificationReport {
    std::string suite;
    long trials = 0;
    std::vector<Failure> failures;
    long failure_count = 0;  // failures beyond the stored cap are counted
    double max_residual = 0.0;

    bool pass() const { return failure_count == 0; }
};

/// Outcome of one trial inside a property suite.
struct TrialResult {
    std::optional<Failure> failure;
    double residual = 0.0;
};

/// Runs count trials across a worker pool (SYMPOLY_THREADS overrides the
/// hardware default) and merges: residuals by max, failures canonically
/// ordered by input hash. Results are independent of the thread count.
VerificationReport run_trials(const std::string& suite, long count,
                              const std::function<TrialResult(long)>& trial);

/// Executes a registered property suite. cfg.n = 0 runs the suite's built-in
/// set of ambient indices; cfg.count is the trial count per index.
VerificationReport run_suite(const std::string& name, const SampleConfig& cfg);

std::vector<std::string> suite_names();

} // namespace sympoly
