#pragma once

#include <cstdint>
#include <vector>

#include "onsager/gamma_map.hpp"

// Solvers for the fixed-point problem V = lambda Gamma(V) at fixed lambda:
// plain Picard iteration (globally gentle, the iterates stay in a ball
// because lambda Gamma is bounded), Newton's method on the coefficient
// residual, and a deterministic multistart driver that enumerates distinct
// solutions by clustering converged results in H^1 distance.

namespace onsager {

enum class SolveMethod { picard, newton };
enum class SolveStatus { converged, max_iterations, singular_system };

struct SolveReport {
    SpectralField solution;
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
    int iterations = 0;
    double residual_h1 = 0.0;  // ||V - lambda Gamma(V)|| at the returned V
    SolveMethod method = SolveMethod::picard;
    double rcond = 0.0;  // reciprocal condition estimate of the last Newton system
};

// Iterate V <- lambda Gamma(V) until the H^1 residual falls below tol.
// Exhausting max_iter yields a non-converged report, not an error.
SolveReport picard(const SpectralField& V0, double lambda, const KernelSpec& k,
                   double tol, int max_iter, int grid_size = -1);

// Newton iteration on V - lambda Gamma(V) = 0 with the analytic Jacobian.
// The linear system is factored before the convergence test, so an exactly
// singular linearization (lambda at a bifurcation point of the current
// iterate) reports singular_system rather than claiming a converged
// solution that is not isolated.
SolveReport newton(const SpectralField& V0, double lambda, const KernelSpec& k,
                   double tol, int max_iter, int grid_size = -1);

struct SolutionCluster {
    SpectralField representative;  // first converged member
    int hits = 0;
    double residual_h1 = 0.0;  // independently recomputed for the representative
};

struct SolutionSet {
    double lambda = 0.0;
    std::vector<SolutionCluster> clusters;  // in order of first discovery
    int failed_starts = 0;
    double cluster_radius = 0.0;
};

struct MultistartOptions {
    int n_starts = 50;
    double radius = 5.0;
    std::uint64_t seed = 0;
    int modes = 16;
    int grid_size = -1;
    double picard_tol = 1e-3;  // coarse stage before Newton polishing
    int picard_max_iter = 4000;
    double newton_tol = 1e-12;
    int newton_max_iter = 60;
    double cluster_radius = 1e-6;
};

// Deterministic multistart: start 0 is the ball center (the trivial
// candidate is always probed); the remaining starts are drawn from the H^1
// ball of the given radius with the smooth spectral envelope
// coefficients ~ r_m / m^2, r_m uniform in [-1, 1].  Each start runs Picard
// to the coarse tolerance, then Newton; converged results are clustered by
// H^1 distance, with every residual rechecked independently of the solver
// bookkeeping.
SolutionSet multistart(double lambda, const KernelSpec& k, const MultistartOptions& opts);

SolutionSet multistart(double lambda, const KernelSpec& k, int n_starts, double radius,
                       std::uint64_t seed);

// Start field used by multistart for the given start index (index 0 is the
// zero field); exposed for reproducibility tests.
SpectralField multistart_start(int index, const MultistartOptions& opts);

}  // namespace onsager
