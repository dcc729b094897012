#pragma once

#include <vector>

#include "onsager/gamma_map.hpp"

// Branch tracing for the pitchforks off the trivial solution.  An eigenvalue
// of I - lambda J(0) crosses zero at every lambda_m = -2/k_m; there the
// solution set locally looks like V = t phi_m + t^2 z with
// lambda = lambda_m + C_m t^2.  Branches are entered by a Newton corrector
// pinned to a prescribed amplitude and followed by pseudo-arclength
// continuation, which keeps tracing through folds in lambda (the subcritical
// case).  Amplitude t is the H^1 projection onto the orthonormal birth mode
// phi_m = cos(2 m theta) / sqrt((4 m^2 + 1) pi); all signs in the local law
// are normalization independent, the numeric curvature C_m is stated in this
// convention.

namespace onsager {

struct BranchPoint {
    double lambda = 0.0;
    SpectralField field;
    double t = 0.0;        // <V, phi_m> for the branch's birth mode
    double min_eig = 0.0;  // smallest eigenvalue of I - lambda J(V)
    bool stable = false;
    double residual_h1 = 0.0;  // independently recomputed fixed-point residual
};

enum class BranchTermination { lambda_max, max_steps, step_failure };

struct Branch {
    int id = 0;
    int mode = 0;  // birth mode; 0 for the trivial branch
    std::vector<BranchPoint> points;
    BranchTermination termination = BranchTermination::max_steps;
};

struct AsymptoticPrediction {
    int mode = 0;
    double gamma = 0.0;            // k_{2m} / k_m
    double mu_coefficient = 0.0;   // C_m in lambda - lambda_m ~ C_m t^2
    double second_harmonic = 0.0;  // z_{2m}, phi-basis coefficient of the t^2 term
    Criticality criticality = Criticality::degenerate;
    bool degenerate = false;       // gamma == 1 (resonant) leaves the law undefined
};

struct ContinuationOptions {
    double ds = 0.05;          // arclength step in the (H^1, lambda) metric
    double lambda_max = 9.0;
    int max_steps = 400;
    double tol = 1e-10;        // corrector tolerance
    int max_corrector = 30;
    int modes = 32;
    int grid_size = -1;
    double stability_tol = 1e-8;
};

// Zeros of the eigenvalue curves 1 - lambda d_m of I - lambda J(0) inside
// [lambda_lo, lambda_hi], located by sign change over the sampled grid plus
// bisection on the numerically assembled diagonal; ascending.
std::vector<double> trivial_spectrum_sweep(const KernelSpec& k, double lambda_lo,
                                           double lambda_hi, int samples);

// Local expansion coefficients at the pitchfork of the given mode:
//   gamma   = k_{2m} / k_m (0 when absent)
//   C_m     = lambda_m (c_m^2 / 8) (2 gamma - 1) / (gamma - 1)
//   z_{2m}  = gamma / (gamma - 1) * c_m^2 / (4 c_{2m})
// with c_m = 1 / sqrt((4 m^2 + 1) pi).  Requires k_m < 0.
AsymptoticPrediction asymptotic_predictor(const KernelSpec& k, int mode);

// Enter the branch of the given mode at pinned amplitude <V, phi_m> =
// sign * t0, correcting the local predictor with Newton on the bordered
// system in (V, lambda).  Requires 0 < t0 <= 0.1; throws on corrector
// divergence.
BranchPoint switch_branch(int mode, const KernelSpec& k, double t0, int sign,
                          const ContinuationOptions& opts = {});

// Pseudo-arclength continuation from a converged point.  Secant tangents,
// step halving down to ds/64 on corrector failure; stops at lambda_max,
// max_steps, or persistent failure.  Every accepted point carries its
// recomputed residual, amplitude and stability data.
Branch continue_branch(const BranchPoint& start, int mode, const KernelSpec& k,
                       const ContinuationOptions& opts = {});

struct QuadraticLawFit {
    double slope = 0.0;      // d lambda / d(t^2)
    double intercept = 0.0;  // lambda at t = 0; the recovered bifurcation point
    double r_squared = 0.0;
    int points_used = 0;
};

// Least-squares fit of lambda against t^2 over the branch points with
// 0 < |t| <= t_window; realizes the local quadratic law check.
QuadraticLawFit fit_quadratic_law(const Branch& branch, double t_window);

}  // namespace onsager
