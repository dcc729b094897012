#include "onsager/continuation.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "onsager/analysis.hpp"

namespace onsager {

namespace {

constexpr double kPi = std::numbers::pi;

double h1_weight(int mode) { return (1.0 + 4.0 * mode * mode) * kPi; }

// Eigenvalue curve of I - lambda J(0) for one diagonal entry.
double eig_curve(double lambda, double diag) { return 1.0 - lambda * diag; }

double bisect_eig_zero(double lo, double hi, double diag) {
    double flo = eig_curve(lo, diag);
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eig_curve(mid, diag);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> trivial_spectrum_sweep(const KernelSpec& k, double lambda_lo,
                                           double lambda_hi, int samples) {
    if (!(lambda_hi > lambda_lo))
        throw std::invalid_argument("trivial_spectrum_sweep: empty lambda range");
    if (samples < 1) throw std::invalid_argument("trivial_spectrum_sweep: need samples >= 1");

    const int m = k.modes();
    JacobianMatrix j0 = jacobian(SpectralField::zero(0), k, m);

    std::vector<double> zeros;
    for (int i = 0; i < m; ++i) {
        const double diag = j0.J(i, i);
        double prev_lambda = lambda_lo;
        double prev_val = eig_curve(prev_lambda, diag);
        for (int s = 1; s <= samples; ++s) {
            const double cur_lambda = lambda_lo + (lambda_hi - lambda_lo) * s / samples;
            const double cur_val = eig_curve(cur_lambda, diag);
            if (prev_val == 0.0) {
                zeros.push_back(prev_lambda);
            } else if (prev_val * cur_val < 0.0) {
                zeros.push_back(bisect_eig_zero(prev_lambda, cur_lambda, diag));
            }
            prev_lambda = cur_lambda;
            prev_val = cur_val;
        }
        if (prev_val == 0.0) zeros.push_back(prev_lambda);
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

AsymptoticPrediction asymptotic_predictor(const KernelSpec& k, int mode) {
    if (mode < 1 || !(k.coeff(mode) < 0.0))
        throw std::invalid_argument("asymptotic_predictor: mode must have a negative coefficient");
    AsymptoticPrediction p;
    p.mode = mode;
    p.gamma = k.coeff(2 * mode) / k.coeff(mode);
    if (p.gamma == 1.0) {
        p.degenerate = true;
        p.criticality = Criticality::degenerate;
        p.mu_coefficient = std::numeric_limits<double>::quiet_NaN();
        p.second_harmonic = std::numeric_limits<double>::quiet_NaN();
        return p;
    }
    const double lambda_m = -2.0 / k.coeff(mode);
    const double cm = orthonormal_scale(mode);
    const double c2m = orthonormal_scale(2 * mode);
    p.mu_coefficient = lambda_m * (cm * cm / 8.0) * (2.0 * p.gamma - 1.0) / (p.gamma - 1.0);
    p.second_harmonic = p.gamma / (p.gamma - 1.0) * cm * cm / (4.0 * c2m);
    p.criticality = p.mu_coefficient > 0.0
                        ? Criticality::supercritical
                        : (p.mu_coefficient < 0.0 ? Criticality::subcritical
                                                  : Criticality::degenerate);
    return p;
}

namespace {

struct CorrectorResult {
    bool converged = false;
    int iterations = 0;
    double defect = 0.0;
};

// Newton on the bordered system [V - lambda Gamma(V); constraint] with the
// constraint row given by (grad_v, d/dlambda, target).
CorrectorResult bordered_newton(SpectralField& V, double& lambda, const KernelSpec& k,
                                const Eigen::VectorXd& constraint_grad,
                                double constraint_dlambda,
                                const std::function<double(const SpectralField&, double)>& constraint,
                                double tol, int max_iter, int grid_size) {
    const int m = V.modes();
    CorrectorResult res;
    Eigen::MatrixXd sys(m + 1, m + 1);
    Eigen::VectorXd rhs(m + 1);
    for (int it = 0; it <= max_iter; ++it) {
        GibbsMeasure mu = gibbs_measure(V, grid_size, 2 * m);
        SpectralField g = gamma_from_measure(mu, k, m);
        Eigen::VectorXd r = V.v - lambda * g.v;
        const double c = constraint(V, lambda);
        res.defect = h1_norm({r}) + std::abs(c);
        res.iterations = it;
        if (res.defect <= tol) {
            res.converged = true;
            return res;
        }
        if (it == max_iter) break;
        JacobianMatrix jm = jacobian_from_measure(mu, k, m);
        sys.topLeftCorner(m, m) = Eigen::MatrixXd::Identity(m, m) - lambda * jm.J;
        sys.topRightCorner(m, 1) = -g.v;
        sys.bottomLeftCorner(1, m) = constraint_grad.transpose();
        sys(m, m) = constraint_dlambda;
        rhs.head(m) = -r;
        rhs[m] = -c;
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys);
        if (!(lu.rcond() > 1e-15)) return res;
        Eigen::VectorXd delta = lu.solve(rhs);
        V.v += delta.head(m);
        lambda += delta[m];
    }
    return res;
}

BranchPoint make_branch_point(const SpectralField& V, double lambda, int mode,
                              const KernelSpec& k, const ContinuationOptions& opts) {
    BranchPoint p;
    p.lambda = lambda;
    p.field = V;
    p.t = mode >= 1 ? V.coeff(mode) / orthonormal_scale(mode) : 0.0;
    StabilityReport stab = spectrum(V, lambda, k, V.modes(), opts.grid_size,
                                    opts.stability_tol);
    p.min_eig = stab.min_eig;
    p.stable = stab.stable;
    p.residual_h1 = h1_norm(residual(V, lambda, k, opts.grid_size));
    return p;
}

}  // namespace

BranchPoint switch_branch(int mode, const KernelSpec& k, double t0, int sign,
                          const ContinuationOptions& opts) {
    if (mode < 1) throw std::invalid_argument("switch_branch: mode must be >= 1");
    if (!(t0 > 0.0 && t0 <= 0.1))
        throw std::invalid_argument("switch_branch: amplitude must lie in (0, 0.1]");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("switch_branch: sign must be +1 or -1");
    if (!(k.coeff(mode) < 0.0))
        throw std::invalid_argument("switch_branch: mode has no bifurcation at positive lambda");
    if (opts.modes < 2 * mode)
        throw std::invalid_argument("switch_branch: truncation must cover the second harmonic");

    AsymptoticPrediction pred = asymptotic_predictor(k, mode);
    const double lambda_m = -2.0 / k.coeff(mode);
    const double cm = orthonormal_scale(mode);

    SpectralField V = SpectralField::zero(opts.modes);
    V.v[mode - 1] = sign * t0 * cm;
    double lambda = lambda_m;
    if (!pred.degenerate) {
        // raw second-harmonic coefficient is z_{2m} c_{2m}
        V.v[2 * mode - 1] += t0 * t0 * pred.second_harmonic * orthonormal_scale(2 * mode);
        lambda += pred.mu_coefficient * t0 * t0;
    }

    // Pin the amplitude <V, phi_mode> = sign * t0 and free lambda.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(opts.modes);
    grad[mode - 1] = 1.0 / cm;
    const double target = sign * t0;
    auto constraint = [mode, cm, target](const SpectralField& f, double) {
        return f.v[mode - 1] / cm - target;
    };
    CorrectorResult res = bordered_newton(V, lambda, k, grad, 0.0, constraint, opts.tol,
                                          opts.max_corrector, opts.grid_size);
    if (!res.converged)
        throw std::runtime_error("switch_branch: corrector diverged for mode " +
                                 std::to_string(mode) + " after " +
                                 std::to_string(res.iterations) + " iterations (defect " +
                                 std::to_string(res.defect) + ")");
    return make_branch_point(V, lambda, mode, k, opts);
}

Branch continue_branch(const BranchPoint& start, int mode, const KernelSpec& k,
                       const ContinuationOptions& opts) {
    if (mode < 1) throw std::invalid_argument("continue_branch: mode must be >= 1");
    if (!(opts.ds > 0.0)) throw std::invalid_argument("continue_branch: step must be positive");
    const int m = start.field.modes();
    if (m < mode) throw std::invalid_argument("continue_branch: start field lacks the birth mode");
    if (h1_norm(residual(start.field, start.lambda, k, opts.grid_size)) > opts.tol)
        throw std::invalid_argument("continue_branch: start point is not converged");

    Branch branch;
    branch.mode = mode;
    branch.points.push_back(start);
    branch.points.front().residual_h1 =
        h1_norm(residual(start.field, start.lambda, k, opts.grid_size));

    Eigen::VectorXd weights(m);
    for (int i = 1; i <= m; ++i) weights[i - 1] = h1_weight(i);

    // Initial tangent: secant from the birth point (V = 0, lambda_mode).
    SpectralField V = start.field;
    double lambda = start.lambda;
    Eigen::VectorXd tangent_v = V.v;
    double tangent_l = lambda - (-2.0 / k.coeff(mode));
    {
        const double norm = std::sqrt(tangent_v.dot(weights.asDiagonal() * tangent_v) +
                                      tangent_l * tangent_l);
        if (!(norm > 0.0))
            throw std::invalid_argument("continue_branch: start coincides with the birth point");
        tangent_v /= norm;
        tangent_l /= norm;
    }

    double step = opts.ds;
    while (static_cast<int>(branch.points.size()) < opts.max_steps) {
        SpectralField V_try = V;
        double lambda_try = lambda;
        V_try.v += step * tangent_v;
        lambda_try += step * tangent_l;

        const Eigen::VectorXd grad = weights.asDiagonal() * tangent_v;
        const double want = step;
        auto constraint = [&](const SpectralField& f, double l) {
            return tangent_v.dot(weights.asDiagonal() * (f.v - V.v)) +
                   tangent_l * (l - lambda) - want;
        };
        CorrectorResult res = bordered_newton(V_try, lambda_try, k, grad, tangent_l,
                                              constraint, opts.tol, opts.max_corrector,
                                              opts.grid_size);
        if (!res.converged || lambda_try < 0.0) {
            step *= 0.5;
            if (step < opts.ds / 64.0) {
                branch.termination = BranchTermination::step_failure;
                return branch;
            }
            continue;
        }

        Eigen::VectorXd secant_v = V_try.v - V.v;
        double secant_l = lambda_try - lambda;
        const double norm = std::sqrt(secant_v.dot(weights.asDiagonal() * secant_v) +
                                      secant_l * secant_l);
        tangent_v = secant_v / norm;
        tangent_l = secant_l / norm;
        V = V_try;
        lambda = lambda_try;
        branch.points.push_back(make_branch_point(V, lambda, mode, k, opts));
        step = std::min(opts.ds, 2.0 * step);

        if (lambda > opts.lambda_max) {
            branch.termination = BranchTermination::lambda_max;
            return branch;
        }
    }
    branch.termination = BranchTermination::max_steps;
    return branch;
}

QuadraticLawFit fit_quadratic_law(const Branch& branch, double t_window) {
    std::vector<double> x, y;
    for (const BranchPoint& p : branch.points) {
        if (p.t != 0.0 && std::abs(p.t) <= t_window) {
            x.push_back(p.t * p.t);
            y.push_back(p.lambda);
        }
    }
    QuadraticLawFit fit;
    fit.points_used = static_cast<int>(x.size());
    if (fit.points_used < 3)
        throw std::invalid_argument("fit_quadratic_law: need at least three points in the window");

    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / n;
    for (size_t i = 0; i < x.size(); ++i) {
        const double pred = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace onsager
