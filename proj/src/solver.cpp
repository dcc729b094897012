#include "onsager/solver.hpp"

#include <Eigen/LU>

#include <cmath>
#include <random>
#include <stdexcept>

namespace onsager {

namespace {

// Raw-bit uniform in [0, 1); keeps start fields identical across standard
// library implementations.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SolveReport picard(const SpectralField& V0, double lambda, const KernelSpec& k,
                   double tol, int max_iter, int grid_size) {
    if (tol <= 0.0) throw std::invalid_argument("picard: tolerance must be positive");
    SolveReport rep;
    rep.method = SolveMethod::picard;
    rep.solution = V0;
    if (V0.modes() == 0) {
        rep.converged = true;
        rep.status = SolveStatus::converged;
        return rep;
    }
    for (int it = 0; it <= max_iter; ++it) {
        SpectralField g = gamma(rep.solution, k, grid_size);
        SpectralField r = rep.solution;
        r.v -= lambda * g.v;
        rep.residual_h1 = h1_norm(r);
        rep.iterations = it;
        if (rep.residual_h1 <= tol) {
            rep.converged = true;
            rep.status = SolveStatus::converged;
            return rep;
        }
        if (it == max_iter) break;
        rep.solution.v = lambda * g.v;
    }
    rep.status = SolveStatus::max_iterations;
    return rep;
}

SolveReport newton(const SpectralField& V0, double lambda, const KernelSpec& k,
                   double tol, int max_iter, int grid_size) {
    if (tol <= 0.0) throw std::invalid_argument("newton: tolerance must be positive");
    SolveReport rep;
    rep.method = SolveMethod::newton;
    rep.solution = V0;
    const int m = V0.modes();
    if (m == 0) {
        rep.converged = true;
        rep.status = SolveStatus::converged;
        return rep;
    }
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(m, m);
    for (int it = 0; it <= max_iter; ++it) {
        GibbsMeasure mu = gibbs_measure(rep.solution, grid_size, 2 * m);
        SpectralField g = gamma_from_measure(mu, k, m);
        Eigen::VectorXd r = rep.solution.v - lambda * g.v;
        rep.residual_h1 = h1_norm({r});
        rep.iterations = it;

        JacobianMatrix jm = jacobian_from_measure(mu, k, m);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(identity - lambda * jm.J);
        rep.rcond = lu.rcond();
        if (!(rep.rcond > 1e-14)) {
            rep.status = SolveStatus::singular_system;
            return rep;
        }
        if (rep.residual_h1 <= tol) {
            rep.converged = true;
            rep.status = SolveStatus::converged;
            return rep;
        }
        if (it == max_iter) break;
        rep.solution.v -= lu.solve(r);
    }
    rep.status = SolveStatus::max_iterations;
    return rep;
}

SpectralField multistart_start(int index, const MultistartOptions& opts) {
    SpectralField f = SpectralField::zero(opts.modes);
    if (index == 0) return f;
    std::mt19937_64 eng(mix_seed(opts.seed, static_cast<std::uint64_t>(index)));
    for (int m = 1; m <= opts.modes; ++m)
        f.v[m - 1] = (2.0 * uniform01(eng) - 1.0) / (static_cast<double>(m) * m);
    const double norm = h1_norm(f);
    if (norm == 0.0) return f;
    const double rho = uniform01(eng);
    f.v *= opts.radius * rho / norm;
    return f;
}

SolutionSet multistart(double lambda, const KernelSpec& k, const MultistartOptions& opts) {
    if (opts.n_starts < 1) throw std::invalid_argument("multistart: need at least one start");
    if (opts.radius <= 0.0) throw std::invalid_argument("multistart: radius must be positive");

    SolutionSet set;
    set.lambda = lambda;
    set.cluster_radius = opts.cluster_radius;

    for (int i = 0; i < opts.n_starts; ++i) {
        SpectralField start = multistart_start(i, opts);
        SolveReport coarse = picard(start, lambda, k, opts.picard_tol,
                                    opts.picard_max_iter, opts.grid_size);
        SolveReport fine = newton(coarse.solution, lambda, k, opts.newton_tol,
                                  opts.newton_max_iter, opts.grid_size);
        const double check = h1_norm(residual(fine.solution, lambda, k, opts.grid_size));
        if (!fine.converged || check > opts.newton_tol) {
            ++set.failed_starts;
            continue;
        }
        bool merged = false;
        for (auto& cluster : set.clusters) {
            if (h1_distance(fine.solution, cluster.representative) <= opts.cluster_radius) {
                ++cluster.hits;
                merged = true;
                break;
            }
        }
        if (!merged) set.clusters.push_back({fine.solution, 1, check});
    }
    return set;
}

SolutionSet multistart(double lambda, const KernelSpec& k, int n_starts, double radius,
                       std::uint64_t seed) {
    MultistartOptions opts;
    opts.n_starts = n_starts;
    opts.radius = radius;
    opts.seed = seed;
    return multistart(lambda, k, opts);
}

}  // namespace onsager
