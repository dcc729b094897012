#include "onsager/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace onsager {

namespace {
constexpr double kPi = std::numbers::pi;
}

StabilityReport spectrum(const SpectralField& V, double lambda, const KernelSpec& k,
                         int modes, int grid_size, double stability_tol) {
    if (modes < 0) modes = V.modes() > 0 ? V.modes() : k.modes();
    if (modes < 1) throw std::invalid_argument("spectrum: need at least one mode");

    JacobianMatrix jm = jacobian(V, k, modes, grid_size);
    StabilityReport rep;
    rep.symmetric = jm.sign_uniform;

    Eigen::VectorXd nu(modes);  // eigenvalues of J
    if (jm.sign_uniform) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm.symmetric_similar());
        nu = es.eigenvalues();
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(jm.J);
        for (int i = 0; i < modes; ++i) {
            nu[i] = es.eigenvalues()[i].real();
            rep.max_imag = std::max(rep.max_imag, std::abs(es.eigenvalues()[i].imag()));
        }
    }

    rep.eigenvalues.resize(modes);
    for (int i = 0; i < modes; ++i) rep.eigenvalues[i] = 1.0 - lambda * nu[i];
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    rep.min_eig = rep.eigenvalues[0];
    rep.stable = rep.min_eig > stability_tol;
    rep.marginal = std::abs(rep.min_eig) <= stability_tol;
    return rep;
}

DensityField recover_density(const SpectralField& V, double lambda, int grid_size) {
    if (grid_size < 0) grid_size = default_grid(V.modes());
    GridFunction pot = synthesize(V, grid_size);
    DensityField f;
    f.lambda = lambda;
    f.source = V;
    f.values.resize(grid_size);
    const double shift = pot.values.maxCoeff();
    double total = 0.0;
    for (int j = 0; j < grid_size; ++j) {
        f.values[j] = std::exp(-(pot.values[j] - shift));
        total += f.values[j];
    }
    f.values /= total * (2.0 * kPi / grid_size);
    return f;
}

namespace {

// U(f) = lambda K * f on the grid; the kernel is evaluated once per grid
// offset, making the convolution circulant.
Eigen::VectorXd interaction_potential(const DensityField& f, double lambda,
                                      const KernelSpec& k) {
    const int n = f.size();
    Eigen::VectorXd kernel_grid(n);
    for (int d = 0; d < n; ++d) kernel_grid[d] = k.evaluate(2.0 * kPi * d / n);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    const double h = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += kernel_grid[(j - l + n) % n] * f.values[l];
        u[j] = lambda * s * h;
    }
    return u;
}

}  // namespace

double euler_lagrange_residual(const DensityField& f, double lambda, const KernelSpec& k) {
    const int n = f.size();
    Eigen::VectorXd u = interaction_potential(f, lambda, k);
    const double shift = u.minCoeff();
    Eigen::VectorXd g(n);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        g[j] = std::exp(-(u[j] - shift));
        total += g[j];
    }
    g /= total * (2.0 * kPi / n);
    return (g - f.values).cwiseAbs().maxCoeff();
}

double free_energy(const DensityField& f, double lambda, const KernelSpec& k) {
    const int n = f.size();
    for (int j = 0; j < n; ++j)
        if (!(f.values[j] > 0.0))
            throw std::invalid_argument("free_energy: density must be strictly positive");
    Eigen::VectorXd u = interaction_potential(f, lambda, k);
    const double h = 2.0 * kPi / n;
    double entropy = 0.0, interaction = 0.0;
    for (int j = 0; j < n; ++j) {
        entropy += std::log(f.values[j]) * f.values[j];
        interaction += u[j] * f.values[j];
    }
    return entropy * h + 0.5 * interaction * h;
}

}  // namespace onsager
