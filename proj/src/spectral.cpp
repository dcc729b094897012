#include "onsager/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace onsager {

namespace {
constexpr double kPi = std::numbers::pi;

double grid_theta(int j, int n) { return 2.0 * kPi * j / n; }
}  // namespace

double SpectralField::evaluate(double theta) const {
    double s = 0.0;
    for (int m = 1; m <= modes(); ++m) s += v[m - 1] * std::cos(2.0 * m * theta);
    return s;
}

int default_grid(int modes) {
    int n = std::max(256, 8 * modes);
    if (n % 2 != 0) ++n;
    return n;
}

GridFunction synthesize(const SpectralField& field, int grid_size) {
    if (grid_size < 4 || grid_size % 2 != 0)
        throw std::invalid_argument("synthesize: grid size must be even and >= 4");
    if (grid_size < 4 * field.modes())
        throw std::invalid_argument("synthesize: grid size below the anti-aliasing floor 4M");
    GridFunction g;
    g.values = Eigen::VectorXd::Zero(grid_size);
    for (int j = 0; j < grid_size; ++j) g.values[j] = field.evaluate(grid_theta(j, grid_size));
    return g;
}

SpectralField analyze(const GridFunction& g, int modes, double tol, double* residual_out) {
    const int n = g.size();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("analyze: grid size must be even and >= 4");
    if (n < 4 * modes)
        throw std::invalid_argument("analyze: grid size below the anti-aliasing floor 4M");

    SpectralField f = SpectralField::zero(modes);
    for (int m = 1; m <= modes; ++m) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += g.values[j] * std::cos(2.0 * m * grid_theta(j, n));
        const double w = (2 * m == n / 2) ? 1.0 : 2.0;
        f.v[m - 1] = w * s / n;
    }

    double residual = 0.0;
    for (int j = 0; j < n; ++j)
        residual = std::max(residual, std::abs(g.values[j] - f.evaluate(grid_theta(j, n))));
    if (residual_out) *residual_out = residual;
    if (residual > tol)
        throw std::runtime_error("analyze: grid data violate the even pi-periodic zero-mean symmetry (residual " +
                                 std::to_string(residual) + " above tolerance)");
    return f;
}

double h1_inner(const SpectralField& u, const SpectralField& v) {
    const int m_common = std::min(u.modes(), v.modes());
    double s = 0.0;
    for (int m = 1; m <= m_common; ++m)
        s += (1.0 + 4.0 * m * m) * kPi * u.v[m - 1] * v.v[m - 1];
    return s;
}

double h1_norm(const SpectralField& u) { return std::sqrt(h1_inner(u, u)); }

double h1_distance(const SpectralField& u, const SpectralField& v) {
    const int m_max = std::max(u.modes(), v.modes());
    double s = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        const double d = u.coeff(m) - v.coeff(m);
        s += (1.0 + 4.0 * m * m) * kPi * d * d;
    }
    return std::sqrt(s);
}

double orthonormal_scale(int mode) {
    return 1.0 / std::sqrt((4.0 * mode * mode + 1.0) * kPi);
}

GibbsMeasure gibbs_measure_from_grid(const GridFunction& potential, int max_moment) {
    const int n = potential.size();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("gibbs_measure: grid size must be even and >= 4");
    if (max_moment < 0) throw std::invalid_argument("gibbs_measure: negative moment index");

    GibbsMeasure mu;
    mu.weights = Eigen::VectorXd::Zero(n);
    const double shift = potential.values.maxCoeff();
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        mu.weights[j] = std::exp(-(potential.values[j] - shift));
        total += mu.weights[j];
    }
    mu.weights /= total;

    mu.moments = Eigen::VectorXd::Zero(max_moment + 1);
    mu.moments[0] = 1.0;
    for (int k = 1; k <= max_moment; ++k) {
        double c = 0.0, s = 0.0;
        for (int j = 0; j < n; ++j) {
            c += mu.weights[j] * std::cos(2.0 * k * grid_theta(j, n));
            s += mu.weights[j] * std::sin(2.0 * k * grid_theta(j, n));
        }
        mu.moments[k] = c;
        // The measure must inherit the evenness of the potential.
        if (std::abs(s) > 1e-12)
            throw std::runtime_error("gibbs_measure: potential is not even, sin moment " +
                                     std::to_string(s));
    }
    return mu;
}

GibbsMeasure gibbs_measure(const SpectralField& field, int grid_size, int max_moment) {
    if (max_moment < 0) max_moment = 2 * field.modes();
    if (grid_size < 0) grid_size = std::max(default_grid(field.modes()), 4 * max_moment);
    if (grid_size < 4 * field.modes() || grid_size < 4 * max_moment)
        throw std::invalid_argument("gibbs_measure: grid size below the anti-aliasing floor");
    return gibbs_measure_from_grid(synthesize(field, grid_size), max_moment);
}

}  // namespace onsager
