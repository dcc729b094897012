#include "onsager/gamma_map.hpp"

#include <cmath>
#include <stdexcept>

namespace onsager {

Eigen::MatrixXd JacobianMatrix::symmetric_similar() const {
    if (!sign_uniform)
        throw std::logic_error("symmetric_similar: coefficients are not sign-uniform");
    const int m = size();
    const double sgn = k[0] > 0.0 ? 1.0 : -1.0;
    Eigen::MatrixXd s(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s(i, j) = sgn * std::sqrt(std::abs(k[i]) * std::abs(k[j])) * A(i, j);
    return s;
}

Eigen::MatrixXd JacobianMatrix::orthonormal_basis() const {
    const int m = size();
    Eigen::MatrixXd t(m, m);
    for (int i = 0; i < m; ++i) {
        const double wm = std::sqrt(4.0 * (i + 1.0) * (i + 1.0) + 1.0);
        for (int j = 0; j < m; ++j) {
            const double wn = std::sqrt(4.0 * (j + 1.0) * (j + 1.0) + 1.0);
            t(i, j) = J(i, j) * wm / wn;
        }
    }
    return t;
}

SpectralField gamma_from_measure(const GibbsMeasure& mu, const KernelSpec& k, int modes) {
    if (mu.max_moment() < modes)
        throw std::invalid_argument("gamma_from_measure: measure lacks the required moments");
    SpectralField out = SpectralField::zero(modes);
    for (int m = 1; m <= modes; ++m) out.v[m - 1] = k.coeff(m) * mu.moment(m);
    return out;
}

JacobianMatrix jacobian_from_measure(const GibbsMeasure& mu, const KernelSpec& k, int size) {
    if (mu.max_moment() < 2 * size)
        throw std::invalid_argument("jacobian_from_measure: measure lacks moments up to 2M");
    JacobianMatrix jm;
    jm.A.resize(size, size);
    jm.J.resize(size, size);
    jm.k.resize(size);
    for (int m = 1; m <= size; ++m) jm.k[m - 1] = k.coeff(m);
    for (int m = 1; m <= size; ++m)
        for (int n = 1; n <= size; ++n) {
            const double a = mu.moment(m) * mu.moment(n) -
                             0.5 * (mu.moment(m + n) + mu.moment(std::abs(m - n)));
            jm.A(m - 1, n - 1) = a;
            jm.J(m - 1, n - 1) = jm.k[m - 1] * a;
        }
    jm.sign_uniform = true;
    for (int m = 0; m < size; ++m)
        if (jm.k[m] == 0.0 || jm.k[m] * jm.k[0] < 0.0) jm.sign_uniform = false;
    return jm;
}

SpectralField gamma(const SpectralField& V, const KernelSpec& k, int grid_size) {
    const int modes = V.modes();
    if (modes == 0) return V;
    return gamma_from_measure(gibbs_measure(V, grid_size, modes), k, modes);
}

SpectralField residual(const SpectralField& V, double lambda, const KernelSpec& k,
                       int grid_size) {
    SpectralField g = gamma(V, k, grid_size);
    SpectralField r = V;
    r.v -= lambda * g.v;
    return r;
}

JacobianMatrix jacobian(const SpectralField& V, const KernelSpec& k, int size,
                        int grid_size) {
    return jacobian_from_measure(gibbs_measure(V, grid_size, 2 * size), k, size);
}

}  // namespace onsager
