#include "onsager/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace onsager {

namespace {
constexpr double kPi = std::numbers::pi;
}

double KernelSpec::evaluate(double theta) const {
    double s = mean;
    for (int m = 1; m <= modes(); ++m)
        s += coeffs[static_cast<size_t>(m) - 1] * std::cos(2.0 * m * theta);
    return s;
}

double KernelSpec::evaluate_tilde(double theta) const {
    return evaluate(theta) - mean;
}

const char* to_string(Criticality c) {
    switch (c) {
        case Criticality::supercritical: return "supercritical";
        case Criticality::subcritical: return "subcritical";
        case Criticality::degenerate: return "degenerate";
    }
    return "?";
}

KernelSpec onsager_coefficients(int modes) {
    if (modes < 1)
        throw std::invalid_argument("onsager_coefficients: need at least one mode");
    KernelSpec k;
    k.mean = 2.0 / kPi;
    k.label = "onsager";
    k.coeffs.resize(static_cast<size_t>(modes));
    for (int m = 1; m <= modes; ++m)
        k.coeffs[static_cast<size_t>(m) - 1] = -4.0 / (kPi * (4.0 * m * m - 1.0));
    return k;
}

double onsager_coefficient_tail(int modes) {
    if (modes < 0) throw std::invalid_argument("onsager_coefficient_tail: negative mode count");
    // sum_{m>P} 4/(pi(4m^2-1)) telescopes: 4m^2-1 = (2m-1)(2m+1).
    return (2.0 / kPi) / (2.0 * modes + 1.0);
}

KernelSpec from_coefficients(double mean, std::vector<double> coeffs, std::string label) {
    if (coeffs.empty())
        throw std::invalid_argument("from_coefficients: empty coefficient list");
    if (!std::isfinite(mean))
        throw std::invalid_argument("from_coefficients: non-finite mean");
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw std::invalid_argument("from_coefficients: non-finite coefficient");
    KernelSpec k;
    k.mean = mean;
    k.coeffs = std::move(coeffs);
    k.label = std::move(label);
    return k;
}

KernelSpec from_samples(const std::vector<double>& values, double tol,
                        std::string label, double* residual_out) {
    const int n = static_cast<int>(values.size());
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("from_samples: need an even sample count >= 4");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("from_samples: non-finite sample");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;

    const int modes = n / 4;
    std::vector<double> coeffs(static_cast<size_t>(modes), 0.0);
    for (int m = 1; m <= modes; ++m) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += values[static_cast<size_t>(j)] * std::cos(2.0 * m * (2.0 * kPi * j / n));
        // At 2m = N/2 the discrete basis function is its own alias; the
        // projection weight halves so synthesis/analysis stay inverse.
        const double w = (2 * m == n / 2) ? 1.0 : 2.0;
        coeffs[static_cast<size_t>(m) - 1] = w * s / n;
    }

    // Everything not representable as mean + even pi-periodic cosines up to
    // m = N/4 is symmetry-violating or aliased content.
    double residual = 0.0;
    for (int j = 0; j < n; ++j) {
        double recon = mean;
        for (int m = 1; m <= modes; ++m)
            recon += coeffs[static_cast<size_t>(m) - 1] * std::cos(2.0 * m * (2.0 * kPi * j / n));
        residual = std::max(residual, std::abs(values[static_cast<size_t>(j)] - recon));
    }
    if (residual_out) *residual_out = residual;
    if (residual > tol)
        throw std::runtime_error("from_samples: samples violate the even pi-periodic symmetry (discarded content " +
                                 std::to_string(residual) + " above tolerance)");

    KernelSpec k;
    k.mean = mean;
    k.coeffs = std::move(coeffs);
    k.label = std::move(label);
    return k;
}

double lambda_zero(const KernelSpec& k) {
    double s = 0.0;
    for (double c : k.coeffs) s += std::abs(c);
    if (s == 0.0)
        throw std::runtime_error("lambda_zero: all coefficients vanish, threshold undefined");
    return 1.0 / s;
}

std::vector<ModeLambda> bifurcation_points(const KernelSpec& k) {
    std::vector<ModeLambda> out;
    for (int m = 1; m <= k.modes(); ++m)
        if (k.coeff(m) < 0.0) out.push_back({m, -2.0 / k.coeff(m)});
    std::sort(out.begin(), out.end(),
              [](const ModeLambda& a, const ModeLambda& b) { return a.lambda < b.lambda; });
    return out;
}

Criticality classify_criticality(const KernelSpec& k, int mode) {
    if (mode < 1 || k.coeff(mode) == 0.0)
        throw std::invalid_argument("classify_criticality: mode with zero coefficient is undefined");
    const double gamma = k.coeff(2 * mode) / k.coeff(mode);
    if (gamma == 1.0 || 2.0 * gamma == 1.0) return Criticality::degenerate;
    const double curvature = (2.0 * gamma - 1.0) / (gamma - 1.0);
    return curvature > 0.0 ? Criticality::supercritical : Criticality::subcritical;
}

}  // namespace onsager
