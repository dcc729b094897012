#pragma once

#include "onsager/gamma_map.hpp"

// Stability, density recovery and free energy.  Stability is assessed within
// the symmetry class H: a solution is stable when every eigenvalue of
// I - lambda J(V) is positive.  For sign-uniform coefficients the spectrum
// is computed from the symmetric matrix similar to J, which keeps it exactly
// real; otherwise a general dense eigensolver is used.  Density recovery and
// the free energy close the loop back to the original formulation in f.

namespace onsager {

struct StabilityReport {
    Eigen::VectorXd eigenvalues;  // of I - lambda J(V), ascending
    double min_eig = 0.0;
    bool stable = false;    // min_eig above the stability tolerance
    bool marginal = false;  // |min_eig| within tolerance of zero
    bool symmetric = false; // computed through the symmetric similar matrix
    double max_imag = 0.0;  // largest discarded imaginary part (general path)
};

// Spectrum of I - lambda J(V) on a modes x modes truncation (default: the
// field's mode count, or the kernel's for a zero-mode field).  A zero
// eigenvalue at a bifurcation point reports marginal, not unstable.
StabilityReport spectrum(const SpectralField& V, double lambda, const KernelSpec& k,
                         int modes = -1, int grid_size = -1,
                         double stability_tol = 1e-8);

struct DensityField {
    Eigen::VectorXd values;  // f_j >= 0 on theta_j = 2 pi j / N, sums to 1
    double lambda = 0.0;     // provenance
    SpectralField source;    // potential the density was recovered from

    int size() const { return static_cast<int>(values.size()); }
};

// f = exp(-V) / integral exp(-V); the lambda Kbar shift between U and V
// cancels in the quotient.  Normalized with trapezoidal weights 2 pi / N.
DensityField recover_density(const SpectralField& V, double lambda, int grid_size);

// Sup-norm defect of the original self-consistency equation
// f = exp(-U(f)) / integral exp(-U(f)), with U(f) = lambda K * f computed by
// quadrature convolution against the full kernel (mean included).
double euler_lagrange_residual(const DensityField& f, double lambda, const KernelSpec& k);

// Free energy E(f) = integral f log f + (1/2) integral U(f) f by trapezoidal
// quadrature.  Rejects densities that are not strictly positive.
double free_energy(const DensityField& f, double lambda, const KernelSpec& k);

}  // namespace onsager
