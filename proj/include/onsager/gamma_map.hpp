#pragma once

#include <Eigen/Core>

#include "onsager/kernel.hpp"
#include "onsager/spectral.hpp"

// The self-consistency map
//
//   Gamma(V)(theta) = integral Ktilde(theta - s) exp(-V(s)) ds
//                     / integral exp(-V(s)) ds
//
// and its derivative, both in coefficient space.  Expanding the convolution
// against the Gibbs measure mu_V and using evenness, the coefficients reduce
// to the trigonometric moments M_k of mu_V:
//
//   [Gamma(V)]_m   = k_m M_m
//   d[Gamma]_m/dv_n = k_m A_mn,  A_mn = M_m M_n - (M_{m+n} + M_{|m-n|}) / 2
//
// with M_0 = 1.  Both identities are cross-checked against independent
// quadrature oracles (see the verify module).

namespace onsager {

struct JacobianMatrix {
    Eigen::MatrixXd J;  // J(m-1, n-1) = k_m A_mn
    Eigen::MatrixXd A;  // moment factor, symmetric, |A_mn| <= 1
    Eigen::VectorXd k;  // k_1..k_M as used (zero beyond the kernel range)
    bool sign_uniform = false;  // all k_m nonzero with a single sign

    int size() const { return static_cast<int>(J.rows()); }

    // Symmetric matrix similar to J via diag(1/sqrt|k_m|); requires
    // sign_uniform.  Entries sgn(k) sqrt(|k_m k_n|) A_mn, same spectrum as J.
    Eigen::MatrixXd symmetric_similar() const;

    // Representation of the derivative in the H^1-orthonormal basis phi_n:
    // entries k_m A_mn sqrt(4m^2+1)/sqrt(4n^2+1).  Similar to J, so the
    // spectrum is basis independent; the diagonal equals J's.
    Eigen::MatrixXd orthonormal_basis() const;
};

// Gamma(V) through the cached moments; output has V's mode count (modes
// beyond the kernel range are zero).
SpectralField gamma(const SpectralField& V, const KernelSpec& k, int grid_size = -1);

// Fixed-point residual V - lambda Gamma(V).
SpectralField residual(const SpectralField& V, double lambda, const KernelSpec& k,
                       int grid_size = -1);

// size x size derivative of gamma at V.  Needs moments up to 2 * size.
JacobianMatrix jacobian(const SpectralField& V, const KernelSpec& k, int size,
                        int grid_size = -1);

// Same maps from an already-computed measure; lets one transform serve the
// residual and the Jacobian within a solver iteration.
SpectralField gamma_from_measure(const GibbsMeasure& mu, const KernelSpec& k, int modes);
JacobianMatrix jacobian_from_measure(const GibbsMeasure& mu, const KernelSpec& k, int size);

}  // namespace onsager
