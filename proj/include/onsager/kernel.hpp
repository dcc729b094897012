#pragma once

#include <string>
#include <vector>

// Interaction kernels in Fourier form.  A kernel on the circle that is even
// and pi-periodic expands as
//
//   K(theta) = mean + sum_{m>=1} k_m cos(2 m theta)
//
// and is represented here by its mean and the coefficients k_1..k_P of the
// zero-mean part.  Closed-form predictions that depend only on the
// coefficients (uniqueness threshold, bifurcation values, criticality class)
// live in this module.

namespace onsager {

struct KernelSpec {
    double mean = 0.0;           // average of K over the circle
    std::vector<double> coeffs;  // k_1..k_P
    std::string label;

    int modes() const { return static_cast<int>(coeffs.size()); }

    // k_m, with k_m = 0 for m beyond the stored range.
    double coeff(int m) const {
        return (m >= 1 && m <= modes()) ? coeffs[static_cast<size_t>(m) - 1] : 0.0;
    }

    // Pointwise K(theta) = mean + sum k_m cos(2 m theta).
    double evaluate(double theta) const;

    // Pointwise zero-mean part K(theta) - mean.
    double evaluate_tilde(double theta) const;
};

enum class Criticality { supercritical, subcritical, degenerate };

const char* to_string(Criticality c);

struct ModeLambda {
    int mode;
    double lambda;
};

// Excluded-volume kernel |sin theta|: k_m = -4 / (pi (4 m^2 - 1)), mean 2/pi.
// The neglected tail satisfies sum_{m>P} |k_m| = (2/pi) / (2P + 1).
KernelSpec onsager_coefficients(int modes);

// Closed-form tail sum_{m>modes} |k_m| of the kernel above.
double onsager_coefficient_tail(int modes);

// Store given mean and coefficients verbatim.  Rejects empty or non-finite
// input.
KernelSpec from_coefficients(double mean, std::vector<double> coeffs,
                             std::string label = "");

// Project N uniform samples at theta_j = 2 pi j / N onto the even
// pi-periodic cosine basis, keeping modes m = 1..N/4.  The discarded content
// (mean removed, sin modes, odd frequencies, frequencies above N/2) must stay
// below tol in sup norm or the samples are rejected as violating the kernel
// symmetries.  The sup norm of the discarded content is written to
// residual_out when given.
KernelSpec from_samples(const std::vector<double>& values, double tol,
                        std::string label = "", double* residual_out = nullptr);

// Uniqueness threshold lambda_0 = 1 / sum_m |k_m|.  With truncated
// coefficients the value is exact for the truncated kernel and overestimates
// the untruncated threshold by at most the dropped tail.
double lambda_zero(const KernelSpec& k);

// lambda_m = -2 / k_m for every mode with k_m < 0, ascending in lambda.
// Modes with k_m >= 0 produce no positive bifurcation value and are omitted.
std::vector<ModeLambda> bifurcation_points(const KernelSpec& k);

// Criticality of the pitchfork at lambda_m.  With gamma = k_{2m} / k_m
// (k_{2m} taken as 0 beyond the stored range), the branch curvature has the
// sign of (2 gamma - 1) / (gamma - 1); zero or pole is degenerate.
Criticality classify_criticality(const KernelSpec& k, int mode);

}  // namespace onsager
