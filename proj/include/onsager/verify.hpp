#pragma once

#include <cstdint>
#include <string>

#include "onsager/gamma_map.hpp"

// Brute-force oracles anchoring the analytic shortcuts used elsewhere.  The
// oracles deliberately avoid the moment-based fast paths they validate: the
// self-consistency map is re-evaluated by nested quadrature straight from
// its integral definition, the Jacobian by central finite differences, and
// the covariance bound by randomized sampling.  All randomness is
// seed-deterministic.

namespace onsager {

struct OracleReport {
    std::string name;
    double max_abs_error = 0.0;
    int samples = 0;
    double bound = 0.0;
    bool pass = false;  // max_abs_error <= bound
};

// Nested-quadrature evaluation of Gamma(V) at n_outer angles on an n_inner
// grid, compared to the moment-based map in sup norm.
OracleReport gamma_oracle(const SpectralField& V, const KernelSpec& k, int n_outer,
                          int n_inner, double bound = 1e-8);

// Central finite differences of gamma along every coefficient direction
// against the analytic Jacobian columns; error relative to max |J|.
OracleReport fd_jacobian(const SpectralField& V, const KernelSpec& k, double step,
                         double bound = 1e-6);

// Randomized covariance-bound trials: random grid probability measures and
// random bounded functions f, g must satisfy both
// |E[fg] - E[f] E[g]| <= (A - a)(B - b)/4 and <= sup|f| sup|g|, and the
// cosine specialization |A_mn| <= 1.  max_abs_error is the worst observed
// excess over the bounds (negative when every trial clears them).
OracleReport gruss_property(int trials, std::uint64_t seed);

}  // namespace onsager
