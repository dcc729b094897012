#pragma once

#include <Eigen/Core>

// Fields in the symmetry class H of even, pi-periodic, zero-mean H^1
// functions on [0, 2 pi].  Membership is structural: a field is stored as
// coefficients v_1..v_M of cos(2 m theta), so evenness, pi-periodicity and
// zero mean hold identically.  Grid representations live on the uniform grid
// theta_j = 2 pi j / N, where trapezoidal quadrature of trigonometric
// polynomials of degree < N is exact.

namespace onsager {

struct SpectralField {
    Eigen::VectorXd v;  // v[m-1] multiplies cos(2 m theta)

    int modes() const { return static_cast<int>(v.size()); }
    double coeff(int m) const { return (m >= 1 && m <= modes()) ? v[m - 1] : 0.0; }
    double evaluate(double theta) const;

    static SpectralField zero(int modes) {
        return {Eigen::VectorXd::Zero(modes)};
    }
};

struct GridFunction {
    Eigen::VectorXd values;  // samples at theta_j = 2 pi j / N

    int size() const { return static_cast<int>(values.size()); }
};

// Probability measure with density proportional to exp(-V), together with
// its trigonometric moments moment(k) = integral of cos(2 k theta) d mu_V.
// The moments are the sufficient statistics for the self-consistency map and
// its Jacobian, so they are cached up to a requested index at construction.
struct GibbsMeasure {
    Eigen::VectorXd weights;  // w_j > 0, sum = 1
    Eigen::VectorXd moments;  // index 0..max_moment, moments[0] = 1

    int grid_size() const { return static_cast<int>(weights.size()); }
    int max_moment() const { return static_cast<int>(moments.size()) - 1; }
    double moment(int k) const { return moments[k]; }
};

// Grid size giving comfortable anti-aliasing headroom for fields and their
// Gibbs moments up to index 2M.
int default_grid(int modes);

// Exact trigonometric evaluation of the field on the uniform grid.
// Requires grid_size even, >= 4, and >= 4 * modes.
GridFunction synthesize(const SpectralField& field, int grid_size);

// Discrete cosine projection v_m = (2/N) sum_j g_j cos(2 m theta_j) for
// m = 1..modes (weight 1/N at the self-aliased mode 2m = N/2).  The content
// not captured by the projection (mean, sin modes, odd or higher
// frequencies) is the symmetry/aliasing residual; it is written to
// residual_out when given and must not exceed tol.
SpectralField analyze(const GridFunction& g, int modes, double tol,
                      double* residual_out = nullptr);

// H^1([0, 2 pi]) inner product; in coefficients
// (u, v) = sum_m (1 + 4 m^2) pi u_m v_m.  Shorter fields are zero-padded.
double h1_inner(const SpectralField& u, const SpectralField& v);
double h1_norm(const SpectralField& u);
double h1_distance(const SpectralField& u, const SpectralField& v);

// Normalization constant of the H^1-orthonormal basis element
// phi_m = cos(2 m theta) / sqrt((4 m^2 + 1) pi).
double orthonormal_scale(int mode);

// Gibbs measure of the field on the given grid with moments cached up to
// max_moment (default 2 * modes).  V is shifted by its maximum before
// exponentiation, which the normalization quotient cancels.
GibbsMeasure gibbs_measure(const SpectralField& field, int grid_size = -1,
                           int max_moment = -1);

// Same construction from raw grid values of V; exposed so the shift
// invariance under V -> V + const is testable directly.
GibbsMeasure gibbs_measure_from_grid(const GridFunction& potential, int max_moment);

}  // namespace onsager
