#ifndef OMEGA_FUNCTIONAL_HPP
#define OMEGA_FUNCTIONAL_HPP

#include "omega/model_space.hpp"

namespace omega {

// The variational problem for level n: the Hamiltonian together with the
// already-available approximants of the lower levels.
struct OmegaProblem {
    Matrix H;
    std::vector<Vector> lower_approximants;  // phi_i, i < n
    int n = 0;

    OmegaProblem(Matrix H_, std::vector<Vector> lower, int n_);

    int dim() const { return static_cast<int>(H.rows()); }
    double lower_energy(int i) const { return lower_energies_[i]; }
    const Matrix& h_lower() const { return h_lower_; }

private:
    Vector lower_energies_;  // E phi_i
    Matrix h_lower_;         // columns H phi_i
};

// Split of a trial energy around the target eigenvalue:
// E phi_n = e_psi_n - p_low + p_high, with p_low, p_high >= 0.
struct SaddleDecomposition {
    double e_psi_n = 0.0;
    double p_low = 0.0;
    double p_high = 0.0;

    double e_phi_n() const { return e_psi_n - p_low + p_high; }
};

struct HessianReport {
    Vector coordinates;             // chart values at the expansion point
    Matrix matrix;                  // symmetrized finite-difference Hessian
    std::vector<double> principal_minors;  // leading minors, sizes 1..dim-1
};

struct SteepeningParams {
    double scale_N = 1.0;
    double curvature_T = 1.0;
    double e_f = 0.0;
};

SaddleDecomposition saddle_decompose(const SpectralDecomposition& spec,
                                     const Vector& phi_n, int n);

// The excited-state functional: trial energy plus twice the lower-level
// correction, with a local minimum at the exact eigenstate. For n = 0 the
// correction is empty and the value is the plain Rayleigh quotient.
double omega_value(const OmegaProblem& problem, const Vector& phi_n);

// Gradient of omega_value constrained to the unit sphere (Euclidean
// gradient projected onto the tangent space at phi_n).
Vector omega_gradient(const OmegaProblem& problem, const Vector& phi_n);

// Normalized higher-than-n spectral component of phi_i. Throws
// NoHigherComponent when phi_i lies in span{psi_0..psi_n}.
Vector collect_perp(const SpectralDecomposition& spec, const Vector& phi_i,
                    int n);

// Central finite-difference Hessian of omega in the eigenbasis overlap
// chart at phi_n (step 1e-4, symmetrized), with all leading principal
// minors along the ordering (low coefficients, then high).
HessianReport omega_hessian(const OmegaProblem& problem,
                            const SpectralDecomposition& spec,
                            const Vector& phi_n, double step = 1e-4);

// Steepened objective N * (omega + |omega - E_f| / |E_f * T|).
double steepened(const OmegaProblem& problem, const Vector& phi_n,
                 const SteepeningParams& params);

// Default curvature scale: 1 / max(1, largest Hessian diagonal estimate).
double default_curvature_scale(const OmegaProblem& problem,
                               const SpectralDecomposition& spec,
                               const Vector& phi_n);

}  // namespace omega

#endif  // OMEGA_FUNCTIONAL_HPP
