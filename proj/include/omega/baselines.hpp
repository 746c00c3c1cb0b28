#ifndef OMEGA_BASELINES_HPP
#define OMEGA_BASELINES_HPP

#include "omega/model_space.hpp"

namespace omega {

// Three-level model parameters with a small energy offset epsilon.
struct PathologyParams {
    double e0, e1, e2;
    double epsilon = 0.0;

    void validate() const;
};

struct Pathology {
    Matrix H;       // diag(e0, e1, e2); eigenvectors are the standard basis
    Vector phi0;    // a psi0 + b psi2
    Vector phi1;    // b psi0 - a psi2, orthogonal to both phi0 and psi1
    double a, b;
};

// Gram-Schmidt projection of psi_n orthogonal to phi0, together with its
// energy from the closed formula (checked against the Rayleigh quotient).
std::pair<Vector, double> closest_approximant(const SpectralDecomposition& spec,
                                              const Matrix& H,
                                              const Vector& phi0, int n = 1);

// Ritz values of H on an orthonormalized trial basis, ascending.
Vector hum_roots(const Matrix& H, const std::vector<Vector>& trial_basis);

// Unit-norm combination of two restricted eigenvectors hitting a target
// energy between their eigenvalues.
Vector degenerate_mix(const Matrix& H, const Vector& psi_minus,
                      const Vector& psi_plus, double e_minus, double e_plus,
                      double e_target, int sign = +1);

// The three-level construction where a state orthogonal to phi0 attains
// energy e1 - epsilon with zero overlap with psi1.
Pathology make_pathology(const PathologyParams& params);

}  // namespace omega

#endif  // OMEGA_BASELINES_HPP
