#include "omega/baselines.hpp"

#include <cmath>

namespace omega {

void PathologyParams::validate() const {
    if (!(e0 < e1 && e1 < e2))
        throw ConfigError("model energies must satisfy e0 < e1 < e2");
    if (epsilon < 0.0) throw ConfigError("epsilon must be >= 0");
    if (!(e1 - epsilon > e0))
        throw ConfigError("e1 - epsilon must exceed e0");
    if (!(e2 > e1 - epsilon))
        throw ConfigError("e2 must exceed e1 - epsilon");
}

std::pair<Vector, double> closest_approximant(const SpectralDecomposition& spec,
                                              const Matrix& H,
                                              const Vector& phi0, int n) {
    const Vector psi_n = spec.eigenvector(n);
    const double s = psi_n.dot(phi0);
    if (s * s >= 1.0 - 1e-12)
        throw ParallelStates("phi0 is parallel to psi_n");
    const Vector phi_plus = gram_schmidt_against(psi_n, phi0);
    const double e_phi0 = energy(H, phi0);
    const double e_closed =
        spec.energies[n] -
        (spec.energies[n] - e_phi0) * s * s / (1.0 - s * s);
    return {phi_plus, e_closed};
}

Vector hum_roots(const Matrix& H, const std::vector<Vector>& trial_basis) {
    return subspace_eigenpairs(H, trial_basis).first;
}

Vector degenerate_mix(const Matrix& H, const Vector& psi_minus,
                      const Vector& psi_plus, double e_minus, double e_plus,
                      double e_target, int sign) {
    if (std::abs(psi_minus.dot(psi_plus)) > 1e-10 ||
        std::abs(psi_minus.dot(H * psi_plus)) > 1e-10)
        throw NonEigenPair("inputs are not an orthogonal eigenpair of the "
                           "restricted operator");
    const double em = energy(H, psi_minus);
    const double ep = energy(H, psi_plus);
    if (std::abs(em - e_minus) > 1e-8 || std::abs(ep - e_plus) > 1e-8)
        throw NonEigenPair("stated energies do not match Rayleigh quotients");
    if (!(e_minus <= e_target && e_target <= e_plus))
        throw TargetOutOfRange("target energy outside [e_minus, e_plus]");
    const double gap = e_plus - e_minus;
    const double w_minus = std::sqrt((e_plus - e_target) / gap);
    const double w_plus = std::sqrt((e_target - e_minus) / gap);
    return w_minus * psi_minus +
           (sign >= 0 ? w_plus : -w_plus) * psi_plus;
}

Pathology make_pathology(const PathologyParams& params) {
    params.validate();
    Pathology p;
    p.H = Matrix::Zero(3, 3);
    p.H(0, 0) = params.e0;
    p.H(1, 1) = params.e1;
    p.H(2, 2) = params.e2;
    const double span = params.e2 - params.e0;
    p.a = std::sqrt(((params.e1 - params.epsilon) - params.e0) / span);
    p.b = std::sqrt((params.e2 - (params.e1 - params.epsilon)) / span);
    p.phi0 = Vector::Zero(3);
    p.phi0[0] = p.a;
    p.phi0[2] = p.b;
    p.phi1 = Vector::Zero(3);
    p.phi1[0] = p.b;
    p.phi1[2] = -p.a;
    return p;
}

}  // namespace omega
