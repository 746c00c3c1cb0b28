#ifndef OMEGA_REFINE_HPP
#define OMEGA_REFINE_HPP

#include "omega/optimizer.hpp"

#include <functional>

namespace omega {

struct RefinementStep {
    int iteration = 0;
    Vector phi0_current;
    double energy_current = 0.0;
    Vector direction_added;
    bool accepted = false;
};

struct ProjectionResult {
    Vector phi0_plus;
    double energy_closed = 0.0;  // closed-form Rayleigh quotient
    bool admissible = false;     // energy did not increase
};

// phi0 projected orthogonal to phi1 and renormalized, with its energy from
// the closed formula; admissible when that energy does not exceed E phi0.
ProjectionResult project_out_phi1(const Vector& phi0, const Vector& phi1,
                                  const Matrix& H);

// Leading-order admissibility test around the exact pair: returns
// (lhs, rhs) of (E1-E0)(1 - <psi1|phi0>^2) >= (E perp - E0) <perp|phi0>^2,
// with rhs = 0 when phi0 has no component above level 1.
std::pair<double, double> leading_order_condition(
    const SpectralDecomposition& spec, const Vector& phi0);

// Supplies a unit candidate orthogonal to both current states, or throws
// NoCandidateDirection.
using DirectionSource =
    std::function<Vector(const Vector& phi0, const Vector& phi1)>;

// Default candidate generator: the residual H phi0 projected out of
// span{phi0, phi1}, falling back to projected computational basis vectors.
DirectionSource greedy_direction_source(const Matrix& H);

// Iterative 2x2 Rayleigh-Ritz refinements of phi0 within the orthogonal
// complement of phi1, keeping the lower Ritz vector each round.
std::vector<RefinementStep> rotate_improve(const Matrix& H, const Vector& phi0,
                                           const Vector& phi1,
                                           const DirectionSource& source,
                                           int max_rounds,
                                           double tol = 1e-8);

struct AlternationRound {
    int round = 0;
    double e_phi0 = 0.0;
    double e_phi1 = 0.0;
    double omega1 = 0.0;
    bool refinement_admissible = false;
    int rotation_steps = 0;
};

struct AlternationResult {
    Vector phi0;
    Vector phi1;
    std::vector<AlternationRound> history;
};

// Alternating loop: minimize Omega_1 given phi0, then, when admissible,
// improve phi0 orthogonally to the new phi1 by rotation.
AlternationResult alternate(const Matrix& H, const Vector& phi0_init,
                            const OptimizerConfig& cfg, int outer_rounds);

}  // namespace omega

#endif  // OMEGA_REFINE_HPP
