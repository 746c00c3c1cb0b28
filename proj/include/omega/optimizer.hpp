#ifndef OMEGA_OPTIMIZER_HPP
#define OMEGA_OPTIMIZER_HPP

#include "omega/functional.hpp"

#include <cstdint>

namespace omega {

struct OptimizerConfig {
    double tol_omega = 1e-8;
    int max_iters = 10000;
    double step_init = 1.0;
    double backtrack_factor = 0.5;
    double armijo_c = 1e-4;
    int restart_count = 8;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class Termination {
    GradientConverged,
    StepConverged,
    MaxIters,
    PreconditionLost,
};

const char* to_string(Termination t);

struct TraceSample {
    int iteration;
    double objective;
    double gradient_norm;
};

struct OptimizationTrace {
    std::vector<TraceSample> iterates_kept;
    Termination termination = Termination::MaxIters;
    Vector final_state;
    double final_value = 0.0;
    int iterations = 0;
};

// Projected-gradient descent on the unit sphere with Armijo backtracking
// and renormalization retraction.
OptimizationTrace minimize_omega(const OmegaProblem& problem,
                                 const Vector& start,
                                 const OptimizerConfig& cfg);

// Best-of-restarts wrapper: seeded uniform starts on the sphere, filtered
// by the omega preconditions; keeps the lowest final value whose energy
// ordering stays consistent. Returns all traces, best first.
std::vector<OptimizationTrace> minimize_omega_restarts(
    const OmegaProblem& problem, const OptimizerConfig& cfg);

// Minimizes the Rayleigh quotient over the unit sphere intersected with
// the orthogonal complement of `constraints`.
OptimizationTrace minimize_energy_orthogonal(
    const Matrix& H, const std::vector<Vector>& constraints,
    const Vector& start, const OptimizerConfig& cfg);

struct SteepenedResult {
    OptimizationTrace trace;
    double e_f = 0.0;       // final auxiliary energy
    double f_value = 0.0;   // final steepened objective
};

// Joint minimization of the steepened objective over (phi_n, E_f):
// alternates exact minimization in E_f (E_f <- omega) with sphere descent
// steps in phi_n.
SteepenedResult minimize_steepened(const OmegaProblem& problem,
                                   const Vector& start,
                                   SteepeningParams params,
                                   const OptimizerConfig& cfg);

// Uniform unit vector from a seeded generator.
Vector random_unit_vector(int dim, std::uint64_t seed);

}  // namespace omega

#endif  // OMEGA_OPTIMIZER_HPP
