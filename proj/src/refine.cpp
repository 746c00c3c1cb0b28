#include "omega/refine.hpp"

#include <cmath>
#include <limits>

namespace omega {

ProjectionResult project_out_phi1(const Vector& phi0, const Vector& phi1,
                                  const Matrix& H) {
    const double s = phi1.dot(phi0);
    if (s * s >= 1.0 - 1e-12)
        throw ParallelStates("phi0 parallel to phi1");
    ProjectionResult r;
    r.phi0_plus = gram_schmidt_against(phi0, phi1);
    const double e0 = energy(H, phi0);
    const double e1 = energy(H, phi1);
    const double h01 = phi0.dot(H * phi1);
    r.energy_closed = (e0 + e1 * s * s - 2.0 * h01 * s) / (1.0 - s * s);
    r.admissible = r.energy_closed <= e0 + 1e-14;
    return r;
}

std::pair<double, double> leading_order_condition(
    const SpectralDecomposition& spec, const Vector& phi0) {
    const double s1 = spec.eigenvector(1).dot(phi0);
    const double lhs =
        (spec.energies[1] - spec.energies[0]) * (1.0 - s1 * s1);
    double rhs = 0.0;
    try {
        const Vector perp = collect_perp(spec, phi0, 1);
        const Vector w = spec.eigenvectors.transpose() * perp;
        const double e_perp = w.cwiseProduct(w).dot(spec.energies);
        const double sp = perp.dot(phi0);
        rhs = (e_perp - spec.energies[0]) * sp * sp;
    } catch (const NoHigherComponent&) {
        // phi0 lies in span{psi0, psi1}; the condition holds trivially.
    }
    return {lhs, rhs};
}

DirectionSource greedy_direction_source(const Matrix& H) {
    return [&H](const Vector& phi0, const Vector& phi1) -> Vector {
        auto project_pair = [&](Vector v) {
            v -= phi0 * phi0.dot(v);
            v -= phi1 * phi1.dot(v);
            // second pass for numerical orthogonality
            v -= phi0 * phi0.dot(v);
            v -= phi1 * phi1.dot(v);
            return v;
        };
        Vector r = project_pair(H * phi0);
        if (r.norm() > 1e-10) return normalized(r);
        for (int k = 0; k < phi0.size(); ++k) {
            Vector e = Vector::Zero(phi0.size());
            e[k] = 1.0;
            Vector c = project_pair(std::move(e));
            if (c.norm() > 1e-8) return normalized(c);
        }
        throw NoCandidateDirection(
            "orthogonal complement of {phi0, phi1} is exhausted");
    };
}

std::vector<RefinementStep> rotate_improve(const Matrix& H, const Vector& phi0,
                                           const Vector& phi1,
                                           const DirectionSource& source,
                                           int max_rounds, double tol) {
    if (std::abs(phi0.dot(phi1)) > 1e-10)
        throw InfeasibleStart("phi0 not orthogonal to phi1");
    std::vector<RefinementStep> steps;
    Vector current = phi0;
    double e_current = energy(H, current);
    for (int round = 1; round <= max_rounds; ++round) {
        RefinementStep step;
        step.iteration = round;
        try {
            step.direction_added = source(current, phi1);
        } catch (const NoCandidateDirection&) {
            if (steps.empty()) throw;
            break;
        }
        const auto [ritz_e, ritz_v] =
            subspace_eigenpairs(H, {current, step.direction_added});
        const double improvement = e_current - ritz_e[0];
        step.accepted = improvement > 0.0;
        if (step.accepted) {
            current = ritz_v.col(0);
            // keep orthogonality to phi1 exact against roundoff drift
            current = normalized(current - phi1 * phi1.dot(current));
            e_current = energy(H, current);
        }
        step.phi0_current = current;
        step.energy_current = e_current;
        steps.push_back(step);
        if (improvement < tol) break;
    }
    return steps;
}

AlternationResult alternate(const Matrix& H, const Vector& phi0_init,
                            const OptimizerConfig& cfg, int outer_rounds) {
    if (!is_unit(phi0_init)) throw InfeasibleStart("phi0_init not normalized");
    AlternationResult result;
    result.phi0 = phi0_init;
    double e_phi0 = energy(H, result.phi0);
    double prev_e_phi0 = e_phi0;
    double prev_omega1 = std::numeric_limits<double>::infinity();

    for (int round = 1; round <= outer_rounds; ++round) {
        AlternationRound record;
        record.round = round;

        OmegaProblem problem(H, {result.phi0}, 1);
        OptimizerConfig inner = cfg;
        inner.seed = cfg.seed + static_cast<std::uint64_t>(round) * 1000;
        const auto traces = minimize_omega_restarts(problem, inner);
        result.phi1 = traces.front().final_state;
        record.omega1 = traces.front().final_value;
        record.e_phi1 = energy(H, result.phi1);

        const ProjectionResult proj =
            project_out_phi1(result.phi0, result.phi1, H);
        record.refinement_admissible = proj.admissible;
        if (proj.admissible) {
            const auto steps =
                rotate_improve(H, proj.phi0_plus, result.phi1,
                               greedy_direction_source(H), 4 * (int)H.rows(),
                               cfg.tol_omega);
            if (!steps.empty()) {
                result.phi0 = steps.back().phi0_current;
                record.rotation_steps = static_cast<int>(steps.size());
            } else {
                result.phi0 = proj.phi0_plus;
            }
            e_phi0 = energy(H, result.phi0);
        }
        record.e_phi0 = e_phi0;
        result.history.push_back(record);

        const double omega_gain = prev_omega1 - record.omega1;
        const double energy_gain = prev_e_phi0 - e_phi0;
        prev_omega1 = record.omega1;
        prev_e_phi0 = e_phi0;
        if (round > 1 && omega_gain < cfg.tol_omega &&
            energy_gain < cfg.tol_omega)
            break;
    }
    return result;
}

}  // namespace omega
