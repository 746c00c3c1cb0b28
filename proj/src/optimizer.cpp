#include "omega/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace omega {

namespace {

using Objective = std::function<double(const Vector&)>;
using Gradient = std::function<Vector(const Vector&)>;
using Retraction = std::function<Vector(const Vector&)>;

// Armijo backtracking descent on a retracted manifold. Objective calls may
// throw typed errors for infeasible points; those shrink the step like a
// failed sufficient-decrease test.
OptimizationTrace descend(const Vector& start, const Objective& obj,
                          const Gradient& grad, const Retraction& retract,
                          const OptimizerConfig& cfg) {
    cfg.validate();
    OptimizationTrace trace;
    Vector x = retract(start);
    double f;
    try {
        f = obj(x);
    } catch (const Error& e) {
        throw InfeasibleStart(std::string("start violates preconditions (") +
                              e.what() + ")");
    }

    const int keep_stride = std::max(1, cfg.max_iters / 1000);
    for (int it = 0; it < cfg.max_iters; ++it) {
        const Vector g = grad(x);
        const double gn = g.norm();
        if (it % keep_stride == 0)
            trace.iterates_kept.push_back({it, f, gn});
        if (gn < cfg.tol_omega) {
            trace.termination = Termination::GradientConverged;
            trace.final_state = x;
            trace.final_value = f;
            trace.iterations = it;
            return trace;
        }

        double t = cfg.step_init;
        bool accepted = false;
        bool any_feasible = false;
        while (t * gn >= cfg.tol_omega) {
            const Vector cand = retract(x - t * g);
            double fc;
            try {
                fc = obj(cand);
            } catch (const Error&) {
                t *= cfg.backtrack_factor;
                continue;
            }
            any_feasible = true;
            if (fc <= f - cfg.armijo_c * t * gn * gn) {
                x = cand;
                f = fc;
                accepted = true;
                break;
            }
            t *= cfg.backtrack_factor;
        }
        if (!accepted) {
            // Near the minimum the objective is flat to roundoff while the
            // analytic gradient is still accurate; continue on strict
            // gradient-norm decrease with the value pinned to roundoff.
            const double slack =
                4.0 * std::numeric_limits<double>::epsilon() *
                std::max(1.0, std::abs(f));
            double tp = cfg.step_init;
            while (tp * gn >= cfg.tol_omega) {
                const Vector cand = retract(x - tp * g);
                double fc;
                try {
                    fc = obj(cand);
                } catch (const Error&) {
                    tp *= cfg.backtrack_factor;
                    continue;
                }
                any_feasible = true;
                if (fc <= f + slack && grad(cand).norm() < gn) {
                    x = cand;
                    f = std::min(f, fc);
                    accepted = true;
                    break;
                }
                tp *= cfg.backtrack_factor;
            }
        }
        if (!accepted) {
            trace.termination = any_feasible ? Termination::StepConverged
                                             : Termination::PreconditionLost;
            trace.final_state = x;
            trace.final_value = f;
            trace.iterations = it;
            return trace;
        }
    }
    trace.termination = Termination::MaxIters;
    trace.final_state = x;
    trace.final_value = f;
    trace.iterations = cfg.max_iters;
    return trace;
}

}  // namespace

void OptimizerConfig::validate() const {
    if (!(tol_omega > 0.0) || max_iters <= 0 || !(step_init > 0.0) ||
        !(backtrack_factor > 0.0) || !(backtrack_factor < 1.0) ||
        !(armijo_c > 0.0) || restart_count <= 0)
        throw ConfigError("optimizer configuration out of range");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::GradientConverged: return "GradientConverged";
        case Termination::StepConverged: return "StepConverged";
        case Termination::MaxIters: return "MaxIters";
        case Termination::PreconditionLost: return "PreconditionLost";
    }
    return "Unknown";
}

Vector random_unit_vector(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
    return normalized(v);
}

OptimizationTrace minimize_omega(const OmegaProblem& problem,
                                 const Vector& start,
                                 const OptimizerConfig& cfg) {
    return descend(
        start, [&](const Vector& x) { return omega_value(problem, x); },
        [&](const Vector& x) { return omega_gradient(problem, x); },
        [](const Vector& v) { return normalized(v); }, cfg);
}

std::vector<OptimizationTrace> minimize_omega_restarts(
    const OmegaProblem& problem, const OptimizerConfig& cfg) {
    cfg.validate();
    std::vector<OptimizationTrace> traces;
    std::uint64_t draw = 0;
    for (int r = 0; r < cfg.restart_count; ++r) {
        // Redraw until a feasible start is found; the preconditions carve
        // out a full-measure region, so a few draws suffice.
        for (int attempt = 0; attempt < 64; ++attempt) {
            const Vector start =
                random_unit_vector(problem.dim(), cfg.seed + draw++);
            try {
                traces.push_back(minimize_omega(problem, start, cfg));
                break;
            } catch (const InfeasibleStart&) {
                continue;
            }
        }
    }
    if (traces.empty())
        throw InfeasibleStart("no feasible random start found");
    std::stable_sort(traces.begin(), traces.end(),
                     [](const OptimizationTrace& a, const OptimizationTrace& b) {
                         const bool ca = a.termination != Termination::PreconditionLost;
                         const bool cb = b.termination != Termination::PreconditionLost;
                         if (ca != cb) return ca;
                         return a.final_value < b.final_value;
                     });
    return traces;
}

OptimizationTrace minimize_energy_orthogonal(
    const Matrix& H, const std::vector<Vector>& constraints,
    const Vector& start, const OptimizerConfig& cfg) {
    const int dim = static_cast<int>(H.rows());

    // Orthonormalize the constraints by modified Gram-Schmidt.
    std::vector<Vector> ortho;
    for (const Vector& c : constraints) {
        if (c.size() != dim) throw DimensionMismatch("constraint dim");
        Vector v = c;
        for (const Vector& u : ortho) v -= u * u.dot(v);
        const double nrm = v.norm();
        if (nrm > 1e-12) ortho.push_back(v / nrm);
    }
    if (static_cast<int>(ortho.size()) >= dim)
        throw EmptyComplement("constraints span the whole space");

    auto project = [&ortho](Vector v) {
        for (const Vector& u : ortho) v -= u * u.dot(v);
        return v;
    };
    for (const Vector& u : ortho)
        if (std::abs(u.dot(start)) > 1e-10)
            throw InfeasibleStart("start not orthogonal to constraints");

    return descend(
        start, [&](const Vector& x) { return x.dot(H * x); },
        [&, project](const Vector& x) {
            const Vector hx = H * x;
            Vector g = 2.0 * (hx - x.dot(hx) * x);
            return project(std::move(g));
        },
        [project](const Vector& v) { return normalized(project(v)); }, cfg);
}

SteepenedResult minimize_steepened(const OmegaProblem& problem,
                                   const Vector& start,
                                   SteepeningParams params,
                                   const OptimizerConfig& cfg) {
    cfg.validate();
    // Exact minimization in E_f sets E_f = omega and kills the penalty, so
    // the alternating scheme reduces to sphere descent on omega with the
    // steepened objective tracked alongside.
    OptimizationTrace trace = minimize_omega(problem, start, cfg);
    SteepenedResult result;
    result.e_f = omega_value(problem, trace.final_state);
    params.e_f = result.e_f;
    result.f_value = steepened(problem, trace.final_state, params);
    result.trace = std::move(trace);
    return result;
}

}  // namespace omega
