#include "omega/functional.hpp"

#include <cmath>

namespace omega {

namespace {

// Shared pieces of an omega evaluation at one trial state.
struct OmegaTerms {
    double e_phi_n;     // trial energy
    Vector overlaps;    // s_i = <phi_i|phi_n>
    Vector h_elements;  // h_i = <phi_i|H|phi_n>
    Vector gaps;        // e_phi_n - e_phi_i
    double denom;       // 1 - sum s_i^2
};

OmegaTerms evaluate_terms(const OmegaProblem& problem, const Vector& phi_n,
                          const Vector& h_phi_n) {
    OmegaTerms t;
    t.e_phi_n = phi_n.dot(h_phi_n);
    const int n = problem.n;
    t.overlaps.resize(n);
    t.h_elements.resize(n);
    t.gaps.resize(n);
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        t.overlaps[i] = problem.lower_approximants[i].dot(phi_n);
        t.h_elements[i] = problem.lower_approximants[i].dot(h_phi_n);
        t.gaps[i] = t.e_phi_n - problem.lower_energy(i);
        if (t.gaps[i] <= kDenominatorGuard)
            throw EnergyOrderingViolation(
                "trial energy " + std::to_string(t.e_phi_n) +
                " does not exceed lower approximant energy " +
                std::to_string(problem.lower_energy(i)));
        s2 += t.overlaps[i] * t.overlaps[i];
    }
    t.denom = 1.0 - s2;
    if (t.denom <= kDenominatorGuard)
        throw OverlapSaturation("overlap with lower approximants saturates");
    return t;
}

}  // namespace

OmegaProblem::OmegaProblem(Matrix H_, std::vector<Vector> lower, int n_)
    : H(std::move(H_)), lower_approximants(std::move(lower)), n(n_) {
    if (!is_symmetric(H)) throw DimensionMismatch("operator is not symmetric");
    if (n < 0 || static_cast<int>(lower_approximants.size()) != n)
        throw DimensionMismatch("need exactly n lower approximants");
    for (const auto& phi : lower_approximants) {
        if (phi.size() != H.rows()) throw DimensionMismatch("approximant dim");
        if (!is_unit(phi)) throw ParallelStates("approximant not normalized");
    }
    for (size_t i = 0; i < lower_approximants.size(); ++i)
        for (size_t j = i + 1; j < lower_approximants.size(); ++j) {
            const double s = lower_approximants[i].dot(lower_approximants[j]);
            if (s * s >= 1.0 - 1e-12)
                throw ParallelStates("lower approximants are parallel");
        }
    lower_energies_.resize(n);
    h_lower_.resize(H.rows(), n);
    for (int i = 0; i < n; ++i) {
        h_lower_.col(i) = H * lower_approximants[i];
        lower_energies_[i] = lower_approximants[i].dot(h_lower_.col(i));
    }
}

SaddleDecomposition saddle_decompose(const SpectralDecomposition& spec,
                                     const Vector& phi_n, int n) {
    if (phi_n.size() != spec.dim())
        throw DimensionMismatch("state dim vs spectrum dim");
    const Vector overlaps = spec.eigenvectors.transpose() * phi_n;
    SaddleDecomposition sd;
    sd.e_psi_n = spec.energies[n];
    for (int i = 0; i < spec.dim(); ++i) {
        const double w = overlaps[i] * overlaps[i];
        if (i < n) sd.p_low += (spec.energies[n] - spec.energies[i]) * w;
        if (i > n) sd.p_high += (spec.energies[i] - spec.energies[n]) * w;
    }
    return sd;
}

double omega_value(const OmegaProblem& problem, const Vector& phi_n) {
    if (phi_n.size() != problem.dim()) throw DimensionMismatch("state dim");
    const Vector h_phi = problem.H * phi_n;
    const OmegaTerms t = evaluate_terms(problem, phi_n, h_phi);
    double correction = 0.0;
    for (int i = 0; i < problem.n; ++i) {
        const double r = t.e_phi_n * t.overlaps[i] - t.h_elements[i];
        correction += r * r / t.gaps[i];
    }
    return t.e_phi_n + 2.0 * correction / t.denom;
}

Vector omega_gradient(const OmegaProblem& problem, const Vector& phi_n) {
    if (phi_n.size() != problem.dim()) throw DimensionMismatch("state dim");
    const Vector h_phi = problem.H * phi_n;
    const OmegaTerms t = evaluate_terms(problem, phi_n, h_phi);

    // Euclidean gradient of the trial energy at a unit-norm point.
    const Vector grad_e = 2.0 * h_phi;

    Vector grad = grad_e;
    double sum_terms = 0.0;
    for (int i = 0; i < problem.n; ++i) {
        const Vector& phi_i = problem.lower_approximants[i];
        const double r = t.e_phi_n * t.overlaps[i] - t.h_elements[i];
        const Vector grad_r =
            t.overlaps[i] * grad_e + t.e_phi_n * phi_i - problem.h_lower().col(i);
        grad += (2.0 / t.denom) *
                (2.0 * r * grad_r / t.gaps[i] -
                 (r * r / (t.gaps[i] * t.gaps[i])) * grad_e);
        sum_terms += r * r / t.gaps[i];
    }
    // Gradient of the 1/denom factor, collected once.
    if (problem.n > 0) {
        Vector grad_denom = Vector::Zero(phi_n.size());
        for (int i = 0; i < problem.n; ++i)
            grad_denom -= 2.0 * t.overlaps[i] * problem.lower_approximants[i];
        grad += (-2.0 * sum_terms / (t.denom * t.denom)) * grad_denom;
    }

    // Project onto the tangent space of the unit sphere.
    return grad - phi_n * phi_n.dot(grad);
}

Vector collect_perp(const SpectralDecomposition& spec, const Vector& phi_i,
                    int n) {
    if (phi_i.size() != spec.dim())
        throw DimensionMismatch("state dim vs spectrum dim");
    const int d = spec.dim();
    const Vector overlaps = spec.eigenvectors.transpose() * phi_i;
    const int hi = d - n - 1;
    if (hi <= 0 || overlaps.tail(hi).squaredNorm() <= 1e-24)
        throw NoHigherComponent("state lies in span{psi_0..psi_n}");
    Vector result = Vector::Zero(d);
    for (int j = n + 1; j < d; ++j)
        result += overlaps[j] * spec.eigenvectors.col(j);
    return result / overlaps.tail(hi).norm();
}

HessianReport omega_hessian(const OmegaProblem& problem,
                            const SpectralDecomposition& spec,
                            const Vector& phi_n, double step) {
    Vector phi = phi_n;
    if (spec.eigenvector(problem.n).dot(phi) < 0.0) phi = -phi;
    const EigenbasisCoordinates at = to_eigenbasis(phi, spec, problem.n);

    const int nlow = static_cast<int>(at.coeffs_low.size());
    const int m = nlow + static_cast<int>(at.coeffs_high.size());
    Vector c0(m);
    c0.head(nlow) = at.coeffs_low;
    c0.tail(m - nlow) = at.coeffs_high;

    auto eval = [&](const Vector& c) {
        EigenbasisCoordinates coords;
        coords.n = problem.n;
        coords.coeffs_low = c.head(nlow);
        coords.coeffs_high = c.tail(m - nlow);
        return omega_value(problem, from_eigenbasis(coords, spec));
    };

    const double f0 = eval(c0);
    Matrix hess(m, m);
    for (int k = 0; k < m; ++k) {
        Vector cp = c0, cm = c0;
        cp[k] += step;
        cm[k] -= step;
        hess(k, k) = (eval(cp) + eval(cm) - 2.0 * f0) / (step * step);
        for (int l = k + 1; l < m; ++l) {
            Vector cpp = c0, cpm = c0, cmp = c0, cmm = c0;
            cpp[k] += step; cpp[l] += step;
            cpm[k] += step; cpm[l] -= step;
            cmp[k] -= step; cmp[l] += step;
            cmm[k] -= step; cmm[l] -= step;
            const double v =
                (eval(cpp) - eval(cpm) - eval(cmp) + eval(cmm)) /
                (4.0 * step * step);
            hess(k, l) = hess(l, k) = v;
        }
    }

    HessianReport report;
    report.coordinates = c0;
    report.matrix = 0.5 * (hess + hess.transpose());
    report.principal_minors.reserve(m);
    for (int k = 1; k <= m; ++k)
        report.principal_minors.push_back(
            report.matrix.topLeftCorner(k, k).determinant());
    return report;
}

double steepened(const OmegaProblem& problem, const Vector& phi_n,
                 const SteepeningParams& params) {
    if (!(params.curvature_T > 0.0) || !std::isfinite(params.scale_N))
        throw ConfigError("steepening parameters invalid");
    if (std::abs(params.e_f) < 1e-300)
        throw ZeroEf("auxiliary energy E_f is zero");
    const double om = omega_value(problem, phi_n);
    return params.scale_N *
           (om + std::abs(om - params.e_f) /
                     (std::abs(params.e_f) * params.curvature_T));
}

double default_curvature_scale(const OmegaProblem& problem,
                               const SpectralDecomposition& spec,
                               const Vector& phi_n) {
    const HessianReport report = omega_hessian(problem, spec, phi_n);
    return 1.0 / std::max(1.0, report.matrix.diagonal().maxCoeff());
}

}  // namespace omega
