#include "omega/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace omega {

namespace {

void check_dims(const Matrix& H, const Vector& phi) {
    if (H.rows() != H.cols())
        throw DimensionMismatch("operator is not square");
    if (H.rows() != phi.size())
        throw DimensionMismatch("operator dim " + std::to_string(H.rows()) +
                                " vs state dim " + std::to_string(phi.size()));
}

// One full cyclic sweep of Jacobi rotations applied in place to A,
// accumulating the rotations into V.
void jacobi_sweep(Matrix& A, Matrix& V) {
    const int n = static_cast<int>(A.rows());
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (A(p, q) == 0.0) continue;
            Eigen::JacobiRotation<double> rot;
            rot.makeJacobi(A, p, q);
            A.applyOnTheLeft(p, q, rot.adjoint());
            A.applyOnTheRight(p, q, rot);
            V.applyOnTheRight(p, q, rot);
            A(p, q) = A(q, p) = 0.0;
        }
    }
}

double offdiag_norm(const Matrix& A) {
    double s = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

void fix_sign(Eigen::Ref<Vector> v) {
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-10) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

}  // namespace

double energy(const Matrix& H, const Vector& phi) {
    check_dims(H, phi);
    return phi.dot(H * phi);
}

bool is_symmetric(const Matrix& H, double tol) {
    return H.rows() == H.cols() && (H - H.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unit(const Vector& phi, double tol) {
    return std::abs(phi.norm() - 1.0) <= tol;
}

Vector normalized(const Vector& v) {
    const double nrm = v.norm();
    if (nrm == 0.0) throw ParallelStates("cannot normalize the zero vector");
    return v / nrm;
}

SpectralDecomposition spectral_decompose(const Matrix& H) {
    if (!is_symmetric(H))
        throw DimensionMismatch("operator is not symmetric");
    const int n = static_cast<int>(H.rows());
    if (n < 2) throw DimensionMismatch("dim must be >= 2");

    Matrix A = H;
    Matrix V = Matrix::Identity(n, n);
    const double stop = 1e-13 * std::max(H.norm(), 1e-300);
    for (int sweep = 0; sweep < 64 && offdiag_norm(A) > stop; ++sweep)
        jacobi_sweep(A, V);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return A(a, a) < A(b, b); });

    SpectralDecomposition spec;
    spec.energies.resize(n);
    spec.eigenvectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        spec.energies[k] = A(order[k], order[k]);
        spec.eigenvectors.col(k) = V.col(order[k]);
        fix_sign(spec.eigenvectors.col(k));
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (spec.energies[k + 1] - spec.energies[k] < kDegeneracyGuard)
            throw DegenerateSpectrum("adjacent gap " +
                                     std::to_string(spec.energies[k + 1] - spec.energies[k]) +
                                     " below guard at level " + std::to_string(k));
    }
    return spec;
}

Vector gram_schmidt_against(const Vector& phi, const Vector& chi) {
    if (phi.size() != chi.size())
        throw DimensionMismatch("state dims differ");
    const double s = chi.dot(phi);
    if (s * s >= 1.0 - 1e-12)
        throw ParallelStates("states are parallel, overlap^2 = " + std::to_string(s * s));
    return (phi - chi * s) / std::sqrt(1.0 - s * s);
}

std::pair<Vector, Matrix> subspace_eigenpairs(const Matrix& H,
                                              const std::vector<Vector>& basis) {
    if (basis.empty()) throw IllConditionedBasis("empty basis");
    const int n = static_cast<int>(H.rows());
    const int m = static_cast<int>(basis.size());
    Matrix B(n, m);
    for (int j = 0; j < m; ++j) {
        if (basis[j].size() != n) throw DimensionMismatch("basis vector dim");
        B.col(j) = basis[j];
    }
    const Matrix G = B.transpose() * B;
    Eigen::SelfAdjointEigenSolver<Matrix> gs(G);
    const Vector gev = gs.eigenvalues();
    if (gev.minCoeff() <= 0.0 || gev.maxCoeff() / gev.minCoeff() > 1e12)
        throw IllConditionedBasis("Gram condition number exceeds 1e12");

    // Orthonormalize the basis through the Gram inverse square root, then
    // diagonalize the restricted operator with the same Jacobi kernel.
    const Matrix Gmh = gs.operatorInverseSqrt();
    const Matrix Q = B * Gmh;
    const Matrix Hs = 0.5 * (Q.transpose() * H * Q +
                             (Q.transpose() * H * Q).transpose());

    Matrix A = Hs;
    Matrix V = Matrix::Identity(m, m);
    const double stop = 1e-13 * std::max(Hs.norm(), 1e-300);
    for (int sweep = 0; sweep < 64 && offdiag_norm(A) > stop; ++sweep)
        jacobi_sweep(A, V);

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return A(a, a) < A(b, b); });

    Vector energies(m);
    Matrix vectors(n, m);
    for (int k = 0; k < m; ++k) {
        energies[k] = A(order[k], order[k]);
        vectors.col(k) = Q * V.col(order[k]);
        fix_sign(vectors.col(k));
    }
    return {energies, vectors};
}

EigenbasisCoordinates to_eigenbasis(const Vector& phi,
                                    const SpectralDecomposition& spec, int n) {
    if (phi.size() != spec.dim())
        throw DimensionMismatch("state dim vs spectrum dim");
    if (n < 0 || n >= spec.dim())
        throw DimensionMismatch("level index out of range");
    const Vector overlaps = spec.eigenvectors.transpose() * phi;
    EigenbasisCoordinates coords;
    coords.n = n;
    coords.coeffs_low = overlaps.head(n);
    coords.coeffs_high = overlaps.tail(spec.dim() - n - 1);
    coords.principal = overlaps[n];
    return coords;
}

Vector from_eigenbasis(const EigenbasisCoordinates& coords,
                       const SpectralDecomposition& spec) {
    const int n = coords.n;
    const int d = spec.dim();
    if (coords.coeffs_low.size() != n ||
        coords.coeffs_high.size() != d - n - 1)
        throw DimensionMismatch("coordinate block sizes vs spectrum dim");
    const double rad = 1.0 - coords.coeffs_low.squaredNorm() -
                       coords.coeffs_high.squaredNorm();
    if (rad < 0.0)
        throw OverlapSaturation("coordinate norm exceeds 1");
    Vector overlaps(d);
    overlaps.head(n) = coords.coeffs_low;
    overlaps[n] = std::sqrt(rad);
    overlaps.tail(d - n - 1) = coords.coeffs_high;
    return spec.eigenvectors * overlaps;
}

}  // namespace omega
