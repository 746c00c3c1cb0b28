#include "test_util.hpp"

#include <doctest.h>

using namespace omega;

namespace {

Matrix he_diag() {
    Matrix H = Matrix::Zero(3, 3);
    H(0, 0) = -2.903;
    H(1, 1) = -2.146;
    H(2, 2) = -2.06;
    return H;
}

}  // namespace

TEST_CASE("energy of an eigenvector is its eigenvalue") {
    const Matrix H = he_diag();
    Vector psi0 = Vector::Zero(3);
    psi0[0] = 1.0;
    CHECK(energy(H, psi0) == doctest::Approx(-2.903).epsilon(1e-14));
}

TEST_CASE("energy of the mixed trial state") {
    const Matrix H = he_diag();
    Vector phi(3);
    phi << 0.9476, 0.0, 0.3194;
    phi.normalize();
    CHECK(std::abs(energy(H, phi) - (-2.817)) < 5e-4);
}

TEST_CASE("energy matches the spectral expansion oracle") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Matrix H = generate_random_model(5, seed, 0.05, 2.0);
        const Vector phi = test::random_unit(5, seed + 100);
        const auto [evals, evecs] = test::eigen_oracle(H);
        double expected = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double c = evecs.col(i).dot(phi);
            expected += evals[i] * c * c;
        }
        CHECK(std::abs(energy(H, phi) - expected) < 1e-12);
    }
}

TEST_CASE("energy rejects dimension mismatch") {
    CHECK_THROWS_AS(energy(he_diag(), Vector::Ones(4) / 2.0), DimensionMismatch);
}

TEST_CASE("spectral_decompose on the diagonal model") {
    const SpectralDecomposition spec = spectral_decompose(he_diag());
    CHECK(spec.energies[0] == doctest::Approx(-2.903).epsilon(1e-14));
    CHECK(spec.energies[1] == doctest::Approx(-2.146).epsilon(1e-14));
    CHECK(spec.energies[2] == doctest::Approx(-2.06).epsilon(1e-14));
    CHECK((spec.eigenvectors - Matrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("spectral_decompose on the symmetric flip matrix") {
    Matrix H(2, 2);
    H << 0, 1, 1, 0;
    const SpectralDecomposition spec = spectral_decompose(H);
    CHECK(spec.energies[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(spec.energies[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectral_decompose agrees with an independent eigensolver") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix H = generate_random_model(8, seed, 0.05, 3.0);
        const SpectralDecomposition spec = spectral_decompose(H);
        const auto [oracle_evals, oracle_evecs] = test::eigen_oracle(H);
        CHECK((spec.energies - oracle_evals).cwiseAbs().maxCoeff() < 1e-8);

        // Full invariants: orthonormality, residual, reconstruction, sign.
        const Matrix G = spec.eigenvectors.transpose() * spec.eigenvectors;
        CHECK((G - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
        Matrix recon = Matrix::Zero(8, 8);
        for (int i = 0; i < 8; ++i) {
            const Vector psi = spec.eigenvector(i);
            CHECK((H * psi - spec.energies[i] * psi).norm() < 1e-10);
            recon += spec.energies[i] * psi * psi.transpose();
            for (int k = 0; k < 8; ++k) {
                if (std::abs(psi[k]) > 1e-10) {
                    CHECK(psi[k] > 0.0);
                    break;
                }
            }
        }
        CHECK((recon - H).norm() < 1e-10);
    }
}

TEST_CASE("spectral_decompose rejects degenerate spectra") {
    Matrix H = Matrix::Identity(3, 3);
    H(2, 2) = 2.0;
    CHECK_THROWS_AS(spectral_decompose(H), DegenerateSpectrum);
}

TEST_CASE("gram_schmidt_against leaves orthogonal states unchanged") {
    Vector phi = Vector::Zero(3), chi = Vector::Zero(3);
    phi[0] = 1.0;
    chi[1] = 1.0;
    CHECK((gram_schmidt_against(phi, chi) - phi).norm() < 1e-14);
}

TEST_CASE("gram_schmidt_against on the orthogonal trial pair") {
    Vector phi(3), chi(3);
    phi << 0.9476, 0.0, 0.3194;
    chi << 0.3194, 0.0, -0.9476;
    phi.normalize();
    chi.normalize();
    const Vector result = gram_schmidt_against(phi, chi);
    CHECK(std::abs(chi.dot(result)) < 1e-12);
    CHECK((result - phi).norm() < 1e-10);
}

TEST_CASE("gram_schmidt_against removes an exact component") {
    Vector phi(2), chi(2);
    phi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    chi << 0.0, 1.0;
    const Vector result = gram_schmidt_against(phi, chi);
    CHECK(std::abs(result[0] - 1.0) < 1e-14);
    CHECK(std::abs(result[1]) < 1e-14);
}

TEST_CASE("gram_schmidt_against rejects parallel states") {
    Vector phi(2);
    phi << 0.6, 0.8;
    CHECK_THROWS_AS(gram_schmidt_against(phi, phi), ParallelStates);
}

TEST_CASE("subspace_eigenpairs on an invariant subspace") {
    const Matrix H = generate_random_model(5, 3, 0.05, 2.0);
    const SpectralDecomposition spec = spectral_decompose(H);
    const auto [energies, vectors] =
        subspace_eigenpairs(H, {spec.eigenvector(0), spec.eigenvector(1)});
    CHECK(std::abs(energies[0] - spec.energies[0]) < 1e-12);
    CHECK(std::abs(energies[1] - spec.energies[1]) < 1e-12);
}

TEST_CASE("subspace_eigenpairs recovers the extreme states from the trial plane") {
    // Both basis vectors lie in span{psi0, psi2} and are orthogonal to psi1;
    // diagonalizing there returns the exact ground and second state.
    const HeModel he = he_model();
    Vector d(3);
    d << -he.phi0[2], 0.0, he.phi0[0];  // orthogonal complement in the plane
    const auto [energies, vectors] = subspace_eigenpairs(he.H, {he.phi0, d});
    CHECK(energies[0] == doctest::Approx(-2.903).epsilon(1e-12));
    CHECK(energies[1] == doctest::Approx(-2.06).epsilon(1e-12));
    CHECK(std::abs(vectors.col(0)[0]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(vectors.col(1)[2]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Ritz values bound exact energies from above") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int dim = 3 + static_cast<int>(seed % 4);
        const Matrix H = generate_random_model(dim, seed, 0.05, 2.0);
        const SpectralDecomposition spec = spectral_decompose(H);
        std::vector<Vector> basis;
        for (int k = 0; k < 3 && k < dim; ++k)
            basis.push_back(test::random_unit(dim, seed * 17 + k));
        Vector energies;
        try {
            energies = subspace_eigenpairs(H, basis).first;
        } catch (const IllConditionedBasis&) {
            continue;
        }
        for (int k = 0; k < energies.size(); ++k) {
            CHECK(energies[k] >= spec.energies[0] - 1e-10);
            CHECK(energies[k] <= spec.energies[dim - 1] + 1e-10);
            CHECK(energies[k] >= spec.energies[k] - 1e-10);
        }
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("full eigenbasis reproduces the spectrum") {
    const Matrix H = generate_random_model(6, 11, 0.05, 2.0);
    const SpectralDecomposition spec = spectral_decompose(H);
    std::vector<Vector> basis;
    for (int i = 0; i < 6; ++i) basis.push_back(spec.eigenvector(i));
    const Vector energies = subspace_eigenpairs(H, basis).first;
    CHECK((energies - spec.energies).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("subspace_eigenpairs rejects an ill-conditioned basis") {
    const Matrix H = generate_random_model(4, 5, 0.05, 2.0);
    Vector v = test::random_unit(4, 9);
    Vector w = v + 1e-14 * test::random_unit(4, 10);
    CHECK_THROWS_AS(subspace_eigenpairs(H, {v, normalized(w)}),
                    IllConditionedBasis);
}

TEST_CASE("to_eigenbasis of an exact eigenstate") {
    const Matrix H = generate_random_model(5, 21, 0.05, 2.0);
    const SpectralDecomposition spec = spectral_decompose(H);
    const auto coords = to_eigenbasis(spec.eigenvector(2), spec, 2);
    CHECK(coords.coeffs_low.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(coords.coeffs_high.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(coords.principal == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("to_eigenbasis of the orthogonal trial state at level 1") {
    const SpectralDecomposition spec = spectral_decompose(he_diag());
    Vector phi1(3);
    phi1 << 0.3194, 0.0, -0.9476;
    phi1.normalize();
    auto coords = to_eigenbasis(phi1, spec, 1);
    CHECK(std::abs(std::abs(coords.coeffs_low[0]) - 0.3194) < 1e-4);
    CHECK(std::abs(coords.principal) < 1e-12);
    CHECK(std::abs(std::abs(coords.coeffs_high[0]) - 0.9476) < 1e-4);
}

TEST_CASE("eigenbasis coordinates satisfy Parseval and round-trip") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int dim = 3 + static_cast<int>(seed % 5);
        const Matrix H = generate_random_model(dim, seed, 0.05, 2.0);
        const SpectralDecomposition spec = spectral_decompose(H);
        const int n = static_cast<int>(seed % dim);
        Vector phi = test::random_unit(dim, seed + 31);
        if (spec.eigenvector(n).dot(phi) < 0.0) phi = -phi;
        const auto coords = to_eigenbasis(phi, spec, n);
        const double total = coords.coeffs_low.squaredNorm() +
                             coords.coeffs_high.squaredNorm() +
                             coords.principal * coords.principal;
        CHECK(std::abs(total - 1.0) < 1e-12);
        CHECK((from_eigenbasis(coords, spec) - phi).norm() < 1e-12);
    }
}
