#ifndef OMEGA_MODELS_HPP
#define OMEGA_MODELS_HPP

#include "omega/types.hpp"

#include <cstdint>
#include <string>

namespace omega {

// Three-level model from the builtin example, diagonal in the
// computational basis (energies in hartree).
struct HeModel {
    Matrix H;     // diag(-2.903, -2.146, -2.06)
    Vector phi0;  // 0.9476... psi0 + 0.3194... psi2
    Vector phi1;  // 0.3194... psi0 - 0.9476... psi2
};

HeModel he_model();

// Deterministic random symmetric operator with a controlled spectrum:
// ascending eigenvalues with adjacent gaps >= min_gap spread over `spread`,
// conjugated by a seeded random orthogonal matrix.
Matrix generate_random_model(int dim, std::uint64_t seed, double min_gap,
                             double spread);

// JSON matrix file { "dim": n, "entries": [[...], ...] }. The reader
// rejects asymmetry beyond 1e-12 and symmetrizes smaller noise.
Matrix read_matrix_json(const std::string& path);
void write_matrix_json(const std::string& path, const Matrix& H);

}  // namespace omega

#endif  // OMEGA_MODELS_HPP
