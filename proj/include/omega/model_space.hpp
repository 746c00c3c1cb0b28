#ifndef OMEGA_MODEL_SPACE_HPP
#define OMEGA_MODEL_SPACE_HPP

#include "omega/types.hpp"

namespace omega {

// Rayleigh quotient <phi|H|phi> of a normalized state.
double energy(const Matrix& H, const Vector& phi);

bool is_symmetric(const Matrix& H, double tol = 1e-12);
bool is_unit(const Vector& phi, double tol = 1e-12);
Vector normalized(const Vector& v);

// Exact eigenpairs by cyclic Jacobi rotations. Energies strictly ascending;
// eigenvectors orthonormal with the first component of magnitude > 1e-10
// made positive. Throws DegenerateSpectrum if an adjacent gap is below
// kDegeneracyGuard.
SpectralDecomposition spectral_decompose(const Matrix& H);

// (phi - chi<chi|phi>) / sqrt(1 - <chi|phi>^2). Throws ParallelStates when
// <chi|phi>^2 >= 1 - 1e-12.
Vector gram_schmidt_against(const Vector& phi, const Vector& chi);

// Rayleigh-Ritz eigenpairs of H restricted to span(basis). Energies
// ascending, vectors orthonormal in the full space. Throws
// IllConditionedBasis when the Gram matrix condition number exceeds 1e12.
std::pair<Vector, Matrix> subspace_eigenpairs(const Matrix& H,
                                              const std::vector<Vector>& basis);

// Overlap chart of phi for target level n. Requires <psi_n|phi> > 0; flip
// phi's global sign first if needed.
EigenbasisCoordinates to_eigenbasis(const Vector& phi,
                                    const SpectralDecomposition& spec, int n);

// Inverse of to_eigenbasis: rebuild the state from its overlap chart.
Vector from_eigenbasis(const EigenbasisCoordinates& coords,
                       const SpectralDecomposition& spec);

}  // namespace omega

#endif  // OMEGA_MODEL_SPACE_HPP
