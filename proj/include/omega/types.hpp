#ifndef OMEGA_TYPES_HPP
#define OMEGA_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Typed errors. `name()` is stable and machine-parseable; the CLI prints
// "<Name>: <detail>" on a single line.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define OMEGA_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

OMEGA_DEFINE_ERROR(DimensionMismatch);
OMEGA_DEFINE_ERROR(DegenerateSpectrum);
OMEGA_DEFINE_ERROR(ParallelStates);
OMEGA_DEFINE_ERROR(IllConditionedBasis);
OMEGA_DEFINE_ERROR(EnergyOrderingViolation);
OMEGA_DEFINE_ERROR(OverlapSaturation);
OMEGA_DEFINE_ERROR(NoHigherComponent);
OMEGA_DEFINE_ERROR(ZeroEf);
OMEGA_DEFINE_ERROR(InfeasibleStart);
OMEGA_DEFINE_ERROR(EmptyComplement);
OMEGA_DEFINE_ERROR(TargetOutOfRange);
OMEGA_DEFINE_ERROR(NonEigenPair);
OMEGA_DEFINE_ERROR(NoCandidateDirection);
OMEGA_DEFINE_ERROR(ConfigError);
OMEGA_DEFINE_ERROR(IoError);

#undef OMEGA_DEFINE_ERROR

// Hamiltonians with an adjacent eigenvalue gap below this are rejected.
inline constexpr double kDegeneracyGuard = 1e-8;

// Guard on the denominators of the Omega functional.
inline constexpr double kDenominatorGuard = 1e-10;

// Exact eigenpairs of a symmetric operator, energies strictly ascending,
// eigenvectors stored as columns aligned with `energies`.
struct SpectralDecomposition {
    Vector energies;
    Matrix eigenvectors;

    int dim() const { return static_cast<int>(energies.size()); }
    Vector eigenvector(int i) const { return eigenvectors.col(i); }
};

// A trial state for level n expressed as overlaps with the exact
// eigenvectors, with the principal coefficient fixed by normalization.
struct EigenbasisCoordinates {
    int n = 0;
    Vector coeffs_low;   // <psi_i|phi_n>, i < n
    Vector coeffs_high;  // <psi_i|phi_n>, i > n
    double principal = 1.0;  // <psi_n|phi_n> >= 0
};

}  // namespace omega

#endif  // OMEGA_TYPES_HPP
