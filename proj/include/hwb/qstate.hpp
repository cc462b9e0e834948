// qstate.hpp
// Pure states and density matrices of few-qubit systems: construction,
// partial traces, Haar sampling and the spectral helpers every measure needs.
//
// Qubit 0 is the leftmost label in ket notation |q0 q1 q2 ...>; the basis
// index is the big-endian binary integer of the qubit values.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace hwb {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 12;            // dense representation only
inline constexpr double kNormTol = 1e-12;        // constructive identities
inline constexpr double kSpectralTol = 1e-10;    // spectral quantities

// Normalized amplitude vector over num_qubits qubits. Immutable after
// construction; the constructor rejects wrong lengths and non-unit norms.
class PureState {
public:
    PureState(int num_qubits, CVector amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    Eigen::Index dim() const noexcept { return amplitudes_.size(); }
    const CVector& amplitudes() const noexcept { return amplitudes_; }

private:
    int num_qubits_;
    CVector amplitudes_;
};

// Hermitian, positive semidefinite, unit-trace matrix. The constructor
// verifies all three (hermiticity/trace to 1e-12, eigenvalues >= -1e-10).
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix entries);

    Eigen::Index dim() const noexcept { return entries_.rows(); }
    const CMatrix& entries() const noexcept { return entries_; }

private:
    CMatrix entries_;
};

// The five amplitudes and phase of the generalized Schmidt decomposition of
// a three-qubit pure state.
struct SchmidtParams {
    std::array<double, 5> lambda{1.0, 0.0, 0.0, 0.0, 0.0};
    double phi = 0.0;  // [0, 2*pi)

    void validate() const;  // lambdas >= 0 and squared-normalized
};

// |psi> = l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
PureState schmidt_state(const SchmidtParams& params);

// Outer product |psi><psi|.
DensityMatrix density_of(const PureState& state);

// Reduced density matrix on the kept qubits, in their original order.
// keep must be a nonempty strict subset of {0..n-1} without duplicates.
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& dm, int total_qubits,
                            const std::vector<int>& keep);

// Normalized vector of independent standard complex Gaussians; deterministic
// for a fixed seed. num_qubits must lie in [1, 12].
PureState haar_random_state(int num_qubits, std::uint64_t seed);

// Tr(rho^2), in [1/dim, 1].
double purity(const DensityMatrix& dm);

// Ascending eigenvalues with roundoff negatives in (-1e-10, 0) clamped to 0.
std::vector<double> spectrum(const DensityMatrix& dm);

// |a> tensor |b>; a's qubits keep the leading (leftmost) positions.
PureState tensor_product(const PureState& a, const PureState& b);

}  // namespace hwb
