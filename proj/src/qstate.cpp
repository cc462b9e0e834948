#include "hwb/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hwb/rng.hpp"

namespace hwb {

namespace {

long double squared_norm(const CVector& v) {
    long double total = 0.0L;
    for (Eigen::Index i = 0; i < v.size(); ++i) total += std::norm(v[i]);
    return total;
}

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("num_qubits must lie in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(num_qubits));
    }
}

// Validated, ascending copy of keep (nonempty strict subset, no duplicates).
std::vector<int> checked_keep(const std::vector<int>& keep, int total_qubits) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= total_qubits) {
            throw std::invalid_argument("partial_trace: qubit index out of range");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("partial_trace: duplicate qubit index");
        }
    }
    if (static_cast<int>(sorted.size()) == total_qubits) {
        throw std::invalid_argument("partial_trace: keep set must be a strict subset");
    }
    return sorted;
}

// Scatter table: pattern p over the listed qubits -> contribution to the full
// basis index. Qubit q occupies bit (n-1-q) of the index.
std::vector<std::uint64_t> scatter_table(const std::vector<int>& qubits, int total_qubits) {
    const std::size_t count = qubits.size();
    std::vector<std::uint64_t> table(std::size_t{1} << count);
    for (std::uint64_t p = 0; p < table.size(); ++p) {
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if ((p >> (count - 1 - i)) & 1ULL) {
                index |= std::uint64_t{1} << (total_qubits - 1 - qubits[i]);
            }
        }
        table[p] = index;
    }
    return table;
}

std::vector<int> complement(const std::vector<int>& sorted_keep, int total_qubits) {
    std::vector<int> traced;
    std::size_t pos = 0;
    for (int q = 0; q < total_qubits; ++q) {
        if (pos < sorted_keep.size() && sorted_keep[pos] == q) {
            ++pos;
        } else {
            traced.push_back(q);
        }
    }
    return traced;
}

}  // namespace

PureState::PureState(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits_);
    if (amplitudes_.size() != (Eigen::Index{1} << num_qubits_)) {
        throw std::invalid_argument("PureState: amplitude vector has wrong length");
    }
    const long double n2 = squared_norm(amplitudes_);
    if (std::abs(static_cast<double>(n2) - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: squared norm deviates from 1 beyond tolerance");
    }
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("DensityMatrix: entries must be square and nonempty");
    }
    const Eigen::Index d = entries_.rows();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i; j < d; ++j) {
            if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > kNormTol) {
                throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
            }
        }
    }
    long double trace = 0.0L;
    for (Eigen::Index i = 0; i < d; ++i) trace += entries_(i, i).real();
    if (std::abs(static_cast<double>(trace) - 1.0) > kNormTol) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond tolerance");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kSpectralTol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    }
}

void SchmidtParams::validate() const {
    long double sum = 0.0L;
    for (double l : lambda) {
        if (!(l >= 0.0)) {
            throw std::invalid_argument("SchmidtParams: lambdas must be nonnegative");
        }
        sum += static_cast<long double>(l) * l;
    }
    if (std::abs(static_cast<double>(sum) - 1.0) > kNormTol) {
        throw std::invalid_argument("SchmidtParams: squared lambdas must sum to 1");
    }
    if (!(phi >= 0.0) || !(phi < 2.0 * 3.14159265358979323846)) {
        throw std::invalid_argument("SchmidtParams: phi must lie in [0, 2*pi)");
    }
}

PureState schmidt_state(const SchmidtParams& params) {
    params.validate();
    CVector amps = CVector::Zero(8);
    amps[0b000] = params.lambda[0];
    amps[0b100] = params.lambda[1] * std::polar(1.0, params.phi);
    amps[0b101] = params.lambda[2];
    amps[0b110] = params.lambda[3];
    amps[0b111] = params.lambda[4];
    return PureState(3, std::move(amps));
}

DensityMatrix density_of(const PureState& state) {
    CMatrix rho = state.amplitudes() * state.amplitudes().adjoint();
    return DensityMatrix(std::move(rho));
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
    const int n = state.num_qubits();
    const std::vector<int> kept = checked_keep(keep, n);
    const std::vector<int> traced = complement(kept, n);
    const auto keep_table = scatter_table(kept, n);
    const auto trace_table = scatter_table(traced, n);
    const Eigen::Index dim_keep = static_cast<Eigen::Index>(keep_table.size());
    const CVector& amps = state.amplitudes();

    CMatrix rho(dim_keep, dim_keep);
    for (Eigen::Index a = 0; a < dim_keep; ++a) {
        for (Eigen::Index b = a; b < dim_keep; ++b) {
            Complex acc{0.0, 0.0};
            for (std::uint64_t t : trace_table) {
                acc += amps[static_cast<Eigen::Index>(keep_table[a] | t)] *
                       std::conj(amps[static_cast<Eigen::Index>(keep_table[b] | t)]);
            }
            rho(a, b) = acc;
            rho(b, a) = std::conj(acc);
        }
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& dm, int total_qubits,
                            const std::vector<int>& keep) {
    check_qubit_count(total_qubits);
    if (dm.dim() != (Eigen::Index{1} << total_qubits)) {
        throw std::invalid_argument("partial_trace: dimension is not 2^total_qubits");
    }
    const std::vector<int> kept = checked_keep(keep, total_qubits);
    const std::vector<int> traced = complement(kept, total_qubits);
    const auto keep_table = scatter_table(kept, total_qubits);
    const auto trace_table = scatter_table(traced, total_qubits);
    const Eigen::Index dim_keep = static_cast<Eigen::Index>(keep_table.size());
    const CMatrix& full = dm.entries();

    CMatrix rho(dim_keep, dim_keep);
    for (Eigen::Index a = 0; a < dim_keep; ++a) {
        for (Eigen::Index b = a; b < dim_keep; ++b) {
            Complex acc{0.0, 0.0};
            for (std::uint64_t t : trace_table) {
                acc += full(static_cast<Eigen::Index>(keep_table[a] | t),
                            static_cast<Eigen::Index>(keep_table[b] | t));
            }
            rho(a, b) = acc;
            rho(b, a) = std::conj(acc);
        }
    }
    return DensityMatrix(std::move(rho));
}

PureState haar_random_state(int num_qubits, std::uint64_t seed) {
    check_qubit_count(num_qubits);
    Rng rng(seed);
    CVector amps(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = rng.complex_normal();
    const double norm = std::sqrt(static_cast<double>(squared_norm(amps)));
    amps /= norm;
    return PureState(num_qubits, std::move(amps));
}

double purity(const DensityMatrix& dm) {
    // Tr(rho^2) is the squared Frobenius norm for Hermitian rho.
    long double total = 0.0L;
    const CMatrix& m = dm.entries();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) total += std::norm(m(i, j));
    }
    return static_cast<double>(total);
}

std::vector<double> spectrum(const DensityMatrix& dm) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(dm.entries(), Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double& v : values) {
        if (v < 0.0) v = 0.0;  // validation already bounded the negatives
    }
    return values;
}

PureState tensor_product(const PureState& a, const PureState& b) {
    const int n = a.num_qubits() + b.num_qubits();
    check_qubit_count(n);
    CVector amps(Eigen::Index{1} << n);
    const Eigen::Index db = b.dim();
    for (Eigen::Index ia = 0; ia < a.dim(); ++ia) {
        for (Eigen::Index ib = 0; ib < db; ++ib) {
            amps[ia * db + ib] = a.amplitudes()[ia] * b.amplitudes()[ib];
        }
    }
    return PureState(n, std::move(amps));
}

}  // namespace hwb
