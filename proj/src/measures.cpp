#include "hwb/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hwb/rng.hpp"

namespace hwb {

double concurrence_pure(const PureState& state, const std::vector<int>& cut) {
    const DensityMatrix reduced = partial_trace(state, cut);
    return std::sqrt(2.0 * std::max(0.0, 1.0 - purity(reduced)));
}

double concurrence_wootters(const DensityMatrix& dm) {
    if (dm.dim() != 4) {
        throw std::invalid_argument("concurrence_wootters: needs a two-qubit state (dim 4)");
    }
    // Y x Y is real: antidiagonal (-1, 1, 1, -1).
    CMatrix yy = CMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const CMatrix tilde = yy * dm.entries().conjugate() * yy;
    Eigen::ComplexEigenSolver<CMatrix> solver(dm.entries() * tilde, false);

    std::array<double, 4> mu{};
    for (int i = 0; i < 4; ++i) {
        // rho * rho-tilde has nonnegative real spectrum up to roundoff.
        mu[i] = std::sqrt(std::max(0.0, solver.eigenvalues()[i].real()));
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

namespace {

double tsallis_of_probs(const std::vector<double>& probs, double q) {
    if (q == 1.0) {
        double h = 0.0;
        for (double p : probs) {
            if (p > 0.0) h -= p * std::log(p);
        }
        return h;
    }
    double power_sum = 0.0;
    for (double p : probs) {
        if (p > 0.0) power_sum += std::pow(p, q);
    }
    return (1.0 - power_sum) / (q - 1.0);
}

void check_q(double q) {
    if (!(q > 0.0)) {
        throw std::invalid_argument("Tsallis order q must be > 0");
    }
}

}  // namespace

double tsallis_entropy(const DensityMatrix& dm, double q) {
    check_q(q);
    return tsallis_of_probs(spectrum(dm), q);
}

double tsallis_entanglement_pure(const PureState& state, const std::vector<int>& cut, double q) {
    check_q(q);
    return tsallis_entropy(partial_trace(state, cut), q);
}

void EoaConfig::validate() const {
    if (ensemble_size < 1) throw std::invalid_argument("EoaConfig: ensemble_size must be >= 1");
    if (restarts < 1) throw std::invalid_argument("EoaConfig: restarts must be >= 1");
    if (max_iterations < 1) throw std::invalid_argument("EoaConfig: max_iterations must be >= 1");
    if (!(step_tolerance > 0.0)) throw std::invalid_argument("EoaConfig: step_tolerance must be > 0");
}

namespace {

// Orthonormalize the columns of g (thin QR).
CMatrix thin_q(const CMatrix& g) {
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ() * CMatrix::Identity(g.rows(), g.cols());
}

CMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    }
    return m;
}

// Ensemble average sum_i p_i T_q(psi_i) for the isometry u applied to the
// weighted eigenvectors. Columns of `branches` are sqrt(lambda_k) |e_k>.
double ensemble_average(const CMatrix& u, const CMatrix& branches, double q) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
        for (Eigen::Index k = 0; k < u.cols(); ++k) phi += u(i, k) * branches.col(k);
        const double weight = phi.squaredNorm();
        if (weight < 1e-15) continue;
        // One-qubit marginal of the subnormalized member, closed-form spectrum.
        const double a = std::norm(phi[0]) + std::norm(phi[1]);
        const double b = std::norm(phi[2]) + std::norm(phi[3]);
        const Complex c = phi[0] * std::conj(phi[2]) + phi[1] * std::conj(phi[3]);
        const double disc = std::sqrt(std::max(0.0, (a - b) * (a - b) + 4.0 * std::norm(c)));
        const double lo = std::max(0.0, ((a + b) - disc) / 2.0 / weight);
        const double hi = std::min(1.0, ((a + b) + disc) / 2.0 / weight);
        total += weight * tsallis_of_probs({lo, hi}, q);
    }
    return total;
}

}  // namespace

TeoaResult teoa_oracle(const DensityMatrix& dm, double q, const EoaConfig& config) {
    if (dm.dim() != 4) {
        throw std::invalid_argument("teoa_oracle: needs a two-qubit state (dim 4)");
    }
    check_q(q);
    config.validate();

    Eigen::SelfAdjointEigenSolver<CMatrix> eig(dm.entries());
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (eig.eigenvalues()[i] > kNormTol) support.push_back(i);
    }
    const Eigen::Index rank = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(support.size()));
    CMatrix branches(4, rank);
    if (support.empty()) {
        branches.col(0) = eig.eigenvectors().col(3);  // degenerate energy-less input
    } else {
        for (Eigen::Index k = 0; k < rank; ++k) {
            branches.col(k) =
                std::sqrt(eig.eigenvalues()[support[k]]) * eig.eigenvectors().col(support[k]);
        }
    }
    const Eigen::Index m = std::max<Eigen::Index>(config.ensemble_size, rank);

    TeoaResult result;
    result.value = 0.0;
    result.converged = false;
    for (int restart = 0; restart < config.restarts; ++restart) {
        Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart)));
        CMatrix u = thin_q(random_matrix(rng, m, rank));
        double best = ensemble_average(u, branches, q);
        double step = 0.5;
        bool converged = false;
        for (int iter = 0; iter < config.max_iterations; ++iter) {
            const CMatrix candidate = thin_q(u + step * random_matrix(rng, m, rank));
            const double value = ensemble_average(candidate, branches, q);
            if (value > best) {
                best = value;
                u = candidate;
            } else {
                step *= 0.7;
                if (step < config.step_tolerance) {
                    converged = true;
                    break;
                }
            }
        }
        if (best > result.value || restart == 0) {
            result.value = std::max(result.value, best);
            result.converged = converged;
        }
    }
    return result;
}

FamilyCorrelations family_correlations_concurrence(const SchmidtParams& params) {
    params.validate();
    const auto& l = params.lambda;
    FamilyCorrelations out;
    out.q_joint = 2.0 * l[0] * std::sqrt(l[2] * l[2] + l[3] * l[3] + l[4] * l[4]);
    out.q_ab = 2.0 * l[0] * l[2];
    out.q_ac = 2.0 * l[0] * l[3];
    return out;
}

FamilyCorrelations family_correlations_teoa2(const SchmidtParams& params) {
    params.validate();
    const auto& l = params.lambda;
    const double l0sq2 = 2.0 * l[0] * l[0];
    FamilyCorrelations out;
    out.q_joint = l0sq2 * (l[2] * l[2] + l[3] * l[3] + l[4] * l[4]);
    out.q_ab = l0sq2 * (l[2] * l[2] + l[4] * l[4]);
    out.q_ac = l0sq2 * (l[3] * l[3] + l[4] * l[4]);
    return out;
}

}  // namespace hwb
