// measures.hpp
// Bipartite correlation measures: concurrence (pure cuts and the two-qubit
// closed form), Tsallis-q entropy/entanglement, a numeric Tsallis-q
// entanglement-of-assistance search, and the closed-form evaluators for the
// generalized-Schmidt state family.

#pragma once

#include <cstdint>
#include <vector>

#include "hwb/qstate.hpp"

namespace hwb {

// sqrt(2 (1 - Tr rho_cut^2)) of the reduced state on `cut`.
double concurrence_pure(const PureState& state, const std::vector<int>& cut);

// Two-qubit mixed-state concurrence: max(0, mu1 - mu2 - mu3 - mu4) over the
// decreasing square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y).
double concurrence_wootters(const DensityMatrix& dm);

// (1 - sum_i p_i^q) / (q - 1) over the eigenvalues for q != 1; the von
// Neumann entropy (natural log) at q == 1. Requires q > 0.
double tsallis_entropy(const DensityMatrix& dm, double q);

// Tsallis-q entropy of the reduced state on `cut`.
double tsallis_entanglement_pure(const PureState& state, const std::vector<int>& cut, double q);

// Search space for the assistance maximization: ensembles of a rank-r state
// are generated from its eigenvector decomposition by m x r isometries.
struct EoaConfig {
    int ensemble_size = 8;       // >= rank of the input
    int restarts = 32;           // independent isometry starts
    int max_iterations = 200;    // refinement steps per restart
    double step_tolerance = 1e-9;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TeoaResult {
    double value = 0.0;    // best ensemble average found; a lower bound on the max
    bool converged = true; // step size fell below tolerance on the best restart
};

// Best found value of sum_i p_i T_q(psi_i) over pure-state decompositions of
// a two-qubit state. Monotonically nondecreasing in restarts for fixed seed.
TeoaResult teoa_oracle(const DensityMatrix& dm, double q, const EoaConfig& config = {});

// The three values every bound consumes: the A|BC joint measure and the two
// pairwise marginals, under the source paper's labeling convention.
struct FamilyCorrelations {
    double q_joint = 0.0;
    double q_ab = 0.0;
    double q_ac = 0.0;
};

// C_{A|BC} = 2 l0 sqrt(l2^2 + l3^2 + l4^2), C_AB = 2 l0 l2, C_AC = 2 l0 l3.
FamilyCorrelations family_correlations_concurrence(const SchmidtParams& params);

// T^a_2 values: 2 l0^2 (l2^2+l3^2+l4^2), 2 l0^2 (l2^2+l4^2), 2 l0^2 (l3^2+l4^2).
FamilyCorrelations family_correlations_teoa2(const SchmidtParams& params);

}  // namespace hwb
