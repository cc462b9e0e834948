// bounds.hpp
// Hamming-weight coefficient machinery: the scalar lemma inequalities, the
// decay conditions, and every monogamy/polygamy right-hand-side evaluator
// together with the baseline bounds they are compared against.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hwb {

// Thrown when a bound's hypothesis fails; carries the first offending index
// so callers can report which pairwise/tail inequality broke.
class condition_error : public std::invalid_argument {
public:
    condition_error(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Parameters (k, delta, gamma) shared by every coefficient and RHS evaluator.
// gamma is a property of the correlation measure (2 for qubit concurrence,
// 1 for the Tsallis-2 assistance example) and is always caller-supplied.
struct CoeffParams {
    double k = 0.9;      // 0 < k <= 1
    double delta = 2.0;  // >= 1
    double gamma = 2.0;  // > 0

    double k_pow_delta() const;
    void validate() const;  // throws std::invalid_argument
};

// Ordered nonnegative correlation values Q_{AB_0}..Q_{AB_{N-1}}, optionally
// with the joint value Q_{A|B_0...B_{N-1}}.
struct CorrelationVector {
    std::vector<double> values;
    std::optional<double> joint;

    std::size_t size() const noexcept { return values.size(); }
    void validate() const;  // nonempty, all entries >= 0
};

// Outcome of a condition check. holds <=> every margin >= 0 (strict, no
// tolerance: the theorems' hypotheses are exact).
struct ConditionReport {
    bool holds = true;
    std::optional<std::size_t> first_violation;
    std::vector<double> margins;
};

// Number of 1 bits in the binary expansion of j. Satisfies hamming_weight(j) <= j.
int hamming_weight(std::uint64_t j) noexcept;

// pow with the zero-correlation convention: 0 raised to any exponent >= 0 is 0,
// so absent correlations contribute nothing even at exponent 0.
double zero_aware_pow(double base, double exponent) noexcept;

// K^delta_x = ((1+k^delta)^(x/gamma) - 1) / k^(delta*x/gamma).
// Exactly 1 at x == gamma, >= 1 above gamma, <= 1 on (0, gamma].
double coeff_K(const CoeffParams& p, double x);

// Slack of (1+t)^x >= 1 + K^delta_x t^x for x >= 1, 0 <= t <= k^delta.
// The coefficient here uses exponent x directly (gamma plays no role).
// Nonnegative on the valid domain, zero at t in {0, k^delta}.
double lemma_lower_slack(double t, double x, const CoeffParams& p);

// Slack of (1+t)^y <= 1 + K^delta_y t^y for 0 <= y <= 1, 0 <= t <= k^delta.
double lemma_upper_slack(double t, double y, const CoeffParams& p);

// Pairwise decay hypothesis: k^delta * Q_j >= Q_{j+1} for j = 0..N-2.
ConditionReport monogamy_condition(const CorrelationVector& v, const CoeffParams& p);

// Tail hypothesis: k^delta * Q_i^gamma >= sum_{j>i} Q_j^gamma for i = 0..N-2.
ConditionReport tail_condition(const CorrelationVector& v, const CoeffParams& p);

// Per-party terms K^(delta*hamming_weight(j)) * v_j^exponent; their sum is the
// theorem RHS for both directions.
std::vector<double> hamming_weight_terms(const CorrelationVector& v, double exponent,
                                         const CoeffParams& p);

// Index-power terms K^(delta*j) * v_j^exponent (corollary form).
std::vector<double> indexed_terms(const CorrelationVector& v, double exponent,
                                  const CoeffParams& p);

// sum_j K^(delta*w_H(j)) v_j^alpha, valid for alpha >= gamma.
double monogamy_rhs_thm1(const CorrelationVector& v, double alpha, const CoeffParams& p);

// sum_j K^(delta*j) v_j^alpha, valid for alpha >= gamma.
double monogamy_rhs_cor1(const CorrelationVector& v, double alpha, const CoeffParams& p);

// sum_j K^(delta*w_H(j)) v_j^beta, valid for 0 <= beta <= gamma.
double polygamy_rhs_thm2(const CorrelationVector& v, double beta, const CoeffParams& p);

// Mixed-condition corollary: v_0^b + K v_1^b + .. + K^m v_m^b
//   + K^(m+2) (v_{m+1}^b + .. + v_{N-2}^b) + K^(m+1) v_{N-1}^b.
// Requires N >= 3, 0 <= m <= N-2, and the two-branch condition; throws
// condition_error with the failing index otherwise.
double polygamy_rhs_cor2(const CorrelationVector& v, double beta, const CoeffParams& p,
                         std::size_t m);

// sum_j K^(delta*j) v_j^beta under the tail condition (the m = N-2 case).
double polygamy_rhs_cor3(const CorrelationVector& v, double beta, const CoeffParams& p);

enum class BaselineKind {
    plain_sum,         // sum_j v_j^e
    hamming_delta1,    // sum_j K^(w_H(j)) v_j^e with K evaluated at delta = 1
    alpha_half_powers, // sum_j (e/2)^j v_j^e
};

double baseline_rhs(const CorrelationVector& v, double exponent, BaselineKind kind,
                    const CoeffParams& p);

// (sum_j v_j^gamma)^(alpha/gamma) - monogamy_rhs_thm1; the algebraic core of
// the monogamy theorem. Requires the pairwise condition; contract: >= -1e-10.
double algebraic_monogamy_slack(const CorrelationVector& v, double alpha,
                                const CoeffParams& p);

// polygamy_rhs_thm2 - (sum_j v_j^gamma)^(beta/gamma), same hypothesis.
double algebraic_polygamy_slack(const CorrelationVector& v, double beta,
                                const CoeffParams& p);

}  // namespace hwb
