#include "hwb/bounds.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace hwb {

double CoeffParams::k_pow_delta() const { return std::pow(k, delta); }

void CoeffParams::validate() const {
    if (!(k > 0.0) || !(k <= 1.0)) {
        throw std::invalid_argument("CoeffParams: k must be in (0, 1], got " + std::to_string(k));
    }
    if (!(delta >= 1.0)) {
        throw std::invalid_argument("CoeffParams: delta must be >= 1, got " + std::to_string(delta));
    }
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("CoeffParams: gamma must be > 0, got " + std::to_string(gamma));
    }
}

void CorrelationVector::validate() const {
    if (values.empty()) {
        throw std::invalid_argument("CorrelationVector: needs at least one entry");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0)) {
            throw std::invalid_argument("CorrelationVector: entry " + std::to_string(i) +
                                        " is negative or NaN");
        }
    }
    if (joint && !(*joint >= 0.0)) {
        throw std::invalid_argument("CorrelationVector: joint value is negative or NaN");
    }
}

int hamming_weight(std::uint64_t j) noexcept { return std::popcount(j); }

double zero_aware_pow(double base, double exponent) noexcept {
    if (base == 0.0) return 0.0;
    return std::pow(base, exponent);
}

double coeff_K(const CoeffParams& p, double x) {
    p.validate();
    // x == gamma gives ((1+k^d) - 1)/k^d = 1 identically; return it exactly
    // rather than through pow roundoff.
    if (x == p.gamma) return 1.0;
    if (x == 0.0) return 0.0;
    const double kd = p.k_pow_delta();
    const double r = x / p.gamma;
    return (std::pow(1.0 + kd, r) - 1.0) / std::pow(kd, r);
}

double lemma_lower_slack(double t, double x, const CoeffParams& p) {
    p.validate();
    const double kd = p.k_pow_delta();
    if (!(t >= 0.0) || !(t <= kd)) {
        throw std::invalid_argument("lemma_lower_slack: t must lie in [0, k^delta]");
    }
    if (!(x >= 1.0)) {
        throw std::invalid_argument("lemma_lower_slack: exponent must be >= 1");
    }
    // Inside the lemma the coefficient carries the bare exponent x.
    const CoeffParams bare{p.k, p.delta, 1.0};
    return std::pow(1.0 + t, x) - 1.0 - coeff_K(bare, x) * std::pow(t, x);
}

double lemma_upper_slack(double t, double y, const CoeffParams& p) {
    p.validate();
    const double kd = p.k_pow_delta();
    if (!(t >= 0.0) || !(t <= kd)) {
        throw std::invalid_argument("lemma_upper_slack: t must lie in [0, k^delta]");
    }
    if (!(y >= 0.0) || !(y <= 1.0)) {
        throw std::invalid_argument("lemma_upper_slack: exponent must lie in [0, 1]");
    }
    const CoeffParams bare{p.k, p.delta, 1.0};
    return 1.0 + coeff_K(bare, y) * std::pow(t, y) - std::pow(1.0 + t, y);
}

ConditionReport monogamy_condition(const CorrelationVector& v, const CoeffParams& p) {
    v.validate();
    p.validate();
    const double kd = p.k_pow_delta();
    ConditionReport report;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        const double margin = kd * v.values[j] - v.values[j + 1];
        report.margins.push_back(margin);
        if (margin < 0.0 && report.holds) {
            report.holds = false;
            report.first_violation = j;
        }
    }
    return report;
}

ConditionReport tail_condition(const CorrelationVector& v, const CoeffParams& p) {
    v.validate();
    p.validate();
    const double kd = p.k_pow_delta();
    ConditionReport report;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        double tail = 0.0;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            tail += zero_aware_pow(v.values[j], p.gamma);
        }
        const double margin = kd * zero_aware_pow(v.values[i], p.gamma) - tail;
        report.margins.push_back(margin);
        if (margin < 0.0 && report.holds) {
            report.holds = false;
            report.first_violation = i;
        }
    }
    return report;
}

std::vector<double> hamming_weight_terms(const CorrelationVector& v, double exponent,
                                         const CoeffParams& p) {
    v.validate();
    const double K = coeff_K(p, exponent);
    std::vector<double> terms(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        terms[j] = std::pow(K, hamming_weight(j)) * zero_aware_pow(v.values[j], exponent);
    }
    return terms;
}

std::vector<double> indexed_terms(const CorrelationVector& v, double exponent,
                                  const CoeffParams& p) {
    v.validate();
    const double K = coeff_K(p, exponent);
    std::vector<double> terms(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        terms[j] = std::pow(K, static_cast<double>(j)) * zero_aware_pow(v.values[j], exponent);
    }
    return terms;
}

namespace {

double sum(const std::vector<double>& terms) {
    double total = 0.0;
    for (double t : terms) total += t;
    return total;
}

void require_alpha(double alpha, const CoeffParams& p, const char* who) {
    if (!(alpha >= p.gamma)) {
        throw std::invalid_argument(std::string(who) + ": exponent must be >= gamma");
    }
}

void require_beta(double beta, const CoeffParams& p, const char* who) {
    if (!(beta >= 0.0) || !(beta <= p.gamma)) {
        throw std::invalid_argument(std::string(who) + ": exponent must lie in [0, gamma]");
    }
}

}  // namespace

double monogamy_rhs_thm1(const CorrelationVector& v, double alpha, const CoeffParams& p) {
    require_alpha(alpha, p, "monogamy_rhs_thm1");
    return sum(hamming_weight_terms(v, alpha, p));
}

double monogamy_rhs_cor1(const CorrelationVector& v, double alpha, const CoeffParams& p) {
    require_alpha(alpha, p, "monogamy_rhs_cor1");
    return sum(indexed_terms(v, alpha, p));
}

double polygamy_rhs_thm2(const CorrelationVector& v, double beta, const CoeffParams& p) {
    require_beta(beta, p, "polygamy_rhs_thm2");
    return sum(hamming_weight_terms(v, beta, p));
}

double polygamy_rhs_cor2(const CorrelationVector& v, double beta, const CoeffParams& p,
                         std::size_t m) {
    v.validate();
    require_beta(beta, p, "polygamy_rhs_cor2");
    const std::size_t n = v.size();
    if (n < 3) {
        throw std::invalid_argument("polygamy_rhs_cor2: needs at least three parties");
    }
    if (m > n - 2) {
        throw std::invalid_argument("polygamy_rhs_cor2: m must lie in [0, N-2]");
    }
    const double kd = p.k_pow_delta();
    // Head branch: k^d v_i^g dominates the tail for i <= m.
    for (std::size_t i = 0; i <= m; ++i) {
        double tail = 0.0;
        for (std::size_t l = i + 1; l < n; ++l) tail += zero_aware_pow(v.values[l], p.gamma);
        if (kd * zero_aware_pow(v.values[i], p.gamma) < tail) {
            throw condition_error("polygamy_rhs_cor2: head condition fails at index " +
                                      std::to_string(i),
                                  i);
        }
    }
    // Reversed branch: the tail dominates v_j^g for m < j <= N-2.
    for (std::size_t j = m + 1; j + 1 < n; ++j) {
        double tail = 0.0;
        for (std::size_t l = j + 1; l < n; ++l) tail += zero_aware_pow(v.values[l], p.gamma);
        if (zero_aware_pow(v.values[j], p.gamma) > kd * tail) {
            throw condition_error("polygamy_rhs_cor2: reversed condition fails at index " +
                                      std::to_string(j),
                                  j);
        }
    }
    const double K = coeff_K(p, beta);
    double total = 0.0;
    for (std::size_t j = 0; j <= m; ++j) {
        total += std::pow(K, static_cast<double>(j)) * zero_aware_pow(v.values[j], beta);
    }
    for (std::size_t j = m + 1; j + 1 < n; ++j) {
        total += std::pow(K, static_cast<double>(m + 2)) * zero_aware_pow(v.values[j], beta);
    }
    total += std::pow(K, static_cast<double>(m + 1)) * zero_aware_pow(v.values[n - 1], beta);
    return total;
}

double polygamy_rhs_cor3(const CorrelationVector& v, double beta, const CoeffParams& p) {
    require_beta(beta, p, "polygamy_rhs_cor3");
    const ConditionReport tail = tail_condition(v, p);
    if (!tail.holds) {
        throw condition_error("polygamy_rhs_cor3: tail condition fails at index " +
                                  std::to_string(*tail.first_violation),
                              *tail.first_violation);
    }
    return sum(indexed_terms(v, beta, p));
}

double baseline_rhs(const CorrelationVector& v, double exponent, BaselineKind kind,
                    const CoeffParams& p) {
    v.validate();
    p.validate();
    switch (kind) {
        case BaselineKind::plain_sum: {
            require_alpha(exponent, p, "baseline_rhs(plain_sum)");
            double total = 0.0;
            for (double q : v.values) total += zero_aware_pow(q, exponent);
            return total;
        }
        case BaselineKind::hamming_delta1: {
            // Serves as the monogamy baseline (exponent >= gamma) and the
            // polygamy baseline (exponent <= gamma); anything nonnegative is legal.
            if (!(exponent >= 0.0)) {
                throw std::invalid_argument("baseline_rhs(hamming_delta1): exponent must be >= 0");
            }
            const CoeffParams flat{p.k, 1.0, p.gamma};
            return sum(hamming_weight_terms(v, exponent, flat));
        }
        case BaselineKind::alpha_half_powers: {
            require_alpha(exponent, p, "baseline_rhs(alpha_half_powers)");
            double total = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) {
                total += std::pow(exponent / 2.0, static_cast<double>(j)) *
                         zero_aware_pow(v.values[j], exponent);
            }
            return total;
        }
    }
    throw std::invalid_argument("baseline_rhs: unknown kind");
}

namespace {

double gamma_power_sum(const CorrelationVector& v, const CoeffParams& p) {
    double total = 0.0;
    for (double q : v.values) total += zero_aware_pow(q, p.gamma);
    return total;
}

void require_condition(const CorrelationVector& v, const CoeffParams& p, const char* who) {
    const ConditionReport cond = monogamy_condition(v, p);
    if (!cond.holds) {
        throw condition_error(std::string(who) + ": pairwise condition fails at index " +
                                  std::to_string(*cond.first_violation),
                              *cond.first_violation);
    }
}

}  // namespace

double algebraic_monogamy_slack(const CorrelationVector& v, double alpha, const CoeffParams& p) {
    require_condition(v, p, "algebraic_monogamy_slack");
    require_alpha(alpha, p, "algebraic_monogamy_slack");
    const double lhs = zero_aware_pow(gamma_power_sum(v, p), alpha / p.gamma);
    return lhs - monogamy_rhs_thm1(v, alpha, p);
}

double algebraic_polygamy_slack(const CorrelationVector& v, double beta, const CoeffParams& p) {
    require_condition(v, p, "algebraic_polygamy_slack");
    require_beta(beta, p, "algebraic_polygamy_slack");
    const double lhs = zero_aware_pow(gamma_power_sum(v, p), beta / p.gamma);
    return polygamy_rhs_thm2(v, beta, p) - lhs;
}

}  // namespace hwb
