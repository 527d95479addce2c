#include "sdnlm/divergence.hpp"

#include <algorithm>
#include <cmath>

#include "sdnlm/special_functions.hpp"

namespace sdnlm {

double chi2_upper_tail(double x, int dof) {
    if (x < 0.0 || dof < 1) {
        throw DomainError("chi2_upper_tail: x >= 0 and dof >= 1 required");
    }
    return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

namespace {

double checked_log_det(const CovarianceMatrix& m, const char* what) {
    const double det = hermitian_det(m);
    if (!(det > kDetEpsilon) || !is_positive_definite(m)) throw DomainError(what);
    return std::log(det);
}

// log of the Hellinger affinity B for min(L1, L2) >= 3; everything in
// log space, a single exponentiation at the end.
double log_affinity_full(const WishartParams& a, const WishartParams& b) {
    const double l1 = a.looks, l2 = b.looks;
    const double log_det_1 = checked_log_det(a.sigma, "hellinger: left sigma not PD");
    const double log_det_2 = checked_log_det(b.sigma, "hellinger: right sigma not PD");

    const CovarianceMatrix mid =
        0.5 * (l1 * hermitian_inv(a.sigma) + l2 * hermitian_inv(b.sigma));
    const double log_det_mid = checked_log_det(mid, "hellinger: mid matrix not PD");

    const double half_sum = 0.5 * (l1 + l2);
    double log_b = -half_sum * log_det_mid  // |mid^{-1}|^{(L1+L2)/2}
                   - 0.5 * l1 * log_det_1 - 0.5 * l2 * log_det_2 +
                   1.5 * (l1 * std::log(l1) + l2 * std::log(l2));
    for (int q = 0; q < 3; ++q) {
        const double arg = half_sum - q;
        if (!(arg > 0.0)) throw DomainError("hellinger: gamma argument not positive");
        log_b += std::lgamma(arg) - 0.5 * (std::lgamma(l1 - q) + std::lgamma(l2 - q));
    }
    return log_b;
}

// Common-looks form, exponent (L1 + L2) / 2 on the determinant ratio.
double log_affinity_common(const WishartParams& a, const WishartParams& b) {
    const double log_det_1 = checked_log_det(a.sigma, "hellinger: left sigma not PD");
    const double log_det_2 = checked_log_det(b.sigma, "hellinger: right sigma not PD");
    const CovarianceMatrix mid = 0.5 * (hermitian_inv(a.sigma) + hermitian_inv(b.sigma));
    const double log_det_mid = checked_log_det(mid, "hellinger: mid matrix not PD");
    return 0.5 * (a.looks + b.looks) *
           (-log_det_mid - 0.5 * (log_det_1 + log_det_2));
}

} // namespace

double hellinger_statistic(const SamplePair& pair) {
    const double l1 = pair.left.params.looks;
    const double l2 = pair.right.params.looks;
    const double m = pair.left.size;
    const double n = pair.right.size;
    const double log_b = std::min(l1, l2) >= 3.0
                             ? log_affinity_full(pair.left.params, pair.right.params)
                             : log_affinity_common(pair.left.params, pair.right.params);
    const double affinity = std::clamp(std::exp(log_b), 0.0, 1.0);
    return 8.0 * m * n / (m + n) * (1.0 - affinity);
}

EstimatedSample estimate_patch(std::span<const CovarianceMatrix> sample, const LooksMode& mode) {
    EstimatedSample est;
    est.size = static_cast<int>(sample.size());
    if (const auto* common = std::get_if<CommonLooks>(&mode)) {
        est.params.sigma = sample_mean(sample);
        if (!(hermitian_det(est.params.sigma) > kDetEpsilon)) {
            throw DegenerateSample("estimate_patch: sample mean not positive definite");
        }
        est.params.looks = common->looks;
    } else {
        est.params = ml_estimate(sample).params;
    }
    return est;
}

TestResult patch_test_estimated(const EstimatedSample& left, const EstimatedSample& right,
                                const LooksMode& mode) {
    TestResult result;
    result.dof = std::holds_alternative<CommonLooks>(mode) ? 9 : 10;
    result.statistic = hellinger_statistic(SamplePair{left, right});
    result.p_value = chi2_upper_tail(result.statistic, result.dof);
    return result;
}

TestResult patch_test(std::span<const CovarianceMatrix> left_sample,
                      std::span<const CovarianceMatrix> right_sample, const LooksMode& mode) {
    return patch_test_estimated(estimate_patch(left_sample, mode),
                                estimate_patch(right_sample, mode), mode);
}

} // namespace sdnlm
