#ifndef SDNLM_DIVERGENCE_HPP
#define SDNLM_DIVERGENCE_HPP

#include <span>
#include <variant>

#include "sdnlm/wishart.hpp"

namespace sdnlm {

struct TestResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

struct EstimatedSample {
    WishartParams params;
    int size = 0;  // sample size behind the estimate
};

struct SamplePair {
    EstimatedSample left;
    EstimatedSample right;
};

/// Upper-tail chi-square probability Pr(X > x) with `dof` degrees of
/// freedom.
double chi2_upper_tail(double x, int dof);

/// Scaled Hellinger test statistic between two estimated Wishart laws.
/// Uses the closed form for min(L1, L2) >= 3 and the common-looks form
/// with exponent (L1 + L2) / 2 otherwise.  Clamped below at zero.
///
/// Extension point: other (h, phi) instantiations of the scaled
/// statistic share this signature; only the affinity term changes.
double hellinger_statistic(const SamplePair& pair);

/// Looks handling for patch comparisons: either a fixed number of
/// looks shared by both patches, or per-patch ML estimation.
struct CommonLooks {
    double looks;
};
struct PerPatchLooks {};
using LooksMode = std::variant<CommonLooks, PerPatchLooks>;

/// ML-estimate both sides under `mode`, then test equality of the two
/// Wishart laws.  dof = 9 with common looks (Sigma free), 10 with
/// per-patch looks (Sigma and L free).
TestResult patch_test(std::span<const CovarianceMatrix> left_sample,
                      std::span<const CovarianceMatrix> right_sample,
                      const LooksMode& mode);

/// Same test on already-estimated parameters; the filter hot loop uses
/// this to avoid re-estimating the central patch 24 times.
TestResult patch_test_estimated(const EstimatedSample& left, const EstimatedSample& right,
                                const LooksMode& mode);

/// Estimate one patch under `mode`.
EstimatedSample estimate_patch(std::span<const CovarianceMatrix> sample, const LooksMode& mode);

} // namespace sdnlm

#endif
