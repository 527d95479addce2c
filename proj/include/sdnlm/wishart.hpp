#ifndef SDNLM_WISHART_HPP
#define SDNLM_WISHART_HPP

#include <cstdint>
#include <span>

#include "sdnlm/covariance_matrix.hpp"

namespace sdnlm {

// Admissible range of the equivalent number of looks.  The density
// normalizer diverges at L = 2, so the bracket stays safely above it.
inline constexpr double kLooksMin = 2.2;
inline constexpr double kLooksMax = 120.0;

struct WishartParams {
    CovarianceMatrix sigma;
    double looks = 1.0;
};

struct MlEstimate {
    WishartParams params;
    bool clamped = false;  // looks pinned to a bracket end, no root in range
};

/// log Gamma_3(L) = 3 log pi + sum_{i=0..2} log Gamma(L - i).
double log_multivariate_gamma3(double looks);

/// Log of the scaled complex Wishart density at z.
double wishart_log_density(const CovarianceMatrix& z, const WishartParams& params);

struct WishartScore {
    CovarianceMatrix sigma_gradient;  // Hermitian, d ell / d Sigma
    double looks_gradient = 0.0;
};

/// Gradient of the log-density in (Sigma, L).
WishartScore wishart_score(const CovarianceMatrix& z, const WishartParams& params);

/// Maximum-likelihood fit: Sigma is the sample mean, L the root of the
/// profile equation on [kLooksMin, kLooksMax], clamped to the bracket
/// end when the equation has no sign change there.
MlEstimate ml_estimate(std::span<const CovarianceMatrix> sample);

/// Sample-mean Sigma only, for use with an externally fixed L.
CovarianceMatrix sample_mean(std::span<const CovarianceMatrix> sample);

/// One multilook draw: average of `looks` outer products of circular
/// complex Gaussian vectors with covariance sigma.  Deterministic per
/// seed; looks must be a positive integer.
CovarianceMatrix sample_wishart(const WishartParams& params, std::uint64_t seed);

/// Streaming variant sharing one generator across draws.
class WishartSampler {
public:
    WishartSampler(const CovarianceMatrix& sigma, int looks, std::uint64_t seed);
    CovarianceMatrix draw();

private:
    CholeskyFactor factor_;
    int looks_;
    std::uint64_t state_;
    double gauss_spare_ = 0.0;
    bool has_spare_ = false;

    double next_uniform();
    double next_gaussian();
};

} // namespace sdnlm

#endif
