#include "sdnlm/wishart.hpp"

#include <cmath>
#include <numbers>

#include "sdnlm/special_functions.hpp"

namespace sdnlm {

double log_multivariate_gamma3(double looks) {
    if (!(looks - 2.0 > 0.0)) {
        throw DomainError("log_multivariate_gamma3: L - 2 must be positive");
    }
    return 3.0 * std::log(std::numbers::pi) + std::lgamma(looks) +
           std::lgamma(looks - 1.0) + std::lgamma(looks - 2.0);
}

namespace {

double checked_log_det(const CovarianceMatrix& m, const char* what) {
    if (!is_positive_definite(m)) throw DomainError(what);
    return std::log(hermitian_det(m));
}

// Re tr(A B) for Hermitian A, B from their upper triangles.
double trace_product(const CovarianceMatrix& a, const CovarianceMatrix& b) {
    return a.c11 * b.c11 + a.c22 * b.c22 + a.c33 * b.c33 +
           2.0 * (std::real(a.c12 * std::conj(b.c12)) +
                  std::real(a.c13 * std::conj(b.c13)) +
                  std::real(a.c23 * std::conj(b.c23)));
}

} // namespace

double wishart_log_density(const CovarianceMatrix& z, const WishartParams& params) {
    const double L = params.looks;
    const double log_det_z = checked_log_det(z, "wishart_log_density: z not positive definite");
    const double log_det_sigma =
        checked_log_det(params.sigma, "wishart_log_density: sigma not positive definite");
    const CovarianceMatrix sigma_inv = hermitian_inv(params.sigma);
    return 3.0 * L * std::log(L) + (L - 3.0) * log_det_z - L * log_det_sigma -
           log_multivariate_gamma3(L) - L * trace_product(sigma_inv, z);
}

WishartScore wishart_score(const CovarianceMatrix& z, const WishartParams& params) {
    const double L = params.looks;
    const double log_det_z = checked_log_det(z, "wishart_score: z not positive definite");
    const double log_det_sigma =
        checked_log_det(params.sigma, "wishart_score: sigma not positive definite");
    if (!(L - 2.0 > 0.0)) throw DomainError("wishart_score: L - 2 must be positive");

    const CovarianceMatrix si = hermitian_inv(params.sigma);

    // si * z * si, assembled through the full entries of both factors.
    CovarianceMatrix szs;
    Complex full[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < 3; ++k) {
                for (int l = 0; l < 3; ++l) {
                    acc += si.at(i, k) * z.at(k, l) * si.at(l, j);
                }
            }
            full[i][j] = acc;
        }
    }
    szs.c11 = full[0][0].real();
    szs.c22 = full[1][1].real();
    szs.c33 = full[2][2].real();
    szs.c12 = full[0][1];
    szs.c13 = full[0][2];
    szs.c23 = full[1][2];

    WishartScore score;
    score.sigma_gradient = L * (szs + (-1.0) * si);
    score.looks_gradient = 3.0 * (std::log(L) + 1.0) + log_det_z - log_det_sigma -
                           (digamma(L) + digamma(L - 1.0) + digamma(L - 2.0)) -
                           trace_product(si, z);
    return score;
}

CovarianceMatrix sample_mean(std::span<const CovarianceMatrix> sample) {
    if (sample.empty()) throw DegenerateSample("sample_mean: empty sample");
    CovarianceMatrix mean;
    for (const auto& z : sample) mean += z;
    mean *= 1.0 / static_cast<double>(sample.size());
    return mean;
}

MlEstimate ml_estimate(std::span<const CovarianceMatrix> sample) {
    MlEstimate est;
    est.params.sigma = sample_mean(sample);
    const double det_mean = hermitian_det(est.params.sigma);
    if (!(det_mean > kDetEpsilon)) {
        throw DegenerateSample("ml_estimate: sample mean not positive definite");
    }
    const double log_det_mean = std::log(det_mean);

    double avg_log_det = 0.0;
    bool degenerate_members = false;
    for (const auto& z : sample) {
        const double det = hermitian_det(z);
        if (!(det > kDetEpsilon)) {
            degenerate_members = true;
            break;
        }
        avg_log_det += std::log(det);
    }
    avg_log_det /= static_cast<double>(sample.size());

    if (degenerate_members) {
        // Rank-deficient members (single-look data) push the profile
        // equation to -inf everywhere; the root clamps to the lower end.
        est.params.looks = kLooksMin;
        est.clamped = true;
        return est;
    }

    const auto g = [&](double L) {
        return 3.0 * std::log(L) + avg_log_det - log_det_mean -
               (digamma(L) + digamma(L - 1.0) + digamma(L - 2.0));
    };
    const double g_lo = g(kLooksMin);
    const double g_hi = g(kLooksMax);
    if (g_lo * g_hi > 0.0) {
        est.params.looks = std::fabs(g_lo) < std::fabs(g_hi) ? kLooksMin : kLooksMax;
        est.clamped = true;
        return est;
    }
    est.params.looks = brent_root(g, kLooksMin, kLooksMax, 1e-8, 200);
    return est;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

WishartSampler::WishartSampler(const CovarianceMatrix& sigma, int looks, std::uint64_t seed)
    : looks_(looks), state_(seed) {
    if (looks < 1) throw DomainError("WishartSampler: looks must be a positive integer");
    if (!is_positive_definite(sigma)) {
        throw DomainError("WishartSampler: sigma not positive definite");
    }
    factor_ = hermitian_cholesky(sigma);
    // Decorrelate trivially related seeds.
    (void)splitmix64(state_);
}

double WishartSampler::next_uniform() {
    // 53-bit mantissa in (0, 1].
    return (static_cast<double>(splitmix64(state_) >> 11) + 1.0) * 0x1.0p-53;
}

double WishartSampler::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return gauss_spare_;
    }
    const double u = next_uniform();
    const double v = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * std::numbers::pi * v;
    gauss_spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

CovarianceMatrix WishartSampler::draw() {
    CovarianceMatrix acc;
    for (int look = 0; look < looks_; ++look) {
        // Standard circular complex normal: each component has unit
        // total variance, split evenly between real and imaginary parts.
        Complex w[3];
        for (auto& wi : w) {
            wi = Complex(next_gaussian(), next_gaussian()) * std::numbers::sqrt2 / 2.0;
        }
        Complex y0 = factor_.l11 * w[0];
        Complex y1 = factor_.l21 * w[0] + factor_.l22 * w[1];
        Complex y2 = factor_.l31 * w[0] + factor_.l32 * w[1] + factor_.l33 * w[2];
        acc.c11 += std::norm(y0);
        acc.c22 += std::norm(y1);
        acc.c33 += std::norm(y2);
        acc.c12 += y0 * std::conj(y1);
        acc.c13 += y0 * std::conj(y2);
        acc.c23 += y1 * std::conj(y2);
    }
    acc *= 1.0 / static_cast<double>(looks_);
    return acc;
}

CovarianceMatrix sample_wishart(const WishartParams& params, std::uint64_t seed) {
    const double rounded = std::round(params.looks);
    if (!(params.looks > 0.0) || std::fabs(params.looks - rounded) > 0.0) {
        throw DomainError("sample_wishart: looks must be a positive integer");
    }
    WishartSampler sampler(params.sigma, static_cast<int>(rounded), seed);
    return sampler.draw();
}

} // namespace sdnlm
