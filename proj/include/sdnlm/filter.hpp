#ifndef SDNLM_FILTER_HPP
#define SDNLM_FILTER_HPP

#include <vector>

#include "sdnlm/divergence.hpp"
#include "sdnlm/image.hpp"

namespace sdnlm {

/// SDNLM configuration.  The candidate center pixels form a
/// center_window x center_window grid; with the default 5x5 grid and
/// 3x3 patches the patches jointly span a 7x7 search window.
struct FilterConfig {
    double eta = 0.10;          // test significance, in (0, 1)
    int center_window = 5;      // odd, >= 3
    int patch_side = 3;         // odd, >= 1
    LooksMode looks_mode = PerPatchLooks{};
    int iterations = 1;
    int threads = 1;

    void validate() const;
};

/// Per-neighbor weights over the center-window grid, row-major.
struct WeightMask {
    int side = 0;
    std::vector<double> weights;
    bool normalized = false;

    /// Scale so the weights sum to one.
    void normalize();
};

/// Soft-threshold map from p-value to weight: 1 above eta, linear ramp
/// on (eta/2, eta), 0 below.
double weight_function(double p, double eta);

/// Weight mask for the pixel at (x, y): one patch-equality test per
/// candidate center, p-values pushed through the soft threshold.
/// Degenerate tests count as rejections (weight 0).
WeightMask pixel_weights(const PolSARImage& image, int x, int y, const FilterConfig& config);

/// Filtered value at (x, y): normalized weight-average of the candidate
/// center pixels.
CovarianceMatrix filter_pixel(const PolSARImage& image, int x, int y,
                              const FilterConfig& config);

/// Full SDNLM pass(es); each iteration reads only the previous iterate.
PolSARImage sdnlm(const PolSARImage& image, const FilterConfig& config);

/// Unweighted window x window moving average, mirror borders.
PolSARImage boxcar(const PolSARImage& image, int window, int threads = 1);

} // namespace sdnlm

#endif
