#ifndef SDNLM_IMAGE_HPP
#define SDNLM_IMAGE_HPP

#include <vector>

#include "sdnlm/covariance_matrix.hpp"

namespace sdnlm {

/// Row-major raster of per-pixel covariance matrices.
struct PolSARImage {
    int width = 0;
    int height = 0;
    double nominal_looks = 1.0;
    std::vector<CovarianceMatrix> pixels;

    PolSARImage() = default;
    PolSARImage(int w, int h, double looks)
        : width(w), height(h), nominal_looks(looks), pixels(static_cast<size_t>(w) * h) {
        if (w <= 0 || h <= 0) throw DomainError("PolSARImage: dimensions must be positive");
    }

    CovarianceMatrix& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    const CovarianceMatrix& at(int x, int y) const {
        return pixels[static_cast<size_t>(y) * width + x];
    }
};

/// Scalar intensity raster (one polarimetric channel).
struct IntensityImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    IntensityImage() = default;
    IntensityImage(int w, int h) : width(w), height(h), values(static_cast<size_t>(w) * h, 0.0) {
        if (w <= 0 || h <= 0) throw DomainError("IntensityImage: dimensions must be positive");
    }

    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
};

struct RegionOfInterest {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

/// Mirror-reflect an index into [0, n); the edge pixel is duplicated.
inline int reflect_index(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

} // namespace sdnlm

#endif
