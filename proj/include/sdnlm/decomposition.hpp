#ifndef SDNLM_DECOMPOSITION_HPP
#define SDNLM_DECOMPOSITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdnlm/image.hpp"

namespace sdnlm {

struct RGBImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // interleaved r, g, b

    RGBImage() = default;
    RGBImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}
};

struct HAlphaPoint {
    double entropy = 0.0;    // H in [0, 1], log base 3
    double alpha_deg = 0.0;  // mean alpha angle in degrees, [0, 90]
    int zone = 0;            // 1..9
};

/// Pauli false-color rendering: |S_HH + S_VV|^2 -> R,
/// |S_HH - S_VV|^2 -> G, 2 |S_HV|^2 -> B, each channel clipped at the
/// given percentiles and mapped linearly to [0, 255].
RGBImage pauli_rgb(const PolSARImage& image, double low_percentile = 1.0,
                   double high_percentile = 99.0);

/// Entropy / mean-alpha decomposition of one covariance matrix through
/// its Pauli-basis coherency matrix.
HAlphaPoint h_alpha(const CovarianceMatrix& z);

/// Nine-zone label for an (H, alpha) pair; boundary ties break toward
/// the higher-numbered zone.
int h_alpha_zone(double entropy, double alpha_deg);

/// Human-readable zone names, index 1..9.
const char* h_alpha_zone_name(int zone);

struct LabeledHAlphaPoint {
    std::string region;
    HAlphaPoint point;
};

/// Per-pixel decomposition of every pixel in the given regions.
std::vector<LabeledHAlphaPoint> h_alpha_scatter(
    const PolSARImage& image, const std::vector<std::pair<std::string, RegionOfInterest>>& regions);

/// CSV export: header `region,H,alpha_deg,zone`, '.' decimal separator.
std::string h_alpha_scatter_csv(const std::vector<LabeledHAlphaPoint>& table);

} // namespace sdnlm

#endif
