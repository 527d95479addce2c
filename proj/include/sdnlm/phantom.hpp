#ifndef SDNLM_PHANTOM_HPP
#define SDNLM_PHANTOM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sdnlm/image.hpp"
#include "sdnlm/wishart.hpp"

namespace sdnlm {

struct PhantomClass {
    CovarianceMatrix sigma;
    int looks = 1;
};

/// Class raster plus per-class Wishart parameters; indices in the map
/// are 1-based.
struct PhantomSpec {
    int width = 0;
    int height = 0;
    std::vector<int> class_map;  // row-major, values 1..classes.size()
    std::vector<PhantomClass> classes;

    void validate() const;
    int class_at(int x, int y) const { return class_map[static_cast<size_t>(y) * width + x]; }
};

/// The six covariance matrices observed over Campinas by the R99-B
/// airborne sensor (L-band, values carry the printed 1e-4 scale).
const std::array<CovarianceMatrix, 6>& campinas_classes();

/// Procedural six-class layout: background, two concentric rectangular
/// rings with a core block, a thin 3-pixel stripe and an 11-pixel disc.
std::vector<int> stock_class_map(int width, int height);

/// Stock phantom spec at the given size, single look by default.
PhantomSpec stock_phantom(int width = 496, int height = 496, int looks = 1);

/// Centered square region inside the core block, clear of every class
/// edge; used for homogeneous-area statistics.
RegionOfInterest stock_homogeneous_roi(int width, int height);

/// Noise-free reference: every pixel equals its class covariance.
PolSARImage phantom_class_means(const PhantomSpec& spec);

/// Draw every pixel independently from its class parameters.
PolSARImage simulate_phantom(const PhantomSpec& spec, std::uint64_t seed);

} // namespace sdnlm

#endif
