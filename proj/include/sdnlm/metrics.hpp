#ifndef SDNLM_METRICS_HPP
#define SDNLM_METRICS_HPP

#include "sdnlm/image.hpp"

namespace sdnlm {

enum class Channel { HH, HV, VV };

/// Diagonal intensity channel of a covariance raster.
IntensityImage channel_extract(const PolSARImage& image, Channel channel);

/// Moment-based equivalent number of looks over a region: squared
/// sample mean over unbiased sample variance.
double enl(const IntensityImage& image, const RegionOfInterest& roi);

/// Mean structural-similarity index over non-overlapping block x block
/// tiles (remainder rows/columns dropped).  The dynamic range comes
/// from the reference image f; a zero range raises DegenerateRange.
double ssim(const IntensityImage& f, const IntensityImage& g, int block = 8, double k1 = 0.01,
            double k2 = 0.03);

/// Mean of ssim over the HH, HV and VV channel pairs.
double ssim_polsar(const PolSARImage& f, const PolSARImage& g);

} // namespace sdnlm

#endif
