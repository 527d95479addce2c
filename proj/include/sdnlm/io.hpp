#ifndef SDNLM_IO_HPP
#define SDNLM_IO_HPP

#include <string>

#include "sdnlm/decomposition.hpp"
#include "sdnlm/image.hpp"

namespace sdnlm {

/// PHF raster format: `x.phf` holds row-major little-endian float64
/// pixels in the order c11,c22,c33,reC12,imC12,reC13,imC13,reC23,imC23;
/// `x.phf.json` is the sibling header.
void write_phf(const std::string& path, const PolSARImage& image);
PolSARImage read_phf(const std::string& path);

/// Binary PPM (P6) export.
void write_ppm(const std::string& path, const RGBImage& image);

} // namespace sdnlm

#endif
