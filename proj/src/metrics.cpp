#include "sdnlm/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace sdnlm {

IntensityImage channel_extract(const PolSARImage& image, Channel channel) {
    IntensityImage out(image.width, image.height);
    for (size_t i = 0; i < image.pixels.size(); ++i) {
        const CovarianceMatrix& m = image.pixels[i];
        switch (channel) {
            case Channel::HH: out.values[i] = m.c11; break;
            case Channel::HV: out.values[i] = m.c22; break;
            case Channel::VV: out.values[i] = m.c33; break;
        }
    }
    return out;
}

namespace {

void check_roi(const IntensityImage& image, const RegionOfInterest& roi) {
    if (roi.x < 0 || roi.y < 0 || roi.w <= 0 || roi.h <= 0 || roi.x + roi.w > image.width ||
        roi.y + roi.h > image.height) {
        throw DomainError("enl: roi outside the image");
    }
    if (static_cast<long>(roi.w) * roi.h < 2) throw DomainError("enl: roi area must be >= 2");
}

} // namespace

double enl(const IntensityImage& image, const RegionOfInterest& roi) {
    check_roi(image, roi);
    const double n = static_cast<double>(roi.w) * roi.h;
    double mean = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) mean += image.at(x, y);
    }
    mean /= n;
    double ss = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) {
            const double d = image.at(x, y) - mean;
            ss += d * d;
        }
    }
    const double variance = ss / (n - 1.0);
    if (variance < 1e-300) throw ZeroVariance("enl: region variance is zero");
    return mean * mean / variance;
}

double ssim(const IntensityImage& f, const IntensityImage& g, int block, double k1, double k2) {
    if (f.width != g.width || f.height != g.height) {
        throw DimensionMismatch("ssim: images differ in size");
    }
    if (block < 1 || block > std::min(f.width, f.height)) {
        throw DomainError("ssim: block must fit inside the images");
    }
    const auto [min_it, max_it] = std::minmax_element(f.values.begin(), f.values.end());
    const double range = *max_it - *min_it;
    if (!(range > 0.0)) throw DegenerateRange("ssim: reference image has zero dynamic range");
    const double c1 = (k1 * range) * (k1 * range);
    const double c2 = (k2 * range) * (k2 * range);
    const double c3 = 0.5 * c2;

    const int tiles_x = f.width / block;
    const int tiles_y = f.height / block;
    const double n = static_cast<double>(block) * block;
    double sum = 0.0;
    for (int ty = 0; ty < tiles_y; ++ty) {
        for (int tx = 0; tx < tiles_x; ++tx) {
            double mf = 0.0, mg = 0.0;
            for (int y = ty * block; y < (ty + 1) * block; ++y) {
                for (int x = tx * block; x < (tx + 1) * block; ++x) {
                    mf += f.at(x, y);
                    mg += g.at(x, y);
                }
            }
            mf /= n;
            mg /= n;
            double vf = 0.0, vg = 0.0, cov = 0.0;
            for (int y = ty * block; y < (ty + 1) * block; ++y) {
                for (int x = tx * block; x < (tx + 1) * block; ++x) {
                    const double df = f.at(x, y) - mf;
                    const double dg = g.at(x, y) - mg;
                    vf += df * df;
                    vg += dg * dg;
                    cov += df * dg;
                }
            }
            vf /= n;
            vg /= n;
            cov /= n;
            // sqrt(vf * vg) rather than sqrt(vf) * sqrt(vg): the former
            // reproduces vf exactly when f == g, so ssim(f, f) == 1.
            const double sfsg = std::sqrt(vf * vg);
            const double structure = (cov + c1) / (sfsg + c1);
            const double luminance = (2.0 * mf * mg + c2) / (mf * mf + mg * mg + c2);
            const double contrast = (2.0 * sfsg + c3) / (vf + vg + c3);
            sum += structure * luminance * contrast;
        }
    }
    return sum / (static_cast<double>(tiles_x) * tiles_y);
}

double ssim_polsar(const PolSARImage& f, const PolSARImage& g) {
    const double hh = ssim(channel_extract(f, Channel::HH), channel_extract(g, Channel::HH));
    const double hv = ssim(channel_extract(f, Channel::HV), channel_extract(g, Channel::HV));
    const double vv = ssim(channel_extract(f, Channel::VV), channel_extract(g, Channel::VV));
    return (hh + hv + vv) / 3.0;
}

} // namespace sdnlm
