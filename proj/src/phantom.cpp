#include "sdnlm/phantom.hpp"

#include <cmath>

namespace sdnlm {

void PhantomSpec::validate() const {
    if (width <= 0 || height <= 0) throw DomainError("PhantomSpec: dimensions must be positive");
    if (class_map.size() != static_cast<size_t>(width) * height) {
        throw DomainError("PhantomSpec: class_map size mismatch");
    }
    if (classes.empty()) throw DomainError("PhantomSpec: no classes");
    for (int c : class_map) {
        if (c < 1 || c > static_cast<int>(classes.size())) {
            throw DomainError("PhantomSpec: class index out of range");
        }
    }
    for (const auto& cls : classes) {
        if (cls.looks < 1) throw DomainError("PhantomSpec: looks must be a positive integer");
        if (!is_positive_definite(cls.sigma)) {
            throw DomainError("PhantomSpec: class matrix not positive definite");
        }
    }
}

const std::array<CovarianceMatrix, 6>& campinas_classes() {
    static const std::array<CovarianceMatrix, 6> classes = [] {
        std::array<CovarianceMatrix, 6> c{};
        const double s = 1e-4;
        c[0].c11 = 7.60830 * s;
        c[0].c22 = 24.8580 * s;
        c[0].c33 = 32.2771 * s;
        c[0].c12 = Complex(-0.74901, -2.29165) * s;
        c[0].c13 = Complex(1.38157, 8.39200) * s;
        c[0].c23 = Complex(-5.90346, -0.45011) * s;

        c[1].c11 = 128.592 * s;
        c[1].c22 = 336.959 * s;
        c[1].c33 = 154.343 * s;
        c[1].c12 = Complex(12.1941, -7.12246) * s;
        c[1].c13 = Complex(39.1107, 18.7954) * s;
        c[1].c23 = Complex(-8.49716, -11.8210) * s;

        c[2].c11 = 29.6303 * s;
        c[2].c22 = 86.8985 * s;
        c[2].c33 = 43.3504 * s;
        c[2].c12 = Complex(4.86985, 1.55848) * s;
        c[2].c13 = Complex(3.41851, 1.43502) * s;
        c[2].c23 = Complex(-2.03628, -8.24319) * s;

        c[3].c11 = 14.0576 * s;
        c[3].c22 = 60.5614 * s;
        c[3].c33 = 42.3767 * s;
        c[3].c12 = Complex(-0.25731, -1.48967) * s;
        c[3].c13 = Complex(4.36926, 9.41493) * s;
        c[3].c23 = Complex(-4.92951, -2.16850) * s;

        c[4].c11 = 4.89301 * s;
        c[4].c22 = 12.1149 * s;
        c[4].c33 = 25.6761 * s;
        c[4].c12 = Complex(-0.52225, -0.62765) * s;
        c[4].c13 = Complex(1.38866, 5.29889) * s;
        c[4].c23 = Complex(-3.30897, -0.85846) * s;

        c[5].c11 = 18.7013 * s;
        c[5].c22 = 32.8094 * s;
        c[5].c33 = 25.8651 * s;
        c[5].c12 = Complex(0.81235, -1.72513) * s;
        c[5].c13 = Complex(1.26677, 6.08878) * s;
        c[5].c23 = Complex(-3.01618, -1.67916) * s;
        return c;
    }();
    return classes;
}

std::vector<int> stock_class_map(int width, int height) {
    if (width < 32 || height < 32) {
        throw DomainError("stock_class_map: layout needs at least 32x32");
    }
    std::vector<int> map(static_cast<size_t>(width) * height, 1);
    const double cx = 0.5 * (width - 1);
    const double cy = 0.5 * (height - 1);
    const double half = 0.5 * std::min(width, height);

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            // Chebyshev distance from the center, normalized by the
            // half-extent: concentric rectangles.
            const double d = std::max(std::fabs(x - cx), std::fabs(y - cy)) / half;
            int cls = 1;
            if (d < 0.18) {
                cls = 4;  // core block
            } else if (d < 0.30) {
                cls = 3;  // inner ring
            } else if (d < 0.42) {
                cls = 2;  // outer ring
            }
            map[static_cast<size_t>(y) * width + x] = cls;
        }
    }

    // Thin 3-pixel stripe across the upper-left background.
    const int stripe_y = static_cast<int>(std::lround(0.10 * height));
    for (int y = stripe_y; y < std::min(stripe_y + 3, height); ++y) {
        for (int x = 0; x < static_cast<int>(std::lround(0.45 * width)); ++x) {
            map[static_cast<size_t>(y) * width + x] = 5;
        }
    }

    // 11-pixel-diameter disc in the lower-right background.
    const double disc_x = 0.80 * width;
    const double disc_y = 0.78 * height;
    const double radius = 5.5;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double dx = x - disc_x;
            const double dy = y - disc_y;
            if (dx * dx + dy * dy <= radius * radius) {
                map[static_cast<size_t>(y) * width + x] = 6;
            }
        }
    }
    return map;
}

PhantomSpec stock_phantom(int width, int height, int looks) {
    PhantomSpec spec;
    spec.width = width;
    spec.height = height;
    spec.class_map = stock_class_map(width, height);
    for (const auto& sigma : campinas_classes()) {
        spec.classes.push_back({sigma, looks});
    }
    spec.validate();
    return spec;
}

RegionOfInterest stock_homogeneous_roi(int width, int height) {
    // Inside the core block (Chebyshev distance < 0.18 of the
    // half-extent) with a margin wider than the filter footprint.
    const int core_half = static_cast<int>(std::floor(0.18 * 0.5 * std::min(width, height))) - 5;
    if (core_half < 2) throw DomainError("stock_homogeneous_roi: image too small");
    RegionOfInterest roi;
    roi.x = width / 2 - core_half;
    roi.y = height / 2 - core_half;
    roi.w = 2 * core_half;
    roi.h = 2 * core_half;
    return roi;
}

PolSARImage phantom_class_means(const PhantomSpec& spec) {
    spec.validate();
    PolSARImage image(spec.width, spec.height, spec.classes.front().looks);
    for (size_t i = 0; i < spec.class_map.size(); ++i) {
        image.pixels[i] = spec.classes[static_cast<size_t>(spec.class_map[i]) - 1].sigma;
    }
    return image;
}

PolSARImage simulate_phantom(const PhantomSpec& spec, std::uint64_t seed) {
    spec.validate();
    PolSARImage image(spec.width, spec.height, spec.classes.front().looks);
    std::vector<WishartSampler> samplers;
    samplers.reserve(spec.classes.size());
    for (size_t k = 0; k < spec.classes.size(); ++k) {
        samplers.emplace_back(spec.classes[k].sigma, spec.classes[k].looks,
                              seed ^ (0x51ed270b * (k + 1)));
    }
    for (size_t i = 0; i < spec.class_map.size(); ++i) {
        image.pixels[i] = samplers[static_cast<size_t>(spec.class_map[i]) - 1].draw();
    }
    return image;
}

} // namespace sdnlm
