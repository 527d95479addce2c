#include "sdnlm/filter.hpp"

#include <cmath>
#include <functional>
#include <thread>

namespace sdnlm {

void FilterConfig::validate() const {
    if (!(eta > 0.0 && eta < 1.0)) throw DomainError("FilterConfig: eta must be in (0, 1)");
    if (center_window < 3 || center_window % 2 == 0) {
        throw DomainError("FilterConfig: center_window must be odd and >= 3");
    }
    if (patch_side < 1 || patch_side % 2 == 0) {
        throw DomainError("FilterConfig: patch_side must be odd and >= 1");
    }
    if (iterations < 1) throw DomainError("FilterConfig: iterations must be >= 1");
    if (threads < 1) throw DomainError("FilterConfig: threads must be >= 1");
}

double weight_function(double p, double eta) {
    if (p >= eta) return 1.0;
    if (p > 0.5 * eta) return (2.0 / eta) * p - 1.0;
    return 0.0;
}

void WeightMask::normalize() {
    double sum = 0.0;
    for (double w : weights) sum += w;
    if (!(sum > 0.0)) throw DomainError("WeightMask: nothing to normalize");
    for (double& w : weights) w /= sum;
    normalized = true;
}

namespace {

void extract_patch(const PolSARImage& image, int cx, int cy, int side,
                   std::vector<CovarianceMatrix>& out) {
    out.clear();
    const int half = side / 2;
    for (int dy = -half; dy <= half; ++dy) {
        const int y = reflect_index(cy + dy, image.height);
        for (int dx = -half; dx <= half; ++dx) {
            const int x = reflect_index(cx + dx, image.width);
            out.push_back(image.at(x, y));
        }
    }
}

WeightMask pixel_weights_impl(const PolSARImage& image, int x, int y, const FilterConfig& config,
                              std::vector<CovarianceMatrix>& scratch) {
    const int side = config.center_window;
    const int half = side / 2;
    WeightMask mask;
    mask.side = side;
    mask.weights.assign(static_cast<size_t>(side) * side, 0.0);

    extract_patch(image, x, y, config.patch_side, scratch);
    EstimatedSample center;
    bool center_ok = true;
    try {
        center = estimate_patch(scratch, config.looks_mode);
    } catch (const DegenerateSample&) {
        center_ok = false;
    }

    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
            const size_t idx = static_cast<size_t>(dy + half) * side + (dx + half);
            if (dx == 0 && dy == 0) {
                mask.weights[idx] = 1.0;  // p(1,1) = 1 by definition
                continue;
            }
            if (!center_ok) continue;
            const int nx = reflect_index(x + dx, image.width);
            const int ny = reflect_index(y + dy, image.height);
            try {
                extract_patch(image, nx, ny, config.patch_side, scratch);
                const EstimatedSample neighbor = estimate_patch(scratch, config.looks_mode);
                const TestResult test = patch_test_estimated(center, neighbor, config.looks_mode);
                mask.weights[idx] = weight_function(test.p_value, config.eta);
            } catch (const DomainError&) {
                // Degenerate comparison: treat the neighbor as rejected.
                mask.weights[idx] = 0.0;
            }
        }
    }
    return mask;
}

CovarianceMatrix filter_pixel_impl(const PolSARImage& image, int x, int y,
                                   const FilterConfig& config,
                                   std::vector<CovarianceMatrix>& scratch) {
    const WeightMask mask = pixel_weights_impl(image, x, y, config, scratch);
    const int half = config.center_window / 2;
    // Average in delta form around the center pixel: exact zero deltas
    // make constant neighborhoods (and fully rejected masks) come back
    // bit-identical.
    const CovarianceMatrix& center = image.at(x, y);
    CovarianceMatrix acc;
    double weight_sum = 0.0;
    for (int dy = -half; dy <= half; ++dy) {
        for (int dx = -half; dx <= half; ++dx) {
            const double w =
                mask.weights[static_cast<size_t>(dy + half) * config.center_window + (dx + half)];
            weight_sum += w;
            if (w == 0.0 || (dx == 0 && dy == 0)) continue;
            const int nx = reflect_index(x + dx, image.width);
            const int ny = reflect_index(y + dy, image.height);
            acc += w * (image.at(nx, ny) - center);
        }
    }
    acc /= weight_sum;
    return center + acc;
}

// Row-parallel loop; output per pixel is independent of scheduling.
void parallel_rows(int height, int threads, const std::function<void(int)>& row_body) {
    if (threads <= 1) {
        for (int y = 0; y < height; ++y) row_body(y);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int y = t; y < height; y += threads) row_body(y);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

WeightMask pixel_weights(const PolSARImage& image, int x, int y, const FilterConfig& config) {
    config.validate();
    std::vector<CovarianceMatrix> scratch;
    return pixel_weights_impl(image, x, y, config, scratch);
}

CovarianceMatrix filter_pixel(const PolSARImage& image, int x, int y,
                              const FilterConfig& config) {
    config.validate();
    std::vector<CovarianceMatrix> scratch;
    return filter_pixel_impl(image, x, y, config, scratch);
}

PolSARImage sdnlm(const PolSARImage& image, const FilterConfig& config) {
    config.validate();
    PolSARImage current = image;
    for (int iter = 0; iter < config.iterations; ++iter) {
        PolSARImage next(current.width, current.height, current.nominal_looks);
        parallel_rows(current.height, config.threads, [&](int y) {
            std::vector<CovarianceMatrix> scratch;
            for (int x = 0; x < current.width; ++x) {
                next.at(x, y) = filter_pixel_impl(current, x, y, config, scratch);
            }
        });
        current = std::move(next);
    }
    return current;
}

PolSARImage boxcar(const PolSARImage& image, int window, int threads) {
    if (window < 3 || window % 2 == 0) throw DomainError("boxcar: window must be odd and >= 3");
    PolSARImage out(image.width, image.height, image.nominal_looks);
    const int half = window / 2;
    const double count = static_cast<double>(window) * window;
    parallel_rows(image.height, threads, [&](int y) {
        for (int x = 0; x < image.width; ++x) {
            // Same delta form as the main filter, for the constant
            // fixed point.
            const CovarianceMatrix& center = image.at(x, y);
            CovarianceMatrix acc;
            for (int dy = -half; dy <= half; ++dy) {
                const int yy = reflect_index(y + dy, image.height);
                for (int dx = -half; dx <= half; ++dx) {
                    const int xx = reflect_index(x + dx, image.width);
                    acc += image.at(xx, yy) - center;
                }
            }
            acc /= count;
            out.at(x, y) = center + acc;
        }
    });
    return out;
}

} // namespace sdnlm
