#include <doctest.h>

#include <cmath>
#include <random>

#include "sdnlm/filter.hpp"
#include "sdnlm/metrics.hpp"
#include "sdnlm/phantom.hpp"
#include "test_support.hpp"

using namespace sdnlm;
using namespace sdnlm::testing;

namespace {

PolSARImage constant_image(int w, int h, const CovarianceMatrix& value, double looks) {
    PolSARImage img(w, h, looks);
    for (auto& p : img.pixels) p = value;
    return img;
}

} // namespace

TEST_CASE("weight function: plateau, ramp and cutoff at eta = 0.10") {
    const double eta = 0.10;
    CHECK(weight_function(0.10, eta) == 1.0);
    CHECK(weight_function(0.5, eta) == 1.0);
    CHECK(weight_function(1.0, eta) == 1.0);
    // ramp value at p: 2p/eta - 1
    CHECK(weight_function(0.075, eta) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(weight_function(0.06, eta) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(weight_function(0.05, eta) == 0.0);
    CHECK(weight_function(0.01, eta) == 0.0);
    CHECK(weight_function(0.0, eta) == 0.0);
}

TEST_CASE("weight function is continuous and monotone on a p grid") {
    for (double eta : {0.01, 0.10, 0.20}) {
        double previous = -1.0;
        for (int i = 0; i <= 1000; ++i) {
            const double p = i / 1000.0;
            const double w = weight_function(p, eta);
            CHECK(w >= previous - 1e-15);
            CHECK(w >= 0.0);
            CHECK(w <= 1.0);
            previous = w;
        }
        CHECK(std::fabs(weight_function(eta / 2 + 1e-12, eta) - 0.0) < 1e-9);
        CHECK(std::fabs(weight_function(eta - 1e-12, eta) - 1.0) < 1e-9);
    }
}

TEST_CASE("config validation rejects bad parameters") {
    FilterConfig config;
    config.eta = 0.0;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config.eta = 1.0;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config = FilterConfig{};
    config.center_window = 4;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config = FilterConfig{};
    config.patch_side = 2;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config = FilterConfig{};
    config.iterations = 0;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config = FilterConfig{};
    config.threads = 0;
    CHECK_THROWS_AS(config.validate(), DomainError);
    FilterConfig{}.validate();
}

TEST_CASE("weight mask normalization sums to one") {
    PhantomSpec spec = stock_phantom(40, 40, 4);
    const PolSARImage img = simulate_phantom(spec, 7);
    FilterConfig config;
    config.looks_mode = CommonLooks{4.0};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int x = static_cast<int>(rng() % 40);
        const int y = static_cast<int>(rng() % 40);
        WeightMask mask = pixel_weights(img, x, y, config);
        CHECK(mask.side == 5);
        CHECK(mask.weights.size() == 25);
        CHECK_FALSE(mask.normalized);
        // center weight is 1 before normalization
        CHECK(mask.weights[12] == 1.0);
        mask.normalize();
        CHECK(mask.normalized);
        double sum = 0.0;
        for (double w : mask.weights) {
            CHECK(w >= 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("constant image is a fixed point, bit for bit") {
    const CovarianceMatrix value = campinas_classes()[4];
    const PolSARImage img = constant_image(16, 12, value, 4);
    FilterConfig config;
    config.looks_mode = CommonLooks{4.0};
    const PolSARImage out = sdnlm::sdnlm(img, config);
    for (const auto& p : out.pixels) {
        CHECK(p.c11 == value.c11);
        CHECK(p.c22 == value.c22);
        CHECK(p.c33 == value.c33);
        CHECK(p.c12 == value.c12);
        CHECK(p.c13 == value.c13);
        CHECK(p.c23 == value.c23);
    }
}

TEST_CASE("patches disjoint from an outlier reject, distant pixels are untouched") {
    // One pixel scaled by 1e6 in a homogeneous field.  The outer ring
    // of the 5x5 grid has 3x3 patches that miss the spike, so those
    // comparisons against the spiked center patch must reject; pixels
    // whose 7x7 support misses the spike entirely must be bit-identical
    // to the spike-free result.
    PhantomSpec spec = stock_phantom(32, 32, 16);
    for (auto& c : spec.classes) c.sigma = campinas_classes()[0];
    const PolSARImage clean = simulate_phantom(spec, 21);
    PolSARImage img = clean;
    CovarianceMatrix spike = campinas_classes()[0];
    spike *= 1e6;
    img.at(16, 16) = spike;
    FilterConfig config;
    config.eta = 0.10;
    config.looks_mode = CommonLooks{16.0};
    const WeightMask mask = pixel_weights(img, 16, 16, config);
    CHECK(mask.weights[12] == 1.0);
    for (int dy = -2; dy <= 2; ++dy) {
        for (int dx = -2; dx <= 2; ++dx) {
            if (std::max(std::abs(dx), std::abs(dy)) == 2) {
                CHECK(mask.weights[(dy + 2) * 5 + (dx + 2)] == 0.0);
            }
        }
    }
    const CovarianceMatrix far_with = filter_pixel(img, 24, 24, config);
    const CovarianceMatrix far_without = filter_pixel(clean, 24, 24, config);
    CHECK(max_abs_entry_diff(far_with, far_without) == 0.0);
}

TEST_CASE("filter output stays positive definite on simulated data") {
    PhantomSpec spec = stock_phantom(36, 36, 4);
    const PolSARImage img = simulate_phantom(spec, 33);
    FilterConfig config;
    config.looks_mode = CommonLooks{4.0};
    const PolSARImage out = sdnlm::sdnlm(img, config);
    for (const auto& p : out.pixels) {
        CHECK(is_positive_definite(p));
        CHECK(p.all_finite());
    }
}

TEST_CASE("homogeneous-area variance drops and mean is preserved") {
    PhantomSpec spec = stock_phantom(48, 48, 4);
    for (auto& c : spec.classes) c.sigma = campinas_classes()[2];
    const PolSARImage img = simulate_phantom(spec, 55);
    FilterConfig config;
    config.eta = 0.10;
    config.looks_mode = CommonLooks{4.0};
    const PolSARImage out = sdnlm::sdnlm(img, config);
    const RegionOfInterest roi{10, 10, 28, 28};
    for (Channel ch : {Channel::HH, Channel::HV, Channel::VV}) {
        const IntensityImage before = channel_extract(img, ch);
        const IntensityImage after = channel_extract(out, ch);
        double mean_before = 0, mean_after = 0, var_before = 0, var_after = 0;
        const int n = roi.w * roi.h;
        for (int y = roi.y; y < roi.y + roi.h; ++y) {
            for (int x = roi.x; x < roi.x + roi.w; ++x) {
                mean_before += before.at(x, y);
                mean_after += after.at(x, y);
            }
        }
        mean_before /= n;
        mean_after /= n;
        for (int y = roi.y; y < roi.y + roi.h; ++y) {
            for (int x = roi.x; x < roi.x + roi.w; ++x) {
                var_before += (before.at(x, y) - mean_before) * (before.at(x, y) - mean_before);
                var_after += (after.at(x, y) - mean_after) * (after.at(x, y) - mean_after);
            }
        }
        CHECK(var_after < 0.5 * var_before);
        CHECK(mean_after == doctest::Approx(mean_before).epsilon(0.05));
    }
}

TEST_CASE("lower significance smooths more on homogeneous data") {
    PhantomSpec spec = stock_phantom(40, 40, 4);
    for (auto& c : spec.classes) c.sigma = campinas_classes()[1];
    const PolSARImage img = simulate_phantom(spec, 77);
    const RegionOfInterest roi{8, 8, 24, 24};
    const double raw_enl = enl(channel_extract(img, Channel::HH), roi);
    std::vector<double> filtered;
    for (double eta : {0.20, 0.01}) {
        FilterConfig config;
        config.eta = eta;
        config.looks_mode = CommonLooks{4.0};
        filtered.push_back(enl(channel_extract(sdnlm::sdnlm(img, config), Channel::HH), roi));
        CHECK(filtered.back() > raw_enl);
    }
    CHECK(filtered[1] > filtered[0]);
}

TEST_CASE("iterations are equivalent to repeated single passes") {
    PhantomSpec spec = stock_phantom(32, 32, 4);
    const PolSARImage img = simulate_phantom(spec, 91);
    FilterConfig once;
    once.looks_mode = CommonLooks{4.0};
    FilterConfig twice = once;
    twice.iterations = 2;
    const PolSARImage sequential = sdnlm::sdnlm(sdnlm::sdnlm(img, once), once);
    const PolSARImage iterated = sdnlm::sdnlm(img, twice);
    for (size_t i = 0; i < iterated.pixels.size(); ++i) {
        CHECK(max_abs_entry_diff(iterated.pixels[i], sequential.pixels[i]) == 0.0);
    }
}

TEST_CASE("thread count does not change the result") {
    PhantomSpec spec = stock_phantom(32, 32, 4);
    const PolSARImage img = simulate_phantom(spec, 13);
    FilterConfig serial;
    serial.looks_mode = CommonLooks{4.0};
    FilterConfig parallel = serial;
    parallel.threads = 4;
    const PolSARImage a = sdnlm::sdnlm(img, serial);
    const PolSARImage b = sdnlm::sdnlm(img, parallel);
    for (size_t i = 0; i < a.pixels.size(); ++i) {
        CHECK(max_abs_entry_diff(a.pixels[i], b.pixels[i]) == 0.0);
    }
}

TEST_CASE("boxcar: constant fixed point and impulse spreading") {
    const CovarianceMatrix value = campinas_classes()[5];
    const PolSARImage img = constant_image(10, 10, value, 4);
    const PolSARImage out = boxcar(img, 5);
    for (const auto& p : out.pixels) CHECK(max_abs_entry_diff(p, value) == 0.0);

    PolSARImage impulse(11, 11, 1);
    for (auto& p : impulse.pixels) p = CovarianceMatrix::identity();
    CovarianceMatrix big = CovarianceMatrix::diagonal(26, 26, 26);
    impulse.at(5, 5) = big;
    const PolSARImage smoothed = boxcar(impulse, 5, 2);
    // interior window containing the impulse averages to 2 I
    CHECK(smoothed.at(5, 5).c11 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(smoothed.at(7, 7).c11 == doctest::Approx(2.0).epsilon(1e-12));
    // outside the impulse support nothing changes
    CHECK(smoothed.at(10, 0).c11 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boxcar raises the equivalent number of looks toward window size") {
    PhantomSpec spec = stock_phantom(64, 64, 1);
    for (auto& c : spec.classes) c.sigma = campinas_classes()[0];
    const PolSARImage img = simulate_phantom(spec, 101);
    const PolSARImage out = boxcar(img, 5);
    const RegionOfInterest roi{16, 16, 32, 32};
    const double e = enl(channel_extract(out, Channel::HH), roi);
    // 25 correlated-window averages of 1-look data: well above 10,
    // bounded by the 25 independent-sample ceiling
    CHECK(e > 10.0);
    CHECK(e <= 26.0);
}
