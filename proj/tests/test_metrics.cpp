#include <doctest.h>

#include <cmath>
#include <random>

#include "sdnlm/metrics.hpp"
#include "sdnlm/phantom.hpp"
#include "sdnlm/wishart.hpp"
#include "test_support.hpp"

using namespace sdnlm;
using namespace sdnlm::testing;

namespace {

RegionOfInterest full(const IntensityImage& img) { return {0, 0, img.width, img.height}; }

IntensityImage from_values(int w, int h, const std::vector<double>& v) {
    IntensityImage img(w, h);
    img.values = v;
    return img;
}

// Plain single-tile evaluation of the three-factor similarity index,
// written independently of the library.
double ssim_tile_oracle(const std::vector<double>& f, const std::vector<double>& g, double range,
                        double k1, double k2) {
    const size_t n = f.size();
    double mf = 0, mg = 0;
    for (size_t i = 0; i < n; ++i) {
        mf += f[i];
        mg += g[i];
    }
    mf /= n;
    mg /= n;
    double vf = 0, vg = 0, cov = 0;
    for (size_t i = 0; i < n; ++i) {
        vf += (f[i] - mf) * (f[i] - mf);
        vg += (g[i] - mg) * (g[i] - mg);
        cov += (f[i] - mf) * (g[i] - mg);
    }
    vf /= n;
    vg /= n;
    cov /= n;
    const double c1 = (k1 * range) * (k1 * range);
    const double c2 = (k2 * range) * (k2 * range);
    const double c3 = c2 / 2.0;
    const double sf = std::sqrt(vf), sg = std::sqrt(vg);
    const double luminance = (2 * mf * mg + c2) / (mf * mf + mg * mg + c2);
    const double contrast = (2 * sf * sg + c3) / (vf + vg + c3);
    const double structure = (cov + c1) / (sf * sg + c1);
    return luminance * contrast * structure;
}

} // namespace

TEST_CASE("channel extraction picks the matching diagonal") {
    PolSARImage img(3, 2, 4);
    for (int y = 0; y < 2; ++y) {
        for (int x = 0; x < 3; ++x) {
            img.at(x, y) = CovarianceMatrix::diagonal(1.0 + x, 10.0 + y, 100.0 + x * y);
        }
    }
    const IntensityImage hh = channel_extract(img, Channel::HH);
    const IntensityImage hv = channel_extract(img, Channel::HV);
    const IntensityImage vv = channel_extract(img, Channel::VV);
    CHECK(hh.at(2, 1) == 3.0);
    CHECK(hv.at(2, 1) == 11.0);
    CHECK(vv.at(2, 1) == 102.0);
    CHECK(hh.width == 3);
    CHECK(hh.height == 2);
}

TEST_CASE("channel means track the class covariance diagonal") {
    WishartSampler sampler(campinas_classes()[0], 4, 321);
    PolSARImage img(50, 50, 4);
    for (auto& p : img.pixels) p = sampler.draw();
    const CovarianceMatrix& sigma = campinas_classes()[0];
    const std::pair<Channel, double> expect[] = {
        {Channel::HH, sigma.c11}, {Channel::HV, sigma.c22}, {Channel::VV, sigma.c33}};
    for (const auto& [ch, truth] : expect) {
        const IntensityImage chan = channel_extract(img, ch);
        double mean = 0;
        for (double v : chan.values) mean += v;
        mean /= chan.values.size();
        CHECK(mean == doctest::Approx(truth).epsilon(0.05));
    }
}

TEST_CASE("enl: constant region raises, exponential data gives one look") {
    IntensityImage flat(8, 8);
    for (auto& v : flat.values) v = 3.25;
    CHECK_THROWS_AS(enl(flat, full(flat)), ZeroVariance);

    // intensity of 1-look data is exponential: mean^2 / var = 1
    std::mt19937_64 rng(5);
    std::exponential_distribution<double> expo(1.0 / 7.0);
    IntensityImage speckle(200, 200);
    for (auto& v : speckle.values) v = expo(rng);
    CHECK(enl(speckle, full(speckle)) == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("enl recovers the shape of gamma intensities") {
    // L-look intensity is Gamma(L, mu/L): mean^2/var = L
    std::mt19937_64 rng(6);
    std::gamma_distribution<double> gamma(4.0, 2.5);
    IntensityImage img(200, 200);
    for (auto& v : img.values) v = gamma(rng);
    CHECK(enl(img, full(img)) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("enl is scale invariant") {
    std::mt19937_64 rng(7);
    std::gamma_distribution<double> gamma(3.0, 1.0);
    IntensityImage img(40, 40);
    for (auto& v : img.values) v = gamma(rng);
    const double base = enl(img, full(img));
    for (double c : {0.5, 3.0, 100.0}) {
        IntensityImage scaled = img;
        for (auto& v : scaled.values) v *= c;
        CHECK(enl(scaled, full(scaled)) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("enl respects the region of interest") {
    IntensityImage img(10, 10);
    std::mt19937_64 rng(8);
    std::exponential_distribution<double> expo(1.0);
    for (auto& v : img.values) v = expo(rng);
    for (int y = 2; y < 6; ++y) {
        for (int x = 3; x < 7; ++x) img.at(x, y) = 9.0;
    }
    CHECK_THROWS_AS(enl(img, RegionOfInterest{3, 2, 4, 4}), ZeroVariance);
}

TEST_CASE("enl agrees with the likelihood looks estimate on wishart data") {
    WishartSampler sampler(campinas_classes()[2], 4, 999);
    std::vector<CovarianceMatrix> sample;
    PolSARImage img(120, 120, 4);
    for (auto& p : img.pixels) {
        p = sampler.draw();
        sample.push_back(p);
    }
    const MlEstimate ml = ml_estimate(sample);
    const double moment = enl(channel_extract(img, Channel::HH), {0, 0, 120, 120});
    CHECK_FALSE(ml.clamped);
    CHECK(std::fabs(moment - ml.params.looks) / ml.params.looks < 0.15);
}

TEST_CASE("ssim of an image with itself is exactly one") {
    std::mt19937_64 rng(9);
    std::exponential_distribution<double> expo(1.0);
    IntensityImage img(32, 24);
    for (auto& v : img.values) v = expo(rng);
    CHECK(ssim(img, img) == 1.0);
}

TEST_CASE("ssim rejects degenerate reference range and size mismatch") {
    IntensityImage flat(16, 16);
    for (auto& v : flat.values) v = 2.0;
    IntensityImage other(16, 16);
    for (auto& v : other.values) v = 3.0;
    CHECK_THROWS_AS(ssim(flat, other), DegenerateRange);
    IntensityImage small(8, 16);
    CHECK_THROWS_AS(ssim(other, small), DimensionMismatch);
}

TEST_CASE("ssim matches an independent single-tile oracle") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> uni(0.5, 4.0);
    std::vector<double> f(64), g(64);
    for (auto& v : f) v = uni(rng);
    for (size_t i = 0; i < g.size(); ++i) g[i] = 0.7 * f[i] + 0.3 * uni(rng);
    const IntensityImage fi = from_values(8, 8, f);
    const IntensityImage gi = from_values(8, 8, g);
    double lo = f[0], hi = f[0];
    for (double v : f) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double expected = ssim_tile_oracle(f, g, hi - lo, 0.01, 0.03);
    CHECK(ssim(fi, gi) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("multi-tile ssim averages the per-tile oracle, remainder dropped") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> uni(0.1, 9.0);
    const int w = 19, h = 11;  // 2x1 grid of 8x8 tiles plus remainders
    IntensityImage f(w, h), g(w, h);
    for (auto& v : f.values) v = uni(rng);
    for (size_t i = 0; i < g.values.size(); ++i) g.values[i] = 0.5 * f.values[i] + uni(rng);
    double lo = f.values[0], hi = f.values[0];
    for (double v : f.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double expected = 0.0;
    for (int tx = 0; tx < 2; ++tx) {
        std::vector<double> tf, tg;
        for (int y = 0; y < 8; ++y) {
            for (int x = tx * 8; x < tx * 8 + 8; ++x) {
                tf.push_back(f.at(x, y));
                tg.push_back(g.at(x, y));
            }
        }
        expected += ssim_tile_oracle(tf, tg, hi - lo, 0.01, 0.03);
    }
    expected /= 2.0;
    CHECK(ssim(f, g) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ssim stays within [-1, 1] on random pairs") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> uni(0.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        IntensityImage f(16, 16), g(16, 16);
        for (auto& v : f.values) v = uni(rng);
        for (auto& v : g.values) v = uni(rng);
        const double s = ssim(f, g);
        CHECK(s <= 1.0 + 1e-12);
        CHECK(s >= -1.0 - 1e-12);
    }
}

TEST_CASE("ssim degrades as independent noise is mixed in") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> uni(1.0, 3.0);
    IntensityImage f(32, 32);
    for (auto& v : f.values) v = uni(rng);
    double previous = 1.1;
    for (double alpha : {0.0, 0.3, 0.7, 1.5}) {
        IntensityImage g = f;
        std::mt19937_64 noise_rng(15);
        std::normal_distribution<double> noise(0.0, 1.0);
        for (auto& v : g.values) v += alpha * noise(noise_rng);
        const double s = ssim(f, g);
        CHECK(s < previous);
        previous = s;
    }
}

TEST_CASE("polarimetric ssim is one for identical rasters and averages channels") {
    PhantomSpec spec = stock_phantom(32, 32, 4);
    const PolSARImage img = simulate_phantom(spec, 44);
    CHECK(ssim_polsar(img, img) == 1.0);

    const PolSARImage other = simulate_phantom(spec, 45);
    double expected = 0.0;
    for (Channel ch : {Channel::HH, Channel::HV, Channel::VV}) {
        expected += ssim(channel_extract(img, ch), channel_extract(other, ch));
    }
    expected /= 3.0;
    CHECK(ssim_polsar(img, other) == doctest::Approx(expected).epsilon(1e-14));
}
