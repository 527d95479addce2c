#include "sdnlm/decomposition.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sdnlm {

namespace {

// Pauli-channel quadratic forms expressed through covariance entries.
void pauli_channels(const CovarianceMatrix& m, double& r, double& g, double& b) {
    const double cross = 2.0 * m.c13.real();
    r = m.c11 + m.c33 + cross;  // |S_HH + S_VV|^2
    g = m.c11 + m.c33 - cross;  // |S_HH - S_VV|^2
    b = 2.0 * m.c22;            // 2 |S_HV|^2
}

double percentile(std::vector<double> values, double pct) {
    const size_t idx = static_cast<size_t>(
        std::clamp(pct / 100.0 * static_cast<double>(values.size() - 1), 0.0,
                   static_cast<double>(values.size() - 1)));
    std::nth_element(values.begin(), values.begin() + idx, values.end());
    return values[idx];
}

std::uint8_t stretch(double v, double lo, double hi) {
    if (!(hi > lo)) return 0;
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(t * 255.0));
}

} // namespace

RGBImage pauli_rgb(const PolSARImage& image, double low_percentile, double high_percentile) {
    const size_t n = image.pixels.size();
    std::vector<double> r(n), g(n), b(n);
    for (size_t i = 0; i < n; ++i) pauli_channels(image.pixels[i], r[i], g[i], b[i]);

    const double rlo = percentile(r, low_percentile), rhi = percentile(r, high_percentile);
    const double glo = percentile(g, low_percentile), ghi = percentile(g, high_percentile);
    const double blo = percentile(b, low_percentile), bhi = percentile(b, high_percentile);

    RGBImage out(image.width, image.height);
    for (size_t i = 0; i < n; ++i) {
        out.data[3 * i + 0] = stretch(r[i], rlo, rhi);
        out.data[3 * i + 1] = stretch(g[i], glo, ghi);
        out.data[3 * i + 2] = stretch(b[i], blo, bhi);
    }
    return out;
}

int h_alpha_zone(double entropy, double alpha_deg) {
    // Canonical nine-region partition; strict inequalities place the
    // boundary itself in the higher-numbered zone.
    if (entropy > 0.9) {
        if (alpha_deg > 55.0) return 1;  // high entropy multiple scattering
        if (alpha_deg > 40.0) return 2;  // high entropy vegetation scattering
        return 3;                        // high entropy surface scatter
    }
    if (entropy > 0.5) {
        if (alpha_deg > 50.0) return 4;  // medium entropy multiple scattering
        if (alpha_deg > 40.0) return 5;  // medium entropy vegetation scattering
        return 6;                        // medium entropy surface scatter
    }
    if (alpha_deg > 47.5) return 7;      // low entropy multiple scattering
    if (alpha_deg > 42.5) return 8;      // low entropy dipole scattering
    return 9;                            // low entropy surface scatter
}

const char* h_alpha_zone_name(int zone) {
    switch (zone) {
        case 1: return "high entropy multiple scattering";
        case 2: return "high entropy vegetation scattering";
        case 3: return "high entropy surface scatter";
        case 4: return "medium entropy multiple scattering";
        case 5: return "medium entropy vegetation scattering";
        case 6: return "medium entropy surface scatter";
        case 7: return "low entropy multiple scattering";
        case 8: return "low entropy dipole scattering";
        case 9: return "low entropy surface scatter";
    }
    return "unknown";
}

HAlphaPoint h_alpha(const CovarianceMatrix& z) {
    const double trace = z.c11 + 2.0 * z.c22 + z.c33;  // coherency trace (span)
    if (!(trace > 0.0)) throw DomainError("h_alpha: zero trace");

    // Pauli-basis coherency matrix, normalized by its trace so that
    // power-of-two rescalings of z are exactly invariant.
    const Complex t12(0.5 * (z.c11 - z.c33), -z.c13.imag());
    const Complex t13 = z.c12 + std::conj(z.c23);
    const Complex t23 = z.c12 - std::conj(z.c23);
    Eigen::Matrix3cd t;
    t(0, 0) = 0.5 * (z.c11 + z.c33 + 2.0 * z.c13.real()) / trace;
    t(1, 1) = 0.5 * (z.c11 + z.c33 - 2.0 * z.c13.real()) / trace;
    t(2, 2) = 2.0 * z.c22 / trace;
    t(0, 1) = t12 / trace;
    t(1, 0) = std::conj(t(0, 1));
    t(0, 2) = t13 / trace;
    t(2, 0) = std::conj(t(0, 2));
    t(1, 2) = t23 / trace;
    t(2, 1) = std::conj(t(1, 2));

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(t);
    Eigen::Vector3d lambda = solver.eigenvalues();
    for (int i = 0; i < 3; ++i) lambda(i) = std::max(lambda(i), 0.0);
    const double total = lambda.sum();
    if (!(total > 0.0)) throw DomainError("h_alpha: degenerate eigenvalue sum");

    HAlphaPoint out;
    const double inv_log3 = 1.0 / std::log(3.0);
    for (int i = 0; i < 3; ++i) {
        const double p = lambda(i) / total;
        if (p > 0.0) out.entropy -= p * std::log(p) * inv_log3;
        const double first = std::min(std::abs(solver.eigenvectors()(0, i)), 1.0);
        out.alpha_deg += p * std::acos(first) * (180.0 / std::numbers::pi);
    }
    out.entropy = std::clamp(out.entropy, 0.0, 1.0);
    out.alpha_deg = std::clamp(out.alpha_deg, 0.0, 90.0);
    out.zone = h_alpha_zone(out.entropy, out.alpha_deg);
    return out;
}

std::vector<LabeledHAlphaPoint> h_alpha_scatter(
    const PolSARImage& image,
    const std::vector<std::pair<std::string, RegionOfInterest>>& regions) {
    std::vector<LabeledHAlphaPoint> table;
    for (const auto& [label, roi] : regions) {
        if (roi.x < 0 || roi.y < 0 || roi.x + roi.w > image.width ||
            roi.y + roi.h > image.height) {
            throw DomainError("h_alpha_scatter: region outside the image");
        }
        for (int y = roi.y; y < roi.y + roi.h; ++y) {
            for (int x = roi.x; x < roi.x + roi.w; ++x) {
                table.push_back({label, h_alpha(image.at(x, y))});
            }
        }
    }
    return table;
}

std::string h_alpha_scatter_csv(const std::vector<LabeledHAlphaPoint>& table) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "region,H,alpha_deg,zone\n";
    os.precision(12);
    for (const auto& row : table) {
        os << row.region << ',' << row.point.entropy << ',' << row.point.alpha_deg << ','
           << row.point.zone << '\n';
    }
    return os.str();
}

} // namespace sdnlm
