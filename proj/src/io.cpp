#include "sdnlm/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace sdnlm {

static_assert(std::endian::native == std::endian::little,
              "PHF i/o assumes a little-endian host");

namespace {

constexpr const char* kDtype = "f64le";
constexpr const char* kLayout = "c11,c22,c33,reC12,imC12,reC13,imC13,reC23,imC23";
constexpr size_t kDoublesPerPixel = 9;

void pack_pixel(const CovarianceMatrix& m, double* out) {
    out[0] = m.c11;
    out[1] = m.c22;
    out[2] = m.c33;
    out[3] = m.c12.real();
    out[4] = m.c12.imag();
    out[5] = m.c13.real();
    out[6] = m.c13.imag();
    out[7] = m.c23.real();
    out[8] = m.c23.imag();
}

CovarianceMatrix unpack_pixel(const double* in) {
    CovarianceMatrix m;
    m.c11 = in[0];
    m.c22 = in[1];
    m.c33 = in[2];
    m.c12 = {in[3], in[4]};
    m.c13 = {in[5], in[6]};
    m.c23 = {in[7], in[8]};
    if (!m.all_finite()) throw NonFiniteValue("read_phf: non-finite pixel value");
    return m;
}

} // namespace

void write_phf(const std::string& path, const PolSARImage& image) {
    for (const auto& m : image.pixels) {
        if (!m.all_finite()) throw NonFiniteValue("write_phf: non-finite pixel value");
    }
    nlohmann::json header = {
        {"width", image.width},
        {"height", image.height},
        {"nominal_looks", image.nominal_looks},
        {"dtype", kDtype},
        {"layout", kLayout},
    };
    std::ofstream hdr(path + ".json");
    if (!hdr) throw std::runtime_error("write_phf: cannot open " + path + ".json");
    hdr << header.dump(2) << '\n';

    std::ofstream raw(path, std::ios::binary);
    if (!raw) throw std::runtime_error("write_phf: cannot open " + path);
    std::vector<double> row(static_cast<size_t>(image.width) * kDoublesPerPixel);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            pack_pixel(image.at(x, y), row.data() + static_cast<size_t>(x) * kDoublesPerPixel);
        }
        raw.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * sizeof(double)));
    }
    if (!raw) throw std::runtime_error("write_phf: short write to " + path);
}

PolSARImage read_phf(const std::string& path) {
    std::ifstream hdr(path + ".json");
    if (!hdr) throw CorruptHeader("read_phf: missing header " + path + ".json");
    nlohmann::json header;
    try {
        hdr >> header;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptHeader(std::string("read_phf: unparsable header: ") + e.what());
    }
    int width = 0, height = 0;
    double looks = 0.0;
    try {
        width = header.at("width").get<int>();
        height = header.at("height").get<int>();
        looks = header.at("nominal_looks").get<double>();
        if (header.at("dtype").get<std::string>() != kDtype ||
            header.at("layout").get<std::string>() != kLayout) {
            throw CorruptHeader("read_phf: unsupported dtype or layout");
        }
    } catch (const nlohmann::json::exception& e) {
        throw CorruptHeader(std::string("read_phf: bad header field: ") + e.what());
    }
    if (width <= 0 || height <= 0 || !(looks > 0.0)) {
        throw CorruptHeader("read_phf: invalid dimensions or looks");
    }

    std::ifstream raw(path, std::ios::binary | std::ios::ate);
    if (!raw) throw std::runtime_error("read_phf: cannot open " + path);
    const auto actual = static_cast<std::uint64_t>(raw.tellg());
    const std::uint64_t expected = static_cast<std::uint64_t>(width) * height *
                                   kDoublesPerPixel * sizeof(double);
    if (actual != expected) throw SizeMismatch("read_phf: payload size mismatch");
    raw.seekg(0);

    PolSARImage image(width, height, looks);
    std::vector<double> row(static_cast<size_t>(width) * kDoublesPerPixel);
    for (int y = 0; y < height; ++y) {
        raw.read(reinterpret_cast<char*>(row.data()),
                 static_cast<std::streamsize>(row.size() * sizeof(double)));
        if (!raw) throw SizeMismatch("read_phf: short read");
        for (int x = 0; x < width; ++x) {
            image.at(x, y) = unpack_pixel(row.data() + static_cast<size_t>(x) * kDoublesPerPixel);
        }
    }
    return image;
}

void write_ppm(const std::string& path, const RGBImage& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path);
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    if (!out) throw std::runtime_error("write_ppm: short write to " + path);
}

} // namespace sdnlm
