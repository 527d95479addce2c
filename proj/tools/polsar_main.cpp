#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdnlm/decomposition.hpp"
#include "sdnlm/filter.hpp"
#include "sdnlm/io.hpp"
#include "sdnlm/metrics.hpp"
#include "sdnlm/phantom.hpp"

using namespace sdnlm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

// Results go out as `name=value`; the fixed six-decimal form is wide
// enough for every metric here and keeps outputs like `ssim=1.000000`
// stable for scripting.
std::string format_value(double v) {
    char buf[64];
    if (v != 0.0 && (std::fabs(v) >= 1e9 || std::fabs(v) < 1e-4)) {
        std::snprintf(buf, sizeof(buf), "%.6g", v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
    }
    return buf;
}

// Numeric failures surface as `error=<kind>` with exit code 2.
int numeric_failure(const char* kind) {
    std::cout << "error=" << kind << "\n";
    return kExitNumeric;
}

CovarianceMatrix sigma_from_json(const nlohmann::json& j) {
    auto cplx = [&](const char* key) {
        const auto& v = j.at(key);
        if (!v.is_array() || v.size() != 2) {
            throw std::runtime_error(std::string("phantom spec: ") + key + " must be [re, im]");
        }
        return Complex(v[0].get<double>(), v[1].get<double>());
    };
    CovarianceMatrix m;
    m.c11 = j.at("c11").get<double>();
    m.c22 = j.at("c22").get<double>();
    m.c33 = j.at("c33").get<double>();
    m.c12 = cplx("c12");
    m.c13 = cplx("c13");
    m.c23 = cplx("c23");
    return m;
}

PhantomSpec load_phantom_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open phantom spec " + path);
    nlohmann::json j;
    in >> j;

    PhantomSpec spec;
    spec.width = j.at("width").get<int>();
    spec.height = j.at("height").get<int>();

    const int default_looks = j.value("looks", 1);
    if (j.contains("classes")) {
        for (const auto& cls : j.at("classes")) {
            PhantomClass pc;
            pc.sigma = sigma_from_json(cls.at("sigma"));
            pc.looks = cls.value("looks", default_looks);
            spec.classes.push_back(pc);
        }
    } else {
        for (const auto& sigma : campinas_classes()) {
            spec.classes.push_back({sigma, default_looks});
        }
    }

    if (j.contains("class_map")) {
        spec.class_map = j.at("class_map").get<std::vector<int>>();
    } else if (j.value("layout", "") == "stock") {
        spec.class_map = stock_class_map(spec.width, spec.height);
    } else {
        throw std::runtime_error("phantom spec needs a class_map or \"layout\": \"stock\"");
    }
    spec.validate();
    return spec;
}

std::vector<std::pair<std::string, RegionOfInterest>> load_regions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open region file " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::runtime_error("region file must be a JSON array");
    std::vector<std::pair<std::string, RegionOfInterest>> regions;
    for (const auto& r : j) {
        RegionOfInterest roi{r.at("x").get<int>(), r.at("y").get<int>(), r.at("w").get<int>(),
                             r.at("h").get<int>()};
        regions.emplace_back(r.at("name").get<std::string>(), roi);
    }
    return regions;
}

bool parse_looks_mode(const std::string& text, LooksMode& mode, std::string& error) {
    if (text == "perpatch") {
        mode = PerPatchLooks{};
        return true;
    }
    if (text.rfind("common:", 0) == 0) {
        try {
            const double looks = std::stod(text.substr(7));
            if (!(looks > 0.0)) throw std::invalid_argument("nonpositive");
            mode = CommonLooks{looks};
            return true;
        } catch (const std::exception&) {
            error = "looks-mode: bad looks value in '" + text + "'";
            return false;
        }
    }
    error = "looks-mode must be 'perpatch' or 'common:<L>', got '" + text + "'";
    return false;
}

bool parse_roi(const std::string& text, RegionOfInterest& roi) {
    return std::sscanf(text.c_str(), "%d,%d,%d,%d", &roi.x, &roi.y, &roi.w, &roi.h) == 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarimetric SAR covariance toolbox: simulation, speckle "
                 "filtering, quality metrics and decompositions"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "draw a phantom image from a spec file");
    std::string sim_spec, sim_out;
    std::uint64_t sim_seed = 1;
    simulate->add_option("--phantom", sim_spec, "phantom spec JSON")->required();
    simulate->add_option("--seed", sim_seed, "random seed");
    simulate->add_option("-o,--output", sim_out, "output PHF path")->required();

    // filter
    auto* filter = app.add_subcommand("filter", "despeckle a covariance image");
    std::string flt_method = "sdnlm", flt_looks = "perpatch", flt_in, flt_out;
    double flt_eta = 0.10;
    int flt_iterations = 1, flt_window = 5, flt_patch = 3, flt_threads = 1;
    filter->add_option("--method", flt_method, "sdnlm or boxcar")
        ->check(CLI::IsMember({"sdnlm", "boxcar"}));
    filter->add_option("--eta", flt_eta, "test significance in (0, 1)");
    filter->add_option("--iterations", flt_iterations, "number of passes");
    filter->add_option("--window", flt_window, "center window side");
    filter->add_option("--patch", flt_patch, "patch side");
    filter->add_option("--looks-mode", flt_looks, "common:<L> or perpatch");
    filter->add_option("--threads", flt_threads, "worker threads");
    filter->add_option("-i,--input", flt_in, "input PHF path")->required();
    filter->add_option("-o,--output", flt_out, "output PHF path")->required();

    // enl
    auto* enl_cmd = app.add_subcommand("enl", "equivalent number of looks over a region");
    std::string enl_in, enl_channel = "hh", enl_roi;
    enl_cmd->add_option("-i,--input", enl_in, "input PHF path")->required();
    enl_cmd->add_option("--channel", enl_channel, "hh, hv or vv")
        ->check(CLI::IsMember({"hh", "hv", "vv"}));
    enl_cmd->add_option("--roi", enl_roi, "region as x,y,w,h")->required();

    // ssim
    auto* ssim_cmd = app.add_subcommand("ssim", "structural similarity against a reference");
    std::string ssim_ref, ssim_in;
    ssim_cmd->add_option("--ref", ssim_ref, "reference PHF path")->required();
    ssim_cmd->add_option("-i,--input", ssim_in, "input PHF path")->required();

    // pauli
    auto* pauli = app.add_subcommand("pauli", "false-color Pauli rendering");
    std::string pauli_in, pauli_out, pauli_stretch = "1,99";
    pauli->add_option("-i,--input", pauli_in, "input PHF path")->required();
    pauli->add_option("-o,--output", pauli_out, "output PPM path")->required();
    pauli->add_option("--stretch", pauli_stretch, "low,high stretch percentiles");

    // halpha
    auto* halpha = app.add_subcommand("halpha", "entropy/alpha scatter over labeled regions");
    std::string ha_in, ha_regions, ha_out;
    halpha->add_option("-i,--input", ha_in, "input PHF path")->required();
    halpha->add_option("--roi-file", ha_regions, "labeled regions JSON")->required();
    halpha->add_option("-o,--output", ha_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*simulate) {
            const PhantomSpec spec = load_phantom_spec(sim_spec);
            write_phf(sim_out, simulate_phantom(spec, sim_seed));
            return kExitOk;
        }

        if (*filter) {
            LooksMode mode = PerPatchLooks{};
            std::string mode_error;
            if (!parse_looks_mode(flt_looks, mode, mode_error)) {
                std::cerr << "filter: " << mode_error << "\n";
                return kExitInput;
            }
            const PolSARImage input = read_phf(flt_in);
            PolSARImage output;
            if (flt_method == "boxcar") {
                if (flt_window < 3 || flt_window % 2 == 0) {
                    std::cerr << "filter: window must be odd and >= 3\n";
                    return kExitInput;
                }
                output = input;
                for (int i = 0; i < flt_iterations; ++i) {
                    output = boxcar(output, flt_window, flt_threads);
                }
            } else {
                FilterConfig config;
                config.eta = flt_eta;
                config.center_window = flt_window;
                config.patch_side = flt_patch;
                config.looks_mode = mode;
                config.iterations = flt_iterations;
                config.threads = flt_threads;
                try {
                    config.validate();
                } catch (const DomainError& e) {
                    std::cerr << "filter: " << e.what() << "\n";
                    return kExitInput;
                }
                output = sdnlm::sdnlm(input, config);
            }
            write_phf(flt_out, output);
            return kExitOk;
        }

        if (*enl_cmd) {
            RegionOfInterest roi;
            if (!parse_roi(enl_roi, roi)) {
                std::cerr << "enl: --roi must be x,y,w,h\n";
                return kExitInput;
            }
            const PolSARImage input = read_phf(enl_in);
            const Channel channel = enl_channel == "hh"   ? Channel::HH
                                    : enl_channel == "hv" ? Channel::HV
                                                          : Channel::VV;
            try {
                const double value = enl(channel_extract(input, channel), roi);
                std::cout << "enl=" << format_value(value) << "\n";
            } catch (const ZeroVariance&) {
                return numeric_failure("zero-variance");
            }
            return kExitOk;
        }

        if (*ssim_cmd) {
            const PolSARImage ref = read_phf(ssim_ref);
            const PolSARImage img = read_phf(ssim_in);
            try {
                const double value = ssim_polsar(ref, img);
                std::cout << "ssim=" << format_value(value) << "\n";
            } catch (const DegenerateRange&) {
                return numeric_failure("degenerate-range");
            }
            return kExitOk;
        }

        if (*pauli) {
            double lo = 0.0, hi = 0.0;
            if (std::sscanf(pauli_stretch.c_str(), "%lf,%lf", &lo, &hi) != 2 || !(lo < hi) ||
                lo < 0.0 || hi > 100.0) {
                std::cerr << "pauli: --stretch must be low,high percentiles\n";
                return kExitInput;
            }
            const PolSARImage input = read_phf(pauli_in);
            write_ppm(pauli_out, pauli_rgb(input, lo, hi));
            return kExitOk;
        }

        if (*halpha) {
            const PolSARImage input = read_phf(ha_in);
            const auto regions = load_regions(ha_regions);
            const auto table = h_alpha_scatter(input, regions);
            std::ofstream out(ha_out);
            if (!out) throw std::runtime_error("cannot open " + ha_out);
            out << h_alpha_scatter_csv(table);
            return kExitOk;
        }
    } catch (const ZeroVariance&) {
        return numeric_failure("zero-variance");
    } catch (const DegenerateRange&) {
        return numeric_failure("degenerate-range");
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return numeric_failure("domain-error");
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    return kExitInput;
}
