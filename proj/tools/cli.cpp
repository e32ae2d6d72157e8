#include "cli.hpp"

#include "qhf/benchmark.hpp"
#include "qhf/detectors.hpp"
#include "qhf/noise.hpp"
#include "qhf/raster_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace qhf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_input(const std::string& path) {
    if (!fs::is_regular_file(path)) throw UsageError("input file not found: " + path);
    try {
        sniff_format(path);
    } catch (const IoError& e) {
        throw UsageError(e.what());
    }
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct DetectArgs {
    std::string input, output;
    double s1{2.0}, s2{2.0}, t{0.1};
    std::string detector{"proposed"};
    std::string formula{"derived"};
    double sigma{1.4}, low{0.08}, high{0.2};
};

int cmd_detect(const DetectArgs& a, std::ostream& out) {
    DetectorSettings s;
    s.pipeline.filter = {a.s1, a.s2};
    s.pipeline.threshold = a.t;
    s.pipeline.formula = parse_idz_formula(a.formula);
    s.gradient_threshold = a.t;
    s.canny = {a.sigma, a.low, a.high};
    const DetectorKind kind = parse_detector(a.detector);
    s.validate();
    if (format_for_output(a.output) != RasterFormat::Png) {
        throw InvalidParameter("edge maps are written as PNG; use a .png output path");
    }
    require_input(a.input);

    const ColorImage img = read_color_image(a.input);
    const auto start = std::chrono::steady_clock::now();
    const EdgeMap edges = run_detector(kind, img, s);
    const auto stop = std::chrono::steady_clock::now();
    write_edge_map(a.output, edges);

    json log = {{"command", "detect"},
                {"input", a.input},
                {"output", a.output},
                {"detector", a.detector},
                {"params", describe_parameters(kind, s)},
                {"width", img.width()},
                {"height", img.height()},
                {"edge_pixels", count_edges(edges)},
                {"time_ms", std::chrono::duration<double, std::milli>(stop - start).count()}};
    out << log.dump() << '\n';
    return kOk;
}

struct NoiseArgs {
    std::string input, output;
    std::string kind{"gaussian"};
    std::optional<double> variance, density;
    std::uint64_t seed{0};
};

int cmd_noise(const NoiseArgs& a, std::ostream& out) {
    NoiseSpec spec = NoiseSpec::defaults(parse_noise_kind(a.kind), a.seed);
    if (a.variance) spec.variance = *a.variance;
    if (a.density) spec.density = *a.density;
    spec.validate();
    format_for_output(a.output);
    require_input(a.input);

    const ColorImage clean = read_color_image(a.input);
    const ColorImage noisy = corrupt(clean, spec);
    write_color_image(a.output, noisy);

    // fraction of 8-bit channel samples that differ after quantization
    std::size_t changed = 0;
    auto q = [](double x) { return std::lround(x * 255.0); };
    auto c = clean.values();
    auto n = noisy.values();
    for (std::size_t i = 0; i < c.size(); ++i) {
        changed += (q(c[i].r) != q(n[i].r)) + (q(c[i].g) != q(n[i].g)) + (q(c[i].b) != q(n[i].b));
    }

    json log = {{"command", "noise"},
                {"input", a.input},
                {"output", a.output},
                {"kind", std::string(to_string(spec.kind))},
                {"variance", spec.variance},
                {"density", spec.density},
                {"seed", spec.seed},
                {"snr_db", finite_or_null(snr(clean, noisy))},
                {"changed_fraction", static_cast<double>(changed) / (3.0 * c.size())}};
    out << log.dump() << '\n';
    return kOk;
}

int cmd_benchmark(const std::string& config_path, std::ostream& out) {
    if (!fs::is_regular_file(config_path)) throw UsageError("config file not found: " + config_path);
    const BenchmarkConfig cfg = load_config(config_path);
    cfg.validate();

    const auto rows = run_benchmark(cfg);
    const fs::path dir = cfg.resolve(cfg.output_dir);
    fs::create_directories(dir);
    {
        std::ofstream csv(dir / "results.csv", std::ios::binary);
        csv << format_csv(rows);
        if (!csv) throw IoError("cannot write " + (dir / "results.csv").string());
    }
    const std::string table = format_table(rows, cfg);
    {
        std::ofstream txt(dir / "summary.txt", std::ios::binary);
        txt << table;
    }
    {
        std::ofstream meta(dir / "metadata.json", std::ios::binary);
        meta << run_metadata(cfg).dump(2) << '\n';
    }
    out << table;
    out << json{{"command", "benchmark"}, {"rows", rows.size()}, {"output_dir", dir.string()}}.dump()
        << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Color edge detection with the quaternion Hardy filter", "qhf"};
    app.require_subcommand(1);

    DetectArgs det;
    auto* detect = app.add_subcommand("detect", "Detect edges in a PNG/PPM image");
    detect->add_option("--in", det.input, "Input raster (PNG or binary PPM)")->required();
    detect->add_option("--out", det.output, "Output edge map (PNG)")->required();
    detect->add_option("--s1", det.s1, "Hardy filter decay along x1 (columns)");
    detect->add_option("--s2", det.s2, "Hardy filter decay along x2 (rows)");
    detect->add_option("--t", det.t, "Threshold (relative for proposed/idz, absolute for sobel/prewitt)");
    detect->add_option("--detector", det.detector, "proposed|idz|sobel|prewitt|canny");
    detect->add_option("--idz-formula", det.formula, "derived|verbatim");
    detect->add_option("--sigma", det.sigma, "Canny Gaussian sigma");
    detect->add_option("--low", det.low, "Canny low threshold (fraction of max)");
    detect->add_option("--high", det.high, "Canny high threshold (fraction of max)");

    NoiseArgs noi;
    auto* noise = app.add_subcommand("noise", "Corrupt an image with seeded noise");
    noise->add_option("--in", noi.input, "Input raster")->required();
    noise->add_option("--out", noi.output, "Output raster (.png or .ppm)")->required();
    noise->add_option("--kind", noi.kind, "gaussian|poisson|salt-pepper|speckle");
    noise->add_option("--variance", noi.variance, "Variance (gaussian, speckle)");
    noise->add_option("--density", noi.density, "Density (salt-pepper)");
    noise->add_option("--seed", noi.seed, "64-bit seed");

    std::string config_path;
    auto* bench = app.add_subcommand("benchmark", "Run the noise-robustness benchmark");
    bench->add_option("--config", config_path, "Benchmark config (JSON)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (detect->parsed()) return cmd_detect(det, out);
        if (noise->parsed()) return cmd_noise(noi, out);
        if (bench->parsed()) return cmd_benchmark(config_path, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        // InvalidParameter, InvalidInput, ConfigError
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace qhf::cli
