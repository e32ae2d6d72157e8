#pragma once

/**
 * @file benchmark.hpp
 * @brief Noise-robustness benchmark over (image, noise, detector) triples.
 *
 * For every triple the detector runs on the clean image (edge map X) and on
 * the seeded noisy image (edge map Y) with identical parameters; PSNR and SSIM
 * between X and Y measure how stable the detector is under that noise.
 *
 * Config schema (JSON):
 *
 *   {
 *     "output_dir": "bench_out",            // relative to the config file
 *     "nms_threshold": 0.1,                 // proposed + idz, fraction of max f_max
 *     "idz_formula": "derived",             // derived | verbatim
 *     "gradient_threshold": 0.1,            // sobel + prewitt
 *     "canny": {"sigma": 1.4, "low": 0.08, "high": 0.2},
 *     "detectors": ["proposed", "idz", "sobel", "prewitt", "canny"],
 *     "noises": [{"kind": "gaussian", "variance": 0.01, "seed": 1}, ...],
 *     "images": [{
 *       "id": "lena", "path": "lena.png",   // path relative to the config file
 *       "params": {                         // one entry per noise kind used
 *         "none":     {"s1": 2.0, "s2": 2.0, "dpc_s": 0.5},
 *         "gaussian": {"s1": 7.0, "s2": 7.0, "dpc_s": 3.5}, ...
 *       }
 *     }]
 *   }
 *
 * "dpc_s" is carried for provenance only and never used.
 */

#include "qhf/detectors.hpp"
#include "qhf/hardy_filter.hpp"
#include "qhf/noise.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhf {

/// Aggregated validation failure; what() lists every problem found.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct ScaleEntry {
    FilterParams filter;
    std::optional<double> dpc_scale;
    bool operator==(const ScaleEntry&) const = default;
};

struct ImageEntry {
    std::string id;
    std::string path;
    std::map<std::string, ScaleEntry> params;  // keyed by noise kind or "none"
    bool operator==(const ImageEntry&) const = default;
};

struct BenchmarkConfig {
    std::string output_dir{"bench_out"};
    double nms_threshold{0.1};
    IdzFormula idz_formula{IdzFormula::Derived};
    double gradient_threshold{0.1};
    CannyParams canny;
    std::vector<DetectorKind> detectors;
    std::vector<NoiseSpec> noises;
    std::vector<ImageEntry> images;

    /// Directory relative paths resolve against; not serialized.
    std::filesystem::path base_dir{"."};

    std::filesystem::path resolve(const std::string& p) const;

    /// Throws ConfigError listing every problem, including missing files.
    void validate() const;

    bool operator==(const BenchmarkConfig& o) const;
};

BenchmarkConfig config_from_json(const nlohmann::json& j, std::filesystem::path base_dir = ".");
nlohmann::json config_to_json(const BenchmarkConfig& cfg);
BenchmarkConfig load_config(const std::filesystem::path& path);

/// Default scales for the six standard image roles. Paths are
/// placeholders under images/ that the user points at local copies.
BenchmarkConfig default_benchmark_config();

struct BenchmarkRow {
    std::string image_id;
    NoiseKind noise{NoiseKind::Gaussian};
    DetectorKind detector{DetectorKind::Proposed};
    double snr_db{0.0};
    double psnr_db{0.0};
    double ssim_global{0.0};
    double ssim_windowed{0.0};
    std::string parameters;
    std::uint64_t seed{0};
    double time_ms{0.0};
};

/// Rows in config order: images, then noises, then detectors.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg);

inline constexpr const char* kCsvHeader =
    "image,noise,detector,snr_db,psnr_db,ssim_global,ssim_windowed,params,seed,time_ms";

std::string format_csv(const std::vector<BenchmarkRow>& rows);

/// PSNR and SSIM tables: one line per (image, noise), one column per detector.
std::string format_table(const std::vector<BenchmarkRow>& rows, const BenchmarkConfig& cfg);

/// Run metadata (parameters, threshold placement, RNG) as JSON.
nlohmann::json run_metadata(const BenchmarkConfig& cfg);

}  // namespace qhf
