#include "qhf/benchmark.hpp"

#include "qhf/metrics.hpp"
#include "qhf/raster_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace qhf {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += "\n  - " + s;
    return out;
}

std::string fmt6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

const char* roman(NoiseKind k) {
    switch (k) {
        case NoiseKind::Gaussian: return "I";
        case NoiseKind::Poisson: return "II";
        case NoiseKind::SaltPepper: return "III";
        case NoiseKind::Speckle: return "IV";
    }
    return "?";
}

// Reads an optional field, recording type errors instead of throwing.
template <typename T>
void read_field(const json& j, const char* key, T& out, std::vector<std::string>& problems,
                const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        problems.push_back(where + ": field '" + key + "' has the wrong type");
    }
}

DetectorSettings settings_for(const BenchmarkConfig& cfg, const FilterParams& filter) {
    DetectorSettings s;
    s.pipeline.filter = filter;
    s.pipeline.threshold = cfg.nms_threshold;
    s.pipeline.formula = cfg.idz_formula;
    s.gradient_threshold = cfg.gradient_threshold;
    s.canny = cfg.canny;
    return s;
}

ScaleEntry scale(double s1, double s2, double dpc) { return {FilterParams{s1, s2}, dpc}; }

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::invalid_argument("invalid benchmark config:" + join(problems)),
      problems_(std::move(problems)) {}

std::filesystem::path BenchmarkConfig::resolve(const std::string& p) const {
    const std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
}

bool BenchmarkConfig::operator==(const BenchmarkConfig& o) const {
    return output_dir == o.output_dir && nms_threshold == o.nms_threshold &&
           idz_formula == o.idz_formula && gradient_threshold == o.gradient_threshold &&
           canny == o.canny && detectors == o.detectors && noises == o.noises && images == o.images;
}

void BenchmarkConfig::validate() const {
    std::vector<std::string> problems;
    if (!(nms_threshold >= 0.0 && nms_threshold <= 1.0)) problems.push_back("nms_threshold must lie in [0, 1]");
    if (!(gradient_threshold >= 0.0 && gradient_threshold <= 1.0)) {
        problems.push_back("gradient_threshold must lie in [0, 1]");
    }
    try {
        canny.validate();
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    if (detectors.empty()) problems.push_back("no detectors listed");
    if (noises.empty()) problems.push_back("no noises listed");
    if (images.empty()) problems.push_back("no images listed");

    for (std::size_t i = 0; i < noises.size(); ++i) {
        try {
            noises[i].validate();
        } catch (const std::exception& e) {
            problems.push_back("noise #" + std::to_string(i) + ": " + e.what());
        }
    }

    std::set<std::string> ids;
    for (const auto& img : images) {
        const std::string where = "image '" + img.id + "'";
        if (img.id.empty()) problems.push_back("image with empty id");
        if (!ids.insert(img.id).second) problems.push_back(where + ": duplicate id");
        const auto path = resolve(img.path);
        if (!std::filesystem::is_regular_file(path)) {
            problems.push_back(where + ": file not found: " + path.string());
        }
        for (const auto& noise : noises) {
            const std::string kind(to_string(noise.kind));
            auto it = img.params.find(kind);
            if (it == img.params.end()) {
                problems.push_back(where + ": no filter parameters for noise '" + kind + "'");
                continue;
            }
            try {
                it->second.filter.validate();
            } catch (const std::exception& e) {
                problems.push_back(where + " / " + kind + ": " + e.what());
            }
        }
    }
    if (!problems.empty()) throw ConfigError(std::move(problems));
}

BenchmarkConfig config_from_json(const json& j, std::filesystem::path base_dir) {
    std::vector<std::string> problems;
    BenchmarkConfig cfg;
    cfg.base_dir = std::move(base_dir);
    if (!j.is_object()) throw ConfigError({"top level must be a JSON object"});

    read_field(j, "output_dir", cfg.output_dir, problems, "config");
    read_field(j, "nms_threshold", cfg.nms_threshold, problems, "config");
    read_field(j, "gradient_threshold", cfg.gradient_threshold, problems, "config");
    if (j.contains("idz_formula")) {
        try {
            cfg.idz_formula = parse_idz_formula(j.at("idz_formula").get<std::string>());
        } catch (const std::exception& e) {
            problems.push_back(std::string("config: idz_formula: ") + e.what());
        }
    }
    if (j.contains("canny")) {
        const json& c = j.at("canny");
        read_field(c, "sigma", cfg.canny.sigma, problems, "canny");
        read_field(c, "low", cfg.canny.low, problems, "canny");
        read_field(c, "high", cfg.canny.high, problems, "canny");
    }

    for (const auto& d : j.value("detectors", json::array())) {
        try {
            cfg.detectors.push_back(parse_detector(d.get<std::string>()));
        } catch (const std::exception& e) {
            problems.push_back(std::string("detectors: ") + e.what());
        }
    }

    std::size_t index = 0;
    for (const auto& n : j.value("noises", json::array())) {
        const std::string where = "noise #" + std::to_string(index++);
        try {
            NoiseSpec spec = NoiseSpec::defaults(parse_noise_kind(n.at("kind").get<std::string>()));
            read_field(n, "variance", spec.variance, problems, where);
            read_field(n, "density", spec.density, problems, where);
            read_field(n, "seed", spec.seed, problems, where);
            cfg.noises.push_back(spec);
        } catch (const std::exception& e) {
            problems.push_back(where + ": " + e.what());
        }
    }

    index = 0;
    for (const auto& im : j.value("images", json::array())) {
        const std::string where = "image #" + std::to_string(index++);
        ImageEntry entry;
        read_field(im, "id", entry.id, problems, where);
        read_field(im, "path", entry.path, problems, where);
        if (im.contains("params") && im.at("params").is_object()) {
            for (const auto& [kind, p] : im.at("params").items()) {
                if (kind != "none") {
                    try {
                        parse_noise_kind(kind);
                    } catch (const std::exception& e) {
                        problems.push_back(where + ": params: " + e.what());
                        continue;
                    }
                }
                ScaleEntry s;
                read_field(p, "s1", s.filter.s1, problems, where + "/" + kind);
                read_field(p, "s2", s.filter.s2, problems, where + "/" + kind);
                if (p.contains("dpc_s")) {
                    double v = 0.0;
                    read_field(p, "dpc_s", v, problems, where + "/" + kind);
                    s.dpc_scale = v;
                }
                entry.params.emplace(kind, s);
            }
        }
        cfg.images.push_back(std::move(entry));
    }

    if (!problems.empty()) throw ConfigError(std::move(problems));
    return cfg;
}

json config_to_json(const BenchmarkConfig& cfg) {
    json j;
    j["output_dir"] = cfg.output_dir;
    j["nms_threshold"] = cfg.nms_threshold;
    j["idz_formula"] = std::string(to_string(cfg.idz_formula));
    j["gradient_threshold"] = cfg.gradient_threshold;
    j["canny"] = {{"sigma", cfg.canny.sigma}, {"low", cfg.canny.low}, {"high", cfg.canny.high}};
    j["detectors"] = json::array();
    for (auto d : cfg.detectors) j["detectors"].push_back(std::string(to_string(d)));
    j["noises"] = json::array();
    for (const auto& n : cfg.noises) {
        j["noises"].push_back({{"kind", std::string(to_string(n.kind))},
                               {"variance", n.variance},
                               {"density", n.density},
                               {"seed", n.seed}});
    }
    j["images"] = json::array();
    for (const auto& im : cfg.images) {
        json params = json::object();
        for (const auto& [kind, s] : im.params) {
            json p = {{"s1", s.filter.s1}, {"s2", s.filter.s2}};
            if (s.dpc_scale) p["dpc_s"] = *s.dpc_scale;
            params[kind] = p;
        }
        j["images"].push_back({{"id", im.id}, {"path", im.path}, {"params", params}});
    }
    return j;
}

BenchmarkConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config " + path.string()});
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
    }
    return config_from_json(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

BenchmarkConfig default_benchmark_config() {
    BenchmarkConfig cfg;
    cfg.detectors = {DetectorKind::Proposed, DetectorKind::Idz, DetectorKind::Sobel,
                     DetectorKind::Prewitt, DetectorKind::Canny};
    cfg.noises = {NoiseSpec::defaults(NoiseKind::Gaussian, 1), NoiseSpec::defaults(NoiseKind::Poisson, 2),
                  NoiseSpec::defaults(NoiseKind::SaltPepper, 3), NoiseSpec::defaults(NoiseKind::Speckle, 4)};

    auto entry = [](std::string id, ScaleEntry none, ScaleEntry g, ScaleEntry p, ScaleEntry sp,
                    ScaleEntry sk) {
        ImageEntry e;
        e.path = "images/" + id + ".png";
        e.id = std::move(id);
        e.params = {{"none", none}, {"gaussian", g}, {"poisson", p}, {"salt-pepper", sp}, {"speckle", sk}};
        return e;
    };
    const ScaleEntry clean = scale(2.0, 2.0, 0.5);
    cfg.images = {
        entry("lena", clean, scale(7, 7, 3.5), scale(6, 6, 2.5), scale(7, 7, 4.5), scale(7, 7, 4.5)),
        entry("men", clean, scale(5.5, 5.5, 3.5), scale(5.5, 5.5, 2.5), scale(5.5, 5.5, 4.5),
              scale(5.5, 5.5, 4.5)),
        entry("house", clean, scale(8, 8, 3.5), scale(6, 6, 2.5), scale(8, 8, 4.5), scale(8, 8, 4.5)),
        entry("t1", clean, scale(5.5, 5.0, 2.0), scale(5.5, 5.0, 2.0), scale(5.5, 5.0, 2.0),
              scale(5.5, 5.0, 2.0)),
        entry("t2", clean, scale(2, 2, 0.5), scale(2, 2, 0.5), scale(2, 2, 0.5), scale(2, 2, 0.5)),
        entry("t3", clean, scale(7, 7, 7.0), scale(6, 6, 5.5), scale(8, 8, 8.0), scale(8, 8, 8.0)),
    };
    return cfg;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg) {
    cfg.validate();
    std::vector<BenchmarkRow> rows;
    rows.reserve(cfg.images.size() * cfg.noises.size() * cfg.detectors.size());

    for (const auto& img_entry : cfg.images) {
        const ColorImage clean = read_color_image(cfg.resolve(img_entry.path));
        for (const auto& noise : cfg.noises) {
            const ColorImage noisy = corrupt(clean, noise);
            const double achieved_snr = snr(clean, noisy);
            const auto& params = img_entry.params.at(std::string(to_string(noise.kind)));
            const DetectorSettings settings = settings_for(cfg, params.filter);

            for (auto kind : cfg.detectors) {
                const EdgeMap reference = run_detector(kind, clean, settings);
                const auto start = std::chrono::steady_clock::now();
                const EdgeMap observed = run_detector(kind, noisy, settings);
                const auto stop = std::chrono::steady_clock::now();

                const GrayImage x = to_gray_image(reference);
                const GrayImage y = to_gray_image(observed);
                BenchmarkRow row;
                row.image_id = img_entry.id;
                row.noise = noise.kind;
                row.detector = kind;
                row.snr_db = achieved_snr;
                row.psnr_db = psnr(x, y);
                row.ssim_global = ssim(x, y);
                row.ssim_windowed = ssim_windowed(x, y);
                row.parameters = describe_parameters(kind, settings);
                row.seed = noise.seed;
                row.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string format_csv(const std::vector<BenchmarkRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.image_id << ',' << to_string(r.noise) << ',' << to_string(r.detector) << ','
            << fmt6(r.snr_db) << ',' << fmt6(r.psnr_db) << ',' << fmt6(r.ssim_global) << ','
            << fmt6(r.ssim_windowed) << ',' << r.parameters << ',' << r.seed << ','
            << fmt6(r.time_ms) << '\n';
    }
    return out.str();
}

std::string format_table(const std::vector<BenchmarkRow>& rows, const BenchmarkConfig& cfg) {
    std::ostringstream out;
    auto lookup = [&](const std::string& id, NoiseKind n, DetectorKind d) -> const BenchmarkRow* {
        for (const auto& r : rows) {
            if (r.image_id == id && r.noise == n && r.detector == d) return &r;
        }
        return nullptr;
    };

    for (int metric = 0; metric < 2; ++metric) {
        out << (metric == 0 ? "PSNR (dB)" : "SSIM (global)") << '\n';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-12s %-5s", "image", "noise");
        out << buf;
        for (auto d : cfg.detectors) {
            std::snprintf(buf, sizeof buf, " %10s", std::string(to_string(d)).c_str());
            out << buf;
        }
        out << '\n';
        for (const auto& im : cfg.images) {
            for (const auto& n : cfg.noises) {
                std::snprintf(buf, sizeof buf, "%-12s %-5s", im.id.c_str(), roman(n.kind));
                out << buf;
                for (auto d : cfg.detectors) {
                    const BenchmarkRow* r = lookup(im.id, n.kind, d);
                    const std::string cell =
                        r ? (metric == 0 ? fmt_fixed(r->psnr_db, 4) : fmt_fixed(r->ssim_global, 4)) : "-";
                    std::snprintf(buf, sizeof buf, " %10s", cell.c_str());
                    out << buf;
                }
                out << '\n';
            }
        }
        out << '\n';
    }
    return out.str();
}

json run_metadata(const BenchmarkConfig& cfg) {
    json meta;
    meta["threshold_placement"] = "relative threshold applied after non-maximum suppression, no hysteresis";
    meta["nms_threshold"] = cfg.nms_threshold;
    meta["min_strength"] = kDefaultMinStrength;
    meta["idz_formula"] = std::string(to_string(cfg.idz_formula));
    meta["gradient_threshold"] = cfg.gradient_threshold;
    meta["canny"] = {{"sigma", cfg.canny.sigma}, {"low", cfg.canny.low}, {"high", cfg.canny.high}};
    meta["rng"] = "SplitMix64, one stream per channel sample: splitmix64(seed ^ splitmix64(index))";
    meta["ssim"] = {{"k1", 0.01}, {"k2", 0.03}, {"L", 255}, {"windowed", "11x11 gaussian sigma=1.5"}};
    meta["config"] = config_to_json(cfg);
    return meta;
}

}  // namespace qhf
