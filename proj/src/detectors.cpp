#include "qhf/detectors.hpp"

#include <cstdio>

namespace qhf {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

DetectorKind parse_detector(std::string_view name) {
    if (name == "proposed") return DetectorKind::Proposed;
    if (name == "idz") return DetectorKind::Idz;
    if (name == "sobel") return DetectorKind::Sobel;
    if (name == "prewitt") return DetectorKind::Prewitt;
    if (name == "canny") return DetectorKind::Canny;
    throw InvalidParameter("unknown detector '" + std::string(name) +
                           "' (expected proposed|idz|sobel|prewitt|canny)");
}

std::string_view to_string(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::Proposed: return "proposed";
        case DetectorKind::Idz: return "idz";
        case DetectorKind::Sobel: return "sobel";
        case DetectorKind::Prewitt: return "prewitt";
        case DetectorKind::Canny: return "canny";
    }
    return "?";
}

void DetectorSettings::validate() const {
    pipeline.validate();
    if (!(gradient_threshold >= 0.0 && gradient_threshold <= 1.0)) {
        throw InvalidParameter("gradient threshold must lie in [0, 1]");
    }
    canny.validate();
}

EdgeMap run_detector(DetectorKind kind, const ColorImage& img, const DetectorSettings& s) {
    switch (kind) {
        case DetectorKind::Proposed: return detect(img, s.pipeline);
        case DetectorKind::Idz:
            return idz_direct(img, s.pipeline.threshold, s.pipeline.formula, s.pipeline.min_strength);
        case DetectorKind::Sobel: return sobel(to_gray(img), s.gradient_threshold);
        case DetectorKind::Prewitt: return prewitt(to_gray(img), s.gradient_threshold);
        case DetectorKind::Canny: return canny(to_gray(img), s.canny);
    }
    throw InvalidParameter("unknown detector");
}

std::string describe_parameters(DetectorKind kind, const DetectorSettings& s) {
    switch (kind) {
        case DetectorKind::Proposed:
            return "s1=" + num(s.pipeline.filter.s1) + ";s2=" + num(s.pipeline.filter.s2) +
                   ";t=" + num(s.pipeline.threshold) + ";formula=" +
                   std::string(to_string(s.pipeline.formula));
        case DetectorKind::Idz:
            return "t=" + num(s.pipeline.threshold) + ";formula=" +
                   std::string(to_string(s.pipeline.formula));
        case DetectorKind::Sobel:
        case DetectorKind::Prewitt: return "t=" + num(s.gradient_threshold);
        case DetectorKind::Canny:
            return "sigma=" + num(s.canny.sigma) + ";low=" + num(s.canny.low) +
                   ";high=" + num(s.canny.high);
    }
    return {};
}

}  // namespace qhf
