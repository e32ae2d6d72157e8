#pragma once

#include "qhf/baselines.hpp"
#include "qhf/pipeline.hpp"

#include <string>
#include <string_view>

namespace qhf {

enum class DetectorKind { Proposed, Idz, Sobel, Prewitt, Canny };

DetectorKind parse_detector(std::string_view name);
std::string_view to_string(DetectorKind kind);

struct DetectorSettings {
    PipelineConfig pipeline;         // proposed; idz uses threshold/formula only
    double gradient_threshold{0.1};  // sobel, prewitt
    CannyParams canny;

    void validate() const;
};

EdgeMap run_detector(DetectorKind kind, const ColorImage& img, const DetectorSettings& s);

/// Short "key=value;..." description of the parameters a detector used.
std::string describe_parameters(DetectorKind kind, const DetectorSettings& s);

}  // namespace qhf
