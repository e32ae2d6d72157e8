#include "qhf/grid.hpp"

#include <algorithm>

namespace qhf {

std::size_t count_edges(const EdgeMap& map) {
    return static_cast<std::size_t>(std::count_if(map.values().begin(), map.values().end(),
                                                  [](std::uint8_t v) { return v != 0; }));
}

GrayImage to_gray_image(const EdgeMap& map) {
    GrayImage out(map.width(), map.height());
    auto src = map.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 255.0 : 0.0;
    return out;
}

void clamp_unit(ColorImage& img) {
    for (auto& p : img.values()) {
        p.r = std::clamp(p.r, 0.0, 1.0);
        p.g = std::clamp(p.g, 0.0, 1.0);
        p.b = std::clamp(p.b, 0.0, 1.0);
    }
}

}  // namespace qhf
