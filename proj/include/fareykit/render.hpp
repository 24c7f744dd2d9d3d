#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fareykit/slope.hpp"

namespace fareykit {

inline constexpr unsigned kMaxRenderDepth = 10;

/// Triangles of the Farey tessellation reached by reflecting the base
/// triangle {0/1, 1/0, 1/1} across its edges depth times.
struct FareyTessellation {
    /// In order of appearance; the base triangle first.
    std::vector<Slope> vertices;
    /// Depth at which each vertex appeared, parallel to vertices.
    std::vector<unsigned> vertex_depth;
    std::vector<std::array<Slope, 3>> triangles;
    /// Each edge once, in order of appearance.
    std::vector<std::pair<Slope, Slope>> edges;
};

/// Throws DepthExceeded above max_depth.
FareyTessellation build_tessellation(unsigned depth, unsigned max_depth = kMaxRenderDepth);

/// Point of the unit circle for a slope: 1/0 at the top, 0/1 at the bottom,
/// 1/1 on the right, -1/1 on the left.
std::complex<double> disk_point(const Slope& s);

struct RenderSpec {
    unsigned depth = 3;
    std::vector<Slope> highlight;
    unsigned max_depth = kMaxRenderDepth;
    /// Width and height of the SVG canvas in px.
    unsigned size = 640;
    /// Vertices up to this depth get text labels; highlighted ones always do.
    unsigned label_depth = 2;
};

/**
 * SVG of the tessellation in the disk model. Highlighted slopes are marked,
 * and every Farey edge between two highlighted slopes is drawn on top.
 * Output depends only on the spec. Throws DepthExceeded.
 */
std::string render_farey(const RenderSpec& spec);

}  // namespace fareykit
