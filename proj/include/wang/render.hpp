#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wang/patch.hpp"

namespace wang {

struct Slice {
    int axis = 2;
    int64_t coord = 0;
};

// "#rrggbb" fill for a tile index; fixed palette, independent of the run.
std::string tile_fill(int tile);

// SVG with one square per cell, north up. 2D patches are drawn whole; 3D
// patches need a slice fixing one axis, and the other two axes are drawn in
// increasing order. Throws std::invalid_argument on a missing or out-of-range
// slice.
std::string render_svg(const Patch& patch, std::optional<Slice> slice = std::nullopt, int cell_px = 16);

// Parses "axis=k" with axis x, y or z.
Slice parse_slice(const std::string& text);

}  // namespace wang
