#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wang/solver.hpp"
#include "wang/tileset.hpp"

namespace wang {

// Cube size and the displacement between adjacent slabs: the period vector
// is (size, dy, dz). Offsets are reduced into [0, size).
struct CubeGeometry {
    int64_t size = 0;
    int64_t dy = 0;
    int64_t dz = 0;
    bool operator==(const CubeGeometry&) const = default;
};

class AnalysisError : public std::runtime_error {
public:
    AnalysisError(const std::string& what, Point cell) : std::runtime_error(what), cell_(std::move(cell)) {}
    const Point& cell() const { return cell_; }

private:
    Point cell_;
};

// Black planes. Black has only black neighbors along y and z and only white
// ones along x. White variants record a black neighbor at x-1 (".l") or
// x+1 (".r").
Tileset layer_B();

// 2D frame roles shared by B' and B'' (horizontal axis x): black line cells
// "K", "Kin" (frame line arriving from the west), "Kout" (leaving east),
// "Kboth", and white "strip" and "inner".
Tileset frame_tiles_2d();
Tileset layer_Bprime();   // frame in (xz), constant along y
Tileset layer_Bsecond();  // frame in (xy), constant along z

// Square forcing. Interior cells are "above", "below" or "diag"; a diagonal
// starts at every bottom-left interior corner and must leave through the
// top-right one.
Tileset square_tiles_2d();
Tileset layer_C_xz();
Tileset layer_C_xy();

// Offset and size synchronization. Black line cells carry the state
// I (after an arrival, marked), O (after a departure) or P (right after a
// departure); arrivals and departures alternate, so adjacent slabs have the
// same size, and the marked cells between an arrival and the next departure
// write the offset in unary. Two anti-diagonal signals inside each square
// must meet on its bottom frame line, which equates the offsets on its two
// sides.
Tileset offset_tiles_2d();
Tileset layer_W_xy();  // offsets along y, constant along z
Tileset layer_W_xz();  // offsets along z, constant along y

// Arrow tiles. "right2" runs along the first row of a square, then a
// diagonal of "up2" climbs to the cell before the black cell just above the
// next slab's departure; "up1" fills below the diagonal, "right1" above it
// and on every frame cell. Requires offsets of at most size - 2.
Tileset arrow_tiles_2d();
Tileset layer_S_front();  // arrows in (xy), constant along z
Tileset layer_S_top();    // arrows in (xz), constant along y
// Combined arrows, one per (front direction, top direction) pair.
Tileset arrow_tiles_3d();
// Name of the combined arrow for two 2D arrow names, e.g. ("right1", "up2")
// gives "right/up"; nullopt for names outside arrow_tiles_2d().
std::optional<std::string> arrow_3d_name(const std::string& front, const std::string& top);

// Cube colors. Every white cell of a cube carries one color shared with its
// neighbors in the same cube; the black cell at a cube's low corner passes
// the color on to the cube of the next slab.
Tileset layer_A();

// Background tiles with variants whose west and/or east face is open, plus a
// "void" tile for black cells.
Tileset open_background_2d(const Tileset& bg);

// Layer names accepted by assemble_skeleton.
const std::vector<std::string>& skeleton_layer_names();

// Layers of the stack: bg_xy, bg_xz (if with_background), B, Bp, Bpp, C_xz,
// C_xy, W_xy, W_xz, S_front, S_top, S_3d, A, restricted to the requested
// ones. Throws std::invalid_argument when a requested layer lacks one it
// depends on.
LayerStack assemble_skeleton(const std::set<std::string>& include, bool with_background = true);

// The named layer of a skeleton stack and the relation tying it to the layer
// it sits on (for export).
struct LayerExport {
    Tileset tiles;
    std::string base;
    std::optional<Tileset> base_tiles;
    SuperpositionRelation rel;
};
LayerExport export_layer(const std::string& name);

// Pin of a named tile on a named layer.
Pin make_pin(const LayerStack& stack, const std::string& layer, const Point& point, const std::string& tile);

// Reads cube size and slab offsets from a solved skeleton. Throws
// AnalysisError when the configuration has no black plane or the structure is
// not made of equal cubes with a common offset.
CubeGeometry extract_geometry(const LayerStack& stack, const LayeredPatch& patch);

// Marked black cells per frame period along y and along z (layer W).
std::pair<int64_t, int64_t> unary_border_counts(const LayerStack& stack, const LayeredPatch& patch);

// Background ties between the first interior cell of every cube whose
// corner lies in the domain and the same cell of the cube one period vector
// further. The corner is the black cell at the cube's low y and z.
std::vector<Tie> background_sync_ties(const LayerStack& stack, const Domain& domain, const CubeGeometry& g,
                                      const Point& corner);

}  // namespace wang
