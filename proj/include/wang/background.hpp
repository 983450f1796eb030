#pragma once

#include "wang/solver.hpp"
#include "wang/tileset.hpp"

namespace wang {

// The 14 rational-multiplier tiles (multipliers 2 and 2/3). Each tile reads a
// digit of x on top and writes a digit of qx below, with carries on the
// sides: q*north + west = south + east.
Tileset multiplier_tiles();

// Regenerates the multiplier tiles from balanced Beatty sequences sampled
// over rational x with exact arithmetic. Independent of the stored table.
Tileset generate_multiplier_tiles(int samples = 600, int max_k = 300);

// Turns every tile by 180 degrees.
Tileset rotate_half_turn(const Tileset& ts);

// Recodes a tileset whose west and north colors identify each tile into one
// determined by its left and top-left neighbors. Configurations are sheared
// (cell (x,y) takes the tile of (x+y,y)); each new tile pairs an old tile with
// a relay color carrying the north color of its east neighbor's old tile up
// to the cell above.
Tileset shear_to_west(const Tileset& ts);

// Multiplier tiles, turned and sheared. Aperiodic; check_determinism with the
// W stencil reports a counterexample for this table.
Tileset build_background_2d();

// Cubes pairing a background tile in the xy plane (duplicated along z) with
// one in the xz plane (duplicated along y). Flat, |2D|^2 cubes.
Tileset build_background_3d();

// The same cubes as two independent layers "bg_xy" and "bg_xz".
LayerStack background_3d_stack();

}  // namespace wang
