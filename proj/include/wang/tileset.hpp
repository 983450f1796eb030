#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wang {

using Color = int;

// Faces are numbered 2*axis + (0 for the + side, 1 for the - side).
// In 2D: 0 = east, 1 = west, 2 = north, 3 = south.
// In 3D: 0 = x+, 1 = x-, 2 = y+, 3 = y-, 4 = z+, 5 = z-.
constexpr int face_of(int axis, bool plus) { return 2 * axis + (plus ? 0 : 1); }
constexpr int opposite(int face) { return face ^ 1; }

enum Face2D { East = 0, West = 1, North = 2, South = 3 };

struct Tile {
    std::array<Color, 6> faces{};
    Color& operator[](int f) { return faces[f]; }
    Color operator[](int f) const { return faces[f]; }
    bool operator==(const Tile& o) const = default;
};

Tile tile2d(Color north, Color east, Color south, Color west);

// Dense, interned color names.
class Alphabet {
public:
    Color intern(const std::string& name);
    std::optional<Color> find(const std::string& name) const;
    const std::string& name(Color c) const { return names_.at(c); }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Color> ids_;
};

class Tileset {
public:
    Tileset() = default;
    explicit Tileset(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(tiles_.size()); }
    bool empty() const { return tiles_.empty(); }
    const Tile& tile(int i) const { return tiles_.at(i); }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const std::string& tile_name(int i) const { return names_.at(i); }
    std::optional<int> find_tile(const std::string& name) const;
    Alphabet& colors() { return colors_; }
    const Alphabet& colors() const { return colors_; }
    int num_faces() const { return 2 * dim_; }

    // Adds a tile given color names per face (2*dim entries). Returns the
    // index; a tile with identical faces is rejected.
    int add(const std::string& name, const std::vector<std::string>& face_colors);
    int add(const std::string& name, const Tile& t);

private:
    int dim_ = 2;
    Alphabet colors_;
    std::vector<Tile> tiles_;
    std::vector<std::string> names_;
};

bool adjacency_ok(const Tileset& ts, int t1, int t2, int axis);

// Pairs (index in a, index in b) allowed to share a cell.
struct SuperpositionRelation {
    std::vector<std::pair<int, int>> pairs;

    static SuperpositionRelation full(int na, int nb);
    bool allows(int a, int b) const;
};

// Tiles are the allowed pairs; each face color is the pair of component
// colors, interned as "(ca|cb)". Empty relation gives an empty tileset.
Tileset product(const Tileset& a, const Tileset& b, const SuperpositionRelation& rel);

// Colors and tile names are tagged with the component number so tiles of
// different components never match.
Tileset disjoint_union(const std::vector<Tileset>& parts);

enum class Plane { XY, XZ, YZ };

// 2D east/west go to the first axis of the plane, north/south to the second.
// XY: (x, y), duplicated along z. XZ: (x, z), duplicated along y.
// YZ: (y, z), duplicated along x. The two faces on the duplication axis get
// a color unique to the source tile.
Tileset lift_2d_to_3d(const Tileset& ts, Plane plane);
int plane_first_axis(Plane p);
int plane_second_axis(Plane p);
int plane_normal_axis(Plane p);

struct StencilCell {
    int dx = 0;
    int dy = 0;
};

struct Stencil {
    std::string name;
    std::vector<StencilCell> cells;

    static Stencil nw();  // above and left
    static Stencil w();   // left and top-left
};

struct DeterminismResult {
    bool deterministic = true;
    // Two distinct centre tiles both compatible with the same stencil tiles.
    std::optional<std::pair<int, int>> center_tiles;
    std::vector<int> stencil_tiles;
    std::vector<std::pair<Color, Color>> neighbor_colors;  // stencil tiles' (east, south)
};

// Stencil tiles must fit together; a centre tile is compatible when the
// bounding box of stencil plus centre can be completed validly. Cells of the
// box outside the stencil impose no constraint beyond the existence of
// some tile there.
DeterminismResult check_determinism(const Tileset& ts, const Stencil& stencil);

}  // namespace wang
