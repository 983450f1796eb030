#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wang/patch.hpp"
#include "wang/tileset.hpp"

namespace wang {

// Superposition of several tilesets on the same cells: every cell carries one
// tile per layer, tiles of one layer match faces only within that layer, and
// each relation restricts which pairs of tiles from two layers may share a
// cell.
struct LayerStack {
    struct Link {
        int lower = 0;  // layer index
        int upper = 0;  // layer index
        SuperpositionRelation rel;
    };

    std::vector<std::shared_ptr<const Tileset>> layers;
    std::vector<std::string> names;
    std::vector<Link> links;

    LayerStack() = default;
    LayerStack(std::shared_ptr<const Tileset> single);  // NOLINT: implicit on purpose
    LayerStack(const Tileset& single);                  // NOLINT

    int dim() const { return layers.empty() ? 0 : layers[0]->dim(); }
    int add_layer(const std::string& name, std::shared_ptr<const Tileset> ts);
    int layer_index(const std::string& name) const;  // -1 if absent
    void link(int lower, int upper, SuperpositionRelation rel);

    // Product of all layers restricted by the links. Grows multiplicatively;
    // meant for small stacks.
    Tileset flatten() const;
};

// One tile per layer per cell.
using LayeredPatch = std::vector<Patch>;

struct Pin {
    Point point;
    int tile = 0;
    int layer = 0;
};

// Required color on the outer face of a box cell (face index per tileset).
struct BoundaryColor {
    Point point;
    int face = 0;
    Color color = 0;
    int layer = 0;
};

// Cells whose tiles must coincide on the given layer (all layers if -1).
struct Tie {
    Point a, b;
    int layer = -1;
};

// Cell may not take any of these tiles.
struct Forbid {
    Point point;
    std::vector<int> tiles;
    int layer = 0;
};

enum class SolveMode { FindOne, Count, Enumerate };
enum class SolveStatus { Sat, Unsat, Limit };

struct SolveRequest {
    LayerStack stack;
    Domain domain = Domain::box({1, 1});
    std::vector<Pin> pins;
    std::vector<BoundaryColor> boundary;  // empty = free boundary
    std::vector<Tie> ties;
    std::vector<Forbid> forbids;
    SolveMode mode = SolveMode::FindOne;
    int64_t limit = 1;  // N for Count / Enumerate
    // Layers whose assignments distinguish solutions when counting; empty
    // means all layers.
    std::vector<int> projection;
    // Pin cell 0 of layer 0 to this tile when set.
    std::optional<int> symmetry_pin;
    // Wall-clock budget; when unset, WTS_SOLVE_BUDGET_MS applies if defined.
    std::optional<int64_t> budget_ms;
};

struct SolveStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    double ms = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<LayeredPatch> witness;
    std::vector<LayeredPatch> solutions;  // Enumerate mode
    int64_t count = 0;
    SolveStats stats;

    bool sat() const { return status == SolveStatus::Sat; }
};

SolveResult solve(const SolveRequest& req);

// Depth-first reference search, flat single-layer stacks only, no ties.
SolveResult brute_solve(const SolveRequest& req, int64_t cap = 64);

// `status=<sat|unsat|limit> count=<n> ms=<t>`
std::string status_line(const SolveResult& r);
const char* status_name(SolveStatus s);

// All translations fixing a full torus patch.
PeriodLattice periods_of_torus_config(const Patch& patch);
PeriodLattice periods_of_torus_config(const LayeredPatch& patch);

// Every box cell with the tiles a torus patch puts there.
Patch unfold_torus(const Patch& torus_patch, const Point& origin, const Point& extents);

}  // namespace wang
