#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wang/lattice.hpp"
#include "wang/tileset.hpp"

namespace wang {

// A finite set of cells: either an axis-aligned box or the quotient of Z^d by
// a lattice. Cells are numbered with coordinate 0 fastest.
class Domain {
public:
    static Domain box(const Point& origin, const Point& extents);
    static Domain box(const Point& extents) { return box(Point(extents.size(), 0), extents); }
    static Domain torus(const PeriodLattice& lattice);

    bool is_torus() const { return torus_; }
    int dim() const { return static_cast<int>(extents_.size()); }
    int64_t size() const { return size_; }
    const Point& origin() const { return origin_; }
    const Point& extents() const { return extents_; }
    const PeriodLattice& lattice() const { return lattice_; }

    Point point(int64_t id) const;
    // -1 when the point is outside a box; tori reduce modulo the lattice.
    int64_t id(const Point& p) const;
    // Neighbor of a cell one step along `axis`, -1 past a box border.
    int64_t neighbor(int64_t id, int axis, bool plus) const;

    bool operator==(const Domain& o) const {
        return torus_ == o.torus_ && origin_ == o.origin_ && extents_ == o.extents_ && lattice_ == o.lattice_;
    }

private:
    bool torus_ = false;
    Point origin_, extents_;
    PeriodLattice lattice_;
    int64_t size_ = 0;
    std::vector<int64_t> nbr_;  // [id * 2d + face]
};

class Patch {
public:
    Patch(std::shared_ptr<const Tileset> ts, Domain dom);

    const Tileset& tileset() const { return *ts_; }
    std::shared_ptr<const Tileset> tileset_ptr() const { return ts_; }
    const Domain& domain() const { return dom_; }
    int get(int64_t id) const { return cells_.at(id); }
    int at(const Point& p) const;
    void set(int64_t id, int tile);
    void set(const Point& p, int tile);
    bool full() const;
    const std::vector<int>& cells() const { return cells_; }

private:
    std::shared_ptr<const Tileset> ts_;
    Domain dom_;
    std::vector<int> cells_;  // -1 = unassigned
};

struct Violation {
    int64_t cell = 0;      // lower cell
    int64_t neighbor = 0;  // cell one step along +axis
    int axis = 0;
};

std::vector<Violation> patch_valid(const Patch& patch);

bool pattern_occurs(const Patch& needle, const Patch& haystack);

}  // namespace wang
