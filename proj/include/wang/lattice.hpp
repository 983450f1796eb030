#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wang {

using Point = std::vector<int64_t>;

// Full-rank sublattice of Z^d. The canonical basis is stored as columns of a
// lower-triangular matrix: basis(j) has zeros above row j, a positive
// diagonal entry, and every entry left of the diagonal in row i lies in
// [0, diag(i)).
class PeriodLattice {
public:
    PeriodLattice() = default;
    // Each element of `generators` is one generator vector.
    explicit PeriodLattice(const std::vector<Point>& generators);

    static PeriodLattice identity(int dim);
    static PeriodLattice diagonal(const Point& sizes);

    int dim() const { return dim_; }
    const std::vector<Point>& generators() const { return generators_; }
    const std::vector<Point>& basis() const { return basis_; }
    int64_t diag(int i) const { return basis_[i][i]; }
    int64_t index() const;

    Point reduce(const Point& x) const;
    bool contains(const Point& v) const;
    bool contains(const PeriodLattice& other) const;

    // Coset representatives are the points of the box [0,diag(0)) x ...
    // Linear numbering runs with coordinate 0 fastest.
    int64_t rep_id(const Point& reduced) const;
    Point rep(int64_t id) const;

    // Canonical generators, one per row, e.g. "4 2 1; 0 4 0; 0 0 4".
    std::string str() const;

    bool operator==(const PeriodLattice& o) const { return basis_ == o.basis_; }
    bool operator<(const PeriodLattice& o) const { return basis_ < o.basis_; }

private:
    int dim_ = 0;
    std::vector<Point> generators_;
    std::vector<Point> basis_;
};

PeriodLattice lattice_canonicalize(const std::vector<Point>& generators);

// Parses "a b; c d" (one generator per ';'-separated group) or a flat list of
// d*d integers.
PeriodLattice parse_lattice(const std::string& text);

// Every lattice of the given index bound, in a fixed order (by index, then by
// canonical basis).
std::vector<PeriodLattice> enumerate_lattices(int dim, int64_t max_index);

int64_t floor_div(int64_t a, int64_t b);
int64_t floor_mod(int64_t a, int64_t b);

}  // namespace wang
