#include "wang/patch.hpp"

#include <stdexcept>

namespace wang {

namespace {

void fill_neighbors(std::vector<int64_t>& nbr, int64_t size, int dim, const auto& point_of, const auto& id_of) {
    nbr.assign(size * 2 * dim, -1);
    for (int64_t i = 0; i < size; ++i) {
        Point p = point_of(i);
        for (int a = 0; a < dim; ++a)
            for (int s = 0; s < 2; ++s) {
                Point q = p;
                q[a] += s == 0 ? 1 : -1;
                nbr[i * 2 * dim + 2 * a + s] = id_of(q);
            }
    }
}

}  // namespace

Domain Domain::box(const Point& origin, const Point& extents) {
    if (origin.size() != extents.size() || extents.empty()) throw std::invalid_argument("bad box");
    Domain d;
    d.origin_ = origin;
    d.extents_ = extents;
    d.size_ = 1;
    for (auto e : extents) {
        if (e <= 0) throw std::invalid_argument("box extents must be positive");
        d.size_ *= e;
    }
    fill_neighbors(d.nbr_, d.size_, d.dim(), [&](int64_t i) { return d.point(i); },
                   [&](const Point& p) { return d.id(p); });
    return d;
}

Domain Domain::torus(const PeriodLattice& lattice) {
    Domain d;
    d.torus_ = true;
    d.lattice_ = lattice;
    d.origin_ = Point(lattice.dim(), 0);
    d.extents_.resize(lattice.dim());
    for (int i = 0; i < lattice.dim(); ++i) d.extents_[i] = lattice.diag(i);
    d.size_ = lattice.index();
    fill_neighbors(d.nbr_, d.size_, d.dim(), [&](int64_t i) { return d.point(i); },
                   [&](const Point& p) { return d.id(p); });
    return d;
}

Point Domain::point(int64_t id) const {
    Point p(dim());
    for (int i = 0; i < dim(); ++i) {
        p[i] = origin_[i] + id % extents_[i];
        id /= extents_[i];
    }
    return p;
}

int64_t Domain::id(const Point& p) const {
    if (static_cast<int>(p.size()) != dim()) throw std::invalid_argument("point dimension mismatch");
    if (torus_) return lattice_.rep_id(lattice_.reduce(p));
    int64_t id = 0;
    for (int i = dim() - 1; i >= 0; --i) {
        int64_t c = p[i] - origin_[i];
        if (c < 0 || c >= extents_[i]) return -1;
        id = id * extents_[i] + c;
    }
    return id;
}

int64_t Domain::neighbor(int64_t id, int axis, bool plus) const {
    return nbr_[id * 2 * dim() + 2 * axis + (plus ? 0 : 1)];
}

Patch::Patch(std::shared_ptr<const Tileset> ts, Domain dom) : ts_(std::move(ts)), dom_(std::move(dom)) {
    if (!ts_) throw std::invalid_argument("patch needs a tileset");
    if (ts_->dim() != dom_.dim()) throw std::invalid_argument("patch domain dimension differs from tileset");
    cells_.assign(dom_.size(), -1);
}

int Patch::at(const Point& p) const {
    int64_t i = dom_.id(p);
    return i < 0 ? -1 : cells_[i];
}

void Patch::set(int64_t id, int tile) {
    if (id < 0 || id >= dom_.size()) throw std::invalid_argument("cell outside patch domain");
    if (tile < -1 || tile >= ts_->size()) throw std::invalid_argument("tile index out of range");
    cells_[id] = tile;
}

void Patch::set(const Point& p, int tile) { set(dom_.id(p), tile); }

bool Patch::full() const {
    for (int c : cells_)
        if (c < 0) return false;
    return true;
}

std::vector<Violation> patch_valid(const Patch& patch) {
    std::vector<Violation> out;
    const Domain& d = patch.domain();
    for (int64_t i = 0; i < d.size(); ++i) {
        int t = patch.get(i);
        if (t < 0) continue;
        for (int a = 0; a < d.dim(); ++a) {
            int64_t j = d.neighbor(i, a, true);
            if (j < 0 || patch.get(j) < 0) continue;
            if (!adjacency_ok(patch.tileset(), t, patch.get(j), a)) out.push_back({i, j, a});
        }
    }
    return out;
}

bool pattern_occurs(const Patch& needle, const Patch& haystack) {
    if (needle.tileset_ptr() != haystack.tileset_ptr() && !(needle.tileset().tiles() == haystack.tileset().tiles()))
        throw std::invalid_argument("patterns over different tilesets");
    if (needle.domain().is_torus() || haystack.domain().is_torus())
        throw std::invalid_argument("pattern occurrence needs box domains");
    const Domain& nd = needle.domain();
    const Domain& hd = haystack.domain();
    int dim = nd.dim();
    // Translations v move needle's origin over the haystack box.
    Point lo(dim), span(dim);
    int64_t count = 1;
    for (int i = 0; i < dim; ++i) {
        lo[i] = hd.origin()[i] - nd.origin()[i] - nd.extents()[i] + 1;
        span[i] = hd.extents()[i] + nd.extents()[i] - 1;
        count *= span[i];
    }
    for (int64_t k = 0; k < count; ++k) {
        Point v(dim);
        int64_t r = k;
        for (int i = 0; i < dim; ++i) {
            v[i] = lo[i] + r % span[i];
            r /= span[i];
        }
        bool match = true;
        for (int64_t c = 0; c < nd.size() && match; ++c) {
            int t = needle.get(c);
            if (t < 0) continue;
            Point p = nd.point(c);
            for (int i = 0; i < dim; ++i) p[i] += v[i];
            match = haystack.at(p) == t;
        }
        if (match) return true;
    }
    return false;
}

}  // namespace wang
