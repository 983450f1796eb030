#include "wang/tileset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wang {

Tile tile2d(Color north, Color east, Color south, Color west) {
    Tile t;
    t[East] = east;
    t[West] = west;
    t[North] = north;
    t[South] = south;
    return t;
}

Color Alphabet::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Color c = static_cast<Color>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, c);
    return c;
}

std::optional<Color> Alphabet::find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Tileset::find_tile(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int Tileset::add(const std::string& name, const std::vector<std::string>& face_colors) {
    if (static_cast<int>(face_colors.size()) != num_faces())
        throw std::invalid_argument("tile " + name + " needs " + std::to_string(num_faces()) + " colors");
    Tile t;
    for (int f = 0; f < num_faces(); ++f) t[f] = colors_.intern(face_colors[f]);
    return add(name, t);
}

int Tileset::add(const std::string& name, const Tile& t) {
    for (int f = 0; f < num_faces(); ++f)
        if (t[f] < 0 || t[f] >= colors_.size()) throw std::invalid_argument("tile " + name + " uses unknown color");
    for (int f = num_faces(); f < 6; ++f)
        if (t[f] != 0) throw std::invalid_argument("tile " + name + " has faces beyond its dimension");
    if (std::find(tiles_.begin(), tiles_.end(), t) != tiles_.end())
        throw std::invalid_argument("duplicate tile " + name);
    if (find_tile(name)) throw std::invalid_argument("duplicate tile name " + name);
    tiles_.push_back(t);
    names_.push_back(name);
    return size() - 1;
}

bool adjacency_ok(const Tileset& ts, int t1, int t2, int axis) {
    if (t1 < 0 || t1 >= ts.size() || t2 < 0 || t2 >= ts.size()) throw std::invalid_argument("tile index out of range");
    if (axis < 0 || axis >= ts.dim()) throw std::invalid_argument("axis out of range");
    return ts.tile(t1)[face_of(axis, true)] == ts.tile(t2)[face_of(axis, false)];
}

SuperpositionRelation SuperpositionRelation::full(int na, int nb) {
    SuperpositionRelation r;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) r.pairs.push_back({a, b});
    return r;
}

bool SuperpositionRelation::allows(int a, int b) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

Tileset product(const Tileset& a, const Tileset& b, const SuperpositionRelation& rel) {
    if (a.dim() != b.dim()) throw std::invalid_argument("product of tilesets of different dimension");
    Tileset out(a.dim());
    for (auto [ia, ib] : rel.pairs) {
        if (ia < 0 || ia >= a.size() || ib < 0 || ib >= b.size())
            throw std::invalid_argument("superposition pair out of range");
        std::vector<std::string> faces;
        for (int f = 0; f < a.num_faces(); ++f)
            faces.push_back("(" + a.colors().name(a.tile(ia)[f]) + "|" + b.colors().name(b.tile(ib)[f]) + ")");
        out.add("(" + a.tile_name(ia) + "|" + b.tile_name(ib) + ")", faces);
    }
    return out;
}

Tileset disjoint_union(const std::vector<Tileset>& parts) {
    if (parts.empty()) throw std::invalid_argument("union of no tilesets");
    Tileset out(parts[0].dim());
    for (size_t k = 0; k < parts.size(); ++k) {
        const Tileset& p = parts[k];
        if (p.dim() != out.dim()) throw std::invalid_argument("union of tilesets of different dimension");
        std::string tag = std::to_string(k) + ":";
        for (int i = 0; i < p.size(); ++i) {
            std::vector<std::string> faces;
            for (int f = 0; f < p.num_faces(); ++f) faces.push_back(tag + p.colors().name(p.tile(i)[f]));
            out.add(tag + p.tile_name(i), faces);
        }
    }
    return out;
}

int plane_first_axis(Plane p) { return p == Plane::YZ ? 1 : 0; }
int plane_second_axis(Plane p) { return p == Plane::XY ? 1 : 2; }
int plane_normal_axis(Plane p) { return p == Plane::XY ? 2 : p == Plane::XZ ? 1 : 0; }

Tileset lift_2d_to_3d(const Tileset& ts, Plane plane) {
    if (ts.dim() != 2) throw std::invalid_argument("lift needs a 2D tileset");
    Tileset out(3);
    int a1 = plane_first_axis(plane), a2 = plane_second_axis(plane), n = plane_normal_axis(plane);
    for (int i = 0; i < ts.size(); ++i) {
        const Tile& t = ts.tile(i);
        std::vector<std::string> faces(6);
        auto name = [&](int f) { return ts.colors().name(t[f]); };
        faces[face_of(a1, true)] = name(East);
        faces[face_of(a1, false)] = name(West);
        faces[face_of(a2, true)] = name(North);
        faces[face_of(a2, false)] = name(South);
        faces[face_of(n, true)] = faces[face_of(n, false)] = "@" + ts.tile_name(i);
        out.add(ts.tile_name(i), faces);
    }
    return out;
}

Stencil Stencil::nw() { return {"NW", {{0, 1}, {-1, 0}}}; }
Stencil Stencil::w() { return {"W", {{-1, 0}, {-1, 1}}}; }

namespace {

// Small exhaustive search over a bounding box with some cells fixed.
struct BoxSearch {
    const Tileset& ts;
    int w, h;
    std::vector<int> cells;  // -1 = free

    bool fits(int x, int y, int t) const {
        auto at = [&](int xx, int yy) { return cells[yy * w + xx]; };
        const Tile& tt = ts.tile(t);
        if (x > 0 && at(x - 1, y) >= 0 && ts.tile(at(x - 1, y))[East] != tt[West]) return false;
        if (x + 1 < w && at(x + 1, y) >= 0 && ts.tile(at(x + 1, y))[West] != tt[East]) return false;
        if (y > 0 && at(x, y - 1) >= 0 && ts.tile(at(x, y - 1))[North] != tt[South]) return false;
        if (y + 1 < h && at(x, y + 1) >= 0 && ts.tile(at(x, y + 1))[South] != tt[North]) return false;
        return true;
    }

    bool complete(size_t k) {
        while (k < cells.size() && cells[k] >= 0) ++k;
        if (k == cells.size()) return true;
        int x = static_cast<int>(k) % w, y = static_cast<int>(k) / w;
        for (int t = 0; t < ts.size(); ++t) {
            if (!fits(x, y, t)) continue;
            cells[k] = t;
            if (complete(k + 1)) {
                cells[k] = -1;
                return true;
            }
        }
        cells[k] = -1;
        return false;
    }
};

}  // namespace

DeterminismResult check_determinism(const Tileset& ts, const Stencil& stencil) {
    if (ts.dim() != 2) throw std::invalid_argument("determinism check needs a 2D tileset");
    if (stencil.cells.empty()) throw std::invalid_argument("empty stencil");
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (auto c : stencil.cells) {
        minx = std::min(minx, c.dx);
        maxx = std::max(maxx, c.dx);
        miny = std::min(miny, c.dy);
        maxy = std::max(maxy, c.dy);
    }
    int w = maxx - minx + 1, h = maxy - miny + 1;
    auto idx = [&](int dx, int dy) { return (dy - miny) * w + (dx - minx); };
    size_t k = stencil.cells.size();
    DeterminismResult res;
    if (ts.empty()) return res;

    BoxSearch box{ts, w, h, std::vector<int>(w * h, -1)};
    std::vector<int> choice(k, 0);
    // Odometer over stencil assignments.
    for (;;) {
        std::fill(box.cells.begin(), box.cells.end(), -1);
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            int cell = idx(stencil.cells[i].dx, stencil.cells[i].dy);
            int x = cell % w, y = cell / w;
            ok = box.fits(x, y, choice[i]);
            box.cells[cell] = choice[i];
        }
        if (ok && box.complete(0)) {
            int center = idx(0, 0);
            int first = -1;
            for (int t = 0; t < ts.size(); ++t) {
                if (!box.fits(center % w, center / w, t)) continue;
                box.cells[center] = t;
                bool extends = box.complete(0);
                box.cells[center] = -1;
                if (!extends) continue;
                if (first < 0) {
                    first = t;
                    continue;
                }
                res.deterministic = false;
                res.center_tiles = {first, t};
                res.stencil_tiles = choice;
                for (int s : choice) res.neighbor_colors.push_back({ts.tile(s)[East], ts.tile(s)[South]});
                return res;
            }
        }
        size_t i = 0;
        while (i < k && ++choice[i] == ts.size()) choice[i++] = 0;
        if (i == k) break;
    }
    return res;
}

}  // namespace wang
