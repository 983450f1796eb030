#include "wang/layers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "wang/background.hpp"

namespace wang {

namespace {

using Pred = std::function<bool(const std::string&, const std::string&)>;

SuperpositionRelation relate(const Tileset& lower, const Tileset& upper, const Pred& ok) {
    SuperpositionRelation rel;
    for (int a = 0; a < lower.size(); ++a)
        for (int b = 0; b < upper.size(); ++b)
            if (ok(lower.tile_name(a), upper.tile_name(b))) rel.pairs.push_back({a, b});
    return rel;
}

std::string head(const std::string& name) { return name.substr(0, name.find('.')); }

std::vector<std::string> split_dots(const std::string& name) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t dot = name.find('.', start);
        out.push_back(name.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

bool is_black_role(const std::string& role) {
    return role == "K" || role == "Kin" || role == "Kout" || role == "Kboth";
}

bool leaves_east(const std::string& role) { return role == "Kout" || role == "Kboth"; }

std::string pair_color(const std::string& l, const std::string& r) { return l + "," + r; }

// Suffix of an open background variant: "", "l", "r" or "lr".
std::string open_suffix(const std::string& name) {
    if (name == "void") return "void";
    size_t dot = name.rfind('.');
    return dot == std::string::npos ? "" : name.substr(dot + 1);
}

std::string white_suffix(const std::string& b_name) {
    size_t dot = b_name.find('.');
    return dot == std::string::npos ? "" : b_name.substr(dot + 1);
}

// Before and after state letters of a W black tile, e.g. "K.PO.D" -> "PO".
std::string w_states(const std::string& name) { return split_dots(name).at(1); }

// Code an S black tile shows west: B from an arrival through the cell just
// above the next departure, A elsewhere.
std::string s_west_code(const std::string& w_name) {
    std::string st = w_states(w_name);
    return (st[1] == 'I' || st[1] == 'P' || st[0] == 'P') ? "B" : "A";
}

std::string arrow_dir(const std::string& name) { return name.rfind("up", 0) == 0 ? "up" : "right"; }

std::shared_ptr<const Tileset> share(Tileset ts) { return std::make_shared<const Tileset>(std::move(ts)); }

}  // namespace

Tileset layer_B() {
    Tileset ts(3);
    // Faces: x+, x-, y+, y-, z+, z-.
    ts.add("black", {"bx", "xb", "K", "K", "K", "K"});
    ts.add("white", {"w", "w", "W", "W", "W", "W"});
    ts.add("white.l", {"w", "bx", "W", "W", "W", "W"});
    ts.add("white.r", {"xb", "w", "W", "W", "W", "W"});
    ts.add("white.lr", {"xb", "bx", "W", "W", "W", "W"});
    return ts;
}

Tileset frame_tiles_2d() {
    Tileset ts(2);
    // Faces: east, west, north, south.
    ts.add("K", {"i", "i", "k", "k"});
    ts.add("Kin", {"i", "s", "k", "k"});
    ts.add("Kout", {"s", "i", "k", "k"});
    ts.add("Kboth", {"s", "s", "k", "k"});
    ts.add("strip", {"s", "s", "i", "i"});
    ts.add("inner", {"i", "i", "i", "i"});
    return ts;
}

Tileset layer_Bprime() { return lift_2d_to_3d(frame_tiles_2d(), Plane::XZ); }
Tileset layer_Bsecond() { return lift_2d_to_3d(frame_tiles_2d(), Plane::XY); }

Tileset square_tiles_2d() {
    Tileset ts(2);
    ts.add("diag", {"B", "A", "A", "B"});
    ts.add("above", {"A", "A", "A", "A"});
    ts.add("below", {"B", "B", "B", "B"});
    ts.add("strip", {"h", "h", "B", "A"});
    ts.add("K", {"A", "B", "v", "v"});
    ts.add("Kin", {"A", "h", "v", "v"});
    ts.add("Kout", {"h", "B", "v", "v"});
    ts.add("Kboth", {"h", "h", "v", "v"});
    return ts;
}

Tileset layer_C_xz() { return lift_2d_to_3d(square_tiles_2d(), Plane::XZ); }
Tileset layer_C_xy() { return lift_2d_to_3d(square_tiles_2d(), Plane::XY); }

Tileset offset_tiles_2d() {
    Tileset ts(2);
    struct Event {
        const char* role;
        char before, after;
    };
    const Event events[] = {{"K", 'I', 'I'},   {"K", 'O', 'O'},    {"K", 'P', 'O'},     {"Kin", 'O', 'I'},
                            {"Kin", 'P', 'I'}, {"Kout", 'I', 'P'}, {"Kboth", 'O', 'P'}, {"Kboth", 'P', 'P'}};
    for (const auto& ev : events) {
        for (const char* west_low : {"D", "U"}) {
            std::string east = pair_color(ev.after == 'I' ? "U" : "D", "A");
            std::string west = pair_color(west_low, ev.after == 'I' ? "B" : "A");
            std::string name = std::string(ev.role) + "." + ev.before + ev.after + "." + west_low;
            ts.add(name, {east, west, std::string(1, ev.after), std::string(1, ev.before)});
        }
    }
    // Interior: falling line "Ln" between D (below) and U, rising line "Rn"
    // between A (above) and B. Faces east, west, north, south.
    struct Part {
        const char* name;
        const char* e;
        const char* w;
        const char* n;
        const char* s;
    };
    const Part low[] = {{"D", "D", "D", "D", "D"}, {"Ln", "U", "D", "U", "D"}, {"U", "U", "U", "U", "U"}};
    const Part high[] = {{"A", "A", "A", "A", "A"}, {"Rn", "B", "A", "A", "B"}, {"B", "B", "B", "B", "B"}};
    for (const auto& l : low)
        for (const auto& h : high)
            ts.add(std::string("inner.") + l.name + "." + h.name,
                   {pair_color(l.e, h.e), pair_color(l.w, h.w), pair_color(l.n, h.n), pair_color(l.s, h.s)});
    // Strip cells: the two lines meet on the same strip cell.
    const Part strip_low[] = {{"D", "D", "D", "D", "U"}, {"Ln", "U", "D", "U", "U"}, {"U", "U", "U", "U", "U"}};
    const Part strip_high[] = {{"A", "A", "A", "A", "A"}, {"Rn", "B", "A", "A", "A"}, {"B", "B", "B", "B", "A"}};
    for (int k = 0; k < 3; ++k) {
        const auto& l = strip_low[k];
        const auto& h = strip_high[k];
        ts.add(std::string("strip.") + l.name + "." + h.name,
               {pair_color(l.e, h.e), pair_color(l.w, h.w), pair_color(l.n, h.n), pair_color(l.s, h.s)});
    }
    return ts;
}

Tileset layer_W_xy() { return lift_2d_to_3d(offset_tiles_2d(), Plane::XY); }
Tileset layer_W_xz() { return lift_2d_to_3d(offset_tiles_2d(), Plane::XZ); }

Tileset arrow_tiles_2d() {
    Tileset ts(2);
    ts.add("right1", {"A", "A", "A", "A"});
    ts.add("up2", {"B", "A", "A", "B"});
    ts.add("up1", {"B", "B", "B", "B"});
    ts.add("right2", {"A", "A", "A", "s1"});
    ts.add("right2.turn", {"B", "A", "A", "s1"});
    ts.add("up1.low", {"B", "B", "B", "s1"});
    ts.add("right1.strip", {"sx", "sx", "s1", "A"});
    ts.add("right1.K.A", {"A", "A", "k", "k"});
    ts.add("right1.K.B", {"A", "B", "k", "k"});
    ts.add("right1.Kin", {"A", "sx", "k", "k"});
    ts.add("right1.Kout", {"sx", "B", "k", "k"});
    ts.add("right1.Kboth", {"sx", "sx", "k", "k"});
    return ts;
}

Tileset layer_S_front() { return lift_2d_to_3d(arrow_tiles_2d(), Plane::XY); }
Tileset layer_S_top() { return lift_2d_to_3d(arrow_tiles_2d(), Plane::XZ); }

Tileset arrow_tiles_3d() {
    // y faces repeat the top direction (constant along y), z faces the front
    // direction (constant along z).
    Tileset ts(3);
    for (const char* front : {"right", "up"})
        for (const char* top : {"right", "up"}) {
            std::string t = std::string("top:") + top, f = std::string("front:") + front;
            ts.add(std::string(front) + "/" + top, {"x", "x", t, t, f, f});
        }
    return ts;
}

std::optional<std::string> arrow_3d_name(const std::string& front, const std::string& top) {
    static const Tileset arrows = arrow_tiles_2d();
    if (!arrows.find_tile(front) || !arrows.find_tile(top)) return std::nullopt;
    return arrow_dir(front) + "/" + arrow_dir(top);
}

Tileset layer_A() {
    // Frame flags ride on the faces of the axis along which their frame is
    // constant: the z-strip flag on y faces, the y-strip flag on z faces.
    Tileset ts(3);
    const std::vector<std::string> colors = {"blue", "red"};
    for (const auto& c : colors)
        for (int zs = 0; zs < 2; ++zs)
            for (int ys = 0; ys < 2; ++ys)
                for (const auto& cz : zs ? colors : std::vector<std::string>{c})
                    for (const auto& cy : ys ? colors : std::vector<std::string>{c}) {
                        std::string name = c;
                        if (ys) name += ".y" + cy;
                        if (zs) name += ".z" + cz;
                        std::string zf = ":z" + std::to_string(zs), yf = ":y" + std::to_string(ys);
                        ts.add(name, {c, c, c + zf, cy + zf, c + yf, cz + yf});
                    }
    for (int oz = 0; oz < 2; ++oz)
        for (int oy = 0; oy < 2; ++oy) {
            std::string zf = "z" + std::to_string(oz), yf = "y" + std::to_string(oy);
            if (oz && oy) {
                for (const auto& c : colors) ts.add("corner." + c, {c, c, zf, zf, yf, yf});
                continue;
            }
            std::string tag = std::string("edge.") + (oz ? "z" : "") + (oy ? "y" : "") + (oz || oy ? "" : "0");
            for (const auto& west : colors)
                for (const auto& east : colors) ts.add(tag + "." + west + "." + east, {east, west, zf, zf, yf, yf});
        }
    return ts;
}

Tileset open_background_2d(const Tileset& bg) {
    Tileset ts(2);
    std::set<std::vector<Color>> seen;
    const char* suffixes[] = {"", ".l", ".r", ".lr"};
    for (int i = 0; i < bg.size(); ++i) {
        const Tile& t = bg.tile(i);
        if (bg.tile_name(i).find('.') != std::string::npos)
            throw std::invalid_argument("background tile names may not contain '.'");
        for (int v = 0; v < 4; ++v) {
            bool open_w = v & 1, open_e = v & 2;
            std::string e = open_e ? "open" : bg.colors().name(t[East]);
            std::string w = open_w ? "open" : bg.colors().name(t[West]);
            std::vector<std::string> faces = {e, w, bg.colors().name(t[North]), bg.colors().name(t[South])};
            std::vector<Color> key;
            for (const auto& f : faces) key.push_back(ts.colors().intern(f));
            // Opening a face can merge tiles that differed only there.
            if (!seen.insert(key).second) continue;
            ts.add(bg.tile_name(i) + suffixes[v], faces);
        }
    }
    ts.add("void", {"open", "open", "void", "void"});
    return ts;
}

const std::vector<std::string>& skeleton_layer_names() {
    static const std::vector<std::string> names = {"B", "Bp", "Bpp", "C", "W", "S", "A"};
    return names;
}

LayerStack assemble_skeleton(const std::set<std::string>& include, bool with_background) {
    const std::map<std::string, std::vector<std::string>> needs = {
        {"B", {}}, {"Bp", {"B"}}, {"Bpp", {"B"}}, {"C", {"Bp", "Bpp"}}, {"W", {"C"}}, {"S", {"W"}}, {"A", {"Bp", "Bpp"}}};
    for (const auto& name : include) {
        auto it = needs.find(name);
        if (it == needs.end()) throw std::invalid_argument("unknown skeleton layer " + name);
        for (const auto& dep : it->second)
            if (!include.count(dep)) throw std::invalid_argument("layer " + name + " needs layer " + dep);
    }
    auto has = [&](const char* n) { return include.count(n) > 0; };

    LayerStack st;
    int bg_xy = -1, bg_xz = -1;
    if (with_background) {
        Tileset open = open_background_2d(build_background_2d());
        bg_xy = st.add_layer("bg_xy", share(lift_2d_to_3d(open, Plane::XY)));
        bg_xz = st.add_layer("bg_xz", share(lift_2d_to_3d(open, Plane::XZ)));
    }
    auto layer = [&](int i) -> const Tileset& { return *st.layers[i]; };
    auto link = [&](int lower, int upper, const Pred& ok) {
        st.link(lower, upper, relate(layer(lower), layer(upper), ok));
    };
    auto white_matches_frame = [](const std::string& b, const std::string& f) {
        return (b == "black") == is_black_role(f);
    };

    if (!has("B")) return st;
    int b = st.add_layer("B", share(layer_B()));
    for (int bg : {bg_xy, bg_xz}) {
        if (bg < 0) continue;
        link(b, bg, [](const std::string& bn, const std::string& gn) {
            if (bn == "black") return gn == "void";
            return gn != "void" && open_suffix(gn) == white_suffix(bn);
        });
    }

    int bp = -1, bpp = -1;
    if (has("Bp")) {
        bp = st.add_layer("Bp", share(layer_Bprime()));
        link(b, bp, white_matches_frame);
    }
    if (has("Bpp")) {
        bpp = st.add_layer("Bpp", share(layer_Bsecond()));
        link(b, bpp, white_matches_frame);
    }

    auto same_role = [](const std::string& frame, const std::string& sq) {
        std::string r = head(sq);
        if (is_black_role(frame) || frame == "strip") return r == frame;
        return r == "diag" || r == "above" || r == "below" || r == "inner";
    };
    if (has("C")) {
        int cxz = st.add_layer("C_xz", share(layer_C_xz()));
        link(bp, cxz, same_role);
        int cxy = st.add_layer("C_xy", share(layer_C_xy()));
        link(bpp, cxy, same_role);
    }
    int wxy = -1, wxz = -1;
    if (has("W")) {
        wxy = st.add_layer("W_xy", share(layer_W_xy()));
        link(bpp, wxy, same_role);
        wxz = st.add_layer("W_xz", share(layer_W_xz()));
        link(bp, wxz, same_role);
    }
    if (has("S")) {
        auto arrow_fits = [](const std::string& w, const std::string& s) {
            std::string role = head(w);
            if (role == "inner") return s == "right1" || s == "up2" || s == "up1" || s == "right2" ||
                                        s == "right2.turn" || s == "up1.low";
            if (role == "strip") return s == "right1.strip";
            if (role == "K") return s == "right1.K." + s_west_code(w);
            return s == "right1." + role;
        };
        int front = st.add_layer("S_front", share(layer_S_front()));
        link(wxy, front, arrow_fits);
        int top = st.add_layer("S_top", share(layer_S_top()));
        link(wxz, top, arrow_fits);
        int s3 = st.add_layer("S_3d", share(arrow_tiles_3d()));
        link(front, s3, [](const std::string& f, const std::string& a) { return arrow_dir(f) == a.substr(0, a.find('/')); });
        link(top, s3, [](const std::string& t, const std::string& a) { return arrow_dir(t) == a.substr(a.find('/') + 1); });
    }
    if (has("A")) {
        int a = st.add_layer("A", share(layer_A()));
        auto is_black_a = [](const std::string& n) { return head(n) == "corner" || head(n) == "edge"; };
        link(b, a, [&](const std::string& bn, const std::string& an) { return (bn == "black") == is_black_a(an); });
        // Flags of an A tile for one frame: strip cell or departure cell.
        auto flag = [&](const std::string& an, char axis) {
            if (head(an) == "corner") return true;
            if (head(an) == "edge") return split_dots(an).at(1).find(axis) != std::string::npos;
            return an.find(std::string(".") + axis) != std::string::npos;
        };
        auto frame_fits = [&](char axis) {
            return [&, axis](const std::string& f, const std::string& an) {
                if (is_black_role(f) != is_black_a(an)) return false;
                bool marked = is_black_role(f) ? leaves_east(f) : f == "strip";
                return marked == flag(an, axis);
            };
        };
        link(bp, a, frame_fits('z'));
        link(bpp, a, frame_fits('y'));
    }
    return st;
}

LayerExport export_layer(const std::string& name) {
    static const std::map<std::string, std::string> base = {
        {"bg_xy", ""},       {"bg_xz", ""},       {"B", "bg_xy"},      {"Bp", "B"},        {"Bpp", "B"},
        {"C_xz", "Bp"},      {"C_xy", "Bpp"},     {"W_xy", "Bpp"},     {"W_xz", "Bp"},     {"S_front", "W_xy"},
        {"S_top", "W_xz"},   {"S_3d", "S_front"}, {"A", "B"}};
    auto it = base.find(name);
    if (it == base.end()) throw std::invalid_argument("unknown layer " + name);
    std::set<std::string> all(skeleton_layer_names().begin(), skeleton_layer_names().end());
    LayerStack st = assemble_skeleton(all, true);
    int idx = st.layer_index(name);
    LayerExport out{*st.layers[idx], it->second, std::nullopt, {}};
    if (it->second.empty()) return out;
    int lower = st.layer_index(it->second);
    out.base_tiles = *st.layers[lower];
    for (const auto& l : st.links)
        if (l.lower == lower && l.upper == idx) out.rel = l.rel;
    return out;
}

namespace {

const std::string& name_at(const LayerStack& st, const LayeredPatch& p, int layer, int64_t id) {
    return st.layers[layer]->tile_name(p[layer].get(id));
}

int require_layer(const LayerStack& st, const std::string& name) {
    int i = st.layer_index(name);
    if (i < 0) throw std::invalid_argument("analysis needs layer " + name);
    return i;
}

}  // namespace

Pin make_pin(const LayerStack& stack, const std::string& layer, const Point& point, const std::string& tile) {
    int l = require_layer(stack, layer);
    auto t = stack.layers[l]->find_tile(tile);
    if (!t) throw std::invalid_argument("layer " + layer + " has no tile " + tile);
    return {point, *t, l};
}

CubeGeometry extract_geometry(const LayerStack& stack, const LayeredPatch& patch) {
    int b = require_layer(stack, "B"), bp = require_layer(stack, "Bp"), bpp = require_layer(stack, "Bpp");
    const Domain& dom = patch[b].domain();
    if (dom.dim() != 3) throw std::invalid_argument("geometry needs a 3D patch");
    auto black = [&](int64_t id) { return name_at(stack, patch, b, id) == "black"; };

    int64_t size = 0;
    std::optional<int64_t> first_black;
    for (int64_t id = 0; id < dom.size(); ++id) {
        if (!black(id)) continue;
        if (!first_black) first_black = id;
        int64_t cur = id;
        for (int64_t k = 1; k <= dom.size(); ++k) {
            cur = dom.neighbor(cur, 0, true);
            if (cur < 0) break;
            if (!black(cur)) continue;
            if (size == 0) size = k;
            if (size != k) throw AnalysisError("black planes are not equally spaced", dom.point(id));
            break;
        }
    }
    if (!first_black) throw AnalysisError("no black plane", dom.point(0));
    if (size == 0) throw AnalysisError("window too small to measure the cube size", dom.point(*first_black));

    auto offset = [&](int layer, int axis) {
        std::optional<int64_t> off;
        for (int64_t id = 0; id < dom.size(); ++id) {
            if (!black(id)) continue;
            std::vector<int64_t> ins, outs;
            int64_t cur = id;
            int64_t k = 0;
            for (; k < 2 * size && cur >= 0; ++k, cur = dom.neighbor(cur, axis, true)) {
                const std::string& role = name_at(stack, patch, layer, cur);
                if (!is_black_role(role)) throw AnalysisError("frame line leaves the black plane", dom.point(cur));
                if (role == "Kin" || role == "Kboth") ins.push_back(k);
                if (leaves_east(role)) outs.push_back(k);
            }
            for (const auto* v : {&ins, &outs})
                for (size_t i = 1; i < v->size(); ++i)
                    if ((*v)[i] - (*v)[i - 1] != size)
                        throw AnalysisError("strips are not spaced by the cube size", dom.point(id));
            if (ins.empty() || outs.empty()) {
                if (k == 2 * size) throw AnalysisError("frame line without strips", dom.point(id));
                continue;
            }
            int64_t v = floor_mod(outs.front() - ins.front(), size);
            if (off && *off != v) throw AnalysisError("slabs have different offsets", dom.point(id));
            off = v;
        }
        if (!off) throw AnalysisError("window too small to measure offsets", dom.point(*first_black));
        return *off;
    };
    return {size, offset(bpp, 1), offset(bp, 2)};
}

std::pair<int64_t, int64_t> unary_border_counts(const LayerStack& stack, const LayeredPatch& patch) {
    auto count = [&](const std::string& layer_name, int axis) {
        int w = require_layer(stack, layer_name);
        const Domain& dom = patch[w].domain();
        std::optional<int64_t> result;
        for (int64_t id = 0; id < dom.size(); ++id) {
            const std::string& name = name_at(stack, patch, w, id);
            std::string role = head(name);
            if (role != "Kin" && role != "Kboth") continue;
            int64_t marked = 0, cur = id;
            bool closed = false;
            for (int64_t k = 0; k <= dom.size() && cur >= 0; ++k, cur = dom.neighbor(cur, axis, true)) {
                std::string st = w_states(name_at(stack, patch, w, cur));
                if (st[1] == 'P') {
                    closed = true;
                    break;
                }
                if (st[1] == 'I') ++marked;
            }
            if (!closed) continue;
            if (result && *result != marked)
                throw AnalysisError("border counts differ between frame lines", dom.point(id));
            result = marked;
        }
        if (!result) throw AnalysisError("no complete border count in " + layer_name, Point(dom.dim(), 0));
        return *result;
    };
    return {count("W_xy", 1), count("W_xz", 2)};
}

std::vector<Tie> background_sync_ties(const LayerStack& stack, const Domain& domain, const CubeGeometry& g,
                                      const Point& corner) {
    int xy = require_layer(stack, "bg_xy"), xz = require_layer(stack, "bg_xz");
    if (g.size < 2) throw std::invalid_argument("cube size must be at least 2");
    int64_t reach = 0;
    for (int i = 0; i < 3; ++i)
        reach = std::max(reach, domain.is_torus() ? domain.lattice().diag(i) : domain.extents()[i]);
    reach = reach / g.size + 2;
    std::vector<Tie> ties;
    std::set<std::pair<int64_t, int64_t>> seen;
    for (int64_t a = -reach; a <= reach; ++a)
        for (int64_t bb = -reach; bb <= reach; ++bb)
            for (int64_t c = -reach; c <= reach; ++c) {
                Point start = {corner[0] + a * g.size + 1, corner[1] + a * g.dy + bb * g.size + 1,
                               corner[2] + a * g.dz + c * g.size + 1};
                Point end = {start[0] + g.size, start[1] + g.dy, start[2] + g.dz};
                int64_t s = domain.id(start), e = domain.id(end);
                if (s < 0 || e < 0 || s == e || !seen.insert({s, e}).second) continue;
                for (int layer : {xy, xz}) ties.push_back({domain.point(s), domain.point(e), layer});
            }
    return ties;
}

}  // namespace wang
