#include "wang/background.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wang {

namespace {

struct MultiplierRow {
    const char* name;
    const char* north;
    const char* west;
    const char* south;
    const char* east;
};

// Carries of the x2 tiles are "d<c>"; carries of the x2/3 tiles are
// "t<3c>" (scaled by 3 to stay integral).
constexpr MultiplierRow kMultiplierTable[] = {
    {"d0", "0", "d0", "1", "d-1"},    {"d1", "1", "d-1", "1", "d0"},    {"d2", "1", "d-1", "2", "d-1"},
    {"d3", "1", "d0", "2", "d0"},     {"t0", "1", "t-1", "0", "t1"},    {"t1", "1", "t0", "0", "t2"},
    {"t2", "1", "t0", "1", "t-1"},    {"t3", "1", "t1", "1", "t0"},     {"t4", "1", "t2", "1", "t1"},
    {"t5", "2", "t-1", "1", "t0"},    {"t6", "2", "t0", "1", "t1"},     {"t7", "2", "t1", "1", "t2"},
    {"t8", "2", "t1", "2", "t-1"},    {"t9", "2", "t2", "2", "t0"},
};

int64_t floor_rat(int64_t num, int64_t den) {
    int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace

Tileset multiplier_tiles() {
    Tileset ts(2);
    for (const auto& r : kMultiplierTable) ts.add(r.name, {r.east, r.west, r.north, r.south});
    return ts;
}

Tileset generate_multiplier_tiles(int samples, int max_k) {
    // (north, west, south, east) with carries scaled by the multiplier's
    // denominator.
    std::set<std::tuple<int64_t, int64_t, int64_t, int64_t, char>> found;
    struct Mult {
        int64_t qn, qd;
        int64_t lo_num, lo_den, hi_num, hi_den;
        char tag;
    };
    const Mult mults[] = {{2, 1, 1, 2, 1, 1, 'd'}, {2, 3, 1, 1, 2, 1, 't'}};
    for (const auto& m : mults) {
        for (int i = 0; i <= samples; ++i) {
            // x = lo + (hi - lo) * i / samples as one fraction.
            int64_t den = m.lo_den * m.hi_den * samples;
            int64_t num = m.lo_num * m.hi_den * samples + (m.hi_num * m.lo_den - m.lo_num * m.hi_den) * i;
            auto fl = [&](int64_t k) { return floor_rat(k * num, den); };
            auto flq = [&](int64_t k) { return floor_rat(k * num * m.qn, den * m.qd); };
            // Carry c_k = q*floor(kx) - floor(kqx), scaled by qd.
            auto carry = [&](int64_t k) { return m.qn * fl(k) - m.qd * flq(k); };
            for (int64_t k = 1; k < max_k; ++k) {
                int64_t a = fl(k) - fl(k - 1);
                int64_t b = flq(k) - flq(k - 1);
                found.insert({a, carry(k - 1), b, carry(k), m.tag});
            }
        }
    }
    Tileset ts(2);
    int idx[2] = {0, 0};
    for (const auto& [n, w, s, e, tag] : found) {
        std::string t(1, tag);
        std::string name = t + std::to_string(idx[tag == 't']++);
        ts.add(name, {t + std::to_string(e), t + std::to_string(w), std::to_string(n), std::to_string(s)});
    }
    return ts;
}

Tileset rotate_half_turn(const Tileset& ts) {
    if (ts.dim() != 2) throw std::invalid_argument("rotation needs a 2D tileset");
    Tileset out(2);
    for (int i = 0; i < ts.size(); ++i) {
        const Tile& t = ts.tile(i);
        auto c = [&](int f) { return ts.colors().name(t[f]); };
        out.add(ts.tile_name(i), {c(West), c(East), c(South), c(North)});
    }
    return out;
}

Tileset shear_to_west(const Tileset& ts) {
    if (ts.dim() != 2) throw std::invalid_argument("shear needs a 2D tileset");
    std::set<std::string> vertical;
    for (const auto& t : ts.tiles()) {
        vertical.insert(ts.colors().name(t[North]));
        vertical.insert(ts.colors().name(t[South]));
    }
    Tileset out(2);
    for (int i = 0; i < ts.size(); ++i) {
        const Tile& t = ts.tile(i);
        auto c = [&](int f) { return ts.colors().name(t[f]); };
        for (const auto& r : vertical) {
            std::string east = c(East) + "/" + r;
            std::string west = c(West) + "/" + c(North);
            out.add(ts.tile_name(i) + "/" + r, {east, west, r, c(South)});
        }
    }
    return out;
}

Tileset build_background_2d() { return shear_to_west(rotate_half_turn(multiplier_tiles())); }

LayerStack background_3d_stack() {
    Tileset base = build_background_2d();
    LayerStack st;
    st.add_layer("bg_xy", std::make_shared<const Tileset>(lift_2d_to_3d(base, Plane::XY)));
    st.add_layer("bg_xz", std::make_shared<const Tileset>(lift_2d_to_3d(base, Plane::XZ)));
    return st;
}

Tileset build_background_3d() { return background_3d_stack().flatten(); }

}  // namespace wang
