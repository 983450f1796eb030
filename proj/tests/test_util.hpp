#pragma once

#include <random>
#include <string>

#include "wang/tileset.hpp"

namespace testutil {

// Up to `tiles` distinct random tiles over `colors` colors.
inline wang::Tileset random_tileset(std::mt19937_64& rng, int tiles, int colors, int dim) {
    wang::Tileset ts(dim);
    for (int c = 0; c < colors; ++c) ts.colors().intern("c" + std::to_string(c));
    std::uniform_int_distribution<int> pick(0, colors - 1);
    for (int attempt = 0; ts.size() < tiles && attempt < 50 * tiles; ++attempt) {
        wang::Tile t;
        for (int f = 0; f < 2 * dim; ++f) t[f] = pick(rng);
        bool dup = false;
        for (const auto& u : ts.tiles()) dup = dup || u == t;
        if (!dup) ts.add("t" + std::to_string(ts.size()), t);
    }
    return ts;
}

}  // namespace testutil
