#include "wang/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace wang {

std::string tile_fill(int tile) {
    // Golden-angle hue steps keep neighboring indices apart.
    double h = std::fmod(tile * 137.508, 360.0) / 60.0;
    double s = 0.55, l = (tile / 7) % 2 ? 0.45 : 0.62;
    double c = (1 - std::abs(2 * l - 1)) * s;
    double x = c * (1 - std::abs(std::fmod(h, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(h)) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    double m = l - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>((r + m) * 255 + 0.5),
                  static_cast<int>((g + m) * 255 + 0.5), static_cast<int>((b + m) * 255 + 0.5));
    return buf;
}

Slice parse_slice(const std::string& text) {
    auto eq = text.find('=');
    if (eq != 1 || text.size() < 3) throw std::invalid_argument("slice must look like axis=k, e.g. z=0");
    int axis = text[0] == 'x' ? 0 : text[0] == 'y' ? 1 : text[0] == 'z' ? 2 : -1;
    if (axis < 0) throw std::invalid_argument("slice axis must be x, y or z");
    size_t used = 0;
    int64_t k = std::stoll(text.substr(2), &used);
    if (used != text.size() - 2) throw std::invalid_argument("bad slice coordinate in " + text);
    return {axis, k};
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Patch& patch, std::optional<Slice> slice, int cell_px) {
    const Domain& d = patch.domain();
    int dim = d.dim();
    Point lo(dim), ext(dim);
    if (d.is_torus()) {
        for (int i = 0; i < dim; ++i) ext[i] = d.lattice().diag(i);
    } else {
        lo = d.origin();
        ext = d.extents();
    }
    int ax = 0, ay = 1;
    if (dim == 3) {
        if (!slice) throw std::invalid_argument("3D patches are rendered one slice at a time");
        if (slice->axis < 0 || slice->axis > 2) throw std::invalid_argument("slice axis out of range");
        int64_t k = slice->coord;
        if (k < lo[slice->axis] || k >= lo[slice->axis] + ext[slice->axis])
            throw std::invalid_argument("slice coordinate outside the patch");
        ax = slice->axis == 0 ? 1 : 0;
        ay = slice->axis == 2 ? 1 : 2;
    } else if (dim != 2) {
        throw std::invalid_argument("only 2D and 3D patches can be rendered");
    } else if (slice) {
        throw std::invalid_argument("2D patches take no slice");
    }
    int64_t w = ext[ax], h = ext[ay];
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * cell_px << "\" height=\"" << h * cell_px
        << "\" viewBox=\"0 0 " << w * cell_px << ' ' << h * cell_px << "\">\n";
    for (int64_t j = 0; j < h; ++j)
        for (int64_t i = 0; i < w; ++i) {
            Point p = lo;
            if (dim == 3) p[slice->axis] = slice->coord;
            p[ax] = lo[ax] + i;
            p[ay] = lo[ay] + j;
            int tile = patch.at(p);
            std::string fill = tile < 0 ? "#cccccc" : tile_fill(tile);
            std::string title = tile < 0 ? "unassigned" : patch.tileset().tile_name(tile);
            out << "<rect x=\"" << i * cell_px << "\" y=\"" << (h - 1 - j) * cell_px << "\" width=\"" << cell_px
                << "\" height=\"" << cell_px << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"0.5\">"
                << "<title>" << escape(title) << "</title></rect>\n";
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace wang
