#include "wang/formats.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace wang {

namespace {

const char* kFaceKeys2[] = {"e", "w", "n", "s"};
const char* kFaceKeys3[] = {"xp", "xm", "yp", "ym", "zp", "zm"};

// Splits the stream into token lines, dropping comments and blank lines.
std::vector<std::vector<std::string>> token_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

int64_t to_int(const std::string& s) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw FormatError("expected an integer, got '" + s + "'");
}

void expect_header(const std::vector<std::vector<std::string>>& lines, const std::string& magic) {
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != magic || lines[0][1] != "1")
        throw FormatError("missing '" + magic + " 1' header");
}

}  // namespace

Tileset read_wts(std::istream& in) {
    auto lines = token_lines(in);
    expect_header(lines, "wts");
    int dim = 0;
    std::vector<std::string> declared;
    Tileset ts;
    bool have_ts = false;
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        if (l[0] == "dim") {
            if (l.size() != 2) throw FormatError("bad dim line");
            dim = static_cast<int>(to_int(l[1]));
            if (dim != 2 && dim != 3) throw FormatError("dim must be 2 or 3");
        } else if (l[0] == "colors") {
            declared.assign(l.begin() + 1, l.end());
        } else if (l[0] == "tile") {
            if (dim == 0) throw FormatError("tile before dim");
            if (!have_ts) {
                ts = Tileset(dim);
                for (const auto& c : declared) ts.colors().intern(c);
                have_ts = true;
            }
            if (l.size() != static_cast<size_t>(2 + 2 * dim)) throw FormatError("tile line needs name and faces");
            std::vector<std::string> faces(2 * dim);
            std::vector<bool> seen(2 * dim, false);
            for (size_t i = 2; i < l.size(); ++i) {
                auto eq = l[i].find('=');
                if (eq == std::string::npos) throw FormatError("expected key=color, got " + l[i]);
                std::string key = l[i].substr(0, eq), val = l[i].substr(eq + 1);
                int f = -1;
                for (int j = 0; j < 2 * dim; ++j)
                    if (key == (dim == 2 ? kFaceKeys2[j] : kFaceKeys3[j])) f = j;
                if (f < 0 || seen[f]) throw FormatError("bad or repeated face key " + key);
                if (!ts.colors().find(val)) throw FormatError("undeclared color " + val);
                seen[f] = true;
                faces[f] = val;
            }
            try {
                ts.add(l[1], faces);
            } catch (const std::invalid_argument& e) {
                throw FormatError(e.what());
            }
        } else {
            throw FormatError("unknown line '" + l[0] + "'");
        }
    }
    if (dim == 0) throw FormatError("missing dim");
    if (!have_ts) {
        ts = Tileset(dim);
        for (const auto& c : declared) ts.colors().intern(c);
    }
    return ts;
}

void write_wts(std::ostream& out, const Tileset& ts) {
    out << "wts 1\ndim " << ts.dim() << "\ncolors";
    for (const auto& c : ts.colors().names()) out << ' ' << c;
    out << '\n';
    if (ts.empty()) out << "# empty tileset\n";
    // 2D lines list faces in n e s w order.
    static const int order2[] = {North, East, South, West};
    for (int i = 0; i < ts.size(); ++i) {
        out << "tile " << ts.tile_name(i);
        for (int j = 0; j < ts.num_faces(); ++j) {
            int f = ts.dim() == 2 ? order2[j] : j;
            out << ' ' << (ts.dim() == 2 ? kFaceKeys2[f] : kFaceKeys3[f]) << '=' << ts.colors().name(ts.tile(i)[f]);
        }
        out << '\n';
    }
}

SuperpositionRelation read_wsr(std::istream& in, const Tileset& a, const Tileset& b) {
    auto lines = token_lines(in);
    expect_header(lines, "wsr");
    SuperpositionRelation rel;
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        if (l[0] != "allow" || l.size() != 3) throw FormatError("expected 'allow <tileA> <tileB>'");
        auto ia = a.find_tile(l[1]);
        auto ib = b.find_tile(l[2]);
        if (!ia || !ib) throw FormatError("unknown tile in allow line: " + l[1] + " " + l[2]);
        rel.pairs.push_back({*ia, *ib});
    }
    return rel;
}

void write_wsr(std::ostream& out, const SuperpositionRelation& rel, const Tileset& a, const Tileset& b) {
    out << "wsr 1\n";
    for (auto [ia, ib] : rel.pairs) out << "allow " << a.tile_name(ia) << ' ' << b.tile_name(ib) << '\n';
}

Patch read_wtp(std::istream& in, std::shared_ptr<const Tileset> ts) {
    auto lines = token_lines(in);
    expect_header(lines, "wtp");
    int dim = 0;
    std::optional<Patch> patch;
    for (size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        if (l[0] == "dim") {
            if (l.size() != 2) throw FormatError("bad dim line");
            dim = static_cast<int>(to_int(l[1]));
            if (dim != ts->dim()) throw FormatError("patch dimension differs from tileset");
        } else if (l[0] == "domain") {
            if (dim == 0) throw FormatError("domain before dim");
            if (l.size() < 2) throw FormatError("bad domain line");
            if (l[1] == "box") {
                if (l.size() != static_cast<size_t>(2 + 2 * dim)) throw FormatError("box needs origin and extents");
                Point o(dim), e(dim);
                for (int i = 0; i < dim; ++i) {
                    o[i] = to_int(l[2 + i]);
                    e[i] = to_int(l[2 + dim + i]);
                }
                try {
                    patch.emplace(ts, Domain::box(o, e));
                } catch (const std::invalid_argument& err) {
                    throw FormatError(err.what());
                }
            } else if (l[1] == "torus") {
                if (l.size() != static_cast<size_t>(2 + dim * dim)) throw FormatError("torus needs d*d integers");
                std::vector<Point> gens(dim, Point(dim));
                for (int j = 0; j < dim; ++j)
                    for (int i = 0; i < dim; ++i) gens[j][i] = to_int(l[2 + j * dim + i]);
                try {
                    patch.emplace(ts, Domain::torus(PeriodLattice(gens)));
                } catch (const std::invalid_argument& err) {
                    throw FormatError(err.what());
                }
            } else {
                throw FormatError("unknown domain kind " + l[1]);
            }
        } else if (l[0] == "cell") {
            if (!patch) throw FormatError("cell before domain");
            if (l.size() != static_cast<size_t>(2 + dim)) throw FormatError("cell needs coordinates and a tile");
            Point p(dim);
            for (int i = 0; i < dim; ++i) p[i] = to_int(l[1 + i]);
            auto t = ts->find_tile(l[1 + dim]);
            if (!t) throw FormatError("unknown tile " + l[1 + dim]);
            int64_t id = patch->domain().id(p);
            if (id < 0) throw FormatError("cell outside domain");
            patch->set(id, *t);
        } else {
            throw FormatError("unknown line '" + l[0] + "'");
        }
    }
    if (!patch) throw FormatError("missing domain");
    return std::move(*patch);
}

void write_wtp(std::ostream& out, const Patch& patch) {
    const Domain& d = patch.domain();
    out << "wtp 1\ndim " << d.dim() << "\ndomain ";
    if (d.is_torus()) {
        out << "torus";
        for (const auto& g : d.lattice().basis())
            for (auto v : g) out << ' ' << v;
    } else {
        out << "box";
        for (auto v : d.origin()) out << ' ' << v;
        for (auto v : d.extents()) out << ' ' << v;
    }
    out << '\n';
    for (int64_t i = 0; i < d.size(); ++i) {
        int t = patch.get(i);
        if (t < 0) continue;
        out << "cell";
        for (auto v : d.point(i)) out << ' ' << v;
        out << ' ' << patch.tileset().tile_name(t) << '\n';
    }
}

Tileset load_wts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_wts(in);
}

Patch load_wtp(const std::string& path, std::shared_ptr<const Tileset> ts) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_wtp(in, std::move(ts));
}

}  // namespace wang
