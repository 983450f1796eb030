#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "wang/background.hpp"
#include "wang/formats.hpp"
#include "wang/layers.hpp"
#include "wang/machines.hpp"
#include "wang/render.hpp"
#include "wang/slope.hpp"
#include "wang/solver.hpp"

using namespace wang;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kLimit = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int64_t> split_ints(const std::string& text, char sep, const std::string& what) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, sep);) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("bad " + what + ": " + text);
        }
    }
    return out;
}

Point parse_box(const std::string& text) {
    Point p = split_ints(text, 'x', "box");
    if (p.size() < 2 || p.size() > 3) throw UsageError("box must be WxH or WxHxD");
    for (auto e : p)
        if (e <= 0) throw UsageError("box sides must be positive");
    return p;
}

std::vector<Pin> parse_pins(const std::vector<std::string>& specs, const Tileset& ts) {
    std::vector<Pin> pins;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("pin must be x,y[,z]=TILE: " + s);
        Point p = split_ints(s.substr(0, eq), ',', "pin");
        if (static_cast<int>(p.size()) != ts.dim()) throw UsageError("pin coordinates must match the dimension: " + s);
        auto tile = ts.find_tile(s.substr(eq + 1));
        if (!tile) throw UsageError("unknown tile in pin: " + s);
        pins.push_back({p, *tile, 0});
    }
    return pins;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    body(out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

int exit_for(const SolveResult& r) {
    if (r.status == SolveStatus::Limit) return kLimit;
    return r.sat() ? kOk : kNegative;
}

int report_solve(const SolveResult& r, const std::optional<std::string>& out) {
    std::cout << status_line(r) << '\n';
    if (out && r.witness) write_file(*out, [&](std::ostream& o) { write_wtp(o, (*r.witness)[0]); });
    return exit_for(r);
}

std::optional<std::string> opt(const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

void write_layer(const std::string& name, const std::string& wts_path, const std::string& wsr_path) {
    LayerExport ex = export_layer(name);
    write_file(wts_path, [&](std::ostream& o) { write_wts(o, ex.tiles); });
    if (ex.base_tiles)
        write_file(wsr_path, [&](std::ostream& o) {
            o << "# " << name << " over " << ex.base << '\n';
            write_wsr(o, ex.rel, *ex.base_tiles, ex.tiles);
        });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wang tile toolkit"};
    app.require_subcommand(1);
    std::function<int()> run;
    std::optional<int64_t> budget;
    app.add_option("--budget-ms", budget, "Wall-clock cap per solve");

    // solve
    std::string tileset, box, out, lattice, stencil, machine, patch_path, slice, vector_text, window;
    std::vector<std::string> pins;
    int64_t count = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Tile a box");
    solve_cmd->add_option("--tileset", tileset)->required();
    solve_cmd->add_option("--box", box)->required();
    solve_cmd->add_option("--pin", pins, "x,y[,z]=TILE");
    solve_cmd->add_option("--count", count, "Count solutions up to N");
    solve_cmd->add_option("--out", out, "Witness patch (WTP)");
    solve_cmd->callback([&] {
        run = [&] {
            Tileset ts = load_wts(tileset);
            SolveRequest req;
            req.stack = LayerStack(ts);
            Point ext = parse_box(box);
            if (static_cast<int>(ext.size()) != ts.dim()) throw UsageError("box dimension differs from the tileset");
            req.domain = Domain::box(ext);
            req.pins = parse_pins(pins, ts);
            req.budget_ms = budget;
            if (count > 0) {
                req.mode = SolveMode::Count;
                req.limit = count;
            }
            return report_solve(solve(req), opt(out));
        };
    });

    auto* torus_cmd = app.add_subcommand("solve-torus", "Tile a torus");
    torus_cmd->add_option("--tileset", tileset)->required();
    torus_cmd->add_option("--lattice", lattice, "\"a b; c d\" or \"a b c; d e f; g h i\"")->required();
    torus_cmd->add_option("--out", out);
    torus_cmd->callback([&] {
        run = [&] {
            Tileset ts = load_wts(tileset);
            PeriodLattice lat = parse_lattice(lattice);
            if (lat.dim() != ts.dim()) throw UsageError("lattice dimension differs from the tileset");
            SolveRequest req;
            req.stack = LayerStack(ts);
            req.domain = Domain::torus(lat);
            req.budget_ms = budget;
            return report_solve(solve(req), opt(out));
        };
    });

    auto* det_cmd = app.add_subcommand("check-det", "Check determinism for a stencil");
    det_cmd->add_option("--tileset", tileset)->required();
    det_cmd->add_option("--stencil", stencil)->required()->check(CLI::IsMember({"NW", "W"}));
    det_cmd->callback([&] {
        run = [&] {
            Tileset ts = load_wts(tileset);
            auto res = check_determinism(ts, stencil == "NW" ? Stencil::nw() : Stencil::w());
            if (res.deterministic) {
                std::cout << "deterministic\n";
                return int(kOk);
            }
            std::cout << "not deterministic";
            if (res.center_tiles)
                std::cout << ": " << ts.tile_name(res.center_tiles->first) << " and "
                          << ts.tile_name(res.center_tiles->second) << " share a stencil";
            std::cout << '\n';
            return int(kNegative);
        };
    });

    int bg_dim = 2;
    auto* bg_cmd = app.add_subcommand("build-background", "Write the aperiodic background tileset");
    bg_cmd->add_option("--dim", bg_dim)->check(CLI::IsMember({2, 3}));
    bg_cmd->add_option("--out", out)->required();
    bg_cmd->callback([&] {
        run = [&] {
            Tileset ts = bg_dim == 2 ? build_background_2d() : build_background_3d();
            write_file(out, [&](std::ostream& o) { write_wts(o, ts); });
            std::cout << "tiles=" << ts.size() << '\n';
            return int(kOk);
        };
    });

    std::string layer;
    auto* layer_cmd = app.add_subcommand("build-layer", "Write construction layer tiles and relations");
    layer_cmd->add_option("--layer", layer)
        ->required()
        ->check(CLI::IsMember({"B", "Bp", "Bpp", "C", "W", "S", "A", "skeleton"}));
    layer_cmd->add_option("--out", out, "WTS file for B, Bp, Bpp, A; directory otherwise")->required();
    layer_cmd->callback([&] {
        run = [&] {
            static const std::map<std::string, std::vector<std::string>> parts = {
                {"C", {"C_xz", "C_xy"}},
                {"W", {"W_xy", "W_xz"}},
                {"S", {"S_front", "S_top", "S_3d"}},
                {"skeleton",
                 {"bg_xy", "bg_xz", "B", "Bp", "Bpp", "C_xz", "C_xy", "W_xy", "W_xz", "S_front", "S_top", "S_3d",
                  "A"}}};
            auto it = parts.find(layer);
            if (it == parts.end()) {
                std::filesystem::path p(out);
                write_layer(layer, out, p.replace_extension(".wsr").string());
                std::cout << "wrote " << out << '\n';
                return int(kOk);
            }
            std::filesystem::create_directories(out);
            for (const auto& name : it->second) {
                std::filesystem::path dir(out);
                write_layer(name, (dir / (name + ".wts")).string(), (dir / (name + ".wsr")).string());
            }
            std::cout << "wrote " << it->second.size() << " layers to " << out << '\n';
            return int(kOk);
        };
    });

    bool cubes = false;
    auto* tm_cmd = app.add_subcommand("compile-tm", "Compile a machine to tiles");
    tm_cmd->add_option("--machine", machine)->required();
    tm_cmd->add_flag("--cubes", cubes, "3D cubes with an oracle axis");
    tm_cmd->add_option("--out", out)->required();
    tm_cmd->callback([&] {
        run = [&] {
            TuringMachine m = load_wtm(machine);
            Tileset ts = cubes ? compile_tm_to_cubes(m) : compile_tm_to_tiles(m);
            write_file(out, [&](std::ostream& o) { write_wts(o, ts); });
            std::cout << "tiles=" << ts.size() << '\n';
            return int(kOk);
        };
    });

    std::string input, oracle;
    int64_t steps = 1000;
    auto* sim_cmd = app.add_subcommand("simulate", "Run a machine");
    sim_cmd->add_option("--machine", machine)->required();
    sim_cmd->add_option("--input", input);
    sim_cmd->add_option("--oracle", oracle, "Word over 0 and 1");
    sim_cmd->add_option("--steps", steps);
    sim_cmd->callback([&] {
        run = [&] {
            TuringMachine m = load_wtm(machine);
            std::vector<int> digits;
            for (char c : oracle) {
                if (c != '0' && c != '1') throw UsageError("oracle words use 0 and 1");
                digits.push_back(c - '0');
            }
            auto tr = simulate(m, parse_word(m, input), digits, steps);
            std::string tape;
            for (const auto& s : tr.tape) tape += s;
            std::cout << "halted=" << (tr.halted ? "yes" : "no") << " accepted=" << (tr.accepted ? "yes" : "no")
                      << " t=" << tr.time << " a=" << tr.space << " b=" << tr.oracle_span << " tape=" << tape << '\n';
            return int(tr.halted ? kOk : kNegative);
        };
    });

    std::vector<int64_t> nums;
    auto* reduce_cmd = app.add_subcommand("reduce-input", "Strip common powers of two");
    reduce_cmd->add_option("values", nums, "p q r")->required()->expected(3);
    reduce_cmd->callback([&] {
        run = [&] {
            auto r = reduce_input(nums[0], nums[1], nums[2]);
            std::cout << r.p << ' ' << r.q << ' ' << r.r << ' ' << r.k << '\n';
            return int(kOk);
        };
    });

    auto* scale_cmd = app.add_subcommand("scale-witness", "Scale a period vector by the halting time");
    scale_cmd->add_option("values", nums, "p q r t")->required()->expected(4);
    scale_cmd->callback([&] {
        run = [&] {
            auto [m, n, o] = scale_witness(nums[0], nums[1], nums[2], nums[3]);
            std::cout << m << ' ' << n << ' ' << o << '\n';
            return int(kOk);
        };
    });

    bool variant = false;
    auto* slope_cmd = app.add_subcommand("slope", "Slope of a period vector");
    slope_cmd->add_option("values", nums, "p q r")->required()->expected(3);
    slope_cmd->add_flag("--variant-slope", variant, "Use (p/r, q/r)");
    slope_cmd->callback([&] {
        run = [&] {
            auto s = slope_of_vector(nums, variant ? SlopeConvention::Variant : SlopeConvention::Standard);
            std::cout << s.theta1.str() << ' ' << s.theta2.str() << '\n';
            return int(kOk);
        };
    });

    auto* periodic_cmd = app.add_subcommand("find-periodic", "Search a window with a period vector");
    periodic_cmd->add_option("--tileset", tileset)->required();
    periodic_cmd->add_option("--vector", vector_text, "p,q[,r]")->required();
    periodic_cmd->add_option("--window", window, "WxH[xD]")->required();
    periodic_cmd->add_option("--pin", pins, "x,y[,z]=TILE");
    periodic_cmd->add_option("--out", out);
    periodic_cmd->callback([&] {
        run = [&] {
            Tileset ts = load_wts(tileset);
            SolveRequest req;
            req.stack = LayerStack(ts);
            Point ext = parse_box(window);
            if (static_cast<int>(ext.size()) != ts.dim()) throw UsageError("window dimension differs from the tileset");
            req.domain = Domain::box(ext);
            req.pins = parse_pins(pins, ts);
            req.budget_ms = budget;
            auto w = find_periodic_window(req, split_ints(vector_text, ',', "vector"));
            std::cout << (w ? "witness" : "none") << '\n';
            if (w && !out.empty()) write_file(out, [&](std::ostream& o) { write_wtp(o, (*w)[0]); });
            return int(w ? kOk : kNegative);
        };
    });

    int64_t max_index = 1;
    int threads = 0;
    auto* classify_cmd = app.add_subcommand("classify", "Solve every torus up to an index");
    classify_cmd->add_option("--tileset", tileset)->required();
    classify_cmd->add_option("--max-index", max_index)->required();
    classify_cmd->add_option("--threads", threads);
    classify_cmd->callback([&] {
        run = [&] {
            Tileset ts = load_wts(tileset);
            auto rep = classify_torus_slopes(ts, max_index, threads, budget);
            std::cout << rep.str();
            bool any_limit = false, any_sat = false;
            for (const auto& e : rep.entries) {
                any_limit = any_limit || e.status == SolveStatus::Limit;
                any_sat = any_sat || e.status == SolveStatus::Sat;
            }
            return int(any_limit ? kLimit : any_sat ? kOk : kNegative);
        };
    });

    auto* render_cmd = app.add_subcommand("render", "Draw a patch as SVG");
    render_cmd->add_option("--patch", patch_path)->required();
    render_cmd->add_option("--tileset", tileset, "Tileset the patch refers to")->required();
    render_cmd->add_option("--slice", slice, "axis=k for 3D patches");
    render_cmd->add_option("--out", out)->required();
    render_cmd->callback([&] {
        run = [&] {
            auto ts = std::make_shared<const Tileset>(load_wts(tileset));
            Patch p = load_wtp(patch_path, ts);
            std::optional<Slice> sl;
            if (!slice.empty()) sl = parse_slice(slice);
            std::string svg = render_svg(p, sl);
            write_file(out, [&](std::ostream& o) { o << svg; });
            return int(kOk);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kUsage;
    } catch (const MachineFormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleOverrun& e) {
        std::cerr << "oracle overrun: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
