// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "layer_cases.hpp"
#include "test_util.hpp"
#include "wang/background.hpp"
#include "wang/layers.hpp"
#include "wang/machines.hpp"
#include "wang/slope.hpp"
#include "wang/solver.hpp"

using namespace wang;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Determinism of the background for the left/top-left stencil.
Outcome determinism() {
    auto t0 = Clock::now();
    Tileset bg = build_background_2d();
    auto r = check_determinism(bg, Stencil::w());
    double s = seconds_since(t0);
    std::ostringstream d;
    d << "deterministic=" << (r.deterministic ? "yes" : "no");
    if (r.center_tiles)
        d << " (tiles " << bg.tile_name(r.center_tiles->first) << " and " << bg.tile_name(r.center_tiles->second)
          << " fit the same stencil)";
    d << " time=" << s << "s";
    return {r.deterministic && s < 1.0, d.str()};
}

// 2. No torus of index <= 36; a free 12x12 box is tileable.
Outcome aperiodicity() {
    auto t0 = Clock::now();
    Tileset bg = build_background_2d();
    auto rep = classify_torus_slopes(bg, 36);
    int64_t sat = 0, limit = 0;
    for (const auto& e : rep.entries) {
        sat += e.status == SolveStatus::Sat;
        limit += e.status == SolveStatus::Limit;
    }
    SolveRequest box;
    box.stack = LayerStack(bg);
    box.domain = Domain::box({12, 12});
    auto r = solve(box);
    bool box_ok = r.sat() && patch_valid((*r.witness)[0]).empty();
    double s = seconds_since(t0);
    std::ostringstream d;
    d << "lattices=" << rep.entries.size() << " satisfiable=" << sat << " limit=" << limit
      << " box12x12=" << (box_ok ? "sat" : "not sat") << " time=" << s << "s";
    return {sat == 0 && limit == 0 && box_ok && s < 600, d.str()};
}

// 3. Solver against the reference search.
Outcome oracle_equivalence() {
    std::mt19937_64 rng(2024);
    int64_t calls = 0, disagreements = 0;
    auto lattices = enumerate_lattices(2, 9);
    for (int i = 0; i < 50; ++i) {
        int tiles = 1 + static_cast<int>(rng() % 4), colors = 1 + static_cast<int>(rng() % 4);
        Tileset ts = testutil::random_tileset(rng, tiles, colors, 2);
        std::vector<Domain> domains = {Domain::box({3, 3})};
        for (const auto& lat : lattices) domains.push_back(Domain::torus(lat));
        for (const auto& d : domains) {
            SolveRequest req;
            req.stack = LayerStack(ts);
            req.domain = d;
            req.mode = SolveMode::Count;
            req.limit = 1 << 20;
            auto a = solve(req);
            auto b = brute_solve(req);
            ++calls;
            if (a.status != b.status || a.count != b.count) ++disagreements;
        }
    }
    std::ostringstream d;
    d << "tilesets=50 comparisons=" << calls << " disagreements=" << disagreements;
    return {disagreements == 0, d.str()};
}

// 4. Every solution of layer B on the test tori is a union of yz planes.
Outcome layer_b_forcing() {
    Tileset b = layer_B();
    const std::vector<PeriodLattice> lattices = {
        PeriodLattice({{3, 0, 0}, {0, 2, 0}, {0, 0, 2}}), PeriodLattice({{4, 1, 0}, {0, 2, 0}, {0, 0, 1}}),
        PeriodLattice({{5, 0, 1}, {0, 1, 0}, {0, 0, 2}}), PeriodLattice({{4, 1, 1}, {0, 2, 1}, {0, 0, 2}}),
        PeriodLattice::diagonal({6, 2, 2})};
    int64_t solutions = 0, exceptions = 0;
    bool complete = true;
    for (const auto& lat : lattices) {
        SolveRequest req;
        req.stack = LayerStack(b);
        req.domain = Domain::torus(lat);
        req.mode = SolveMode::Enumerate;
        req.limit = 100000;
        auto r = solve(req);
        complete = complete && r.status != SolveStatus::Limit;
        for (const auto& sol : r.solutions) {
            ++solutions;
            const Patch& p = sol[0];
            const Domain& d = p.domain();
            auto black = [&](int64_t id) { return p.tileset().tile_name(p.get(id)) == "black"; };
            bool ok = true;
            for (int64_t id = 0; id < d.size(); ++id) {
                if (!black(id)) continue;
                for (bool plus : {true, false}) {
                    ok = ok && black(d.neighbor(id, 1, plus)) && black(d.neighbor(id, 2, plus));
                    ok = ok && !black(d.neighbor(id, 0, plus));
                }
            }
            exceptions += !ok;
        }
    }
    std::ostringstream d;
    d << "lattices=" << lattices.size() << " solutions=" << solutions << " exceptions=" << exceptions;
    return {complete && solutions > 0 && exceptions == 0, d.str()};
}

// 5. Pinned rectangles are tileable exactly when square.
Outcome square_forcing() {
    int calls = 0, mismatches = 0;
    for (int64_t w = 2; w <= 6; ++w)
        for (int64_t h = 2; h <= 6; ++h) {
            ++calls;
            if (solve(layercases::rectangle_request(w, h)).sat() != (w == h)) ++mismatches;
        }
    std::ostringstream d;
    d << "calls=" << calls << " mismatches=" << mismatches;
    return {calls == 25 && mismatches == 0, d.str()};
}

// 6. Skeleton rigidity on the sheared torus.
Outcome skeleton_rigidity() {
    auto t0 = Clock::now();
    SolveRequest req;
    req.stack = assemble_skeleton({"B", "Bp", "Bpp", "C", "W"});
    req.domain = Domain::torus(PeriodLattice({{4, 2, 1}, {0, 4, 0}, {0, 0, 4}}));
    req.mode = SolveMode::Enumerate;
    req.limit = 1000;
    req.projection = {req.stack.layer_index("B"), req.stack.layer_index("Bp"), req.stack.layer_index("Bpp")};
    auto r = solve(req);
    int64_t wrong = 0;
    for (const auto& sol : r.solutions) {
        try {
            if (!(extract_geometry(req.stack, sol) == CubeGeometry{4, 2, 1})) ++wrong;
        } catch (const AnalysisError&) {
            ++wrong;
        }
    }
    SolveRequest off = req;
    off.mode = SolveMode::FindOne;
    off.projection.clear();
    off.domain = Domain::torus(PeriodLattice({{4, 2, 1}, {0, 4, 0}, {0, 0, 5}}));
    auto r5 = solve(off);
    std::ostringstream d;
    d << "layers=bg+B+Bp+Bpp+C+W structures=" << r.count << " geometry!=(4,2,1): " << wrong
      << " z-period-5=" << status_name(r5.status) << " time=" << seconds_since(t0) << "s";
    return {r.status == SolveStatus::Sat && wrong == 0 && r5.status == SolveStatus::Unsat, d.str()};
}

// 7. Offset and size synchronization between neighbor slabs.
Outcome layer_w_rigidity() {
    struct Case {
        int64_t left, right, dy, dz, n, ry, rz;
        bool sat;
        std::pair<int64_t, int64_t> counts;
    };
    const Case cases[] = {
        {3, 3, 2, 0, 4, 2, 0, false, {}}, {3, 3, 2, 0, 4, 1, 0, true, {1, 0}},
        {3, 3, 0, 2, 4, 0, 0, false, {}}, {3, 3, 0, 2, 4, 0, 3, true, {0, 3}},
        {1, 2, 0, 0, 6, 0, 0, false, {}}, {2, 2, 0, 0, 6, 0, 0, true, {0, 0}},
        {3, 3, 2, 2, 4, 1, 0, false, {}}, {3, 3, 2, 2, 4, 1, 1, true, {1, 1}},
    };
    int calls = 0, mismatches = 0;
    for (const auto& c : cases) {
        auto req = layercases::two_slab_request(c.left, c.right, c.dy, c.dz, c.n, c.ry, c.rz, true);
        auto r = solve(req);
        ++calls;
        if (r.sat() != c.sat) {
            ++mismatches;
        } else if (r.sat() && unary_border_counts(req.stack, *r.witness) != c.counts) {
            ++mismatches;
        }
    }
    std::ostringstream d;
    d << "calls=" << calls << " (" << calls / 2 << " mismatched/matched pairs) mismatches=" << mismatches;
    return {calls >= 6 && mismatches == 0, d.str()};
}

// 8. Capped space-time patches against the simulator.
Outcome tm_equivalence() {
    const std::vector<std::pair<std::string, std::string>> machines = {
        {"immediate-accept",
         "wtm 1\nstates q0 qa qr\nalphabet _ 1\ninit q0\naccept qa\nreject qr\nq0 _ -> qa _ N\nq0 1 -> qa 1 N\n"},
        {"unary-increment",
         "wtm 1\nstates q0 qa qr\nalphabet _ 1\ninit q0\naccept qa\nreject qr\nq0 1 -> q0 1 R\nq0 _ -> qa 1 N\n"},
        {"right-mover",
         "wtm 1\nstates q0 qa qr\nalphabet _ 1\ninit q0\naccept qa\nreject qr\nq0 _ -> q0 _ R\nq0 1 -> q0 1 R\n"},
    };
    const std::vector<std::string> inputs = {"", "1", "11", "111", "1111"};
    int64_t checks = 0, mismatches = 0;
    for (const auto& [name, text] : machines) {
        std::istringstream in(text);
        TuringMachine m = read_wtm(in);
        Tileset ts = compile_tm_to_tiles(m);
        for (const auto& word : inputs) {
            auto input = parse_word(m, word);
            int64_t min_a = std::max<int64_t>(1, input.size());
            for (int64_t a = min_a; a <= min_a + 2; ++a)
                for (int64_t t = 0; t <= 6; ++t) {
                    auto tr = simulate(m, input, {}, t == 0 ? 1 : t);
                    bool within = tr.halted && tr.time <= t && tr.space <= a;
                    auto res = solve(capped_tm_request(m, ts, input, a, t));
                    ++checks;
                    if (res.sat() != within) {
                        ++mismatches;
                        continue;
                    }
                    if (!res.sat() || tr.time != t || tr.space != a) continue;
                    const Patch& p = (*res.witness)[0];
                    for (int64_t y = 0; y <= t; ++y)
                        for (int64_t x = 0; x < a + 2; ++x)
                            if (!(decode_tm_tile(m, ts, p.at({x, y})) == tr.grid[y][x])) {
                                ++mismatches;
                                y = t + 1;
                                break;
                            }
                }
        }
    }
    std::ostringstream d;
    d << "machines=3 inputs=5 capped checks=" << checks << " mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

// 9. Power-of-two reduction and two halving passes.
Outcome layer_p_arithmetic() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int64_t> pick(1, 1 << 16);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        int64_t shift = static_cast<int64_t>(rng() % 6);
        int64_t p = std::min<int64_t>(pick(rng) << shift, 1 << 16);
        int64_t q = std::min<int64_t>(pick(rng) << shift, 1 << 16);
        int64_t r = std::min<int64_t>(pick(rng) << shift, 1 << 16);
        int k = std::min({std::countr_zero(static_cast<uint64_t>(p)), std::countr_zero(static_cast<uint64_t>(q)),
                          std::countr_zero(static_cast<uint64_t>(r))});
        ReducedInput expected{p >> k, q >> k, r >> k, k};
        if (!(reduce_input(p, q, r) == expected)) ++bad;
    }
    Transducer t = build_halving_transducer();
    Tileset tiles = compile_transducer_to_tiles(t);
    auto res = solve(transducer_request(t, tiles, to_lsb_bits(12, 5), 2));
    uint64_t top = 0;
    if (res.sat()) {
        std::vector<int> bits;
        const Patch& p = (*res.witness)[0];
        for (int64_t x = 0; x < 5; ++x) bits.push_back(std::stoi(tiles.colors().name(tiles.tile(p.at({x, 1}))[North])));
        top = from_lsb_bits(bits);
    }
    std::ostringstream d;
    d << "reduce_input mismatches=" << bad << "/100 two-pass(12)=" << (res.sat() ? std::to_string(top) : "unsat");
    return {bad == 0 && res.sat() && top == 3, d.str()};
}

// 10. Scaling by the halting time keeps the slope.
Outcome scale_witness_slope() {
    std::mt19937_64 rng(10);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        int64_t p = 1 + rng() % 1000, q = 1 + rng() % 1000, r = 1 + rng() % 1000, t = 1 + rng() % 100000;
        auto [m, n, o] = scale_witness(p, q, r, t);
        if (!(slope_of_vector({m, n, o}) == slope_of_vector({p, q, r}))) ++bad;
    }
    bool spot = scale_witness(3, 2, 1, 5) == std::tuple<int64_t, int64_t, int64_t>{24, 16, 8};
    std::ostringstream d;
    d << "slope changes=" << bad << "/100 (3,2,1,5)->" << (spot ? "(24,16,8)" : "wrong");
    return {bad == 0 && spot, d.str()};
}

// 11. Slope table.
Outcome slope_table() {
    struct Row {
        Point v;
        Rational t1, t2;
    };
    const Row rows[] = {
        {{6, 3, 2}, Rational(3, 1), Rational(2, 1)}, {{2, 4, 0}, Rational(1, 0), Rational(1, 2)},
        {{4, 2, 1}, Rational(4, 1), Rational(2, 1)}, {{3, 0, 5}, Rational(3, 5), Rational(1, 0)},
        {{5, 0, 0}, Rational(1, 0), Rational(1, 0)}, {{-4, 6, 8}, Rational(-1, 2), Rational(-2, 3)},
        {{0, 2, 3}, Rational(0, 1), Rational(0, 1)},
    };
    int bad = 0;
    for (const auto& r : rows)
        if (!(slope_of_vector(r.v) == Slope{r.t1, r.t2})) ++bad;
    std::ostringstream d;
    d << "rows=" << std::size(rows) << " wrong=" << bad;
    return {bad == 0, d.str()};
}

// 12. Periodic window on the skeleton, then an independent recheck.
Outcome periodic_window() {
    auto t0 = Clock::now();
    const Point v{4, 2, 1};
    SolveRequest req;
    std::set<std::string> layers(skeleton_layer_names().begin(), skeleton_layer_names().end());
    req.stack = assemble_skeleton(layers);
    req.domain = Domain::box({8, 8, 8});
    req.pins = {make_pin(req.stack, "B", {0, 0, 0}, "black"), make_pin(req.stack, "Bpp", {1, 0, 0}, "strip"),
                make_pin(req.stack, "Bp", {1, 0, 0}, "strip")};
    auto w = find_periodic_window(req, v);
    if (!w) return {false, "no witness"};
    const LayeredPatch& lp = *w;
    const Domain& d = lp[0].domain();
    int64_t violations = 0;
    for (const auto& p : lp) {
        violations += static_cast<int64_t>(patch_valid(p).size());
        if (!p.full()) ++violations;
    }
    for (const auto& link : req.stack.links)
        for (int64_t id = 0; id < d.size(); ++id)
            if (!link.rel.allows(lp[link.lower].get(id), lp[link.upper].get(id))) ++violations;
    int64_t pairs = 0;
    for (int64_t id = 0; id < d.size(); ++id) {
        Point b = d.point(id);
        for (int i = 0; i < 3; ++i) b[i] += v[i];
        int64_t j = d.id(b);
        if (j < 0) continue;
        ++pairs;
        for (const auto& p : lp)
            if (p.get(id) != p.get(j)) ++violations;
    }
    std::string geometry;
    bool geometry_ok = false;
    try {
        auto g = extract_geometry(req.stack, lp);
        geometry = "(" + std::to_string(g.size) + "," + std::to_string(g.dy) + "," + std::to_string(g.dz) + ")";
        geometry_ok = g == CubeGeometry{4, 2, 1};
    } catch (const AnalysisError& e) {
        geometry = e.what();
    }
    std::ostringstream out;
    out << "layers=full skeleton window=8x8x8 pairs=" << pairs << " violations=" << violations
        << " geometry=" << geometry << " time=" << seconds_since(t0) << "s";
    return {violations == 0 && geometry_ok, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
    // Optional arguments select criteria by number.
    std::set<size_t> only;
    for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"determinism of the background (W stencil)", determinism},
        {"desk-scale aperiodicity of the background", aperiodicity},
        {"solver agrees with the reference search", oracle_equivalence},
        {"layer B forces full yz planes", layer_b_forcing},
        {"layer C forces squares", square_forcing},
        {"skeleton rigidity on the sheared torus", skeleton_rigidity},
        {"layer W synchronizes sizes and offsets", layer_w_rigidity},
        {"machine compiler matches the simulator", tm_equivalence},
        {"power-of-two reduction and halving", layer_p_arithmetic},
        {"scale witness preserves slope", scale_witness_slope},
        {"slope arithmetic table", slope_table},
        {"periodic window on the skeleton", periodic_window},
    };
    int failed = 0;
    size_t ran = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        ++ran;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
                  << " - " << o.detail << std::endl;
    }
    std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
