#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wang/patch.hpp"
#include "wang/solver.hpp"
#include "wang/tileset.hpp"

using namespace wang;

TEST_CASE("adjacency follows matching faces") {
    Tileset ts(2);
    ts.add("a", {"c", "w0", "s0", "n0"});  // east, west, north, south
    ts.add("b", {"e1", "c", "s1", "n1"});
    ts.add("d", {"e2", "x", "s2", "n2"});
    CHECK(adjacency_ok(ts, 0, 1, 0));
    CHECK_FALSE(adjacency_ok(ts, 0, 2, 0));
    CHECK_THROWS_AS(adjacency_ok(ts, 0, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(adjacency_ok(ts, 0, 1, 2), std::invalid_argument);

    Tileset cubes(3);
    cubes.add("p", {"0", "0", "0", "0", "a", "0"});
    cubes.add("q", {"0", "0", "0", "0", "0", "a"});
    CHECK(adjacency_ok(cubes, 0, 1, 2));
}

TEST_CASE("duplicate tiles are rejected") {
    Tileset ts(2);
    ts.add("a", {"1", "1", "1", "1"});
    CHECK_THROWS(ts.add("b", {"1", "1", "1", "1"}));
}

TEST_CASE("patch validity") {
    auto ts = std::make_shared<Tileset>(2);
    ts->add("a", {"r", "g", "r", "r"});
    ts->add("b", {"g", "r", "g", "g"});
    Patch single(ts, Domain::box({3, 3}));
    single.set({1, 1}, 0);
    CHECK(patch_valid(single).empty());

    Patch pair(ts, Domain::box({2, 1}));
    pair.set({0, 0}, 0);
    pair.set({1, 0}, 0);
    CHECK(patch_valid(pair).size() == 1);
    pair.set({1, 0}, 1);
    CHECK(patch_valid(pair).empty());

    Patch torus(ts, Domain::torus(PeriodLattice::identity(2)));
    torus.set({0, 0}, 0);
    CHECK(patch_valid(torus).size() == 1);  // east != west through the wrap
}

TEST_CASE("patch_valid agrees with a naive pair scan") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto ts = std::make_shared<Tileset>(testutil::random_tileset(rng, 4, 3, 2));
        Patch p(ts, Domain::box({4, 3}));
        std::uniform_int_distribution<int> pick(-1, ts->size() - 1);
        for (int64_t c = 0; c < p.domain().size(); ++c) p.set(c, pick(rng));
        size_t naive = 0;
        for (int64_t a = 0; a < p.domain().size(); ++a)
            for (int64_t b = 0; b < p.domain().size(); ++b) {
                Point pa = p.domain().point(a), pb = p.domain().point(b);
                for (int ax = 0; ax < 2; ++ax) {
                    Point s = pa;
                    s[ax] += 1;
                    if (s == pb && p.get(a) >= 0 && p.get(b) >= 0 && !adjacency_ok(*ts, p.get(a), p.get(b), ax))
                        ++naive;
                }
            }
        CHECK(patch_valid(p).size() == naive);
    }
}

TEST_CASE("pattern occurrence") {
    auto ts = std::make_shared<Tileset>(2);
    ts->add("a", {"1", "1", "1", "1"});
    ts->add("b", {"2", "2", "2", "2"});
    Patch hay(ts, Domain::box({3, 2}));
    for (int64_t c = 0; c < 6; ++c) hay.set(c, static_cast<int>(c % 2));
    Patch one(ts, Domain::box({1, 1}));
    one.set({0, 0}, hay.get(4));
    CHECK(pattern_occurs(one, hay));
    CHECK(pattern_occurs(hay, hay));
    Patch big(ts, Domain::box({4, 2}));
    for (int64_t c = 0; c < 8; ++c) big.set(c, 0);
    CHECK_FALSE(pattern_occurs(big, hay));
    auto other = std::make_shared<Tileset>(2);
    other->add("z", {"9", "9", "9", "9"});
    Patch foreign(other, Domain::box({1, 1}));
    CHECK_THROWS_AS(pattern_occurs(foreign, hay), std::invalid_argument);
}

TEST_CASE("product tiles and adjacency are componentwise") {
    std::mt19937_64 rng(5);
    Tileset a = testutil::random_tileset(rng, 2, 2, 2);
    Tileset b = testutil::random_tileset(rng, 3, 2, 2);
    CHECK(product(a, b, SuperpositionRelation::full(a.size(), b.size())).size() == a.size() * b.size());
    CHECK(product(a, b, {}).empty());
    CHECK_THROWS_AS(product(a, Tileset(3), {}), std::invalid_argument);

    for (int trial = 0; trial < 40; ++trial) {
        Tileset x = testutil::random_tileset(rng, 1 + trial % 8, 3, 2 + trial % 2);
        Tileset y = testutil::random_tileset(rng, 1 + (trial * 3) % 8, 3, x.dim());
        auto rel = SuperpositionRelation::full(x.size(), y.size());
        Tileset p = product(x, y, rel);
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j)
                for (int ax = 0; ax < p.dim(); ++ax) {
                    auto [xi, yi] = rel.pairs[i];
                    auto [xj, yj] = rel.pairs[j];
                    CHECK(adjacency_ok(p, i, j, ax) ==
                          (adjacency_ok(x, xi, xj, ax) && adjacency_ok(y, yi, yj, ax)));
                }
    }
}

TEST_CASE("disjoint union separates components") {
    Tileset one(2);
    one.add("a", {"c", "c", "d", "d"});
    Tileset twice = disjoint_union({one, one});
    CHECK(twice.size() == 2);
    CHECK_FALSE(adjacency_ok(twice, 0, 1, 0));
    SolveRequest req;
    req.domain = Domain::torus(PeriodLattice({{2, 0}, {0, 2}}));
    req.mode = SolveMode::Count;
    req.limit = 100;
    req.stack = LayerStack(one);
    int64_t single = solve(req).count;
    req.stack = LayerStack(twice);
    CHECK(solve(req).count == 2 * single);

    Tileset bad(2);
    bad.add("x", {"p", "q", "r", "r"});  // east != west: no torus
    req.stack = LayerStack(disjoint_union({one, bad}));
    CHECK(solve(req).sat());
    req.stack = LayerStack(disjoint_union({bad, bad}));
    CHECK_FALSE(solve(req).sat());
    CHECK_THROWS_AS(disjoint_union({one, Tileset(3)}), std::invalid_argument);
}

TEST_CASE("lifted tilesets are constant along the duplication axis") {
    Tileset mono(2);
    mono.add("a", {"a", "a", "a", "a"});
    Tileset lifted = lift_2d_to_3d(mono, Plane::XY);
    CHECK(lifted.size() == 1);
    SolveRequest req;
    req.stack = LayerStack(lifted);
    req.domain = Domain::box({3, 3, 3});
    CHECK(solve(req).sat());

    Tileset no_pair(2);
    no_pair.add("a", {"p", "q", "n", "n"});
    req.stack = LayerStack(lift_2d_to_3d(no_pair, Plane::XZ));
    req.domain = Domain::box({2, 1, 1});
    CHECK_FALSE(solve(req).sat());

    std::mt19937_64 rng(3);
    for (Plane pl : {Plane::XY, Plane::XZ, Plane::YZ}) {
        Tileset base = testutil::random_tileset(rng, 4, 2, 2);
        req.stack = LayerStack(lift_2d_to_3d(base, pl));
        req.domain = Domain::box({2, 2, 2});
        req.mode = SolveMode::Enumerate;
        req.limit = 100000;
        auto res = solve(req);
        int n = plane_normal_axis(pl);
        for (const auto& sol : res.solutions) {
            const Patch& p = sol[0];
            for (int64_t c = 0; c < p.domain().size(); ++c) {
                int64_t up = p.domain().neighbor(c, n, true);
                if (up >= 0) CHECK(p.get(c) == p.get(up));
            }
        }
    }
}

TEST_CASE("determinism checker") {
    Tileset ts(2);
    ts.add("a", {"w", "w", "n", "n"});
    ts.add("b", {"x", "w", "n", "n"});
    // Faces order: east, west, north, south. Same west and north.
    auto r = check_determinism(ts, Stencil::nw());
    CHECK_FALSE(r.deterministic);
    REQUIRE(r.center_tiles);
    CHECK(r.center_tiles->first != r.center_tiles->second);

    Tileset single(2);
    single.add("a", {"x", "x", "y", "y"});
    CHECK(check_determinism(single, Stencil::nw()).deterministic);
    CHECK(check_determinism(single, Stencil::w()).deterministic);
}
