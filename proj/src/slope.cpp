#include "wang/slope.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wang {

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) {
        num = n == 0 ? 0 : 1;
        den = 0;
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    if (is_indeterminate()) return "0/0";
    if (is_infinite()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Slope::str() const { return "(" + theta1.str() + ", " + theta2.str() + ")"; }

Slope slope_of_vector(const Point& v, SlopeConvention convention) {
    if (v.size() != 3) throw std::invalid_argument("slope needs a 3D vector");
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw std::invalid_argument("the zero vector has no slope");
    const int64_t p = v[0], q = v[1], r = v[2];
    if (convention == SlopeConvention::Variant) return {Rational(p, r), Rational(q, r)};
    return {Rational(p, r), Rational(p, q)};
}

std::vector<Tie> periodic_window_ties(const Domain& window, const Point& v) {
    std::vector<Tie> ties;
    for (int64_t id = 0; id < window.size(); ++id) {
        Point a = window.point(id);
        Point b = a;
        for (size_t i = 0; i < b.size(); ++i) b[i] += v[i];
        if (window.id(b) >= 0) ties.push_back({a, b, -1});
    }
    return ties;
}

std::optional<LayeredPatch> find_periodic_window(const SolveRequest& base, const Point& v) {
    const Domain& d = base.domain;
    if (d.is_torus()) throw std::invalid_argument("periodic windows are boxes");
    if (static_cast<int>(v.size()) != d.dim()) throw std::invalid_argument("vector and window differ in dimension");
    for (int64_t e : d.extents())
        if (e <= 0) throw std::invalid_argument("window has an empty side");
    if (std::all_of(v.begin(), v.end(), [](int64_t c) { return c == 0; }))
        throw std::invalid_argument("period vector is zero");
    std::vector<Tie> ties = periodic_window_ties(d, v);
    if (ties.empty()) throw std::invalid_argument("window holds no pair of cells one period apart");
    SolveRequest req = base;
    req.mode = SolveMode::FindOne;
    req.ties.insert(req.ties.end(), ties.begin(), ties.end());
    SolveResult res = solve(req);
    if (!res.sat()) return std::nullopt;
    return res.witness;
}

std::optional<LayeredPatch> find_periodic_window(const Tileset& ts, const Point& v, const Point& window) {
    if (static_cast<int>(window.size()) != ts.dim()) throw std::invalid_argument("window and tileset differ in dimension");
    SolveRequest req;
    req.stack = LayerStack(ts);
    req.domain = Domain::box(window);
    return find_periodic_window(req, v);
}

std::string TorusSweepReport::str() const {
    std::ostringstream out;
    std::map<PeriodLattice, int64_t> realized;
    for (const auto& e : entries) {
        out << "lattice " << e.lattice.str() << " status=" << status_name(e.status)
            << " periods=" << (e.periods ? e.periods->str() : "-") << '\n';
        if (e.periods) ++realized[*e.periods];
    }
    for (const auto& [lat, n] : realized) out << "periods " << lat.str() << " count=" << n << '\n';
    return out.str();
}

TorusSweepReport classify_torus_slopes(const LayerStack& stack, int64_t max_index, int threads,
                                       std::optional<int64_t> budget_ms) {
    if (max_index < 1) throw std::invalid_argument("index bound must be at least 1");
    TorusSweepReport report;
    for (auto& lat : enumerate_lattices(stack.dim(), max_index)) report.entries.push_back({lat, SolveStatus::Unsat, {}});
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, static_cast<int>(report.entries.size()));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < report.entries.size(); i = next++) {
            auto& e = report.entries[i];
            SolveRequest req;
            req.stack = stack;
            req.domain = Domain::torus(e.lattice);
            req.budget_ms = budget_ms;
            SolveResult res = solve(req);
            e.status = res.status;
            if (res.sat()) e.periods = periods_of_torus_config(*res.witness);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return report;
}

TorusSweepReport classify_torus_slopes(const Tileset& ts, int64_t max_index, int threads,
                                       std::optional<int64_t> budget_ms) {
    return classify_torus_slopes(LayerStack(ts), max_index, threads, budget_ms);
}

}  // namespace wang
