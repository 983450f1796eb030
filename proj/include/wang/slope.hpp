#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wang/lattice.hpp"
#include "wang/solver.hpp"

namespace wang {

// Exact rational with infinity: den == 0 and num == 1 is infinity; num == 0
// and den == 0 is the indeterminate 0/0.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    // Reduces to lowest terms with a non-negative denominator.
    Rational(int64_t n, int64_t d);

    bool is_infinite() const { return den == 0 && num != 0; }
    bool is_indeterminate() const { return den == 0 && num == 0; }
    bool operator==(const Rational&) const = default;
    // "3", "-1/2", "inf", "0/0".
    std::string str() const;
};

enum class SlopeConvention {
    Standard,  // (p/r, p/q)
    Variant,   // (p/r, q/r)
};

struct Slope {
    Rational theta1, theta2;
    bool operator==(const Slope&) const = default;
    std::string str() const;  // "(theta1, theta2)"
};

// Slope of the period vector (p, q, r). Throws std::invalid_argument for the
// zero vector or a vector that is not 3D.
Slope slope_of_vector(const Point& v, SlopeConvention convention = SlopeConvention::Standard);

// Searches a box window for a valid patch with cell(x) = cell(x + v) on every
// layer whenever both cells lie in the window. `base` supplies the stack, the
// box domain and any extra pins or boundary colors. A witness is evidence of,
// not proof of, a configuration with period v. Throws std::invalid_argument
// when the domain is not a box, has an empty side, or holds no pair (x, x+v).
std::optional<LayeredPatch> find_periodic_window(const SolveRequest& base, const Point& v);
std::optional<LayeredPatch> find_periodic_window(const Tileset& ts, const Point& v, const Point& window);

// Ties used by find_periodic_window.
std::vector<Tie> periodic_window_ties(const Domain& window, const Point& v);

struct TorusSweepEntry {
    PeriodLattice lattice;
    SolveStatus status = SolveStatus::Unsat;
    std::optional<PeriodLattice> periods;  // of the witness, when satisfiable
};

struct TorusSweepReport {
    std::vector<TorusSweepEntry> entries;  // in enumeration order
    // Lines `lattice <form> status=<s> periods=<form|->`, then one
    // `periods <form> count=<n>` line per realized period lattice, sorted.
    std::string str() const;
};

// Solves every lattice of index <= max_index. Entries come back in the fixed
// enumeration order whatever the number of worker threads.
TorusSweepReport classify_torus_slopes(const LayerStack& stack, int64_t max_index, int threads = 0,
                                       std::optional<int64_t> budget_ms = std::nullopt);
TorusSweepReport classify_torus_slopes(const Tileset& ts, int64_t max_index, int threads = 0,
                                       std::optional<int64_t> budget_ms = std::nullopt);

}  // namespace wang
