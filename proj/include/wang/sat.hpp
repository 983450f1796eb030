#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace wang {

// Literal for variable v: 2v when positive, 2v+1 when negated.
inline int pos_lit(int v) { return 2 * v; }
inline int neg_lit(int v) { return 2 * v + 1; }
inline int lit_var(int l) { return l >> 1; }

struct SatStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
};

enum class SatStatus { Sat, Unsat, Limit };

// Narrow interface the tiling encoder talks to.
class SatBackend {
public:
    virtual ~SatBackend() = default;
    virtual int new_var() = 0;
    virtual int num_vars() const = 0;
    virtual void add_clause(std::vector<int> lits) = 0;
    virtual SatStatus solve(std::optional<std::chrono::steady_clock::time_point> deadline) = 0;
    virtual bool model_value(int var) const = 0;
    virtual const SatStats& stats() const = 0;
};

// Conflict-driven clause learning: two watched literals, first-UIP learning,
// activity-ordered decisions, Luby restarts, phase saving. Clauses may be
// added between solve calls.
class CdclSolver : public SatBackend {
public:
    int new_var() override;
    int num_vars() const override { return static_cast<int>(assign_.size()); }
    void add_clause(std::vector<int> lits) override;
    SatStatus solve(std::optional<std::chrono::steady_clock::time_point> deadline) override;
    bool model_value(int var) const override { return model_[var]; }
    const SatStats& stats() const override { return stats_; }

private:
    struct Clause {
        std::vector<int> lits;
        double activity = 0;
        bool learnt = false;
        bool deleted = false;
    };
    struct Watch {
        int cref;
        int blocker;
    };

    int value(int lit) const;  // 1 true, 0 false, -1 unassigned
    int level() const { return static_cast<int>(trail_lim_.size()); }
    void enqueue(int lit, int reason);
    int propagate();  // conflicting clause or -1
    void analyze(int conflict, std::vector<int>& learnt, int& back_level);
    bool redundant(int lit) const;
    void cancel_until(int lvl);
    int pick_branch();
    void attach(int cref);
    void bump_var(int v);
    void bump_clause(Clause& c);
    void reduce_db();

    void heap_insert(int v);
    void heap_up(int i);
    void heap_down(int i);
    int heap_pop();

    std::vector<Clause> clauses_;
    std::vector<std::vector<Watch>> watches_;
    std::vector<int8_t> assign_;  // -1 unassigned, else 0/1
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<bool> phase_;
    std::vector<double> activity_;
    std::vector<char> seen_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    std::vector<bool> model_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    size_t num_learnt_ = 0;
    size_t max_learnt_ = 0;
    bool unsat_ = false;
    SatStats stats_;
};

}  // namespace wang
