#include "wang/sat.hpp"

#include <algorithm>

namespace wang {

namespace {

double luby(double y, int x) {
    int size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    double r = 1;
    for (int i = 0; i < seq; ++i) r *= y;
    return r;
}

}  // namespace

int CdclSolver::new_var() {
    int v = num_vars();
    assign_.push_back(-1);
    level_.push_back(0);
    reason_.push_back(-1);
    phase_.push_back(false);
    activity_.push_back(0);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
}

int CdclSolver::value(int lit) const {
    int8_t a = assign_[lit_var(lit)];
    if (a < 0) return -1;
    return a ^ (lit & 1);
}

void CdclSolver::enqueue(int lit, int reason) {
    int v = lit_var(lit);
    assign_[v] = static_cast<int8_t>(!(lit & 1));
    level_[v] = level();
    reason_[v] = reason;
    trail_.push_back(lit);
}

void CdclSolver::attach(int cref) {
    const auto& c = clauses_[cref].lits;
    watches_[c[0]].push_back({cref, c[1]});
    watches_[c[1]].push_back({cref, c[0]});
}

void CdclSolver::add_clause(std::vector<int> lits) {
    if (unsat_) return;
    cancel_until(0);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == (lits[i] ^ 1)) return;  // tautology
        int val = value(lits[i]);
        if (val == 1) return;
        if (val == -1) kept.push_back(lits[i]);
    }
    if (kept.empty()) {
        unsat_ = true;
        return;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) unsat_ = true;
        return;
    }
    clauses_.push_back({std::move(kept), 0, false, false});
    attach(static_cast<int>(clauses_.size()) - 1);
}

int CdclSolver::propagate() {
    int conflict = -1;
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        int falsel = p ^ 1;
        auto& ws = watches_[falsel];
        ++stats_.propagations;
        size_t i = 0, j = 0;
        for (; i < ws.size(); ++i) {
            Watch w = ws[i];
            if (value(w.blocker) == 1) {
                ws[j++] = w;
                continue;
            }
            Clause& cl = clauses_[w.cref];
            if (cl.deleted) continue;
            auto& c = cl.lits;
            if (c[0] == falsel) std::swap(c[0], c[1]);
            if (value(c[0]) == 1) {
                ws[j++] = {w.cref, c[0]};
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[c[1]].push_back({w.cref, c[0]});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = {w.cref, c[0]};
            if (value(c[0]) == 0) {
                conflict = w.cref;
                qhead_ = trail_.size();
                for (++i; i < ws.size(); ++i) ws[j++] = ws[i];
                break;
            }
            enqueue(c[0], w.cref);
        }
        ws.resize(j);
        if (conflict >= 0) break;
    }
    return conflict;
}

void CdclSolver::bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

void CdclSolver::bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
        for (auto& cl : clauses_)
            if (cl.learnt) cl.activity *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

bool CdclSolver::redundant(int lit) const {
    int r = reason_[lit_var(lit)];
    if (r < 0) return false;
    const auto& c = clauses_[r].lits;
    for (size_t k = 1; k < c.size(); ++k) {
        int v = lit_var(c[k]);
        if (!seen_[v] && level_[v] > 0) return false;
    }
    return true;
}

void CdclSolver::analyze(int conflict, std::vector<int>& learnt, int& back_level) {
    learnt.assign(1, -1);
    int path = 0;
    int p = -1;
    int idx = static_cast<int>(trail_.size()) - 1;
    int cref = conflict;
    do {
        Clause& cl = clauses_[cref];
        if (cl.learnt) bump_clause(cl);
        for (size_t k = (p < 0 ? 0 : 1); k < cl.lits.size(); ++k) {
            int q = cl.lits[k];
            int v = lit_var(q);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump_var(v);
            if (level_[v] >= level()) ++path;
            else learnt.push_back(q);
        }
        while (!seen_[lit_var(trail_[idx])]) --idx;
        p = trail_[idx--];
        cref = reason_[lit_var(p)];
        seen_[lit_var(p)] = 0;
        --path;
    } while (path > 0);
    learnt[0] = p ^ 1;

    std::vector<int> all(learnt.begin() + 1, learnt.end());
    size_t j = 1;
    for (size_t k = 1; k < learnt.size(); ++k)
        if (!redundant(learnt[k])) learnt[j++] = learnt[k];
    learnt.resize(j);
    for (int q : all) seen_[lit_var(q)] = 0;

    back_level = 0;
    if (learnt.size() > 1) {
        size_t best = 1;
        for (size_t k = 2; k < learnt.size(); ++k)
            if (level_[lit_var(learnt[k])] > level_[lit_var(learnt[best])]) best = k;
        std::swap(learnt[1], learnt[best]);
        back_level = level_[lit_var(learnt[1])];
    }
}

void CdclSolver::cancel_until(int lvl) {
    if (level() <= lvl) return;
    for (int k = static_cast<int>(trail_.size()) - 1; k >= trail_lim_[lvl]; --k) {
        int v = lit_var(trail_[k]);
        phase_[v] = assign_[v] == 1;
        assign_[v] = -1;
        reason_[v] = -1;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
}

void CdclSolver::heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[v]);
}

void CdclSolver::heap_up(int i) {
    int v = heap_[i];
    while (i > 0) {
        int parent = (i - 1) / 2;
        if (activity_[heap_[parent]] >= activity_[v]) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

void CdclSolver::heap_down(int i) {
    int v = heap_[i];
    int n = static_cast<int>(heap_.size());
    for (;;) {
        int c = 2 * i + 1;
        if (c >= n) break;
        if (c + 1 < n && activity_[heap_[c + 1]] > activity_[heap_[c]]) ++c;
        if (activity_[heap_[c]] <= activity_[v]) break;
        heap_[i] = heap_[c];
        heap_pos_[heap_[i]] = i;
        i = c;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
}

int CdclSolver::heap_pop() {
    int v = heap_[0];
    heap_pos_[v] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[last] = 0;
        heap_down(0);
    }
    return v;
}

int CdclSolver::pick_branch() {
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assign_[v] < 0) return phase_[v] ? pos_lit(v) : neg_lit(v);
    }
    return -1;
}

void CdclSolver::reduce_db() {
    std::vector<int> learnt;
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i)
        if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2) learnt.push_back(i);
    std::sort(learnt.begin(), learnt.end(),
              [&](int a, int b) { return clauses_[a].activity < clauses_[b].activity; });
    for (size_t k = 0; k < learnt.size() / 2; ++k) {
        Clause& c = clauses_[learnt[k]];
        int v = lit_var(c.lits[0]);
        if (reason_[v] == learnt[k] && assign_[v] >= 0) continue;  // locked
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --num_learnt_;
    }
    for (auto& ws : watches_)
        ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const Watch& w) { return clauses_[w.cref].deleted; }),
                 ws.end());
}

SatStatus CdclSolver::solve(std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (unsat_) return SatStatus::Unsat;
    cancel_until(0);
    if (propagate() >= 0) {
        unsat_ = true;
        return SatStatus::Unsat;
    }
    if (max_learnt_ == 0) max_learnt_ = std::max<size_t>(clauses_.size() / 3, 5000);
    std::vector<int> learnt;
    int restart = 0;
    for (;;) {
        uint64_t budget = static_cast<uint64_t>(luby(2, restart++) * 100);
        uint64_t conflicts_here = 0;
        for (;;) {
            int conflict = propagate();
            if (conflict >= 0) {
                ++stats_.conflicts;
                ++conflicts_here;
                if (level() == 0) {
                    unsat_ = true;
                    return SatStatus::Unsat;
                }
                int back = 0;
                analyze(conflict, learnt, back);
                cancel_until(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    clauses_.push_back({learnt, 0, true, false});
                    int cref = static_cast<int>(clauses_.size()) - 1;
                    attach(cref);
                    bump_clause(clauses_[cref]);
                    ++num_learnt_;
                    enqueue(learnt[0], cref);
                }
                var_inc_ /= 0.95;
                cla_inc_ /= 0.999;
                if (deadline && (stats_.conflicts & 255) == 0 && std::chrono::steady_clock::now() > *deadline) {
                    cancel_until(0);
                    return SatStatus::Limit;
                }
                continue;
            }
            if (conflicts_here >= budget) {
                cancel_until(0);
                break;
            }
            if (num_learnt_ >= max_learnt_ + trail_.size()) {
                reduce_db();
                max_learnt_ = max_learnt_ * 11 / 10;
            }
            int next = pick_branch();
            if (next < 0) {
                model_.assign(num_vars(), false);
                for (int v = 0; v < num_vars(); ++v) model_[v] = assign_[v] == 1;
                cancel_until(0);
                return SatStatus::Sat;
            }
            ++stats_.decisions;
            if (deadline && (stats_.decisions & 4095) == 0 && std::chrono::steady_clock::now() > *deadline) {
                cancel_until(0);
                return SatStatus::Limit;
            }
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            enqueue(next, -1);
        }
    }
}

}  // namespace wang
