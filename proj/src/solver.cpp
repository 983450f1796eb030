#include "wang/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wang/sat.hpp"

namespace wang {

LayerStack::LayerStack(std::shared_ptr<const Tileset> single) { add_layer("main", std::move(single)); }

LayerStack::LayerStack(const Tileset& single) { add_layer("main", std::make_shared<const Tileset>(single)); }

int LayerStack::add_layer(const std::string& name, std::shared_ptr<const Tileset> ts) {
    if (!layers.empty() && ts->dim() != dim()) throw std::invalid_argument("layer dimension mismatch");
    if (layer_index(name) >= 0) throw std::invalid_argument("duplicate layer " + name);
    layers.push_back(std::move(ts));
    names.push_back(name);
    return static_cast<int>(layers.size()) - 1;
}

int LayerStack::layer_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

void LayerStack::link(int lower, int upper, SuperpositionRelation rel) {
    int n = static_cast<int>(layers.size());
    if (lower < 0 || upper < 0 || lower >= n || upper >= n || lower == upper)
        throw std::invalid_argument("bad layer link");
    for (auto [a, b] : rel.pairs)
        if (a < 0 || b < 0 || a >= layers[lower]->size() || b >= layers[upper]->size())
            throw std::invalid_argument("relation index out of range");
    links.push_back({lower, upper, std::move(rel)});
}

Tileset LayerStack::flatten() const {
    if (layers.empty()) throw std::invalid_argument("empty stack");
    // Enumerate consistent tuples layer by layer.
    std::vector<std::vector<int>> tuples{{}};
    for (size_t l = 0; l < layers.size(); ++l) {
        std::vector<std::vector<int>> next;
        for (const auto& tup : tuples)
            for (int t = 0; t < layers[l]->size(); ++t) {
                bool ok = true;
                for (const auto& lk : links) {
                    if (lk.upper == static_cast<int>(l) && lk.lower < static_cast<int>(l))
                        ok = lk.rel.allows(tup[lk.lower], t);
                    else if (lk.lower == static_cast<int>(l) && lk.upper < static_cast<int>(l))
                        ok = lk.rel.allows(t, tup[lk.upper]);
                    if (!ok) break;
                }
                if (!ok) continue;
                auto n = tup;
                n.push_back(t);
                next.push_back(std::move(n));
            }
        tuples = std::move(next);
    }
    Tileset out(dim());
    for (const auto& tup : tuples) {
        std::string name;
        std::vector<std::string> faces(2 * dim());
        for (size_t l = 0; l < layers.size(); ++l) {
            name += (l ? "|" : "") + layers[l]->tile_name(tup[l]);
            for (int f = 0; f < 2 * dim(); ++f)
                faces[f] += (l ? "|" : "") + layers[l]->colors().name(layers[l]->tile(tup[l])[f]);
        }
        if (layers.size() > 1) {
            name = "(" + name + ")";
            for (auto& f : faces) f = "(" + f + ")";
        }
        out.add(name, faces);
    }
    return out;
}

namespace {

class Encoder {
public:
    Encoder(const SolveRequest& req, SatBackend& sat) : req_(req), sat_(sat), dom_(req.domain) {}

    void build() {
        const auto& st = req_.stack;
        if (st.layers.empty()) throw std::invalid_argument("solve needs at least one layer");
        if (st.dim() != dom_.dim()) throw std::invalid_argument("domain dimension differs from tileset");
        int64_t n = dom_.size();
        int L = static_cast<int>(st.layers.size());
        base_.assign(L, std::vector<int>(n));
        for (int l = 0; l < L; ++l) {
            int T = st.layers[l]->size();
            for (int64_t c = 0; c < n; ++c) {
                base_[l][c] = sat_.num_vars();
                for (int t = 0; t < T; ++t) sat_.new_var();
                if (T == 0) {
                    sat_.add_clause({});
                    continue;
                }
                std::vector<int> alo;
                for (int t = 0; t < T; ++t) alo.push_back(pos_lit(var(l, c, t)));
                sat_.add_clause(alo);
                at_most_one(alo);
            }
        }
        for (int l = 0; l < L; ++l) encode_adjacency(l);
        for (const auto& lk : st.links) encode_link(lk);
        encode_side_constraints();
    }

    int var(int layer, int64_t cell, int tile) const { return base_[layer][cell] + tile; }

    LayeredPatch decode() const {
        LayeredPatch out;
        for (size_t l = 0; l < req_.stack.layers.size(); ++l) {
            Patch p(req_.stack.layers[l], dom_);
            for (int64_t c = 0; c < dom_.size(); ++c)
                for (int t = 0; t < req_.stack.layers[l]->size(); ++t)
                    if (sat_.model_value(var(static_cast<int>(l), c, t))) p.set(c, t);
            out.push_back(std::move(p));
        }
        return out;
    }

    std::vector<int> blocking_clause(const LayeredPatch& sol, const std::vector<int>& layers) const {
        std::vector<int> cl;
        for (int l : layers)
            for (int64_t c = 0; c < dom_.size(); ++c) cl.push_back(neg_lit(var(l, c, sol[l].get(c))));
        return cl;
    }

private:
    void at_most_one(const std::vector<int>& lits) {
        if (lits.size() <= 6) {
            for (size_t i = 0; i < lits.size(); ++i)
                for (size_t j = i + 1; j < lits.size(); ++j) sat_.add_clause({lits[i] ^ 1, lits[j] ^ 1});
            return;
        }
        // Sequential counter; prefix variables are functions of the inputs.
        int prev = -1;
        for (size_t i = 0; i + 1 < lits.size(); ++i) {
            int s = sat_.new_var();
            sat_.add_clause({lits[i] ^ 1, pos_lit(s)});
            if (prev >= 0) {
                sat_.add_clause({neg_lit(prev), pos_lit(s)});
                sat_.add_clause({neg_lit(prev), lits[i] ^ 1});
            }
            prev = s;
        }
        sat_.add_clause({neg_lit(prev), lits.back() ^ 1});
    }

    void encode_adjacency(int l) {
        const Tileset& ts = *req_.stack.layers[l];
        int T = ts.size();
        for (int a = 0; a < dom_.dim(); ++a) {
            int fp = face_of(a, true), fm = face_of(a, false);
            std::set<Color> plus_colors, minus_colors;
            for (int t = 0; t < T; ++t) {
                plus_colors.insert(ts.tile(t)[fp]);
                minus_colors.insert(ts.tile(t)[fm]);
            }
            std::vector<Color> shared;
            std::set_intersection(plus_colors.begin(), plus_colors.end(), minus_colors.begin(), minus_colors.end(),
                                  std::back_inserter(shared));
            std::map<Color, int> slot;
            for (size_t k = 0; k < shared.size(); ++k) slot[shared[k]] = static_cast<int>(k);

            for (int64_t u = 0; u < dom_.size(); ++u) {
                int64_t v = dom_.neighbor(u, a, true);
                if (v < 0) continue;
                // Edge color variables.
                int e0 = sat_.num_vars();
                for (size_t k = 0; k < shared.size(); ++k) sat_.new_var();
                std::vector<std::vector<int>> support_u(shared.size()), support_v(shared.size());
                for (int t = 0; t < T; ++t) {
                    auto up = slot.find(ts.tile(t)[fp]);
                    if (up == slot.end()) sat_.add_clause({neg_lit(var(l, u, t))});
                    else {
                        sat_.add_clause({neg_lit(var(l, u, t)), pos_lit(e0 + up->second)});
                        support_u[up->second].push_back(pos_lit(var(l, u, t)));
                    }
                    auto vm = slot.find(ts.tile(t)[fm]);
                    if (vm == slot.end()) sat_.add_clause({neg_lit(var(l, v, t))});
                    else {
                        sat_.add_clause({neg_lit(var(l, v, t)), pos_lit(e0 + vm->second)});
                        support_v[vm->second].push_back(pos_lit(var(l, v, t)));
                    }
                }
                std::vector<int> colors;
                for (size_t k = 0; k < shared.size(); ++k) {
                    colors.push_back(pos_lit(e0 + static_cast<int>(k)));
                    auto su = support_u[k];
                    su.push_back(neg_lit(e0 + static_cast<int>(k)));
                    sat_.add_clause(su);
                    auto sv = support_v[k];
                    sv.push_back(neg_lit(e0 + static_cast<int>(k)));
                    sat_.add_clause(sv);
                }
                at_most_one(colors);
            }
        }
    }

    void encode_link(const LayerStack::Link& lk) {
        int TA = req_.stack.layers[lk.lower]->size(), TB = req_.stack.layers[lk.upper]->size();
        std::vector<std::vector<int>> okA(TA), okB(TB);
        for (auto [a, b] : lk.rel.pairs) {
            okA[a].push_back(b);
            okB[b].push_back(a);
        }
        for (int64_t c = 0; c < dom_.size(); ++c) {
            for (int a = 0; a < TA; ++a) {
                std::vector<int> cl{neg_lit(var(lk.lower, c, a))};
                for (int b : okA[a]) cl.push_back(pos_lit(var(lk.upper, c, b)));
                sat_.add_clause(cl);
            }
            for (int b = 0; b < TB; ++b) {
                std::vector<int> cl{neg_lit(var(lk.upper, c, b))};
                for (int a : okB[b]) cl.push_back(pos_lit(var(lk.lower, c, a)));
                sat_.add_clause(cl);
            }
        }
    }

    int64_t cell_of(const Point& p) const {
        int64_t c = dom_.id(p);
        if (c < 0) throw std::invalid_argument("constraint point outside the domain");
        return c;
    }

    void check_layer(int l) const {
        if (l < 0 || l >= static_cast<int>(req_.stack.layers.size())) throw std::invalid_argument("bad layer index");
    }

    void encode_side_constraints() {
        const auto& st = req_.stack;
        for (const auto& pin : req_.pins) {
            check_layer(pin.layer);
            if (pin.tile < 0 || pin.tile >= st.layers[pin.layer]->size())
                throw std::invalid_argument("pinned tile out of range");
            sat_.add_clause({pos_lit(var(pin.layer, cell_of(pin.point), pin.tile))});
        }
        if (req_.symmetry_pin) sat_.add_clause({pos_lit(var(0, 0, *req_.symmetry_pin))});
        for (const auto& bc : req_.boundary) {
            check_layer(bc.layer);
            const Tileset& ts = *st.layers[bc.layer];
            int64_t c = cell_of(bc.point);
            for (int t = 0; t < ts.size(); ++t)
                if (ts.tile(t)[bc.face] != bc.color) sat_.add_clause({neg_lit(var(bc.layer, c, t))});
        }
        for (const auto& f : req_.forbids) {
            check_layer(f.layer);
            int64_t c = cell_of(f.point);
            for (int t : f.tiles) sat_.add_clause({neg_lit(var(f.layer, c, t))});
        }
        for (const auto& tie : req_.ties) {
            int64_t a = cell_of(tie.a), b = cell_of(tie.b);
            for (size_t l = 0; l < st.layers.size(); ++l) {
                if (tie.layer >= 0 && tie.layer != static_cast<int>(l)) continue;
                for (int t = 0; t < st.layers[l]->size(); ++t) {
                    int li = static_cast<int>(l);
                    sat_.add_clause({neg_lit(var(li, a, t)), pos_lit(var(li, b, t))});
                    sat_.add_clause({pos_lit(var(li, a, t)), neg_lit(var(li, b, t))});
                }
            }
        }
    }

    const SolveRequest& req_;
    SatBackend& sat_;
    const Domain& dom_;
    std::vector<std::vector<int>> base_;
};

std::optional<std::chrono::steady_clock::time_point> deadline_for(const SolveRequest& req,
                                                                  std::chrono::steady_clock::time_point start) {
    std::optional<int64_t> ms = req.budget_ms;
    if (!ms) {
        if (const char* env = std::getenv("WTS_SOLVE_BUDGET_MS")) {
            try {
                ms = std::stoll(env);
            } catch (const std::exception&) {
                throw std::invalid_argument("WTS_SOLVE_BUDGET_MS is not an integer");
            }
        }
    }
    if (!ms) return std::nullopt;
    return start + std::chrono::milliseconds(*ms);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolveResult solve(const SolveRequest& req) {
    auto start = std::chrono::steady_clock::now();
    auto deadline = deadline_for(req, start);
    CdclSolver sat;
    Encoder enc(req, sat);
    enc.build();

    std::vector<int> proj = req.projection;
    if (proj.empty())
        for (size_t l = 0; l < req.stack.layers.size(); ++l) proj.push_back(static_cast<int>(l));

    SolveResult res;
    int64_t want = req.mode == SolveMode::FindOne ? 1 : req.limit;
    if (want < 1) throw std::invalid_argument("solution limit must be positive");
    SatStatus last = SatStatus::Unsat;
    while (res.count < want) {
        last = sat.solve(deadline);
        if (last != SatStatus::Sat) break;
        LayeredPatch sol = enc.decode();
        for (const auto& p : sol)
            if (!patch_valid(p).empty()) throw std::logic_error("solver produced an invalid witness");
        ++res.count;
        if (!res.witness) res.witness = sol;
        if (req.mode == SolveMode::Enumerate) res.solutions.push_back(sol);
        if (res.count >= want) break;
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            last = SatStatus::Limit;
            break;
        }
        sat.add_clause(enc.blocking_clause(sol, proj));
    }
    if (last == SatStatus::Limit && res.count < want) res.status = SolveStatus::Limit;
    else res.status = res.count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
    res.stats.decisions = sat.stats().decisions;
    res.stats.propagations = sat.stats().propagations;
    res.stats.conflicts = sat.stats().conflicts;
    res.stats.ms = elapsed_ms(start);
    return res;
}

SolveResult brute_solve(const SolveRequest& req, int64_t cap) {
    auto start = std::chrono::steady_clock::now();
    if (req.stack.layers.size() != 1 || !req.ties.empty())
        throw std::invalid_argument("reference search handles single flat tilesets only");
    const Tileset& ts = *req.stack.layers[0];
    const Domain& dom = req.domain;
    if (ts.dim() != dom.dim()) throw std::invalid_argument("domain dimension differs from tileset");
    if (dom.size() > cap) throw std::invalid_argument("domain exceeds the reference search cap");
    int64_t n = dom.size();
    int d = dom.dim();

    std::vector<std::vector<bool>> allowed(n, std::vector<bool>(ts.size(), true));
    for (const auto& pin : req.pins) {
        int64_t c = dom.id(pin.point);
        if (c < 0 || pin.layer != 0) throw std::invalid_argument("bad pin");
        for (int t = 0; t < ts.size(); ++t)
            if (t != pin.tile) allowed[c][t] = false;
    }
    if (req.symmetry_pin)
        for (int t = 0; t < ts.size(); ++t)
            if (t != *req.symmetry_pin) allowed[0][t] = false;
    for (const auto& bc : req.boundary) {
        int64_t c = dom.id(bc.point);
        for (int t = 0; t < ts.size(); ++t)
            if (ts.tile(t)[bc.face] != bc.color) allowed[c][t] = false;
    }
    for (const auto& f : req.forbids) {
        int64_t c = dom.id(f.point);
        for (int t : f.tiles) allowed[c][t] = false;
    }

    int64_t want = req.mode == SolveMode::FindOne ? 1 : req.limit;
    SolveResult res;
    std::vector<int> cells(n, -1);

    auto fits = [&](int64_t c, int t) {
        for (int a = 0; a < d; ++a) {
            int64_t up = dom.neighbor(c, a, true);
            if (up >= 0 && cells[up] >= 0 && ts.tile(t)[face_of(a, true)] != ts.tile(cells[up])[face_of(a, false)])
                return false;
            int64_t dn = dom.neighbor(c, a, false);
            if (dn >= 0 && cells[dn] >= 0 && ts.tile(t)[face_of(a, false)] != ts.tile(cells[dn])[face_of(a, true)])
                return false;
            if (up == c && ts.tile(t)[face_of(a, true)] != ts.tile(t)[face_of(a, false)]) return false;
        }
        return true;
    };
    auto neighbors_alive = [&](int64_t c) {
        for (int a = 0; a < d; ++a)
            for (int s = 0; s < 2; ++s) {
                int64_t v = dom.neighbor(c, a, s == 0);
                if (v < 0 || cells[v] >= 0) continue;
                bool any = false;
                for (int t = 0; t < ts.size() && !any; ++t) any = allowed[v][t] && fits(v, t);
                if (!any) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int64_t c) -> bool {
        if (c == n) {
            ++res.count;
            Patch p(req.stack.layers[0], dom);
            for (int64_t i = 0; i < n; ++i) p.set(i, cells[i]);
            if (!res.witness) res.witness = LayeredPatch{p};
            if (req.mode == SolveMode::Enumerate) res.solutions.push_back(LayeredPatch{p});
            return res.count >= want;
        }
        for (int t = 0; t < ts.size(); ++t) {
            if (!allowed[c][t] || !fits(c, t)) continue;
            cells[c] = t;
            if (neighbors_alive(c) && self(self, c + 1)) return true;
            cells[c] = -1;
        }
        return false;
    };
    rec(rec, 0);
    res.status = res.count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
    res.stats.ms = elapsed_ms(start);
    return res;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        default: return "limit";
    }
}

std::string status_line(const SolveResult& r) {
    std::ostringstream os;
    os << "status=" << status_name(r.status) << " count=" << r.count << " ms=" << static_cast<int64_t>(r.stats.ms);
    return os.str();
}

PeriodLattice periods_of_torus_config(const LayeredPatch& patch) {
    if (patch.empty()) throw std::invalid_argument("empty patch");
    const Domain& dom = patch[0].domain();
    if (!dom.is_torus()) throw std::invalid_argument("period lattice needs a torus patch");
    for (const auto& p : patch)
        if (!p.full()) throw std::invalid_argument("period lattice needs a fully assigned patch");
    int d = dom.dim();
    std::vector<Point> gens = dom.lattice().basis();
    for (int64_t k = 0; k < dom.size(); ++k) {
        Point v = dom.point(k);
        bool fixes = true;
        for (int64_t c = 0; c < dom.size() && fixes; ++c) {
            Point q = dom.point(c);
            for (int i = 0; i < d; ++i) q[i] += v[i];
            int64_t c2 = dom.id(q);
            for (const auto& p : patch)
                if (p.get(c) != p.get(c2)) fixes = false;
        }
        if (fixes) gens.push_back(v);
    }
    // Reduce the spanning set to d generators by repeated canonicalization.
    PeriodLattice acc = dom.lattice();
    for (size_t k = d; k < gens.size(); ++k) {
        if (acc.contains(gens[k])) continue;
        // Replace by the lattice spanned by acc and gens[k]: stack and
        // triangularize over d+1 vectors.
        std::vector<Point> vecs = acc.basis();
        vecs.push_back(gens[k]);
        for (int row = 0; row < d; ++row) {
            for (;;) {
                int piv = -1;
                for (size_t j = row; j < vecs.size(); ++j)
                    if (vecs[j][row] != 0 && (piv < 0 || std::llabs(vecs[j][row]) < std::llabs(vecs[piv][row])))
                        piv = static_cast<int>(j);
                std::swap(vecs[row], vecs[piv]);
                bool done = true;
                for (size_t j = row + 1; j < vecs.size(); ++j) {
                    if (vecs[j][row] == 0) continue;
                    int64_t q = vecs[j][row] / vecs[row][row];
                    for (int i = 0; i < d; ++i) vecs[j][i] -= q * vecs[row][i];
                    if (vecs[j][row] != 0) done = false;
                }
                if (done) break;
            }
        }
        vecs.resize(d);
        acc = PeriodLattice(vecs);
    }
    return acc;
}

PeriodLattice periods_of_torus_config(const Patch& patch) { return periods_of_torus_config(LayeredPatch{patch}); }

Patch unfold_torus(const Patch& torus_patch, const Point& origin, const Point& extents) {
    Patch out(torus_patch.tileset_ptr(), Domain::box(origin, extents));
    for (int64_t c = 0; c < out.domain().size(); ++c) out.set(c, torus_patch.at(out.domain().point(c)));
    return out;
}

}  // namespace wang
