#include "wang/machines.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wang {

// ---------------------------------------------------------------- machines

namespace {

const char* move_name(Move m) { return m == Move::L ? "L" : m == Move::R ? "R" : "N"; }

Move parse_move(const std::string& s, int line) {
    if (s == "L") return Move::L;
    if (s == "R") return Move::R;
    if (s == "N") return Move::N;
    throw MachineFormatError("line " + std::to_string(line) + ": bad move " + s);
}

int step_of(Move m) { return m == Move::L ? -1 : m == Move::R ? 1 : 0; }

}  // namespace

bool TuringMachine::reads_oracle() const {
    for (const auto& r : rules)
        if (r.oracle_digit || r.oracle_move != Move::N) return true;
    return false;
}

bool TuringMachine::needs_digit(const std::string& state, const std::string& symbol) const {
    for (const auto& r : rules)
        if (r.state == state && r.symbol == symbol && r.oracle_digit) return true;
    return false;
}

const TmRule* TuringMachine::find(const std::string& state, const std::string& symbol,
                                  std::optional<int> digit) const {
    for (const auto& r : rules) {
        if (r.state != state || r.symbol != symbol) continue;
        if (!r.oracle_digit || r.oracle_digit == digit) return &r;
    }
    return nullptr;
}

void TuringMachine::validate() const {
    auto known = [](const std::vector<std::string>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    if (alphabet.empty()) throw std::invalid_argument("machine has an empty alphabet");
    for (const auto& q : {init, accept, reject})
        if (!known(states, q)) throw std::invalid_argument("unknown state " + q);
    std::map<std::pair<std::string, std::string>, std::set<int>> seen;  // digit -1 = any
    for (const auto& r : rules) {
        if (!known(states, r.state) || !known(states, r.next))
            throw std::invalid_argument("rule uses an unknown state: " + r.state + " -> " + r.next);
        if (!known(alphabet, r.symbol) || !known(alphabet, r.write))
            throw std::invalid_argument("rule uses an unknown symbol: " + r.symbol + " -> " + r.write);
        if (halting(r.state)) throw std::invalid_argument("rule leaves halting state " + r.state);
        if (r.oracle_digit && *r.oracle_digit != 0 && *r.oracle_digit != 1)
            throw std::invalid_argument("oracle digits are 0 or 1");
        auto& s = seen[{r.state, r.symbol}];
        int d = r.oracle_digit ? *r.oracle_digit : -1;
        if (s.count(d) || (d == -1 && !s.empty()) || s.count(-1))
            throw std::invalid_argument("nondeterministic machine: several rules for " + r.state + " " + r.symbol);
        s.insert(d);
    }
}

TuringMachine read_wtm(std::istream& in) {
    TuringMachine m;
    std::string raw;
    int line = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto err = [&](const std::string& what) {
            return MachineFormatError("line " + std::to_string(line) + ": " + what);
        };
        if (!header) {
            if (tok.size() != 2 || tok[0] != "wtm" || tok[1] != "1") throw err("expected header 'wtm 1'");
            header = true;
            continue;
        }
        const std::string& key = tok[0];
        if (key == "states") {
            m.states.assign(tok.begin() + 1, tok.end());
        } else if (key == "alphabet") {
            m.alphabet.assign(tok.begin() + 1, tok.end());
        } else if (key == "init" || key == "accept" || key == "reject") {
            if (tok.size() != 2) throw err(key + " takes one state");
            (key == "init" ? m.init : key == "accept" ? m.accept : m.reject) = tok[1];
        } else if (tok.size() >= 6 && tok[2] == "->") {
            TmRule r;
            r.state = tok[0];
            r.symbol = tok[1];
            if (auto slash = r.symbol.find('/'); slash != std::string::npos) {
                std::string d = r.symbol.substr(slash + 1);
                if (d != "0" && d != "1") throw err("oracle digit must be 0 or 1");
                r.oracle_digit = d == "1";
                r.symbol.erase(slash);
            }
            r.next = tok[3];
            r.write = tok[4];
            r.move = parse_move(tok[5], line);
            if (tok.size() == 7) {
                if (tok[6].rfind("Y:", 0) != 0) throw err("expected Y:<move>");
                r.oracle_move = parse_move(tok[6].substr(2), line);
            } else if (tok.size() > 7) {
                throw err("too many fields in rule");
            }
            m.rules.push_back(r);
        } else {
            throw err("unrecognized line");
        }
    }
    if (!header) throw MachineFormatError("missing header 'wtm 1'");
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw MachineFormatError(e.what());
    }
    return m;
}

void write_wtm(std::ostream& out, const TuringMachine& m) {
    out << "wtm 1\nstates";
    for (const auto& q : m.states) out << ' ' << q;
    out << "\nalphabet";
    for (const auto& a : m.alphabet) out << ' ' << a;
    out << "\ninit " << m.init << "\naccept " << m.accept << "\nreject " << m.reject << '\n';
    for (const auto& r : m.rules) {
        out << r.state << ' ' << r.symbol;
        if (r.oracle_digit) out << '/' << *r.oracle_digit;
        out << " -> " << r.next << ' ' << r.write << ' ' << move_name(r.move);
        if (r.oracle_move != Move::N) out << " Y:" << move_name(r.oracle_move);
        out << '\n';
    }
}

TuringMachine load_wtm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_wtm(in);
}

std::vector<std::string> parse_word(const TuringMachine& m, const std::string& text) {
    bool single = std::all_of(m.alphabet.begin(), m.alphabet.end(), [](const std::string& s) { return s.size() == 1; });
    std::vector<std::string> out;
    if (single) {
        for (char c : text)
            if (c != ' ' && c != ',') out.emplace_back(1, c);
    } else {
        std::string cur;
        for (char c : text + " ") {
            if (c == ' ' || c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    for (const auto& s : out)
        if (std::find(m.alphabet.begin(), m.alphabet.end(), s) == m.alphabet.end())
            throw std::invalid_argument("symbol " + s + " is not in the alphabet");
    return out;
}

SimulationTrace simulate(const TuringMachine& m, const std::vector<std::string>& input,
                         const std::vector<int>& oracle, int64_t budget) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    m.validate();
    std::vector<std::string> tape(input.begin(), input.end());
    if (tape.empty()) tape.push_back(m.blank());
    int64_t head = 0, oracle_head = 0, max_head = 0, max_oracle = 0;
    std::string q = m.init;
    struct Row {
        std::vector<std::string> tape;
        int64_t head;
        std::string state;
    };
    std::vector<Row> rows{{tape, head, q}};
    SimulationTrace tr;
    while (!m.halting(q) && tr.time < budget) {
        std::optional<int> digit;
        if (m.needs_digit(q, tape[head])) {
            if (oracle_head >= static_cast<int64_t>(oracle.size()))
                throw OracleOverrun("oracle position " + std::to_string(oracle_head) + " is beyond the oracle word");
            digit = oracle[oracle_head];
        }
        const TmRule* r = m.find(q, tape[head], digit);
        if (!r) break;  // stuck: no rule, not halting
        tape[head] = r->write;
        q = r->next;
        int64_t next_oracle = oracle_head + step_of(r->oracle_move);
        if (next_oracle < 0 || (r->oracle_move != Move::N && next_oracle >= static_cast<int64_t>(oracle.size())))
            throw OracleOverrun("oracle head moves to " + std::to_string(next_oracle) + ", outside the oracle word");
        oracle_head = next_oracle;
        max_oracle = std::max(max_oracle, oracle_head);
        ++tr.time;
        if (r->move == Move::L && head == 0) {
            tr.fell_off = true;
            break;
        }
        head += step_of(r->move);
        if (head >= static_cast<int64_t>(tape.size())) tape.push_back(m.blank());
        max_head = std::max(max_head, head);
        rows.push_back({tape, head, q});
    }
    tr.halted = m.halting(q) && !tr.fell_off;
    tr.accepted = tr.halted && q == m.accept;
    tr.space = std::max<int64_t>(static_cast<int64_t>(input.size()), max_head + 1);
    tr.oracle_span = oracle.empty() ? 0 : max_oracle + 1;
    for (const auto& row : rows) {
        std::vector<TraceCell> cells(tr.space + 2, TraceCell{m.blank(), std::nullopt});
        for (int64_t i = 0; i < tr.space && i < static_cast<int64_t>(row.tape.size()); ++i)
            cells[i + 1].symbol = row.tape[i];
        cells[row.head + 1].state = row.state;
        tr.grid.push_back(cells);
    }
    tr.tape = tape;
    while (!tr.tape.empty() && tr.tape.back() == m.blank()) tr.tape.pop_back();
    return tr;
}

// ------------------------------------------------------ space-time tiles

namespace {

const std::string kNone = "-";

std::string content(const std::string& sym, bool mark, const std::string& state = "") {
    return "t." + sym + (mark ? "^" : "") + (state.empty() ? "" : "@" + state);
}

// One space-time tile with what the cube compiler needs to know about it.
struct StTile {
    std::string name;
    std::string e, w, n, s;
    bool head_in = false;      // bottom content carries the head
    bool head_up = false;      // top content carries the head
    const TmRule* rule = nullptr;
    bool receives_west = false, receives_east = false;
    bool idle = false;         // halted head kept
};

std::vector<StTile> space_time_tiles(const TuringMachine& m, bool allow_oracle) {
    m.validate();
    if (!allow_oracle && m.reads_oracle())
        throw std::invalid_argument("machine uses the oracle tape; compile it to cubes");
    std::vector<StTile> out;
    auto add = [&](StTile t) { out.push_back(std::move(t)); };
    for (bool mark : {false, true}) {
        std::string mk = mark ? "^" : "";
        for (const auto& a : m.alphabet) {
            add({"s:" + a + mk, kNone, kNone, content(a, mark), content(a, mark)});
            for (int side = 0; side < 2; ++side) {
                std::string c = "cap" + std::to_string(side);
                add({"cap:" + a + mk + "." + std::to_string(side), c, c, "cap", content(a, mark)});
            }
            for (const auto& q : m.states) {
                StTile recv_e{"in<" + q + ":" + a + mk, "<" + q, kNone, content(a, mark, q), content(a, mark)};
                recv_e.head_up = recv_e.receives_east = true;
                add(recv_e);
                if (!mark) {
                    StTile recv_w{"in>" + q + ":" + a, kNone, ">" + q, content(a, false, q), content(a, false)};
                    recv_w.head_up = recv_w.receives_west = true;
                    add(recv_w);
                }
            }
            for (const auto& h : {m.accept, m.reject}) {
                if (h == m.reject && m.reject == m.accept) continue;
                StTile idle{"idle:" + h + "," + a + mk, kNone, kNone, content(a, mark, h), content(a, mark, h)};
                idle.head_in = idle.head_up = idle.idle = true;
                add(idle);
                StTile cap{"cap@" + h + "," + a + mk, "cap1", "cap0", "cap", content(a, mark, h)};
                cap.head_in = true;
                add(cap);
            }
        }
        for (const auto& r : m.rules) {
            std::string name = "r:" + r.state + "," + r.symbol +
                               (r.oracle_digit ? "/" + std::to_string(*r.oracle_digit) : "") + mk;
            StTile t{name, kNone, kNone, "", content(r.symbol, mark, r.state)};
            t.head_in = true;
            t.rule = &r;
            if (r.move == Move::N) {
                t.n = content(r.write, mark, r.next);
                t.head_up = true;
            } else if (r.move == Move::R) {
                t.n = content(r.write, mark);
                t.e = ">" + r.next;
            } else {
                if (mark) continue;  // would leave the tape
                t.n = content(r.write, mark);
                t.w = "<" + r.next;
            }
            add(t);
        }
    }
    add({"wall", kNone, kNone, "wall", "wall"});
    add({"wall.cap0", "cap0", "cap0", "cap", "wall"});
    add({"wall.cap1", "cap1", "cap1", "cap", "wall"});
    return out;
}

Tileset tiles_of(const std::vector<StTile>& st) {
    Tileset ts(2);
    for (const auto& t : st) ts.add(t.name, {t.e, t.w, t.n, t.s});
    return ts;
}

std::string row0_content(const TuringMachine& m, const std::vector<std::string>& input, int64_t col, int64_t space) {
    if (col == 0 || col == space + 1) return "wall";
    std::string sym = col - 1 < static_cast<int64_t>(input.size()) ? input[col - 1] : m.blank();
    return content(sym, col == 1, col == 1 ? m.init : "");
}

void check_caps(const std::vector<std::string>& input, int64_t space, int64_t time) {
    if (space < 1 || time < 0) throw std::invalid_argument("space must be positive and time non-negative");
    if (static_cast<int64_t>(input.size()) > space) throw std::invalid_argument("input does not fit in the space");
}

}  // namespace

Tileset compile_tm_to_tiles(const TuringMachine& m) { return tiles_of(space_time_tiles(m, false)); }

SolveRequest capped_tm_request(const TuringMachine& m, const Tileset& tiles, const std::vector<std::string>& input,
                               int64_t space, int64_t time) {
    check_caps(input, space, time);
    SolveRequest req;
    req.stack = LayerStack(tiles);
    req.domain = Domain::box({space + 2, time + 1});
    auto color = [&](const std::string& c) -> std::optional<Color> { return tiles.colors().find(c); };
    auto bound = [&](Point p, int face, const std::string& c) {
        auto col = color(c);
        if (!col) throw std::invalid_argument("tileset lacks color " + c);
        req.boundary.push_back({std::move(p), face, *col, 0});
    };
    for (int64_t x = 0; x < space + 2; ++x) {
        bound({x, 0}, South, row0_content(m, input, x, space));
        bound({x, time}, North, "cap");
    }
    for (int64_t y = 0; y <= time; ++y) {
        bound({0, y}, West, y == time ? "cap0" : kNone);
        bound({space + 1, y}, East, y == time ? "cap1" : kNone);
    }
    return req;
}

TraceCell decode_tm_tile(const TuringMachine& m, const Tileset& tiles, int tile) {
    std::string c = tiles.colors().name(tiles.tile(tile)[South]);
    if (c == "wall") return {m.blank(), std::nullopt};
    c = c.substr(2);  // strip "t."
    TraceCell cell;
    if (auto at = c.find('@'); at != std::string::npos) {
        cell.state = c.substr(at + 1);
        c.erase(at);
    }
    if (!c.empty() && c.back() == '^') c.pop_back();
    cell.symbol = c;
    return cell;
}

// ------------------------------------------------------------------ cubes

Tileset compile_tm_to_cubes(const TuringMachine& m) {
    std::vector<StTile> st = space_time_tiles(m, true);
    Tileset ts(3);
    // Faces: x+, x-, y+, y-, z+, z-.
    for (const auto& t : st) {
        bool emits_e = t.rule && t.rule->move == Move::R;
        bool emits_w = t.rule && t.rule->move == Move::L;
        Move om = t.rule ? t.rule->oracle_move : Move::N;
        for (int d = 0; d < 2; ++d) {
            std::string dd = "|d" + std::to_string(d);
            for (int mk = 0; mk < 2; ++mk) {
                if (mk && !t.head_in) continue;
                if (mk && t.rule && t.rule->oracle_digit && *t.rule->oracle_digit != d) continue;
                // Shift signals on the y faces: "U" hands the oracle mark up,
                // "D" down, "0" nothing.
                std::vector<std::string> hi_opts, lo_opts;
                if (t.rule) {
                    hi_opts = (mk && om == Move::R) ? std::vector<std::string>{"U"} : std::vector<std::string>{"0", "D"};
                    lo_opts = (mk && om == Move::L) ? std::vector<std::string>{"D"} : std::vector<std::string>{"0", "U"};
                } else {
                    hi_opts = lo_opts = {"0"};
                }
                for (const auto& hi : hi_opts)
                    for (const auto& lo : lo_opts) {
                        int sources = (t.rule && mk && om == Move::N) + (lo == "U") + (hi == "D");
                        if (sources > 1) continue;
                        int next = sources;
                        if (t.idle) next = mk;
                        std::vector<int> recv_opts = {0};
                        if (t.receives_east || t.receives_west) recv_opts = {0, 1};
                        for (int recv : recv_opts) {
                            if (t.receives_east || t.receives_west) next = recv;
                            std::string e = t.e + dd, w = t.w + dd;
                            std::string n = t.n + dd, s = t.s + dd;
                            if (t.head_in) s += "|m" + std::to_string(mk);
                            if (t.head_up) n += "|m" + std::to_string(next);
                            if (emits_e) e += "|n" + std::to_string(next);
                            if (emits_w) w += "|n" + std::to_string(next);
                            if (t.receives_east) e += "|n" + std::to_string(recv);
                            if (t.receives_west) w += "|n" + std::to_string(recv);
                            std::string name = t.name + dd + "|m" + std::to_string(mk) + "|n" + std::to_string(next) +
                                               "|" + lo + hi;
                            ts.add(name, {e, w, t.name + "|" + hi, t.name + "|" + lo, n, s});
                        }
                    }
            }
        }
    }
    return ts;
}

SolveRequest capped_tm_cube_request(const TuringMachine& m, const Tileset& cubes,
                                    const std::vector<std::string>& input, const std::vector<int>& oracle,
                                    int64_t space, int64_t time) {
    check_caps(input, space, time);
    if (oracle.empty()) throw std::invalid_argument("cube patches need a non-empty oracle word");
    int64_t depth = static_cast<int64_t>(oracle.size());
    SolveRequest req;
    req.stack = LayerStack(cubes);
    req.domain = Domain::box({space + 2, depth, time + 1});
    auto bound = [&](Point p, int face, const std::string& c) {
        auto col = cubes.colors().find(c);
        if (!col) throw std::invalid_argument("cube set lacks color " + c);
        req.boundary.push_back({std::move(p), face, *col, 0});
    };
    for (int64_t y = 0; y < depth; ++y) {
        std::string dd = "|d" + std::to_string(oracle[y]);
        for (int64_t x = 0; x < space + 2; ++x) {
            std::string c = row0_content(m, input, x, space) + dd;
            if (x == 1) c += "|m" + std::to_string(y == 0 ? 1 : 0);
            bound({x, y, 0}, face_of(2, false), c);
            bound({x, y, time}, face_of(2, true), "cap" + dd);
        }
        for (int64_t z = 0; z <= time; ++z) {
            bound({0, y, z}, face_of(0, false), (z == time ? "cap0" : kNone) + dd);
            bound({space + 1, y, z}, face_of(0, true), (z == time ? "cap1" : kNone) + dd);
        }
    }
    // The oracle mark may not leave the oracle word.
    std::vector<int> shifts_down, shifts_up;
    for (int i = 0; i < cubes.size(); ++i) {
        const std::string& name = cubes.tile_name(i);
        std::string sig = name.substr(name.rfind('|') + 1);
        if (sig[0] != '0') shifts_down.push_back(i);
        if (sig[1] != '0') shifts_up.push_back(i);
    }
    for (int64_t x = 0; x < space + 2; ++x)
        for (int64_t z = 0; z <= time; ++z) {
            req.forbids.push_back({{x, 0, z}, shifts_down, 0});
            req.forbids.push_back({{x, depth - 1, z}, shifts_up, 0});
        }
    return req;
}

// ------------------------------------------------------------- arithmetic

ReducedInput reduce_input(int64_t p, int64_t q, int64_t r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("reduce_input needs positive integers");
    int k = 0;
    while (p % 2 == 0 && q % 2 == 0 && r % 2 == 0) {
        p /= 2;
        q /= 2;
        r /= 2;
        ++k;
    }
    return {p, q, r, k};
}

Transducer build_halving_transducer() {
    Transducer t;
    t.states = {"c0", "c1"};
    t.init = "c0";
    for (int s = 0; s < 2; ++s)
        for (int b = 0; b < 2; ++b) t.rules.emplace_back("c" + std::to_string(s), b, "c" + std::to_string(b), s);
    t.finals = {"c0"};
    return t;
}

TransducerRun run_transducer(const Transducer& t, const std::vector<int>& lsb_first) {
    TransducerRun run;
    run.output.assign(lsb_first.size(), 0);
    std::string state = t.init;
    for (size_t i = lsb_first.size(); i-- > 0;) {
        bool found = false;
        for (const auto& [from, in, to, out] : t.rules) {
            if (from != state || in != lsb_first[i]) continue;
            run.output[i] = out;
            state = to;
            found = true;
            break;
        }
        if (!found) throw std::invalid_argument("transducer has no rule for state " + state);
    }
    run.final_state = state;
    run.accepted = std::find(t.finals.begin(), t.finals.end(), state) != t.finals.end();
    return run;
}

Tileset compile_transducer_to_tiles(const Transducer& t) {
    Tileset ts(2);
    for (const auto& [from, in, to, out] : t.rules)
        ts.add(from + "." + std::to_string(in), {"s:" + from, "s:" + to, std::to_string(out), std::to_string(in)});
    return ts;
}

SolveRequest transducer_request(const Transducer& t, const Tileset& tiles, const std::vector<int>& lsb_first,
                                int passes) {
    if (lsb_first.empty() || passes < 1) throw std::invalid_argument("need at least one digit and one pass");
    int64_t w = static_cast<int64_t>(lsb_first.size());
    SolveRequest req;
    req.stack = LayerStack(tiles);
    req.domain = Domain::box({w, passes});
    auto color = [&](const std::string& c) {
        auto col = tiles.colors().find(c);
        if (!col) throw std::invalid_argument("tileset lacks color " + c);
        return *col;
    };
    for (int64_t x = 0; x < w; ++x) req.boundary.push_back({{x, 0}, South, color(std::to_string(lsb_first[x])), 0});
    std::vector<int> bad_exit;
    for (int i = 0; i < tiles.size(); ++i) {
        std::string exit = tiles.colors().name(tiles.tile(i)[West]).substr(2);
        if (std::find(t.finals.begin(), t.finals.end(), exit) == t.finals.end()) bad_exit.push_back(i);
    }
    for (int64_t y = 0; y < passes; ++y) {
        req.boundary.push_back({{w - 1, y}, East, color("s:" + t.init), 0});
        req.forbids.push_back({{0, y}, bad_exit, 0});
    }
    return req;
}

std::vector<int> to_lsb_bits(uint64_t v, int width) {
    std::vector<int> bits;
    while (v > 0 || static_cast<int>(bits.size()) < width) {
        bits.push_back(static_cast<int>(v & 1));
        v >>= 1;
    }
    return bits;
}

uint64_t from_lsb_bits(const std::vector<int>& bits) {
    uint64_t v = 0;
    for (size_t i = bits.size(); i-- > 0;) v = 2 * v + static_cast<uint64_t>(bits[i]);
    return v;
}

std::tuple<int64_t, int64_t, int64_t> scale_witness(int64_t p, int64_t q, int64_t r, int64_t t) {
    if (t < 1) throw std::invalid_argument("halting time must be at least 1");
    int64_t factor = 1;
    while (factor < t) factor *= 2;
    return {factor * p, factor * q, factor * r};
}

// ------------------------------------------------------------- red marker

Tileset red_marker_rules() {
    Tileset ts(2);
    for (int g = 0; g < 2; ++g) {
        std::string d = "d" + std::to_string(g);
        std::string plain = std::to_string(g) + "|-";
        auto go = [&](const std::string& m) { return std::to_string(g) + "|go" + m; };
        ts.add(d + ".b", {"b", "b", plain, plain});
        ts.add(d + ".a", {"a", "a", plain, plain});
        struct Entry {
            const char* name;
            const char* w;
            const char* e;
            bool from_below;
        };
        const Entry entries[] = {{"s", "b", "a", true}, {"w", "b!", "a", false}, {"e", "b", "a!", false},
                                 {"0", "b", "a", false}};
        for (const auto& en : entries)
            for (const char* mv : {"L", "R", "N"})
                ts.add(d + ".red." + en.name + "." + mv, {en.e, en.w, go(mv), en.from_below ? go("N") : plain});
        ts.add(d + ".toR", {"b!", "b", plain, go("R")});
        ts.add(d + ".toL", {"a", "a!", plain, go("L")});
    }
    return ts;
}

}  // namespace wang
