#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wang/solver.hpp"
#include "wang/tileset.hpp"

namespace wang {

enum class Move { L, R, N };

// One rule `state symbol -> next write move [Y:oracle_move]`. A rule may
// require the oracle digit under the oracle head (`symbol/0`, `symbol/1`);
// otherwise it applies whatever that digit is.
struct TmRule {
    std::string state;
    std::string symbol;
    std::optional<int> oracle_digit;
    std::string next;
    std::string write;
    Move move = Move::N;
    Move oracle_move = Move::N;
};

// One-way tape starting at cell 0; the input starts at cell 0 with the head
// on it. alphabet[0] is the blank.
struct TuringMachine {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::string init, accept, reject;
    std::vector<TmRule> rules;

    const std::string& blank() const { return alphabet.at(0); }
    bool halting(const std::string& q) const { return q == accept || q == reject; }
    bool reads_oracle() const;
    // Throws std::invalid_argument on unknown states or symbols, rules out of
    // halting states, or more than one rule applying to the same situation.
    void validate() const;
    // The rule for (state, symbol, digit), if any; digit is consulted only
    // when the machine has digit-specific rules for the pair.
    const TmRule* find(const std::string& state, const std::string& symbol, std::optional<int> digit) const;
    bool needs_digit(const std::string& state, const std::string& symbol) const;
};

struct MachineFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TuringMachine read_wtm(std::istream& in);
void write_wtm(std::ostream& out, const TuringMachine& m);
TuringMachine load_wtm(const std::string& path);

// Splits a word into alphabet symbols: character by character when every
// symbol is one character, otherwise on spaces and commas.
std::vector<std::string> parse_word(const TuringMachine& m, const std::string& text);

struct OracleOverrun : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceCell {
    std::string symbol;
    std::optional<std::string> state;
    bool operator==(const TraceCell&) const = default;
};

struct SimulationTrace {
    bool halted = false;
    bool accepted = false;
    bool fell_off = false;  // moved left from cell 0
    int64_t time = 0;       // steps taken
    int64_t space = 0;      // tape cells used (input and visited)
    int64_t oracle_span = 0;
    // (time + 1) rows of (space + 2) cells; the outer columns are blank
    // padding.
    std::vector<std::vector<TraceCell>> grid;
    std::vector<std::string> tape;  // final tape, trailing blanks removed
};

// Runs at most `budget` steps. Throws OracleOverrun when a digit-dependent
// rule needs a digit beyond the oracle word.
SimulationTrace simulate(const TuringMachine& m, const std::vector<std::string>& input,
                         const std::vector<int>& oracle, int64_t budget);

// Space-time tiles, time to the north. Bottom faces of row 0 spell the
// initial configuration, the outer columns are wall tiles, and the top row
// must be a cap row, which exists only where the machine has halted.
// Throws std::invalid_argument for invalid machines and for machines that
// read the oracle.
Tileset compile_tm_to_tiles(const TuringMachine& m);

// Request for a (space + 2) x (time + 1) capped patch on the given input.
SolveRequest capped_tm_request(const TuringMachine& m, const Tileset& tiles, const std::vector<std::string>& input,
                               int64_t space, int64_t time);

// Trace cell a tile stands for (its bottom face); walls read as blanks.
TraceCell decode_tm_tile(const TuringMachine& m, const Tileset& tiles, int tile);

// Cubes: work tape along x, oracle positions along y, time along z. Each
// column (x, z) repeats one space-time tile along y; each cube also holds
// the oracle digit of its y, repeated along x and z, and the head marks the
// oracle position it reads. Tile names start with the space-time tile name
// followed by '|'.
Tileset compile_tm_to_cubes(const TuringMachine& m);

// Request for a (space + 2) x (oracle size) x (time + 1) capped cube patch
// with the oracle word laid along y and the oracle head at y = 0.
SolveRequest capped_tm_cube_request(const TuringMachine& m, const Tileset& cubes,
                                    const std::vector<std::string>& input, const std::vector<int>& oracle,
                                    int64_t space, int64_t time);

struct ReducedInput {
    int64_t p, q, r;
    int k;
    bool operator==(const ReducedInput&) const = default;
};

// (p, q, r) = 2^k (p', q', r') with p', q', r' not all even.
ReducedInput reduce_input(int64_t p, int64_t q, int64_t r);

// Letter-to-letter transducer over {0, 1}.
struct Transducer {
    std::vector<std::string> states;
    std::string init;
    // (state, input bit) -> (next state, output bit)
    std::vector<std::tuple<std::string, int, std::string, int>> rules;
    std::vector<std::string> finals;  // states allowed after the last letter
};

// Halving of an LSB-first binary word. The word is scanned from its most
// significant end; the state is the last bit read, which becomes the output
// one position lower. The state left after the least significant bit is the
// remainder.
Transducer build_halving_transducer();

struct TransducerRun {
    std::vector<int> output;
    std::string final_state;
    bool accepted = false;
};
TransducerRun run_transducer(const Transducer& t, const std::vector<int>& lsb_first);

// One row per pass: bottom face input bit, top face output bit, state
// entering from the east (more significant side) and leaving west.
Tileset compile_transducer_to_tiles(const Transducer& t);

// `passes` stacked rows over an LSB-first input of the given bits; every row
// starts in the initial state and must end in a final state.
SolveRequest transducer_request(const Transducer& t, const Tileset& tiles, const std::vector<int>& lsb_first,
                                int passes);

std::vector<int> to_lsb_bits(uint64_t v, int width = 0);
uint64_t from_lsb_bits(const std::vector<int>& bits);

// m = 2^ceil(log2 t) p and (n, o) = 2^ceil(log2 t) (q, r).
std::tuple<int64_t, int64_t, int64_t> scale_witness(int64_t p, int64_t q, int64_t r, int64_t t);

// Toy rows of oracle digits, one row per machine step: each row holds one red
// digit, and the red moves by the step's move (L, R or N) to the next row.
// Digits are constant along columns. Tile names: "d<digit>" plain,
// "d<digit>.red.<entry>.<move>" for red digits, "d<digit>.toR"/"d<digit>.toL"
// for the cell a red digit is handed through.
Tileset red_marker_rules();

}  // namespace wang
