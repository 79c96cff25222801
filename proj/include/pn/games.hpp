// games.hpp -- exact solvers for the two placement games on binary words:
// alternating free placement (Alice wants the final word prefix normal) and
// the block game with Alice's balancing strategy.

#pragma once

#include <cstdint>
#include <vector>

#include "pn/word.hpp"

namespace pn {

enum class Player { Alice, Bob };

/// Partial assignment of n cells; Alice moves first, so the mover is Alice
/// exactly when the number of filled cells is even.
struct GameState {
    unsigned n = 0;
    std::vector<int8_t> cells;  // -1 unset, otherwise 0/1
    unsigned filled = 0;

    static GameState empty(unsigned n);
    Player mover() const { return filled % 2 == 0 ? Player::Alice : Player::Bob; }
    GameState apply(unsigned pos, uint8_t value) const;
};

struct Move {
    unsigned pos;
    uint8_t value;
};

struct GameResult {
    Player winner;
    /// Optimal play from the solved state: the winner's moves force the
    /// stated outcome against the opponent's best replies.
    std::vector<Move> principal_variation;
};

/// Exact minimax with memoization on the full cell assignment. The final
/// word is scored with the quadratic reference oracle; no heuristics.
/// Budget: 3^n states, n <= 13.
GameResult solve_game_v1(unsigned n);
GameResult solve_from(const GameState& state);

/// Memoization-free reference solver (winner only); n <= 8.
Player solve_game_v1_nomemo(unsigned n);

/// Block game: 2k divides n, the first 4k cells are preset to 1, the rest is
/// split into blocks of 2k cells. Bob fills any k cells of an untouched
/// block, Alice fills the remaining k.
struct BlockGameConfig {
    unsigned n;
    unsigned k;
};

/// Throws std::invalid_argument unless k >= 1, 2k | n, n >= 4k.
void validate(const BlockGameConfig& config);

/// Alice's balancing reply: given the block's cells after Bob's k
/// placements, fills the empty ones so the block holds exactly k ones,
/// placing the ones leftmost. cells uses -1 for unset.
void alice_block_strategy(std::vector<int8_t>& block_cells, unsigned k);

/// Plays the balancing strategy against every Bob play (all block orders,
/// cell choices and values) and reports whether every final word is prefix
/// normal.
bool verify_block_lemma(const BlockGameConfig& config);

/// Restricted game from the counting argument: Bob places exactly k zeros
/// per block, Alice's ones fill the rest. Returns the number of distinct
/// final words, all of which are checked to be prefix normal; equals
/// binom(2k,k)^{(n-4k)/(2k)}.
uint64_t count_block_outcomes(const BlockGameConfig& config);

}  // namespace pn
