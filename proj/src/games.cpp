#include "pn/games.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace pn {

GameState GameState::empty(unsigned n) {
    GameState s;
    s.n = n;
    s.cells.assign(n, -1);
    return s;
}

GameState GameState::apply(unsigned pos, uint8_t value) const {
    if (pos >= n || cells[pos] != -1)
        throw std::invalid_argument("illegal move");
    GameState next = *this;
    next.cells[pos] = static_cast<int8_t>(value);
    next.filled++;
    return next;
}

namespace {

BinaryWord to_word(const std::vector<int8_t>& cells) {
    std::vector<uint8_t> bits(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        bits[i] = cells[i] == 1 ? 1 : 0;
    return BinaryWord::from_bits(bits);
}

// Ternary encoding of the assignment; the mover follows from the filled
// count, so the assignment alone keys the game value.
uint64_t encode(const std::vector<int8_t>& cells) {
    uint64_t key = 0;
    for (int8_t c : cells) key = key * 3 + static_cast<uint64_t>(c + 1);
    return key;
}

uint64_t pow3(unsigned n) {
    uint64_t p = 1;
    while (n--) p *= 3;
    return p;
}

struct Solver {
    unsigned n;
    std::vector<int8_t> memo;  // 0 unknown, 1 Alice wins, 2 Bob wins

    explicit Solver(unsigned n_) : n(n_), memo(pow3(n_), 0) {
        if (n_ > 13) throw std::invalid_argument("game budget is n <= 13");
    }

    Player solve(std::vector<int8_t>& cells, unsigned filled) {
        const uint64_t key = encode(cells);
        if (memo[key]) return memo[key] == 1 ? Player::Alice : Player::Bob;
        Player result;
        if (filled == n) {
            result = is_prefix_normal_naive(to_word(cells)).normal
                         ? Player::Alice
                         : Player::Bob;
        } else {
            const Player mover = filled % 2 == 0 ? Player::Alice : Player::Bob;
            result = mover == Player::Alice ? Player::Bob : Player::Alice;
            for (unsigned pos = 0; pos < n && result != mover; ++pos) {
                if (cells[pos] != -1) continue;
                for (int8_t v = 0; v <= 1; ++v) {
                    cells[pos] = v;
                    if (solve(cells, filled + 1) == mover) {
                        cells[pos] = -1;
                        result = mover;
                        break;
                    }
                    cells[pos] = -1;
                }
            }
        }
        memo[key] = result == Player::Alice ? 1 : 2;
        return result;
    }

    // Optimal line from the state: the winner keeps their win, the loser
    // takes the first legal move.
    std::vector<Move> variation(std::vector<int8_t> cells, unsigned filled,
                                Player winner) {
        std::vector<Move> pv;
        while (filled < n) {
            const Player mover = filled % 2 == 0 ? Player::Alice : Player::Bob;
            Move chosen{n, 0};
            for (unsigned pos = 0; pos < n && chosen.pos == n; ++pos) {
                if (cells[pos] != -1) continue;
                for (uint8_t v = 0; v <= 1; ++v) {
                    cells[pos] = static_cast<int8_t>(v);
                    const Player sub = solve(cells, filled + 1);
                    cells[pos] = -1;
                    if (mover != winner || sub == winner) {
                        chosen = {pos, v};
                        break;
                    }
                }
            }
            pv.push_back(chosen);
            cells[chosen.pos] = static_cast<int8_t>(chosen.value);
            ++filled;
        }
        return pv;
    }
};

}  // namespace

GameResult solve_from(const GameState& state) {
    Solver solver(state.n);
    std::vector<int8_t> cells = state.cells;
    const Player winner = solver.solve(cells, state.filled);
    return {winner, solver.variation(cells, state.filled, winner)};
}

GameResult solve_game_v1(unsigned n) {
    return solve_from(GameState::empty(n));
}

namespace {

Player solve_plain(std::vector<int8_t>& cells, unsigned filled, unsigned n) {
    if (filled == n)
        return is_prefix_normal_naive(to_word(cells)).normal ? Player::Alice
                                                             : Player::Bob;
    const Player mover = filled % 2 == 0 ? Player::Alice : Player::Bob;
    for (unsigned pos = 0; pos < n; ++pos) {
        if (cells[pos] != -1) continue;
        for (int8_t v = 0; v <= 1; ++v) {
            cells[pos] = v;
            const Player sub = solve_plain(cells, filled + 1, n);
            cells[pos] = -1;
            if (sub == mover) return mover;
        }
    }
    return filled % 2 == 0 ? Player::Bob : Player::Alice;
}

}  // namespace

Player solve_game_v1_nomemo(unsigned n) {
    if (n > 8) throw std::invalid_argument("reference solver budget is n <= 8");
    std::vector<int8_t> cells(n, -1);
    return solve_plain(cells, 0, n);
}

void validate(const BlockGameConfig& config) {
    if (config.k < 1) throw std::invalid_argument("k must be >= 1");
    if (config.n % (2 * config.k) != 0)
        throw std::invalid_argument("2k must divide n");
    if (config.n < 4 * config.k)
        throw std::invalid_argument("n must be at least 4k");
}

void alice_block_strategy(std::vector<int8_t>& block_cells, unsigned k) {
    if (block_cells.size() != 2 * k)
        throw std::invalid_argument("block must have 2k cells");
    unsigned set_count = 0, bob_ones = 0;
    for (int8_t c : block_cells) {
        if (c != -1) {
            ++set_count;
            bob_ones += c == 1;
        }
    }
    if (set_count != k)
        throw std::invalid_argument("block must be exactly half filled");
    unsigned ones_left = k - bob_ones;  // balance the block to k ones total
    for (auto& c : block_cells) {
        if (c != -1) continue;
        c = ones_left > 0 ? 1 : 0;
        if (ones_left > 0) --ones_left;
    }
}

namespace {

struct BlockGame {
    unsigned n, k, blocks;
    std::vector<int8_t> cells;
    std::vector<uint8_t> block_done;

    explicit BlockGame(const BlockGameConfig& c)
        : n(c.n), k(c.k), blocks((c.n - 4 * c.k) / (2 * c.k)),
          cells(c.n, -1), block_done(blocks, 0) {
        for (unsigned i = 0; i < 4 * k; ++i) cells[i] = 1;
    }

    unsigned block_start(unsigned b) const { return 4 * k + b * 2 * k; }

    // Every Bob play: block order, cell choice, values. Calls leaf() on each
    // completed word; returns false as soon as leaf() does.
    template <class Leaf>
    bool play_all(unsigned done, Leaf&& leaf) {
        if (done == blocks) return leaf(to_word(cells));
        for (unsigned b = 0; b < blocks; ++b) {
            if (block_done[b]) continue;
            const unsigned base = block_start(b);
            const unsigned w = 2 * k;
            for (uint32_t cellmask = 0; cellmask < (1u << w); ++cellmask) {
                if (static_cast<unsigned>(std::popcount(cellmask)) != k) continue;
                for (uint32_t valmask = 0; valmask < (1u << k); ++valmask) {
                    // Bob sets the chosen cells, value bits in cell order.
                    unsigned vi = 0;
                    for (unsigned i = 0; i < w; ++i)
                        if (cellmask & (1u << i))
                            cells[base + i] =
                                static_cast<int8_t>((valmask >> vi++) & 1);
                    std::vector<int8_t> block(cells.begin() + base,
                                              cells.begin() + base + w);
                    alice_block_strategy(block, k);
                    std::copy(block.begin(), block.end(), cells.begin() + base);
                    block_done[b] = 1;
                    const bool keep_going = play_all(done + 1, leaf);
                    block_done[b] = 0;
                    for (unsigned i = 0; i < w; ++i) cells[base + i] = -1;
                    if (!keep_going) return false;
                }
            }
        }
        return true;
    }
};

}  // namespace

bool verify_block_lemma(const BlockGameConfig& config) {
    validate(config);
    if (config.k > 3 || config.n > 24)
        throw std::invalid_argument("block game budget exceeded");
    BlockGame game(config);
    return game.play_all(0, [](const BinaryWord& w) {
        return is_prefix_normal_naive(w).normal;
    });
}

uint64_t count_block_outcomes(const BlockGameConfig& config) {
    validate(config);
    if (config.k > 3 || config.n > 24)
        throw std::invalid_argument("block game budget exceeded");
    BlockGame game(config);
    const unsigned w = 2 * config.k;
    std::vector<uint32_t> zero_choices;
    for (uint32_t mask = 0; mask < (1u << w); ++mask)
        if (static_cast<unsigned>(std::popcount(mask)) == config.k)
            zero_choices.push_back(mask);

    std::set<std::string> outcomes;
    std::vector<std::size_t> pick(game.blocks, 0);
    // Cartesian product of per-block zero placements.
    while (true) {
        for (unsigned b = 0; b < game.blocks; ++b) {
            const unsigned base = game.block_start(b);
            const uint32_t zeros = zero_choices[pick[b]];
            for (unsigned i = 0; i < w; ++i)
                game.cells[base + i] = (zeros & (1u << i)) ? 0 : 1;
        }
        const BinaryWord word = to_word(game.cells);
        if (!is_prefix_normal_naive(word).normal)
            throw std::logic_error("balanced outcome is not prefix normal");
        outcomes.insert(word.str());
        unsigned b = 0;
        while (b < game.blocks && ++pick[b] == zero_choices.size()) {
            pick[b] = 0;
            ++b;
        }
        if (b == game.blocks) break;
    }
    return outcomes.size();
}

}  // namespace pn
