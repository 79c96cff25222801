// word.hpp -- binary words, prefix/substring one-counts, structural
// decompositions, and the quadratic reference test for prefix normality.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pn {

/// Immutable binary word over {0,1}, packed 64 bits per limb.
/// Canonical external form is an ASCII '0'/'1' string, one word per line.
class BinaryWord {
public:
    BinaryWord() = default;

    /// Parses the canonical ASCII form. Throws std::invalid_argument naming
    /// the 1-based position of the first character outside {'0','1'}.
    static BinaryWord parse(std::string_view text);

    static BinaryWord from_bits(const std::vector<uint8_t>& bits);
    static BinaryWord ones(std::size_t n);
    static BinaryWord zeros(std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    /// Bit at 0-based position i (the paper's w_{i+1}).
    bool bit(std::size_t i) const {
        return (limbs_[i >> 6] >> (i & 63)) & 1u;
    }

    /// Number of 1s in the whole word (the density).
    std::size_t ones_count() const;

    /// pre[i] = number of 1s in the length-i prefix, i = 0..n.
    std::vector<uint32_t> prefix_ones_table() const;

    std::string str() const;

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
        return a.n_ == b.n_ && a.limbs_ == b.limbs_;
    }

private:
    std::vector<uint64_t> limbs_;
    std::size_t n_ = 0;

    void push_back(bool b);
};

/// P(w,i): 1s in the length-i prefix. Throws std::out_of_range for i > |w|.
std::size_t prefix_ones(const BinaryWord& w, std::size_t i);

/// Density |w|_1.
std::size_t density(const BinaryWord& w);

/// F(w,i) for i = 0..n: maximum 1s over all length-i substrings.
/// Sliding-window scan per length, O(n^2) total.
std::vector<uint32_t> f_table(const BinaryWord& w);

/// A substring beating the prefix of its own length.
struct Violation {
    std::size_t length;          // substring length
    std::size_t start;           // 0-based start of the offending substring
    std::size_t substring_ones;  // 1s in that substring
    std::size_t prefix_ones;     // 1s in the prefix of the same length
};

struct OracleResult {
    bool normal;
    std::optional<Violation> violation;  // present iff !normal
};

/// Reference test: w is prefix normal iff F(w,i) = P(w,i) for all i.
/// On rejection reports the smallest offending length and, within it, the
/// leftmost offending start. Every other tester is checked against this one.
OracleResult is_prefix_normal_naive(const BinaryWord& w);

/// Decomposition w = 1^s 0^t gamma with s >= 0, t > 0, gamma empty or
/// starting with 1. Defined exactly for w != 1^n.
struct CriticalPrefix {
    std::size_t leading_ones;  // s
    std::size_t zeros;         // t
    BinaryWord tail;           // gamma
};

/// Returns nullopt for w = 1^n (including the empty word), which has no
/// critical prefix.
std::optional<CriticalPrefix> decompose_critical(const BinaryWord& w);

/// Maximal 1*0* blocks (s_i, t_i). The first block may have s_1 = 0 and the
/// last may have t_c = 0; all other runs are nonempty.
struct RunBlock {
    uint32_t ones;
    uint32_t zeros;
};

struct RunLengthForm {
    std::vector<RunBlock> blocks;
};

RunLengthForm to_run_length(const BinaryWord& w);
BinaryWord from_run_length(const RunLengthForm& rl);

/// w = 1 0^{r_1-1} 1 0^{r_2-1} ... 1 0^{r_d-1}; defined for words starting
/// with 1. gaps[j] is r_{j+1}; the gaps sum to n.
struct GapForm {
    std::size_t length;
    std::size_t density;
    std::vector<uint32_t> gaps;
};

/// Throws std::invalid_argument unless w starts with 1.
GapForm to_gap_form(const BinaryWord& w);
BinaryWord from_gap_form(const GapForm& g);

/// Prefix normality via the gap inequalities: every window of m consecutive
/// gaps starting at j >= 2 is at least as long as the first m gaps.
bool is_prefix_normal_gaps(const GapForm& g);

}  // namespace pn
