// parikh_index.hpp -- the linear-size index for binary jumbled pattern
// matching: per-length min/max one-counts, the two prefix normal forms,
// prefix-normal equivalence, and jumbled queries.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pn/word.hpp"

namespace pn {

/// For every substring length k, the minimum and maximum number of 1s over
/// all substrings of that length. By the interval property the achievable
/// counts at length k are exactly [min_ones[k], max_ones[k]].
struct ParikhIndex {
    std::size_t n = 0;
    std::vector<uint32_t> max_ones;  // indexed 0..n, max_ones[k] = F(w,k)
    std::vector<uint32_t> min_ones;  // indexed 0..n

    /// True iff some substring has exactly `ones` 1s and `zeros` 0s.
    /// Throws std::out_of_range if ones + zeros > n.
    bool query(std::size_t ones, std::size_t zeros) const;
};

/// Builds the index by sweeping every suffix from a common origin and
/// keeping the per-length upper and lower envelopes of the one-count walk.
/// Suffixes are processed longest first. O(n^2) time, O(n) extra space.
ParikhIndex build_index(const BinaryWord& w);

/// Reads the upper envelope as a binary word: symbol k is 1 iff
/// max_ones[k] - max_ones[k-1] = 1. Always prefix normal w.r.t. 1.
BinaryWord pnf_one(const BinaryWord& w);
BinaryWord pnf_one(const ParikhIndex& index);

/// Lower envelope counterpart; prefix normal w.r.t. 0.
BinaryWord pnf_zero(const BinaryWord& w);
BinaryWord pnf_zero(const ParikhIndex& index);

/// True iff |u| = |v| and F(u,.) = F(v,.), i.e. the words share PNF_1.
bool pn_equivalent(const BinaryWord& u, const BinaryWord& v);

/// Membership via the normal form: w is prefix normal iff w = PNF_1(w).
/// Decision only; bails out as soon as some suffix walk exceeds the prefix
/// envelope, so rejections are typically found long before the full sweep.
bool is_prefix_normal_pnf(const BinaryWord& w);

}  // namespace pn
