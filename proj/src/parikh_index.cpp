#include "pn/parikh_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace pn {

bool ParikhIndex::query(std::size_t ones, std::size_t zeros) const {
    const std::size_t k = ones + zeros;
    if (k > n) throw std::out_of_range("query length exceeds word length");
    return min_ones[k] <= ones && ones <= max_ones[k];
}

ParikhIndex build_index(const BinaryWord& w) {
    const std::size_t n = w.size();
    ParikhIndex idx;
    idx.n = n;
    idx.max_ones.assign(n + 1, 0);
    idx.min_ones.assign(n + 1, static_cast<uint32_t>(n + 1));
    idx.min_ones[0] = 0;
    for (std::size_t start = 0; start < n; ++start) {
        uint32_t ones = 0;
        for (std::size_t i = start; i < n; ++i) {
            ones += w.bit(i);
            const std::size_t k = i - start + 1;
            idx.max_ones[k] = std::max(idx.max_ones[k], ones);
            idx.min_ones[k] = std::min(idx.min_ones[k], ones);
        }
    }
    if (n == 0) idx.min_ones[0] = 0;
    return idx;
}

static BinaryWord from_increments(const std::vector<uint32_t>& env) {
    std::vector<uint8_t> bits;
    bits.reserve(env.size() - 1);
    for (std::size_t k = 1; k < env.size(); ++k)
        bits.push_back(static_cast<uint8_t>(env[k] - env[k - 1]));
    return BinaryWord::from_bits(bits);
}

BinaryWord pnf_one(const ParikhIndex& index) { return from_increments(index.max_ones); }
BinaryWord pnf_zero(const ParikhIndex& index) { return from_increments(index.min_ones); }

BinaryWord pnf_one(const BinaryWord& w) { return pnf_one(build_index(w)); }
BinaryWord pnf_zero(const BinaryWord& w) { return pnf_zero(build_index(w)); }

bool pn_equivalent(const BinaryWord& u, const BinaryWord& v) {
    if (u.size() != v.size()) return false;
    return build_index(u).max_ones == build_index(v).max_ones;
}

bool is_prefix_normal_pnf(const BinaryWord& w) {
    const std::size_t n = w.size();
    auto pre = w.prefix_ones_table();
    // w = PNF_1(w) iff no suffix walk ever rises above the prefix walk.
    for (std::size_t start = 1; start < n; ++start) {
        uint32_t ones = 0;
        for (std::size_t i = start; i < n; ++i) {
            ones += w.bit(i);
            if (ones > pre[i - start + 1]) return false;
        }
    }
    return true;
}

}  // namespace pn
