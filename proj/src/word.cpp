#include "pn/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pn {

void BinaryWord::push_back(bool b) {
    if ((n_ & 63) == 0) limbs_.push_back(0);
    if (b) limbs_.back() |= uint64_t{1} << (n_ & 63);
    ++n_;
}

BinaryWord BinaryWord::parse(std::string_view text) {
    BinaryWord w;
    w.limbs_.reserve(text.size() / 64 + 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("invalid symbol '" + std::string(1, c) +
                                        "' at position " + std::to_string(i + 1));
        w.push_back(c == '1');
    }
    return w;
}

BinaryWord BinaryWord::from_bits(const std::vector<uint8_t>& bits) {
    BinaryWord w;
    w.limbs_.reserve(bits.size() / 64 + 1);
    for (uint8_t b : bits) w.push_back(b != 0);
    return w;
}

BinaryWord BinaryWord::ones(std::size_t n) {
    BinaryWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(true);
    return w;
}

BinaryWord BinaryWord::zeros(std::size_t n) {
    BinaryWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(false);
    return w;
}

std::size_t BinaryWord::ones_count() const {
    std::size_t c = 0;
    for (uint64_t limb : limbs_) c += std::popcount(limb);
    return c;
}

std::vector<uint32_t> BinaryWord::prefix_ones_table() const {
    std::vector<uint32_t> pre(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) pre[i + 1] = pre[i] + bit(i);
    return pre;
}

std::string BinaryWord::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::size_t prefix_ones(const BinaryWord& w, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("prefix length exceeds word length");
    std::size_t c = 0;
    for (std::size_t j = 0; j < i; ++j) c += w.bit(j);
    return c;
}

std::size_t density(const BinaryWord& w) { return w.ones_count(); }

std::vector<uint32_t> f_table(const BinaryWord& w) {
    const std::size_t n = w.size();
    std::vector<uint32_t> f(n + 1, 0);
    auto pre = w.prefix_ones_table();
    for (std::size_t len = 1; len <= n; ++len) {
        uint32_t best = 0;
        for (std::size_t s = 0; s + len <= n; ++s)
            best = std::max(best, pre[s + len] - pre[s]);
        f[len] = best;
    }
    return f;
}

OracleResult is_prefix_normal_naive(const BinaryWord& w) {
    const std::size_t n = w.size();
    auto pre = w.prefix_ones_table();
    // Smallest offending length first; within a length, leftmost start.
    for (std::size_t len = 1; len <= n; ++len) {
        const uint32_t p = pre[len];
        for (std::size_t s = 1; s + len <= n; ++s) {
            uint32_t c = pre[s + len] - pre[s];
            if (c > p)
                return {false, Violation{len, s, c, p}};
        }
    }
    return {true, std::nullopt};
}

std::optional<CriticalPrefix> decompose_critical(const BinaryWord& w) {
    const std::size_t n = w.size();
    std::size_t s = 0;
    while (s < n && w.bit(s)) ++s;
    if (s == n) return std::nullopt;  // w = 1^n has no critical prefix
    std::size_t t = 0;
    while (s + t < n && !w.bit(s + t)) ++t;
    std::vector<uint8_t> tail;
    tail.reserve(n - s - t);
    for (std::size_t i = s + t; i < n; ++i) tail.push_back(w.bit(i));
    return CriticalPrefix{s, t, BinaryWord::from_bits(tail)};
}

RunLengthForm to_run_length(const BinaryWord& w) {
    RunLengthForm rl;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        RunBlock b{0, 0};
        while (i < n && w.bit(i)) { ++b.ones; ++i; }
        while (i < n && !w.bit(i)) { ++b.zeros; ++i; }
        rl.blocks.push_back(b);
    }
    return rl;
}

BinaryWord from_run_length(const RunLengthForm& rl) {
    std::vector<uint8_t> bits;
    for (const auto& b : rl.blocks) {
        bits.insert(bits.end(), b.ones, 1);
        bits.insert(bits.end(), b.zeros, 0);
    }
    return BinaryWord::from_bits(bits);
}

GapForm to_gap_form(const BinaryWord& w) {
    if (w.empty() || !w.bit(0))
        throw std::invalid_argument("gap form requires a word starting with 1");
    GapForm g;
    g.length = w.size();
    std::vector<std::size_t> onePos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.bit(i)) onePos.push_back(i);
    g.density = onePos.size();
    for (std::size_t j = 0; j + 1 < onePos.size(); ++j)
        g.gaps.push_back(static_cast<uint32_t>(onePos[j + 1] - onePos[j]));
    // r_d makes the gaps sum to n.
    g.gaps.push_back(static_cast<uint32_t>(w.size() - onePos.back()));
    return g;
}

BinaryWord from_gap_form(const GapForm& g) {
    std::vector<uint8_t> bits;
    bits.reserve(g.length);
    for (uint32_t r : g.gaps) {
        bits.push_back(1);
        bits.insert(bits.end(), r - 1, 0);
    }
    return BinaryWord::from_bits(bits);
}

bool is_prefix_normal_gaps(const GapForm& g) {
    const std::size_t d = g.density;
    if (d <= 2) return true;  // no inequalities to check
    std::vector<uint64_t> acc(d + 1, 0);  // acc[j] = r_1 + ... + r_j
    for (std::size_t j = 0; j < d; ++j) acc[j + 1] = acc[j] + g.gaps[j];
    for (std::size_t m = 1; m + 2 <= d; ++m)
        for (std::size_t j = 2; j + m <= d; ++j)
            if (acc[j + m - 1] - acc[j - 1] < acc[m]) return false;
    return true;
}

}  // namespace pn
