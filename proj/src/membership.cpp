#include "pn/membership.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pn/word.hpp"

namespace pn {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::TrivialCase: return "trivial-case";
        case Stage::RunFilter: return "run-filter";
        case Stage::BlockFilter: return "block-filter";
        case Stage::VSeq: return "vseq";
        case Stage::Naive: return "naive";
    }
    return "?";
}

bool filter_run_of_ones(const BinaryWord& w) {
    const std::size_t n = w.size();
    std::size_t lead = 0;
    while (lead < n && w.bit(lead)) ++lead;
    std::size_t i = lead, run = 0;
    while (i < n) {
        if (w.bit(i)) {
            if (++run > lead) return false;
        } else {
            run = 0;
        }
        ++i;
    }
    return true;
}

bool filter_blocks(const RunLengthForm& rl) {
    if (rl.blocks.size() < 2) return true;
    const uint64_t s1 = rl.blocks[0].ones;
    const uint64_t t1 = rl.blocks[0].zeros;
    for (std::size_t i = 1; i < rl.blocks.size(); ++i) {
        const uint64_t sp = rl.blocks[i - 1].ones, tp = rl.blocks[i - 1].zeros;
        const uint64_t si = rl.blocks[i].ones;
        if (sp + tp + si <= s1 + t1 && sp + si > s1) return false;
    }
    return true;
}

namespace {

struct VSeqCore {
    bool accepted = false;
    bool trivial = false;       // decided without running the chain
    std::size_t reject_step = 0;
    std::size_t reject_z = 0;
    std::size_t reject_limit = 0;
};

// Shared engine for test_vseq and vseq_trace. Positions are 1-based here,
// matching the head-run/zero-run/gamma bookkeeping.
VSeqCore run_vseq(const BinaryWord& w, std::vector<BinaryWord>* trace) {
    const std::size_t n = w.size();
    const auto pre = w.prefix_ones_table();
    const std::size_t d = pre[n];
    VSeqCore res;
    if (d == 0 || d == n) {
        res.accepted = true;
        res.trivial = true;
        if (trace) trace->push_back(w);
        return res;
    }
    if (!w.bit(0)) {  // positive density but no leading 1: never prefix normal
        res.accepted = false;
        res.trivial = true;
        return res;
    }
    std::size_t s = 0;
    while (s < n && w.bit(s)) ++s;

    std::vector<std::size_t> one_pos;  // 1-based positions of 1s in w
    one_pos.reserve(d);
    for (std::size_t i = 0; i < n; ++i)
        if (w.bit(i)) one_pos.push_back(i + 1);

    auto emit = [&](std::size_t head, std::size_t gamma_start) {
        if (!trace) return;
        std::vector<uint8_t> bits(n, 0);
        for (std::size_t i = 0; i < head; ++i) bits[i] = 1;
        for (std::size_t i = gamma_start; i <= n; ++i) bits[i - 1] = w.bit(i - 1);
        trace->push_back(BinaryWord::from_bits(bits));
    };

    std::size_t s_cur = d;
    std::size_t gamma_start = n + 1;  // gamma is the suffix of w from here on
    std::size_t glen = 0, gones = 0;
    std::vector<uint32_t> f_gamma(n + 2, 0);
    emit(s_cur, gamma_start);  // v_0 = 1^d 0^{n-d}

    std::size_t step = 0;
    while (s_cur > s) {
        ++step;
        const std::size_t j = one_pos[s_cur - 1];  // final position of the moved 1
        const std::size_t s_child = s_cur - 1;
        const std::size_t k = j - 1;  // critical prefix length of the child
        const std::size_t b = gamma_start - j - 1;

        // Case 1: a substring inside gamma of the critical length.
        const std::size_t f_here = (k <= glen) ? f_gamma[k] : gones;
        if (f_here > s_child) {
            res.reject_step = step;
            res.reject_z = f_here;  // one-count that beat the prefix
            res.reject_limit = s_child;
            return res;
        }
        // Case 2: the substring through the moved 1, extending into gamma.
        std::size_t len = (k >= 1 + b) ? k - 1 - b : 0;
        len = std::min(len, glen);
        const std::size_t z = pre[gamma_start - 1 + len] - pre[gamma_start - 1];
        if (z + 1 > s_child) {
            res.reject_step = step;
            res.reject_z = z;
            res.reject_limit = s_child;
            return res;
        }

        // Accept the child: gamma grows by the prepended 1 0^b block. Only
        // lengths up to k matter from here on (k strictly decreases).
        for (std::size_t q = j; q < gamma_start; ++q) {
            const std::size_t maxlen = std::min(k, n - q + 1);
            for (std::size_t l = 1; l <= maxlen; ++l)
                f_gamma[l] = std::max<uint32_t>(f_gamma[l],
                                                pre[q - 1 + l] - pre[q - 1]);
        }
        gamma_start = j;
        glen = n - j + 1;
        gones = pre[n] - pre[j - 1];
        s_cur = s_child;
        emit(s_cur, gamma_start);
    }
    res.accepted = true;
    return res;
}

std::optional<Violation> recount_witness(const BinaryWord& w) {
    return is_prefix_normal_naive(w).violation;
}

}  // namespace

TestOutcome test_vseq(const BinaryWord& w) {
    VSeqCore core = run_vseq(w, nullptr);
    Stage stage = core.trivial ? Stage::TrivialCase : Stage::VSeq;
    if (core.accepted) return {true, std::nullopt, stage};
    return {false, recount_witness(w), stage};
}

VSeqTrace vseq_trace(const BinaryWord& w) {
    VSeqTrace t;
    VSeqCore core = run_vseq(w, &t.words);
    t.accepted = core.accepted;
    t.reject_step = core.reject_step;
    t.reject_z = core.reject_z;
    t.reject_limit = core.reject_limit;
    return t;
}

TestOutcome test_doubling(const BinaryWord& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> lengths;
    for (std::size_t len = 2; len < n; len *= 2) lengths.push_back(len);
    lengths.push_back(n);
    for (std::size_t len : lengths) {
        std::vector<uint8_t> bits(len);
        for (std::size_t i = 0; i < len; ++i) bits[i] = w.bit(i);
        const BinaryWord prefix = BinaryWord::from_bits(bits);
        TestOutcome out = test_vseq(prefix);
        if (!out.accepted) return out;  // prefix witness is a witness in w
    }
    return {true, std::nullopt, Stage::VSeq};
}

TestOutcome member_pn(const BinaryWord& w, bool naive_phase2) {
    const std::size_t n = w.size();
    const auto pre = w.prefix_ones_table();
    const std::size_t d = pre[n];
    if (n == 0 || d == 0 || d == n)
        return {true, std::nullopt, Stage::TrivialCase};

    if (!filter_run_of_ones(w)) {
        // Leading run has length r = pre[r]; some later run reaches r + 1.
        std::size_t r = 0;
        while (r < n && w.bit(r)) ++r;
        std::size_t run = 0;
        for (std::size_t i = r; i < n; ++i) {
            run = w.bit(i) ? run + 1 : 0;
            if (run == r + 1) {
                return {false,
                        Violation{r + 1, i - r, r + 1, pre[r + 1]},
                        Stage::RunFilter};
            }
        }
    }

    const RunLengthForm rl = to_run_length(w);
    if (!filter_blocks(rl)) {
        const uint64_t s1 = rl.blocks[0].ones, t1 = rl.blocks[0].zeros;
        std::size_t start = 0;  // start of block i-1
        for (std::size_t i = 1; i < rl.blocks.size(); ++i) {
            start += (i >= 2) ? rl.blocks[i - 2].ones + rl.blocks[i - 2].zeros : 0;
            const uint64_t sp = rl.blocks[i - 1].ones, tp = rl.blocks[i - 1].zeros;
            const uint64_t si = rl.blocks[i].ones;
            if (sp + tp + si <= s1 + t1 && sp + si > s1) {
                const std::size_t len = sp + tp + si;
                return {false,
                        Violation{len, start, static_cast<std::size_t>(sp + si),
                                  pre[len]},
                        Stage::BlockFilter};
            }
        }
    }

    if (naive_phase2) {
        OracleResult r = is_prefix_normal_naive(w);
        return {r.normal, r.violation, Stage::Naive};
    }
    return test_vseq(w);
}

namespace {

// Packed sweeps: word of length n encoded in the low n bits of x, bit i
// being symbol i+1.

inline bool packed_run_filter(uint32_t x, unsigned n) {
    (void)n;
    const unsigned lead = static_cast<unsigned>(std::countr_one(x));
    unsigned longest = 0;
    uint32_t y = x;
    while (y) {
        ++longest;
        y &= y >> 1;
    }
    return longest <= lead;
}

inline bool packed_block_filter(uint32_t x, unsigned n) {
    unsigned consumed = 0;
    uint32_t rest = x;
    // First block (s1 may be 0).
    unsigned s1 = std::min<unsigned>(std::countr_one(rest), n - consumed);
    rest >>= s1;
    consumed += s1;
    unsigned t1 = std::min<unsigned>(std::countr_zero(rest | 0u), n - consumed);
    if (consumed + t1 > n) t1 = n - consumed;
    rest >>= t1;
    consumed += t1;
    unsigned sp = s1, tp = t1;
    while (consumed < n) {
        unsigned si = std::min<unsigned>(std::countr_one(rest), n - consumed);
        rest >>= si;
        consumed += si;
        unsigned ti = std::min<unsigned>(std::countr_zero(rest | 0u), n - consumed);
        if (consumed + ti > n) ti = n - consumed;
        rest >>= ti;
        consumed += ti;
        if (sp + tp + si <= s1 + t1 && sp + si > s1) return false;
        sp = si;
        tp = ti;
    }
    return true;
}

void check_sweep_budget(unsigned n) {
    if (n < 1 || n > 26)
        throw std::invalid_argument("survivor sweep supports 1 <= n <= 26");
}

}  // namespace

FilterStats survivor_ratio(unsigned n, bool both_filters) {
    check_sweep_budget(n);
    const uint64_t total = uint64_t{1} << n;
    uint64_t survivors = 0;
#pragma omp parallel for reduction(+ : survivors) schedule(static)
    for (int64_t x = 0; x < static_cast<int64_t>(total); ++x) {
        const uint32_t word = static_cast<uint32_t>(x);
        if (!packed_run_filter(word, n)) continue;
        if (both_filters && !packed_block_filter(word, n)) continue;
        ++survivors;
    }
    return {n, total, survivors,
            static_cast<double>(n) * static_cast<double>(survivors) /
                static_cast<double>(total)};
}

FilterStats survivor_ratio_serial(unsigned n, bool both_filters) {
    check_sweep_budget(n);
    const uint64_t total = uint64_t{1} << n;
    uint64_t survivors = 0;
    std::vector<uint8_t> bits(n);
    for (uint64_t x = 0; x < total; ++x) {
        for (unsigned i = 0; i < n; ++i) bits[i] = (x >> i) & 1;
        const BinaryWord w = BinaryWord::from_bits(bits);
        if (!filter_run_of_ones(w)) continue;
        if (both_filters && !filter_blocks(to_run_length(w))) continue;
        ++survivors;
    }
    return {n, total, survivors,
            static_cast<double>(n) * static_cast<double>(survivors) /
                static_cast<double>(total)};
}

}  // namespace pn
