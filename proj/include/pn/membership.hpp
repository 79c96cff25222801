// membership.hpp -- advanced membership testers for prefix normal words:
// two linear-time rejection filters, the incremental v-sequence tester, its
// doubling variant, the combined two-phase MemberPN, and the exhaustive
// survivor-ratio sweeps behind the filter-effectiveness tables.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pn/word.hpp"

namespace pn {

enum class Stage {
    TrivialCase,  // n = 0, density 0 or n, or leading 0 with positive density
    RunFilter,
    BlockFilter,
    VSeq,
    Naive,
};

const char* stage_name(Stage s);

struct TestOutcome {
    bool accepted;
    std::optional<Violation> witness;  // present iff rejected; valid on the input word
    Stage decided_by;
};

/// Trivial linear filter: pass unless some 1-run is strictly longer than the
/// leading 1-run. Rejection is sound (a longer run beats the prefix of its
/// own length).
bool filter_run_of_ones(const BinaryWord& w);

/// Block filter on the run-length form: reject iff for some i >= 2
///   s_{i-1} + t_{i-1} + s_i <= s_1 + t_1  and  s_{i-1} + s_i > s_1,
/// i.e. a 1^a 0^b 1^c substring no longer than the critical prefix but with
/// more 1s.
bool filter_blocks(const RunLengthForm& rl);

/// Incremental tester: walks the chain v_0 = 1^d 0^{n-d}, ..., v_{d-s} = w,
/// each step moving one 1 from the head run to its final position (rightmost
/// mismatch first), and checks each new word only at its critical prefix
/// length. Worst case O(n^2), expected much faster on filtered inputs.
TestOutcome test_vseq(const BinaryWord& w);

/// Step-by-step record of the v-sequence, for regression against the known
/// worked chains.
struct VSeqTrace {
    std::vector<BinaryWord> words;  // v_0, v_1, ... as far as generated
    bool accepted;
    // On rejection: the failing check was z + 1 > limit or f_gamma > limit.
    std::size_t reject_step = 0;  // index of the v_i whose generation failed
    std::size_t reject_z = 0;
    std::size_t reject_limit = 0;  // s - 1 of the parent word
};

VSeqTrace vseq_trace(const BinaryWord& w);

/// Runs the v-sequence tester on prefixes of length 2, 4, 8, ..., then n;
/// a word is prefix normal iff all its prefixes are, so the first failing
/// prefix decides.
TestOutcome test_doubling(const BinaryWord& w);

/// Two-phase tester: run filter, block filter, then the exact phase
/// (v-sequence by default; the quadratic reference when naive_phase2 is set,
/// for cross-checking and timing comparisons).
TestOutcome member_pn(const BinaryWord& w, bool naive_phase2 = false);

/// Survivor statistics of the Phase-I filters over all 2^n words.
struct FilterStats {
    unsigned n;
    uint64_t total;      // 2^n
    uint64_t survivors;  // M = words not rejected by Phase I
    double ratio;        // n * M / 2^n
};

/// Exhaustive sweep over all 2^n words; both_filters selects whether the
/// block filter runs after the run filter. n capped at 26.
FilterStats survivor_ratio(unsigned n, bool both_filters);

/// Bit-serial reference for the sweep; same contract, no parallelism and no
/// packed-word shortcuts.
FilterStats survivor_ratio_serial(unsigned n, bool both_filters);

}  // namespace pn
