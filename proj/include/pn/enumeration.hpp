// enumeration.hpp -- pruned exhaustive enumeration of prefix normal words:
// pnw(n), pnw(n,d), extension-critical counts, extension counting with its
// closed forms, generating-function coefficients for densities 0..6, the
// crit/pnw ratio series, and numeric evaluators for the asymptotic bounds.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pn/word.hpp"

namespace pn {

/// Default cap for exhaustive enumeration sweeps; overridable per call.
inline constexpr unsigned kDefaultEnumBudget = 30;

/// Visits every prefix normal word of length n exactly once, in lexicographic
/// order of the canonical text form. DFS over the prefix-closed tree: the
/// 0-child is always prefix normal, the 1-child is tested incrementally.
void enumerate_pn(unsigned n, const std::function<void(const BinaryWord&)>& visit);

/// pnw(n). OpenMP-partitioned DFS forest; totals independent of thread count.
uint64_t pnw_count(unsigned n, unsigned budget = kDefaultEnumBudget);

/// Single-threaded reference DFS with the identical contract.
uint64_t pnw_count_serial(unsigned n, unsigned budget = kDefaultEnumBudget);

/// pnw(n, d) for d = 0..n in one sweep.
std::vector<uint64_t> pnw_density_row(unsigned n, unsigned budget = kDefaultEnumBudget);

uint64_t pnw_density(unsigned n, unsigned d, unsigned budget = kDefaultEnumBudget);

/// pnw(m) and crit(m) for every m = 0..max_n from one DFS over the forest:
/// each node of depth m is a prefix normal word of length m, and the node is
/// extension-critical exactly when its 1-child test fails.
struct CritSeries {
    std::vector<uint64_t> pnw;   // indexed 0..max_n
    std::vector<uint64_t> crit;  // indexed 0..max_n
};

CritSeries crit_series(unsigned max_n, unsigned budget = kDefaultEnumBudget);
CritSeries crit_series_serial(unsigned max_n, unsigned budget = kDefaultEnumBudget);

uint64_t crit_count(unsigned n, unsigned budget = kDefaultEnumBudget);

/// Coefficient of x^n in the closed-form generating function for density d,
/// 0 <= d <= 6. Exact integer power-series expansion; throws for d > 6
/// (no closed form known beyond that).
uint64_t gf_coefficient(unsigned d, unsigned n);

/// Number of length-m words w' with ww' prefix normal; zero when w itself is
/// not prefix normal. |w| + m capped by the budget.
uint64_t ext_count(const BinaryWord& w, unsigned m, unsigned budget = kDefaultEnumBudget);

/// As ext_count, restricted to ww' of the given total density.
uint64_t ext_count_density(const BinaryWord& w, unsigned m, unsigned d,
                           unsigned budget = kDefaultEnumBudget);

/// The word families with known closed forms for ext(w, |w|).
enum class ExtFamily {
    AllZeros,      // 0^n            -> 1
    AllOnes,       // 1^n            -> 2^n
    OnesThenZero,  // 1^{n-1} 0      -> 2^n - 1
    OnesThen01,    // 1^{n-2} 01     -> 2^n - 5
    OnesThen00,    // 1^{n-2} 00     -> 2^n - (n+1)
    Alt10,         // (10)^{n/2}, n even -> F(n+2)
    Alt10One,      // (10)^{(n-1)/2} 1, n odd -> F(n+1)
    OneZerosOne,   // 1 0^{n-2} 1    -> 3
    OneZeros,      // 1 0^{n-1}      -> n + 1
};

/// The family member of length n; throws on a family/length mismatch
/// (negative exponent or wrong parity).
BinaryWord family_word(ExtFamily f, unsigned n);

/// Evaluates the closed form for ext(family_word(f, n), n).
uint64_t closed_form_ext(ExtFamily f, unsigned n);

/// Fibonacci with F(1) = F(2) = 1.
uint64_t fibonacci(unsigned n);

/// Checks ext(10, n+d-3, d) = pnw(n, d) by computing both sides
/// independently.
bool verify_ext10_bijection(unsigned n, unsigned d,
                            unsigned budget = kDefaultEnumBudget);

/// Shortest extension (by length, then lexicographic) lying in exactly one
/// of the extension languages of v and w, searching lengths 1..max_m.
/// Preconditions: v, w prefix normal, starting with 1, v != w.
std::optional<BinaryWord> ext_lang_separator(const BinaryWord& v,
                                             const BinaryWord& w,
                                             unsigned max_m = 20);

struct EnumRecord {
    unsigned n;
    uint64_t pnw;
    uint64_t crit;
    double ratio;         // crit / pnw
    double scaled_ratio;  // ratio * n / ln(n)
};

/// Records for n = 2..max_n; consecutive records satisfy
/// pnw(n) = 2 pnw(n-1) - crit(n-1).
std::vector<EnumRecord> ratio_series(unsigned max_n,
                                     unsigned budget = kDefaultEnumBudget);

struct BoundValues {
    /// binom(2k,k)^{(n-4k)/(2k)} with k = floor(sqrt(n ln n)); 1 when the
    /// exponent is nonpositive.
    double lower_count_estimate;
    /// (1 - 2^{-k})^{ceil(n/k)} + 2^{-k} with k the largest integer such
    /// that 2^k k^2 ln 2 <= n; an upper bound for pnw(n)/2^n.
    double upper_ratio;
};

BoundValues bound_values(unsigned n);

}  // namespace pn
