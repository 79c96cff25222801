#include "pn/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pn/membership.hpp"

namespace pn {

namespace {

// Appending 1 to a prefix normal word of length m keeps it prefix normal iff
// no suffix of the extended word beats the (unchanged) prefix of its length:
//   pre[m] + 1 - pre[m-l+1] <= pre[l]   for all l = 1..m.
inline bool can_append_one(const std::vector<uint32_t>& pre, unsigned m) {
    const uint32_t top = pre[m] + 1;
    for (unsigned l = 1; l <= m; ++l)
        if (top - pre[m - l + 1] > pre[l]) return false;
    return true;
}

struct SweepCounters {
    std::vector<uint64_t> nodes;         // per depth
    std::vector<uint64_t> crit;          // per depth
    std::vector<uint64_t> leaf_density;  // per density, leaves only

    explicit SweepCounters(unsigned n)
        : nodes(n + 1, 0), crit(n + 1, 0), leaf_density(n + 1, 0) {}

    void merge(const SweepCounters& o) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            nodes[i] += o.nodes[i];
            crit[i] += o.crit[i];
            leaf_density[i] += o.leaf_density[i];
        }
    }
};

// Counting DFS over the prefix-closed tree; only the running prefix-ones
// table is needed. count_crit adds one extra 1-child test per node even
// where the 1-child is not descended into.
void count_dfs(unsigned n, unsigned m, std::vector<uint32_t>& pre,
               SweepCounters& c, bool count_crit) {
    c.nodes[m]++;
    const bool one_ok = can_append_one(pre, m);
    if (count_crit && !one_ok) c.crit[m]++;
    if (m == n) {
        c.leaf_density[pre[m]]++;
        return;
    }
    pre[m + 1] = pre[m];
    count_dfs(n, m + 1, pre, c, count_crit);
    if (one_ok) {
        pre[m + 1] = pre[m] + 1;
        count_dfs(n, m + 1, pre, c, count_crit);
    }
}

void check_budget(unsigned n, unsigned budget) {
    if (n > budget)
        throw std::invalid_argument("enumeration budget exceeded: n = " +
                                    std::to_string(n) + " > " +
                                    std::to_string(budget));
}

SweepCounters sweep_serial(unsigned n, bool count_crit) {
    SweepCounters c(n);
    std::vector<uint32_t> pre(n + 1, 0);
    count_dfs(n, 0, pre, c, count_crit);
    return c;
}

// Partitions the DFS forest at a fixed root depth: prefix normal words of
// that length are enumerated serially and their subtrees distributed across
// threads. Totals are independent of the thread count.
SweepCounters sweep_parallel(unsigned n, bool count_crit) {
    const unsigned root_depth = 14;
    if (n <= root_depth + 2) return sweep_serial(n, count_crit);

    std::vector<std::vector<uint32_t>> roots;  // prefix-ones tables of roots
    SweepCounters head(n);
    {
        // Depths below root_depth are counted here; the roots themselves are
        // handed to the workers and counted there.
        struct Collector {
            unsigned root_depth;
            bool count_crit;
            SweepCounters& head;
            std::vector<std::vector<uint32_t>>& roots;
            void walk(unsigned m, std::vector<uint32_t>& pre) {
                if (m == root_depth) {
                    roots.emplace_back(pre.begin(), pre.begin() + m + 1);
                    return;
                }
                const bool one_ok = can_append_one(pre, m);
                head.nodes[m]++;
                if (count_crit && !one_ok) head.crit[m]++;
                pre[m + 1] = pre[m];
                walk(m + 1, pre);
                if (one_ok) {
                    pre[m + 1] = pre[m] + 1;
                    walk(m + 1, pre);
                }
            }
        } collector{root_depth, count_crit, head, roots};
        std::vector<uint32_t> p(root_depth + 1, 0);
        collector.walk(0, p);
    }

    SweepCounters total(n);
    total.merge(head);
#pragma omp parallel
    {
        SweepCounters local(n);
        std::vector<uint32_t> pre(n + 1, 0);
#pragma omp for schedule(dynamic) nowait
        for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(roots.size());
             ++r) {
            std::copy(roots[r].begin(), roots[r].end(), pre.begin());
            count_dfs(n, root_depth, pre, local, count_crit);
        }
#pragma omp critical
        total.merge(local);
    }
    return total;
}

}  // namespace

void enumerate_pn(unsigned n,
                  const std::function<void(const BinaryWord&)>& visit) {
    std::vector<uint8_t> bits(n, 0);
    std::vector<uint32_t> pre(n + 1, 0);
    struct Walker {
        unsigned n;
        std::vector<uint8_t>& bits;
        std::vector<uint32_t>& pre;
        const std::function<void(const BinaryWord&)>& visit;
        void walk(unsigned m) {
            if (m == n) {
                visit(BinaryWord::from_bits(bits));
                return;
            }
            bits[m] = 0;
            pre[m + 1] = pre[m];
            walk(m + 1);
            if (can_append_one(pre, m)) {
                bits[m] = 1;
                pre[m + 1] = pre[m] + 1;
                walk(m + 1);
                bits[m] = 0;
            }
        }
    } walker{n, bits, pre, visit};
    walker.walk(0);
}

uint64_t pnw_count(unsigned n, unsigned budget) {
    check_budget(n, budget);
    return sweep_parallel(n, false).nodes[n];
}

uint64_t pnw_count_serial(unsigned n, unsigned budget) {
    check_budget(n, budget);
    return sweep_serial(n, false).nodes[n];
}

std::vector<uint64_t> pnw_density_row(unsigned n, unsigned budget) {
    check_budget(n, budget);
    return sweep_parallel(n, false).leaf_density;
}

uint64_t pnw_density(unsigned n, unsigned d, unsigned budget) {
    if (d > n) throw std::invalid_argument("density exceeds length");
    return pnw_density_row(n, budget)[d];
}

CritSeries crit_series(unsigned max_n, unsigned budget) {
    check_budget(max_n, budget);
    SweepCounters c = sweep_parallel(max_n, true);
    return {std::move(c.nodes), std::move(c.crit)};
}

CritSeries crit_series_serial(unsigned max_n, unsigned budget) {
    check_budget(max_n, budget);
    SweepCounters c = sweep_serial(max_n, true);
    return {std::move(c.nodes), std::move(c.crit)};
}

uint64_t crit_count(unsigned n, unsigned budget) {
    return crit_series(n, budget).crit[n];
}

uint64_t gf_coefficient(unsigned d, unsigned n) {
    if (d > 6)
        throw std::invalid_argument("no closed generating function for d > 6");
    // Numerator coefficients and denominator factors (1 - x^k) per density.
    struct Form {
        unsigned shift;                   // power of x in the numerator
        std::vector<uint64_t> num;        // remaining numerator polynomial
        std::vector<unsigned> den;        // k for each (1 - x^k) factor
    };
    static const Form forms[7] = {
        {0, {1}, {1}},                     // 1/(1-x)
        {1, {1}, {1}},                     // x/(1-x)
        {2, {1}, {1, 1}},                  // x^2/(1-x)^2
        {3, {1}, {2, 1, 1}},               // x^3/((1-x^2)(1-x)^2)
        {4, {1}, {3, 1, 1, 1}},            // x^4/((1-x^3)(1-x)^3)
        {5, {1, 1, 1}, {4, 2, 2, 1, 1}},   // x^5(1+x+x^2)/((1-x^4)(1-x^2)^2(1-x)^2)
        {6, {1, 1, 1, 1}, {5, 3, 2, 1, 1, 1}},
    };
    const Form& f = forms[d];
    if (n < f.shift) return 0;
    const unsigned target = n - f.shift;
    std::vector<uint64_t> c(target + 1, 0);
    for (std::size_t i = 0; i < f.num.size() && i <= target; ++i) c[i] = f.num[i];
    for (unsigned k : f.den)
        for (unsigned i = k; i <= target; ++i) c[i] += c[i - k];
    return c[target];
}

namespace {

uint64_t ext_count_impl(const BinaryWord& w, unsigned m, int want_density,
                        unsigned budget) {
    const unsigned base = static_cast<unsigned>(w.size());
    check_budget(base + m, budget);
    if (!is_prefix_normal_naive(w).normal) return 0;  // prefix closure
    std::vector<uint32_t> pre(base + m + 1, 0);
    for (unsigned i = 0; i < base; ++i) pre[i + 1] = pre[i] + w.bit(i);

    struct Walker {
        unsigned total;
        int want_density;
        std::vector<uint32_t>& pre;
        uint64_t count = 0;
        void walk(unsigned m) {
            if (m == total) {
                if (want_density < 0 ||
                    pre[m] == static_cast<uint32_t>(want_density))
                    ++count;
                return;
            }
            pre[m + 1] = pre[m];
            walk(m + 1);
            if (can_append_one(pre, m)) {
                pre[m + 1] = pre[m] + 1;
                walk(m + 1);
            }
        }
    } walker{base + m, want_density, pre};
    walker.walk(base);
    return walker.count;
}

}  // namespace

uint64_t ext_count(const BinaryWord& w, unsigned m, unsigned budget) {
    return ext_count_impl(w, m, -1, budget);
}

uint64_t ext_count_density(const BinaryWord& w, unsigned m, unsigned d,
                           unsigned budget) {
    return ext_count_impl(w, m, static_cast<int>(d), budget);
}

uint64_t fibonacci(unsigned n) {
    if (n == 0) return 0;
    uint64_t a = 0, b = 1;  // F(0), F(1)
    for (unsigned i = 1; i < n; ++i) {
        uint64_t next = a + b;
        a = b;
        b = next;
    }
    return b;
}

BinaryWord family_word(ExtFamily f, unsigned n) {
    auto require = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("family/length mismatch: ") + what);
    };
    std::string s;
    switch (f) {
        case ExtFamily::AllZeros:
            s.assign(n, '0');
            break;
        case ExtFamily::AllOnes:
            s.assign(n, '1');
            break;
        case ExtFamily::OnesThenZero:
            require(n >= 1, "1^{n-1}0 needs n >= 1");
            s.assign(n - 1, '1');
            s += '0';
            break;
        case ExtFamily::OnesThen01:
            require(n >= 3, "1^{n-2}01 needs n >= 3");
            s.assign(n - 2, '1');
            s += "01";
            break;
        case ExtFamily::OnesThen00:
            require(n >= 2, "1^{n-2}00 needs n >= 2");
            s.assign(n - 2, '1');
            s += "00";
            break;
        case ExtFamily::Alt10:
            require(n % 2 == 0, "(10)^{n/2} needs even n");
            for (unsigned i = 0; i < n / 2; ++i) s += "10";
            break;
        case ExtFamily::Alt10One:
            require(n % 2 == 1 && n >= 3, "(10)^{(n-1)/2}1 needs odd n >= 3");
            for (unsigned i = 0; i < n / 2; ++i) s += "10";
            s += '1';
            break;
        case ExtFamily::OneZerosOne:
            require(n >= 3, "10^{n-2}1 needs n >= 3");
            s = "1" + std::string(n - 2, '0') + "1";
            break;
        case ExtFamily::OneZeros:
            require(n >= 1, "10^{n-1} needs n >= 1");
            s = "1" + std::string(n - 1, '0');
            break;
    }
    return BinaryWord::parse(s);
}

uint64_t closed_form_ext(ExtFamily f, unsigned n) {
    family_word(f, n);  // validate the family/length combination
    const uint64_t pw = (n < 64) ? (uint64_t{1} << n) : 0;
    switch (f) {
        case ExtFamily::AllZeros: return 1;
        case ExtFamily::AllOnes: return pw;
        case ExtFamily::OnesThenZero: return pw - 1;
        case ExtFamily::OnesThen01: return pw - 5;
        case ExtFamily::OnesThen00: return pw - (n + 1);
        case ExtFamily::Alt10: return fibonacci(n + 2);
        case ExtFamily::Alt10One: return fibonacci(n + 1);
        case ExtFamily::OneZerosOne: return 3;
        case ExtFamily::OneZeros: return n + 1;
    }
    return 0;
}

bool verify_ext10_bijection(unsigned n, unsigned d, unsigned budget) {
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    if (n + d < 3)
        throw std::invalid_argument("identity needs n + d >= 3");
    const uint64_t lhs = pnw_density(n, d, budget);
    const uint64_t rhs =
        ext_count_density(BinaryWord::parse("10"), n + d - 3, d, budget);
    return lhs == rhs;
}

std::optional<BinaryWord> ext_lang_separator(const BinaryWord& v,
                                             const BinaryWord& w,
                                             unsigned max_m) {
    if (v == w) throw std::invalid_argument("words must differ");
    if (v.empty() || w.empty() || !v.bit(0) || !w.bit(0))
        throw std::invalid_argument("words must start with 1");
    if (!is_prefix_normal_naive(v).normal || !is_prefix_normal_naive(w).normal)
        throw std::invalid_argument("words must be prefix normal");

    // Level-order search over extensions alive for both words; a child alive
    // for exactly one of them is the shortest (then lexicographically first)
    // separator. Appending 0 preserves prefix normality, so only 1-children
    // need testing.
    auto pre_of = [](const BinaryWord& base, const std::vector<uint8_t>& ext) {
        std::vector<uint32_t> pre(base.size() + ext.size() + 1, 0);
        for (std::size_t i = 0; i < base.size(); ++i)
            pre[i + 1] = pre[i] + base.bit(i);
        for (std::size_t i = 0; i < ext.size(); ++i)
            pre[base.size() + i + 1] = pre[base.size() + i] + ext[i];
        return pre;
    };

    std::vector<std::vector<uint8_t>> frontier{{}};
    for (unsigned m = 1; m <= max_m; ++m) {
        std::vector<std::vector<uint8_t>> next;
        for (const auto& ext : frontier) {
            for (uint8_t bit : {uint8_t{0}, uint8_t{1}}) {
                std::vector<uint8_t> child = ext;
                child.push_back(bit);
                bool alive_v = true, alive_w = true;
                if (bit) {
                    auto pv = pre_of(v, ext);
                    auto pw = pre_of(w, ext);
                    alive_v = can_append_one(
                        pv, static_cast<unsigned>(v.size() + ext.size()));
                    alive_w = can_append_one(
                        pw, static_cast<unsigned>(w.size() + ext.size()));
                }
                if (alive_v != alive_w) return BinaryWord::from_bits(child);
                if (alive_v && alive_w) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<EnumRecord> ratio_series(unsigned max_n, unsigned budget) {
    CritSeries s = crit_series(max_n, budget);
    std::vector<EnumRecord> out;
    for (unsigned n = 2; n <= max_n; ++n) {
        const double ratio =
            static_cast<double>(s.crit[n]) / static_cast<double>(s.pnw[n]);
        out.push_back({n, s.pnw[n], s.crit[n], ratio,
                       ratio * static_cast<double>(n) / std::log(n)});
    }
    return out;
}

BoundValues bound_values(unsigned n) {
    if (n < 2) throw std::invalid_argument("bounds need n >= 2");
    BoundValues bv{};
    // Upper bound: largest k with 2^k k^2 ln 2 <= n.
    unsigned k = 1;
    while (std::pow(2.0, k + 1) * (k + 1.0) * (k + 1.0) * std::log(2.0) <=
           static_cast<double>(n))
        ++k;
    const double ceil_nk = std::ceil(static_cast<double>(n) / k);
    bv.upper_ratio =
        std::pow(1.0 - std::pow(2.0, -static_cast<double>(k)), ceil_nk) +
        std::pow(2.0, -static_cast<double>(k));
    // Lower bound: binom(2k,k)^{(n-4k)/(2k)} with k = floor(sqrt(n ln n)).
    const unsigned kl = static_cast<unsigned>(
        std::floor(std::sqrt(static_cast<double>(n) * std::log(n))));
    if (kl >= 1 && n > 4 * kl) {
        const double log_binom = std::lgamma(2.0 * kl + 1.0) -
                                 2.0 * std::lgamma(kl + 1.0);
        const double expo =
            (static_cast<double>(n) - 4.0 * kl) / (2.0 * kl);
        bv.lower_count_estimate = std::exp(expo * log_binom);
    } else {
        bv.lower_count_estimate = 1.0;
    }
    return bv;
}

}  // namespace pn
