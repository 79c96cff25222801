#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pn/parikh_index.hpp"
#include "pn/word.hpp"

using namespace pn;

namespace {

BinaryWord word_from_mask(uint32_t mask, unsigned n) {
    std::vector<uint8_t> bits(n);
    for (unsigned i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
    return BinaryWord::from_bits(bits);
}

BinaryWord random_word(std::mt19937& rng, std::size_t n) {
    std::vector<uint8_t> bits(n);
    for (auto& b : bits) b = rng() & 1;
    return BinaryWord::from_bits(bits);
}

// Brute-force Parikh set: every substring's (ones, zeros) pair.
bool jumbled_bruteforce(const BinaryWord& w, std::size_t x, std::size_t y) {
    const std::size_t len = x + y;
    for (std::size_t s = 0; s + len <= w.size(); ++s) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < len; ++i) c += w.bit(s + i);
        if (c == x) return true;
    }
    return false;
}

const char* kFigWord = "10100110110001110010";

}  // namespace

TEST_CASE("index of the running example") {
    const auto idx = build_index(BinaryWord::parse(kFigWord));
    CHECK(idx.min_ones[11] == 5);
    CHECK(idx.max_ones[11] == 7);
    CHECK(idx.query(5, 6));
    CHECK(idx.query(0, 0));
    CHECK_FALSE(idx.query(8, 3));  // max_ones[11] = 7 < 8
    CHECK_THROWS_AS(idx.query(15, 15), std::out_of_range);
}

TEST_CASE("index of constant words") {
    const auto idx = build_index(BinaryWord::ones(12));
    for (unsigned k = 0; k <= 12; ++k) {
        CHECK(idx.max_ones[k] == k);
        CHECK(idx.min_ones[k] == k);
    }
}

TEST_CASE("max envelope equals the F table") {
    for (const char* s : {"110100101", kFigWord, "0011", ""}) {
        const auto w = BinaryWord::parse(s);
        CHECK(build_index(w).max_ones == f_table(w));
    }
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto w = random_word(rng, 200);
        CHECK(build_index(w).max_ones == f_table(w));
    }
}

TEST_CASE("prefix normal forms of the running example") {
    const auto w = BinaryWord::parse(kFigWord);
    CHECK(pnf_one(w).str() == "11101001011001010010");
    CHECK(pnf_zero(w).str() == "00011010101011010101");
    const auto z = BinaryWord::zeros(7);
    CHECK(pnf_one(z) == z);
    CHECK(pnf_zero(z) == z);
    CHECK(pnf_one(BinaryWord::parse("0011")).str() == "1100");
}

TEST_CASE("pnf idempotence and density, exhaustive n <= 14") {
    for (unsigned n = 0; n <= 14; ++n) {
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto w = word_from_mask(mask, n);
            const auto p1 = pnf_one(w);
            CHECK(pnf_one(p1) == p1);
            CHECK(p1.ones_count() == w.ones_count());
            CHECK(pnf_zero(w).ones_count() == w.ones_count());
            // normal-form equality is itself a membership test
            CHECK((p1 == w) == is_prefix_normal_naive(w).normal);
            CHECK(is_prefix_normal_pnf(w) == is_prefix_normal_naive(w).normal);
            CHECK(is_prefix_normal_naive(p1).normal);
        }
    }
}

TEST_CASE("pnf idempotence on long random words") {
    std::mt19937 rng(31);
    for (std::size_t n : {500, 2000}) {
        const auto w = random_word(rng, n);
        const auto p1 = pnf_one(w);
        CHECK(pnf_one(p1) == p1);
        CHECK(is_prefix_normal_naive(p1).normal);
        CHECK(p1.ones_count() == w.ones_count());
    }
}

TEST_CASE("prefix normal equivalence") {
    CHECK(pn_equivalent(BinaryWord::parse("0000111"), BinaryWord::parse("1110000")));
    const auto w = BinaryWord::parse("110100");
    CHECK(pn_equivalent(w, w));
    CHECK_FALSE(pn_equivalent(w, BinaryWord::parse("101010")));  // F(.,2) differs
    CHECK_FALSE(pn_equivalent(w, BinaryWord::parse("1101000")));
    // equivalent iff equal PNF_1, exhaustive at n = 7
    for (uint32_t a = 0; a < (1u << 7); ++a)
        for (uint32_t b = a + 1; b < (1u << 7); b += 13) {
            const auto u = word_from_mask(a, 7);
            const auto v = word_from_mask(b, 7);
            CHECK(pn_equivalent(u, v) == (pnf_one(u) == pnf_one(v)));
        }
}

TEST_CASE("jumbled queries agree with brute force, exhaustive n <= 12") {
    for (unsigned n = 0; n <= 12; ++n) {
        for (uint32_t mask = 0; mask < (1u << n); mask += (n >= 11 ? 7 : 1)) {
            const auto w = word_from_mask(mask, n);
            const auto idx = build_index(w);
            for (std::size_t x = 0; x <= n; ++x)
                for (std::size_t y = 0; x + y <= n; ++y)
                    CHECK(idx.query(x, y) == jumbled_bruteforce(w, x, y));
        }
    }
}

TEST_CASE("jumbled queries on a long random word") {
    std::mt19937 rng(41);
    const auto w = random_word(rng, 500);
    const auto idx = build_index(w);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = rng() % 501;
        const std::size_t x = len == 0 ? 0 : rng() % (len + 1);
        CHECK(idx.query(x, len - x) == jumbled_bruteforce(w, x, len - x));
    }
}
