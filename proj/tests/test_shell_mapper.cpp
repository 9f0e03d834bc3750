#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "smdm/shell_mapper.hpp"

using namespace smdm;

namespace {

WeightFunction make_weights(std::vector<double> values, std::vector<std::uint32_t> w) {
    return WeightFunction(Alphabet(std::move(values)), std::move(w));
}

const WeightFunction two_amp = make_weights({1, 3}, {1, 9});          // energy on {1,3}
const WeightFunction four_amp = make_weights({1, 3, 5, 7}, {1, 9, 25, 49});
const WeightFunction flat4 = make_weights({0, 1, 2, 3}, {0, 0, 0, 0});

BigInt random_bits(std::mt19937_64& rng, unsigned bits) {
    BigInt x = 0;
    for (unsigned i = 0; i < bits; i += 32) {
        x <<= 32;
        x |= static_cast<std::uint32_t>(rng());
    }
    return x & ((BigInt(1) << bits) - 1);
}

}  // namespace

TEST_CASE("suffix count tables") {
    const ShellMapper m1(1, two_amp);
    CHECK(m1.suffix_count(1, 1) == 1);
    CHECK(m1.suffix_count(1, 9) == 1);
    CHECK(m1.suffix_count(1, 2) == 0);

    const ShellMapper m2(2, two_amp);
    CHECK(m2.suffix_count(2, 2) == 1);
    CHECK(m2.suffix_count(2, 10) == 2);
    CHECK(m2.suffix_count(2, 18) == 1);
    CHECK(m2.sequence_count() == 4);

    const ShellMapper flat(2, flat4);
    CHECK(flat.suffix_count(2, 0) == 16);
    CHECK(flat.sequence_count() == 16);
}

TEST_CASE("count_upto") {
    const ShellMapper m(2, two_amp);
    CHECK(m.count_upto(1) == 0);   // below the minimum sequence weight
    CHECK(m.count_upto(10) == 3);  // {11, 13, 31}
    CHECK(m.count_upto(18) == 4);
    CHECK(m.count_upto(9999) == 4);
}

TEST_CASE("constant weights reduce to radix representation") {
    const ShellMapper m(2, flat4);
    CHECK(m.encode(4, 5) == std::vector<std::uint8_t>{1, 1});  // base-4 digits of 5
    for (int i = 0; i < 16; ++i) {
        const auto seq = m.encode(4, i);
        CHECK(seq == std::vector<std::uint8_t>{static_cast<std::uint8_t>(i / 4),
                                               static_cast<std::uint8_t>(i % 4)});
        CHECK(m.decode(4, seq) == i);
    }
}

TEST_CASE("energy-ordered encode on the 4-ary alphabet") {
    const ShellMapper m(2, four_amp);
    CHECK(m.encode(2, 0) == std::vector<std::uint8_t>{0, 0});  // amplitudes [1,1], weight 2
    CHECK(m.encode(2, 1) == std::vector<std::uint8_t>{0, 1});  // [1,3], weight 10
    CHECK(m.encode(2, 2) == std::vector<std::uint8_t>{1, 0});  // [3,1], weight 10
    CHECK(m.encode(2, 3) == std::vector<std::uint8_t>{1, 1});  // [3,3], weight 18
    CHECK(m.decode(2, std::vector<std::uint8_t>{1, 0}) == 2);
    CHECK(m.max_codeword_weight(2) == 18);

    // [7,7] has rank 15 >= 4: outside the codebook
    CHECK_THROWS_AS(m.decode(2, std::vector<std::uint8_t>{3, 3}), std::out_of_range);
}

TEST_CASE("length-1 dyadic order") {
    const ShellMapper m(1, make_weights({0, 1, 2, 3}, {1, 2, 3, 3}));
    for (int i = 0; i < 4; ++i)
        CHECK(m.encode(2, i) == std::vector<std::uint8_t>{static_cast<std::uint8_t>(i)});
}

TEST_CASE("max_codeword_weight") {
    const ShellMapper m2(2, two_amp);
    CHECK(m2.max_codeword_weight(2) == 18);  // full codebook: n * W_max

    const ShellMapper m4(2, four_amp);
    CHECK(m4.max_codeword_weight(2) == 18);
    CHECK(m4.max_codeword_weight(4) == 98);
}

TEST_CASE("codebook enumeration") {
    const ShellMapper m(2, four_amp);
    const auto cb = m.codebook(4);
    CHECK(cb == std::vector<std::vector<std::uint8_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(m.codebook(1) == std::vector<std::vector<std::uint8_t>>{{0, 0}});
    CHECK(m.codebook(16).size() == 16);
    CHECK_THROWS_AS(m.codebook(16, 8), std::length_error);
}

TEST_CASE("errors") {
    const ShellMapper m(2, two_amp);
    CHECK_THROWS_AS(m.encode(3, 0), std::invalid_argument);   // 2^3 > 4 codewords
    CHECK_THROWS_AS(m.encode(2, 4), std::out_of_range);       // index >= 2^m
    CHECK_THROWS_AS(m.decode(2, std::vector<std::uint8_t>{0, 5}), std::domain_error);
    CHECK_THROWS_AS(m.decode(2, std::vector<std::uint8_t>{0}), std::domain_error);
    CHECK_THROWS_AS(ShellMapper(3, two_amp, 16), std::length_error);  // table bound
}

TEST_CASE("bijection and order against brute force") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint32_t> wgen(0, 16);
    for (std::size_t a_count : {2, 3, 4}) {
        for (std::uint32_t n = 1; n <= 5; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<std::uint32_t> w(a_count);
                std::vector<double> values(a_count);
                for (std::size_t i = 0; i < a_count; ++i) {
                    w[i] = wgen(rng);
                    values[i] = static_cast<double>(i);
                }
                const ShellMapper m(n, make_weights(values, w));
                const auto want = oracle::sorted_by_weight_lex(a_count, n, w);
                const auto got = m.codebook(m.sequence_count(), 1 << 14);
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < want.size(); ++i) {
                    CHECK(got[i] == want[i]);
                    CHECK(m.rank(got[i]) == i);
                }
            }
        }
    }
}

TEST_CASE("codebook solves the least-weight selection problem") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<std::uint32_t> wgen(0, 16);
    std::vector<std::uint32_t> w{3, 7, 11};
    const std::size_t a_count = 3;
    const std::uint32_t n = 4;
    const ShellMapper m(n, make_weights({0, 1, 2}, w));
    const auto seqs = oracle::all_sequences(a_count, n);
    for (std::uint64_t count : {1, 5, 16, 81}) {
        const auto cb = m.codebook(count);
        std::uint64_t total = 0;
        for (const auto& s : cb) total += oracle::seq_weight(s, w);
        // no random subset of the same size may weigh less
        std::uniform_int_distribution<std::size_t> pick(0, seqs.size() - 1);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<std::size_t> idx(seqs.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            std::uint64_t other = 0;
            for (std::uint64_t i = 0; i < count; ++i) other += oracle::seq_weight(seqs[idx[i]], w);
            CHECK(total <= other);
        }
    }
}

TEST_CASE("count_upto brackets the maximum codeword weight") {
    const ShellMapper m(6, four_amp);
    for (unsigned bits = 0; bits <= 12; ++bits) {
        const std::uint32_t wm = m.max_codeword_weight(bits);
        const BigInt size = BigInt(1) << bits;
        CHECK(m.count_upto(static_cast<std::int64_t>(wm) - 1) < size);
        CHECK(m.count_upto(wm) >= size);
    }
}

TEST_CASE("rate adaptation shares one table") {
    const ShellMapper m(32, four_amp);
    std::mt19937_64 rng(2024);
    for (unsigned bits = 1; bits <= 64; ++bits) {
        const BigInt index = random_bits(rng, bits);
        CHECK(m.decode(bits, m.encode(bits, index)) == index);
    }
}

TEST_CASE("indices beyond 64 bits") {
    // constant weights, 4-ary, n = 80: the order is pure radix and the
    // index space is 160 bits wide
    const ShellMapper m(80, make_weights({0, 1, 2, 3}, {0, 0, 0, 0}));
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const BigInt index = random_bits(rng, 160);
        CHECK(m.decode(160, m.encode(160, index)) == index);
    }
}
