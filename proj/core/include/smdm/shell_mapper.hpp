#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smdm/bigint.hpp"
#include "smdm/weights.hpp"

namespace smdm {

/// Fixed-to-fixed length shell mapper over (n, W).
///
/// Sequences of length n are totally ordered by (total weight ascending,
/// lexicographic ascending in alphabet order); ties between equal-weight
/// sequences are broken lexicographically so encoder and decoder agree.
/// Encoding unranks an integer index into that order, decoding ranks a
/// sequence back. All counting is exact arbitrary-precision arithmetic, so
/// input lengths are not limited by machine words.
///
/// The table N_k(w) counts length-k sequences of total weight exactly w for
/// k = 0..n; building it is O(n^2 * W_max * |A|) big-integer additions.
/// Immutable after construction; all queries are const and reentrant.
class ShellMapper {
public:
    /// Default cap on the DP table width n*W_max.
    static constexpr std::uint64_t default_max_table_width = std::uint64_t{1} << 22;
    /// Default cap on codebook() enumeration size.
    static constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 20;

    ShellMapper(std::uint32_t block_length, WeightFunction weight_function,
                std::uint64_t max_table_width = default_max_table_width);

    std::uint32_t block_length() const { return n_; }
    const WeightFunction& weight_function() const { return wf_; }
    const Alphabet& alphabet() const { return wf_.alphabet(); }
    /// Largest possible sequence weight n * W_max.
    std::uint64_t max_sequence_weight() const { return max_seq_weight_; }
    /// |A|^n.
    const BigInt& sequence_count() const { return total_; }

    /// N_k(w): number of length-k sequences of weight exactly w (0 outside range).
    const BigInt& suffix_count(std::uint32_t k, std::int64_t w) const;
    /// C_n(w): number of length-n sequences of weight <= w.
    const BigInt& count_upto(std::int64_t w) const;
    /// C_{n-1}(w), used by letter statistics.
    const BigInt& prefix_free_count_upto(std::int64_t w) const;

    /// Number of codewords for an m-bit input, 2^m; throws when 2^m > |A|^n.
    BigInt codebook_size(unsigned input_bits) const;

    /// Sequence of rank `index` under the (weight, lex) order. The result
    /// holds 0-based alphabet positions.
    std::vector<std::uint8_t> encode(unsigned input_bits, const BigInt& index) const;

    /// Rank of `sequence`; inverse of encode. Sequences of rank >= 2^m are
    /// outside the codebook and rejected.
    BigInt decode(unsigned input_bits, std::span<const std::uint8_t> sequence) const;

    /// Rank under the total order with no codebook bound applied.
    BigInt rank(std::span<const std::uint8_t> sequence) const;
    /// Inverse of rank for 0 <= r < |A|^n.
    std::vector<std::uint8_t> unrank(BigInt r) const;

    /// Weight of the last codeword of the m-bit codebook, i.e. the smallest
    /// w with count_upto(w) >= 2^m.
    std::uint32_t max_codeword_weight(unsigned input_bits) const;

    /// First `size` sequences in order; enumeration surface for analysis and
    /// tests, capped to keep accidental exponential blowups loud.
    std::vector<std::vector<std::uint8_t>> codebook(const BigInt& size,
                                                    std::uint64_t enumeration_cap = default_enumeration_cap) const;

private:
    std::uint32_t n_;
    WeightFunction wf_;
    std::uint64_t max_seq_weight_;
    BigInt total_;
    std::vector<std::vector<BigInt>> counts_;  // counts_[k][w] = N_k(w), w <= k*W_max
    std::vector<BigInt> cum_n_;                // cumulative of counts_[n]
    std::vector<BigInt> cum_n1_;               // cumulative of counts_[n-1]
    BigInt zero_;

    void check_symbols(std::span<const std::uint8_t> sequence) const;
};

}  // namespace smdm
