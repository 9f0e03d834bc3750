#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smdm/bigint.hpp"
#include "smdm/distribution.hpp"
#include "smdm/shell_mapper.hpp"

namespace smdm {

/// How a letter distribution was obtained.
enum class LetterBasis { exact, partial_wmax, partial_wmax_minus_1, target };

std::string to_string(LetterBasis basis);

/// Letter distribution over the mapper alphabet (by symbol position).
struct LetterStats {
    std::vector<double> freqs;
    LetterBasis basis;
    std::uint64_t shell_weight = 0;  // meaningful for partial bases
};

struct DivergenceReport {
    std::uint32_t n = 0;
    unsigned m = 0;
    double divergence_bits = 0.0;
    double normalized_bits = 0.0;  // divergence_bits / n
    LetterBasis basis = LetterBasis::exact;
};

/// Letter distribution of the codebook holding every sequence of weight <= w.
/// By position symmetry occ(a) = n * C_{n-1}(w - W(a)), so no enumeration is
/// needed and the frequencies are exact rationals.
LetterStats partial_histogram(const ShellMapper& mapper, std::uint64_t w);

/// Letter distribution of the actual 2^m codebook. Full shells contribute in
/// closed form; the partially filled boundary shell is resolved by a
/// lexicographic prefix walk over its first K sequences.
LetterStats letter_distribution_exact(const ShellMapper& mapper, unsigned input_bits);

enum class ShellChoice { w_max, w_max_minus_1 };

/// Exact informational divergence of the 2^m shell-mapping codebook from the
/// i.i.d. target, D = -m + n H(letter) + n D(letter || target).
DivergenceReport divergence_exact(const ShellMapper& mapper, unsigned input_bits,
                                  const Distribution& target);

/// Same decomposition with the letter distribution replaced by the partial
/// histogram at w_max or w_max - 1.
DivergenceReport divergence_approx(const ShellMapper& mapper, unsigned input_bits,
                                   const Distribution& target, ShellChoice shell);

/// One row of a rolling approximation sweep.
struct ApproxSweepRow {
    std::uint32_t n;
    unsigned m;
    DivergenceReport w_max;
    bool has_w_max_minus_1 = false;
    DivergenceReport w_max_minus_1;  // valid when has_w_max_minus_1
};

/// Partial-histogram divergence approximations for many block lengths in one
/// rolling pass, keeping only two DP rows instead of a full table per n.
/// n_values must be strictly ascending; m_values pairs with n_values.
std::vector<ApproxSweepRow> divergence_approx_sweep(const WeightFunction& weight_function,
                                                    const Distribution& target,
                                                    const std::vector<std::uint32_t>& n_values,
                                                    const std::vector<unsigned>& m_values);

struct OptimalInput {
    unsigned m;
    DivergenceReport report;
};

/// Searches m in a window around ceil(n H(target)) for the smallest
/// divergence; ties go to the larger m (higher rate). Uses exact divergence
/// while m <= exact_cap and the w_max approximation beyond.
OptimalInput optimal_input_length(const ShellMapper& mapper, const Distribution& target,
                                  unsigned window = 8, unsigned exact_cap = 64);

/// n! / prod(counts!), exact.
BigInt multinomial(const Composition& composition);

/// Analytic divergence of a one-to-one constant-composition DM: every
/// codeword has the same self-information, so no codebook is materialized.
/// The input length defaults to floor(log2 multinomial).
DivergenceReport ccdm_divergence(const Composition& composition, const Distribution& target);
DivergenceReport ccdm_divergence(const Composition& composition, const Distribution& target,
                                 unsigned input_bits);

}  // namespace smdm
