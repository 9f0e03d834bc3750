#include "smdm/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace smdm {

std::string to_string(LetterBasis basis) {
    switch (basis) {
        case LetterBasis::exact: return "exact";
        case LetterBasis::partial_wmax: return "partial(w_max)";
        case LetterBasis::partial_wmax_minus_1: return "partial(w_max-1)";
        case LetterBasis::target: return "target";
    }
    return "?";
}

LetterStats partial_histogram(const ShellMapper& mapper, std::uint64_t w) {
    const BigInt& denom = mapper.count_upto(static_cast<std::int64_t>(w));
    if (denom == 0) throw std::domain_error("partial_histogram: no sequence has weight <= w");
    const auto& wf = mapper.weight_function();
    const std::size_t k = wf.alphabet().size();
    LetterStats stats;
    stats.basis = LetterBasis::partial_wmax;
    stats.shell_weight = w;
    stats.freqs.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        const BigInt& num = mapper.prefix_free_count_upto(static_cast<std::int64_t>(w) - wf.weight(a));
        stats.freqs[a] = ratio_as_double(num, denom);
    }
    return stats;
}

namespace {

// Symbol occurrences over the lexicographically first `remaining` sequences
// of exact weight `shell`. Walks the lex tree: a child subtree either fits
// entirely (closed-form occurrence counts by position symmetry) or is
// descended into.
std::vector<BigInt> boundary_shell_occurrences(const ShellMapper& mapper, std::uint32_t shell,
                                               BigInt remaining) {
    const auto& wf = mapper.weight_function();
    const std::size_t a_count = wf.alphabet().size();
    const std::uint32_t n = mapper.block_length();
    std::vector<BigInt> occ(a_count, BigInt(0));
    std::int64_t budget = shell;
    for (std::uint32_t i = 0; i < n && remaining > 0; ++i) {
        const std::uint32_t suffix_len = n - i - 1;
        for (std::size_t a = 0; a < a_count && remaining > 0; ++a) {
            const std::int64_t rest = budget - wf.weight(a);
            const BigInt& fits = mapper.suffix_count(suffix_len, rest);
            if (fits == 0) continue;
            if (remaining >= fits) {
                // take the whole subtree: head symbol plus all completions
                occ[a] += fits;
                if (suffix_len >= 1) {
                    for (std::size_t c = 0; c < a_count; ++c)
                        occ[c] += suffix_len * mapper.suffix_count(suffix_len - 1, rest - wf.weight(c));
                }
                remaining -= fits;
            } else {
                occ[a] += remaining;
                budget = rest;
                break;  // descend
            }
        }
    }
    return occ;
}

double cross_entropy_bits(const ShellMapper& mapper, const std::vector<double>& freqs,
                          const Distribution& target) {
    const auto& alphabet = mapper.alphabet();
    double ce = 0.0;
    for (std::size_t a = 0; a < freqs.size(); ++a) {
        if (freqs[a] <= 0.0) continue;
        const double p = target.prob_of(alphabet.value(a));
        if (p == 0.0)
            throw std::domain_error("divergence: codebook uses a symbol outside the target support");
        ce -= freqs[a] * std::log2(p);
    }
    return ce;
}

DivergenceReport report_from_letter_stats(const ShellMapper& mapper, unsigned m,
                                          const LetterStats& stats, const Distribution& target) {
    // -m + n H(Q) + n D(Q||P); the entropy and divergence terms are kept
    // separate to mirror the letter-distribution decomposition
    double h = 0.0;
    double kl = 0.0;
    const auto& alphabet = mapper.alphabet();
    for (std::size_t a = 0; a < stats.freqs.size(); ++a) {
        const double q = stats.freqs[a];
        if (q <= 0.0) continue;
        const double p = target.prob_of(alphabet.value(a));
        if (p == 0.0)
            throw std::domain_error("divergence: codebook uses a symbol outside the target support");
        h -= q * std::log2(q);
        kl += q * std::log2(q / p);
    }
    const std::uint32_t n = mapper.block_length();
    DivergenceReport rep;
    rep.n = n;
    rep.m = m;
    rep.basis = stats.basis;
    rep.divergence_bits = -static_cast<double>(m) + n * h + n * kl;
    rep.normalized_bits = rep.divergence_bits / n;
    return rep;
}

}  // namespace

LetterStats letter_distribution_exact(const ShellMapper& mapper, unsigned input_bits) {
    const BigInt size = mapper.codebook_size(input_bits);
    const std::uint32_t w_max = mapper.max_codeword_weight(input_bits);
    const auto& wf = mapper.weight_function();
    const std::size_t a_count = wf.alphabet().size();
    const std::uint32_t n = mapper.block_length();

    // full shells below w_max
    std::vector<BigInt> occ(a_count, BigInt(0));
    for (std::size_t a = 0; a < a_count; ++a)
        occ[a] = n * mapper.prefix_free_count_upto(static_cast<std::int64_t>(w_max) - 1 - wf.weight(a));

    // partially filled boundary shell
    const BigInt boundary = size - mapper.count_upto(static_cast<std::int64_t>(w_max) - 1);
    const std::vector<BigInt> b_occ = boundary_shell_occurrences(mapper, w_max, boundary);
    BigInt check = 0;
    for (std::size_t a = 0; a < a_count; ++a) {
        occ[a] += b_occ[a];
        check += occ[a];
    }
    if (check != n * size) throw std::logic_error("letter_distribution_exact: occurrence counts inconsistent");

    LetterStats stats;
    stats.basis = LetterBasis::exact;
    stats.shell_weight = w_max;
    stats.freqs.resize(a_count);
    const BigInt denom = n * size;
    for (std::size_t a = 0; a < a_count; ++a) stats.freqs[a] = ratio_as_double(occ[a], denom);
    return stats;
}

DivergenceReport divergence_exact(const ShellMapper& mapper, unsigned input_bits,
                                  const Distribution& target) {
    return report_from_letter_stats(mapper, input_bits, letter_distribution_exact(mapper, input_bits),
                                    target);
}

DivergenceReport divergence_approx(const ShellMapper& mapper, unsigned input_bits,
                                   const Distribution& target, ShellChoice shell) {
    const std::uint32_t w_max = mapper.max_codeword_weight(input_bits);
    std::int64_t w = w_max;
    if (shell == ShellChoice::w_max_minus_1) w -= 1;
    if (w < 0 || mapper.count_upto(w) == 0)
        throw std::domain_error("divergence_approx: chosen shell is below the minimum sequence weight");
    LetterStats stats = partial_histogram(mapper, static_cast<std::uint64_t>(w));
    stats.basis = shell == ShellChoice::w_max ? LetterBasis::partial_wmax : LetterBasis::partial_wmax_minus_1;
    return report_from_letter_stats(mapper, input_bits, stats, target);
}

std::vector<ApproxSweepRow> divergence_approx_sweep(const WeightFunction& weight_function,
                                                    const Distribution& target,
                                                    const std::vector<std::uint32_t>& n_values,
                                                    const std::vector<unsigned>& m_values) {
    if (n_values.size() != m_values.size())
        throw std::invalid_argument("divergence_approx_sweep: n/m list size mismatch");
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("divergence_approx_sweep: n_values must be strictly ascending");
    std::vector<ApproxSweepRow> rows;
    if (n_values.empty()) return rows;

    const auto& alphabet = weight_function.alphabet();
    const std::size_t a_count = alphabet.size();
    std::vector<double> iota(a_count);
    for (std::size_t a = 0; a < a_count; ++a) {
        const double p = target.prob_of(alphabet.value(a));
        iota[a] = p > 0.0 ? -std::log2(p) : -1.0;  // flagged; checked on use
    }
    const auto& w = weight_function.weights();
    const std::uint64_t wmax_sym = weight_function.max_weight();

    auto approx_report = [&](std::uint32_t n, unsigned m, std::int64_t shell, const std::vector<BigInt>& cum_prev,
                             const std::vector<BigInt>& cum_cur, LetterBasis basis) {
        const auto clamped = [](const std::vector<BigInt>& cum, std::int64_t i) -> const BigInt& {
            static const BigInt zero = 0;
            if (i < 0) return zero;
            return cum[std::min<std::size_t>(static_cast<std::size_t>(i), cum.size() - 1)];
        };
        const BigInt& denom = clamped(cum_cur, shell);
        double h = 0.0, kl = 0.0;
        for (std::size_t a = 0; a < a_count; ++a) {
            const double q = ratio_as_double(clamped(cum_prev, shell - w[a]), denom);
            if (q <= 0.0) continue;
            if (iota[a] < 0.0)
                throw std::domain_error("divergence: codebook uses a symbol outside the target support");
            h -= q * std::log2(q);
            kl += q * (std::log2(q) + iota[a]);
        }
        DivergenceReport rep;
        rep.n = n;
        rep.m = m;
        rep.basis = basis;
        rep.divergence_bits = -static_cast<double>(m) + n * h + n * kl;
        rep.normalized_bits = rep.divergence_bits / n;
        return rep;
    };

    std::vector<BigInt> prev{BigInt(1)};  // N_0
    std::vector<BigInt> cur;
    std::size_t next = 0;
    for (std::uint32_t k = 1; k <= n_values.back() && next < n_values.size(); ++k) {
        cur.assign(static_cast<std::size_t>(k) * wmax_sym + 1, BigInt(0));
        for (std::size_t u = 0; u < prev.size(); ++u) {
            if (prev[u] == 0) continue;
            for (std::uint32_t wa : w) cur[u + wa] += prev[u];
        }
        if (k == n_values[next]) {
            const std::uint32_t n = k;
            const unsigned m = m_values[next];
            std::vector<BigInt> cum_cur(cur.size()), cum_prev(prev.size());
            BigInt acc = 0;
            for (std::size_t i = 0; i < cur.size(); ++i) cum_cur[i] = (acc += cur[i]);
            acc = 0;
            for (std::size_t i = 0; i < prev.size(); ++i) cum_prev[i] = (acc += prev[i]);

            const BigInt size = BigInt(1) << m;
            if (size > cum_cur.back())
                throw std::invalid_argument("divergence_approx_sweep: 2^m exceeds |A|^n at n = " +
                                            std::to_string(n));
            std::int64_t shell = 0;
            while (cum_cur[static_cast<std::size_t>(shell)] < size) ++shell;

            ApproxSweepRow row;
            row.n = n;
            row.m = m;
            row.w_max = approx_report(n, m, shell, cum_prev, cum_cur, LetterBasis::partial_wmax);
            if (shell >= 1 && cum_cur[static_cast<std::size_t>(shell) - 1] > 0) {
                row.has_w_max_minus_1 = true;
                row.w_max_minus_1 =
                    approx_report(n, m, shell - 1, cum_prev, cum_cur, LetterBasis::partial_wmax_minus_1);
            }
            rows.push_back(std::move(row));
            ++next;
        }
        prev.swap(cur);
    }
    return rows;
}

OptimalInput optimal_input_length(const ShellMapper& mapper, const Distribution& target,
                                  unsigned window, unsigned exact_cap) {
    if (window < 1) throw std::invalid_argument("optimal_input_length: window must be >= 1");
    const double nh = mapper.block_length() * entropy(target);
    const auto center = static_cast<long long>(std::ceil(nh - 1e-12));
    const auto m_cap = static_cast<long long>(floor_log2(mapper.sequence_count()));
    const long long lo = std::max(0LL, center - static_cast<long long>(window));
    const long long hi = std::min(center + static_cast<long long>(window), m_cap);
    if (lo > hi) throw std::domain_error("optimal_input_length: empty search range");

    bool have = false;
    OptimalInput best{};
    for (long long m = lo; m <= hi; ++m) {
        const auto mb = static_cast<unsigned>(m);
        const DivergenceReport rep = mb <= exact_cap
                                         ? divergence_exact(mapper, mb, target)
                                         : divergence_approx(mapper, mb, target, ShellChoice::w_max);
        if (!have || rep.divergence_bits < best.report.divergence_bits + 1e-12) {
            best = {mb, rep};
            have = true;
        }
    }
    return best;
}

BigInt multinomial(const Composition& composition) {
    BigInt result = 1;
    std::uint64_t remaining = composition.length();
    for (std::uint64_t c : composition.counts()) {
        // result *= C(remaining, c)
        BigInt binom = 1;
        for (std::uint64_t i = 0; i < c; ++i) {
            binom *= BigInt(remaining - i);
            binom /= BigInt(i + 1);
        }
        result *= binom;
        remaining -= c;
    }
    return result;
}

DivergenceReport ccdm_divergence(const Composition& composition, const Distribution& target) {
    const BigInt count = multinomial(composition);
    return ccdm_divergence(composition, target, static_cast<unsigned>(floor_log2(count)));
}

DivergenceReport ccdm_divergence(const Composition& composition, const Distribution& target,
                                 unsigned input_bits) {
    double codeword_info = 0.0;  // self-information shared by every codeword
    for (std::size_t i = 0; i < composition.size(); ++i) {
        const std::uint64_t c = composition.counts()[i];
        if (c == 0) continue;
        const double p = target.prob_of(composition.support()[i]);
        if (p == 0.0) throw std::domain_error("ccdm_divergence: composition uses a symbol outside the target support");
        codeword_info += static_cast<double>(c) * -std::log2(p);
    }
    DivergenceReport rep;
    rep.n = static_cast<std::uint32_t>(composition.length());
    rep.m = input_bits;
    rep.basis = LetterBasis::exact;
    rep.divergence_bits = -static_cast<double>(input_bits) + codeword_info;
    rep.normalized_bits = rep.divergence_bits / static_cast<double>(rep.n);
    return rep;
}

}  // namespace smdm
