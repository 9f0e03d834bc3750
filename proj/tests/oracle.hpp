#pragma once

// Brute-force reference implementations used to check the library. Everything
// here enumerates sequences directly and stays independent of the shell
// mapper's DP tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Seq = std::vector<std::uint8_t>;

inline std::uint64_t seq_weight(const Seq& s, const std::vector<std::uint32_t>& w) {
    std::uint64_t total = 0;
    for (auto a : s) total += w[a];
    return total;
}

/// All |A|^n sequences in lexicographic order (alphabet position order).
inline std::vector<Seq> all_sequences(std::size_t alphabet_size, std::uint32_t n) {
    std::vector<Seq> out;
    Seq cur(n, 0);
    while (true) {
        out.push_back(cur);
        std::uint32_t i = n;
        while (i > 0) {
            --i;
            if (++cur[i] < alphabet_size) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

/// All sequences sorted by (total weight, lex); the reference shell order.
inline std::vector<Seq> sorted_by_weight_lex(std::size_t alphabet_size, std::uint32_t n,
                                             const std::vector<std::uint32_t>& w) {
    std::vector<Seq> seqs = all_sequences(alphabet_size, n);
    std::stable_sort(seqs.begin(), seqs.end(),
                     [&](const Seq& a, const Seq& b) { return seq_weight(a, w) < seq_weight(b, w); });
    return seqs;
}

/// Divergence of a codebook evaluated codeword by codeword,
/// D = -m + mean self-information under the i.i.d. target.
inline double direct_divergence(const std::vector<Seq>& codebook, const std::vector<double>& iota,
                                unsigned m) {
    double sum = 0.0;
    for (const Seq& s : codebook)
        for (auto a : s) sum += iota[a];
    return -static_cast<double>(m) + sum / static_cast<double>(codebook.size());
}

/// Minimum divergence over all size-M codebooks: pick the M sequences of
/// least self-information.
inline double least_selfinfo_divergence(std::size_t alphabet_size, std::uint32_t n,
                                        const std::vector<double>& iota, unsigned m) {
    std::vector<Seq> seqs = all_sequences(alphabet_size, n);
    std::vector<double> info(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        double s = 0.0;
        for (auto a : seqs[i]) s += iota[a];
        info[i] = s;
    }
    std::sort(info.begin(), info.end());
    const std::uint64_t count = std::uint64_t{1} << m;
    double sum = std::accumulate(info.begin(), info.begin() + count, 0.0);
    return -static_cast<double>(m) + sum / static_cast<double>(count);
}

/// All compositions of n into k parts.
inline std::vector<std::vector<std::uint64_t>> all_compositions(std::uint64_t n, std::size_t k) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur(k, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i + 1 == k) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint64_t c = 0; c <= left; ++c) {
            cur[i] = c;
            self(self, i + 1, left - c);
        }
    };
    rec(rec, 0, n);
    return out;
}

inline double kl_bits(const std::vector<double>& q, const std::vector<double>& p) {
    double d = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] > 0.0) d += q[i] * std::log2(q[i] / p[i]);
    return d;
}

}  // namespace oracle
