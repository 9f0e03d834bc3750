#include "smdm/shell_mapper.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace smdm {

ShellMapper::ShellMapper(std::uint32_t block_length, WeightFunction weight_function,
                         std::uint64_t max_table_width)
    : n_(block_length), wf_(std::move(weight_function)) {
    if (n_ < 1) throw std::invalid_argument("ShellMapper: block length must be >= 1");
    if (wf_.alphabet().size() > 256) throw std::invalid_argument("ShellMapper: alphabet limited to 256 symbols");
    max_seq_weight_ = static_cast<std::uint64_t>(n_) * wf_.max_weight();
    if (max_seq_weight_ + 1 > max_table_width)
        throw std::length_error("ShellMapper: table width " + std::to_string(max_seq_weight_ + 1) +
                                " exceeds the configured bound " + std::to_string(max_table_width));

    const auto& w = wf_.weights();
    const std::uint64_t wmax = wf_.max_weight();
    counts_.resize(n_ + 1);
    counts_[0].assign(1, BigInt(1));
    for (std::uint32_t k = 1; k <= n_; ++k) {
        const auto& prev = counts_[k - 1];
        auto& row = counts_[k];
        row.assign(static_cast<std::size_t>(k) * wmax + 1, BigInt(0));
        for (std::size_t u = 0; u < prev.size(); ++u) {
            if (prev[u] == 0) continue;
            for (std::uint32_t wa : w) row[u + wa] += prev[u];
        }
    }

    cum_n_.resize(counts_[n_].size());
    BigInt acc = 0;
    for (std::size_t i = 0; i < counts_[n_].size(); ++i) {
        acc += counts_[n_][i];
        cum_n_[i] = acc;
    }
    total_ = acc;

    const auto& prev = counts_[n_ - 1];
    cum_n1_.resize(prev.size());
    acc = 0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        acc += prev[i];
        cum_n1_[i] = acc;
    }

    assert(total_ == boost::multiprecision::pow(BigInt(wf_.alphabet().size()), n_));
}

const BigInt& ShellMapper::suffix_count(std::uint32_t k, std::int64_t w) const {
    if (k > n_ || w < 0) return zero_;
    const auto& row = counts_[k];
    if (static_cast<std::size_t>(w) >= row.size()) return zero_;
    return row[static_cast<std::size_t>(w)];
}

const BigInt& ShellMapper::count_upto(std::int64_t w) const {
    if (w < 0) return zero_;
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(w), cum_n_.size() - 1);
    return cum_n_[i];
}

const BigInt& ShellMapper::prefix_free_count_upto(std::int64_t w) const {
    if (w < 0) return zero_;
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(w), cum_n1_.size() - 1);
    return cum_n1_[i];
}

BigInt ShellMapper::codebook_size(unsigned input_bits) const {
    BigInt size = BigInt(1) << input_bits;
    if (size > total_)
        throw std::invalid_argument("ShellMapper: 2^" + std::to_string(input_bits) +
                                    " codewords exceed |A|^n");
    return size;
}

std::vector<std::uint8_t> ShellMapper::encode(unsigned input_bits, const BigInt& index) const {
    const BigInt size = codebook_size(input_bits);
    if (index < 0 || index >= size)
        throw std::out_of_range("ShellMapper::encode: index outside [0, 2^m)");
    return unrank(index);
}

BigInt ShellMapper::decode(unsigned input_bits, std::span<const std::uint8_t> sequence) const {
    const BigInt size = codebook_size(input_bits);
    BigInt r = rank(sequence);
    if (r >= size)
        throw std::out_of_range("ShellMapper::decode: sequence of rank " + r.str() +
                                " is outside the 2^" + std::to_string(input_bits) + " codebook");
    return r;
}

std::vector<std::uint8_t> ShellMapper::unrank(BigInt r) const {
    if (r < 0 || r >= total_) throw std::out_of_range("ShellMapper::unrank: rank outside [0, |A|^n)");
    // locate the weight shell, then walk positions left to right picking the
    // first symbol whose completion count covers the residual
    std::uint32_t shell = 0;
    while (cum_n_[shell] <= r) ++shell;
    if (shell > 0) r -= cum_n_[shell - 1];

    const std::size_t a_count = wf_.alphabet().size();
    std::vector<std::uint8_t> seq(n_);
    std::int64_t budget = shell;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t suffix_len = n_ - i - 1;
        bool placed = false;
        for (std::size_t a = 0; a < a_count; ++a) {
            const BigInt& c = suffix_count(suffix_len, budget - wf_.weight(a));
            if (r < c) {
                seq[i] = static_cast<std::uint8_t>(a);
                budget -= wf_.weight(a);
                placed = true;
                break;
            }
            r -= c;
        }
        if (!placed) throw std::logic_error("ShellMapper::unrank: exhausted alphabet (corrupt tables)");
    }
    assert(budget == 0);
    return seq;
}

BigInt ShellMapper::rank(std::span<const std::uint8_t> sequence) const {
    check_symbols(sequence);
    std::uint64_t weight = 0;
    for (std::uint8_t a : sequence) weight += wf_.weight(a);

    BigInt r = weight > 0 ? count_upto(static_cast<std::int64_t>(weight) - 1) : BigInt(0);
    std::int64_t budget = static_cast<std::int64_t>(weight);
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t suffix_len = n_ - i - 1;
        const std::uint8_t sym = sequence[i];
        for (std::uint8_t a = 0; a < sym; ++a) r += suffix_count(suffix_len, budget - wf_.weight(a));
        budget -= wf_.weight(sym);
    }
    return r;
}

std::uint32_t ShellMapper::max_codeword_weight(unsigned input_bits) const {
    const BigInt size = codebook_size(input_bits);
    std::uint32_t w = 0;
    while (cum_n_[w] < size) ++w;
    return w;
}

std::vector<std::vector<std::uint8_t>> ShellMapper::codebook(const BigInt& size,
                                                             std::uint64_t enumeration_cap) const {
    if (size < 0 || size > total_) throw std::invalid_argument("ShellMapper::codebook: size outside [0, |A|^n]");
    if (size > enumeration_cap)
        throw std::length_error("ShellMapper::codebook: size exceeds the enumeration cap " +
                                std::to_string(enumeration_cap));
    const auto count = size.convert_to<std::uint64_t>();
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(unrank(BigInt(i)));
    return out;
}

void ShellMapper::check_symbols(std::span<const std::uint8_t> sequence) const {
    if (sequence.size() != n_)
        throw std::domain_error("ShellMapper: sequence length " + std::to_string(sequence.size()) +
                                " does not match block length " + std::to_string(n_));
    for (std::uint8_t a : sequence) {
        if (a >= wf_.alphabet().size())
            throw std::domain_error("ShellMapper: symbol index " + std::to_string(a) + " outside the alphabet");
    }
}

}  // namespace smdm
