#pragma once

#include <cstdint>
#include <vector>

#include "smdm/alphabet.hpp"
#include "smdm/distribution.hpp"

namespace smdm {

/// Per-symbol non-negative integer weight function driving the shell order.
class WeightFunction {
public:
    WeightFunction(Alphabet alphabet, std::vector<std::uint32_t> weights);

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint32_t weight(std::size_t symbol) const { return weights_[symbol]; }
    const std::vector<std::uint32_t>& weights() const { return weights_; }
    std::uint32_t max_weight() const { return max_weight_; }

    bool operator==(const WeightFunction&) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::uint32_t> weights_;
    std::uint32_t max_weight_;
};

/// Integer quantization of the target's self-informations, normalized so the
/// smallest weight is 0 and the largest fits in precision_bits. Translation
/// and positive scaling of the objective leave the induced codebook
/// unchanged, so when the shifted self-informations share a common step
/// (dyadic and exponential-family targets) the step is mapped to an integer
/// and the quantization is exact.
WeightFunction weights_self_information(const Distribution& target, unsigned precision_bits = 8);

/// W(a) = l_a for dyadic targets with P(a) = 2^-l_a; rejects anything else.
WeightFunction weights_dyadic(const Distribution& target);

/// W(a) = a^2 over integer amplitudes; serves every Maxwell-Boltzmann target
/// on the same support regardless of the rate parameter.
WeightFunction weights_energy(const Alphabet& alphabet);

/// W = omega verbatim for an exponential-family target exp(-v*omega(a)).
WeightFunction weights_from_omega(const Alphabet& alphabet, const std::vector<long long>& omega);

}  // namespace smdm
