#include "smdm/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace smdm {

WeightFunction::WeightFunction(Alphabet alphabet, std::vector<std::uint32_t> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
    if (alphabet_.size() != weights_.size())
        throw std::invalid_argument("WeightFunction: alphabet/weights size mismatch");
    max_weight_ = 0;
    for (std::uint32_t w : weights_) max_weight_ = std::max(max_weight_, w);
}

namespace {

// gcd on positive reals via Euclid; returns 0 when it degenerates below tol
double real_gcd(double a, double b, double tol) {
    while (b > tol) {
        const double r = std::fmod(a, b);
        a = b;
        b = (r > tol && b - r > tol) ? r : 0.0;
    }
    return a;
}

}  // namespace

WeightFunction weights_self_information(const Distribution& target, unsigned precision_bits) {
    if (precision_bits < 1 || precision_bits > 31)
        throw std::invalid_argument("weights_self_information: precision_bits must be in [1,31]");
    Alphabet alphabet(target.support());
    const std::size_t k = target.size();

    std::vector<double> shifted(k);
    double iota_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        shifted[i] = self_information(target.prob(i));
        iota_min = std::min(iota_min, shifted[i]);
    }
    double span = 0.0;
    for (double& d : shifted) {
        d -= iota_min;
        span = std::max(span, d);
    }
    const std::uint32_t top = (1u << precision_bits) - 1u;
    if (span <= 1e-12)  // all self-informations equal: the order is pure lexicographic
        return WeightFunction(std::move(alphabet), std::vector<std::uint32_t>(k, 0));

    // common step of the shifted self-informations, if one exists
    double g = 0.0;
    for (double d : shifted) {
        if (d <= 1e-12) continue;
        g = (g == 0.0) ? d : real_gcd(g, d, 1e-9 * span);
    }
    bool on_lattice = g > 0.0;
    if (on_lattice) {
        for (double d : shifted) {
            const double r = d / g;
            if (std::abs(r - std::round(r)) > 1e-6) {
                on_lattice = false;
                break;
            }
        }
    }

    std::vector<std::uint32_t> w(k);
    if (on_lattice && std::round(span / g) <= static_cast<double>(top)) {
        const auto scale = static_cast<std::uint32_t>(static_cast<double>(top) / std::round(span / g));
        for (std::size_t i = 0; i < k; ++i)
            w[i] = static_cast<std::uint32_t>(std::llround(shifted[i] / g)) * scale;
    } else {
        const double s = static_cast<double>(top) / span;
        for (std::size_t i = 0; i < k; ++i)
            w[i] = static_cast<std::uint32_t>(std::llrint(shifted[i] * s));
    }
    return WeightFunction(std::move(alphabet), std::move(w));
}

WeightFunction weights_dyadic(const Distribution& target) {
    Alphabet alphabet(target.support());
    std::vector<std::uint32_t> w(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double p = target.prob(i);
        const double l = -std::log2(p);
        const double l_int = std::round(l);
        if (l_int < 1.0 || std::abs(p - std::exp2(-l_int)) > 1e-12)
            throw std::domain_error("weights_dyadic: probability is not a power of 1/2");
        w[i] = static_cast<std::uint32_t>(l_int);
    }
    return WeightFunction(std::move(alphabet), std::move(w));
}

WeightFunction weights_energy(const Alphabet& alphabet) {
    std::vector<std::uint32_t> w(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        const double a = alphabet.value(i);
        if (a < 0.0 || std::abs(a - std::round(a)) > 1e-12)
            throw std::domain_error("weights_energy: amplitudes must be non-negative integers");
        const double e = std::round(a) * std::round(a);
        if (e > static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
            throw std::domain_error("weights_energy: amplitude too large");
        w[i] = static_cast<std::uint32_t>(e);
    }
    return WeightFunction(alphabet, std::move(w));
}

WeightFunction weights_from_omega(const Alphabet& alphabet, const std::vector<long long>& omega) {
    if (omega.size() != alphabet.size())
        throw std::invalid_argument("weights_from_omega: alphabet/omega size mismatch");
    std::vector<std::uint32_t> w(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (omega[i] < 0) throw std::domain_error("weights_from_omega: weights must be non-negative");
        if (omega[i] > std::numeric_limits<std::uint32_t>::max())
            throw std::domain_error("weights_from_omega: weight too large");
        w[i] = static_cast<std::uint32_t>(omega[i]);
    }
    return WeightFunction(alphabet, std::move(w));
}

}  // namespace smdm
