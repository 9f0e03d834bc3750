#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace smdm {

/// A probability mass function over an ordered support. Only symbols with
/// positive probability are stored; zero-probability entries passed to the
/// constructor are dropped. Probabilities must sum to 1 within 1e-12.
class Distribution {
public:
    Distribution(std::vector<double> support_values, std::vector<double> probs);

    std::size_t size() const { return support_.size(); }
    const std::vector<double>& support() const { return support_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(std::size_t i) const { return probs_[i]; }
    double value(std::size_t i) const { return support_[i]; }

    std::optional<std::size_t> find(double value) const;
    /// Probability of an exact support value; 0 when outside the support.
    double prob_of(double value) const;

private:
    std::vector<double> support_;
    std::vector<double> probs_;
};

/// Occurrence counts of each support value in a length-n block.
class Composition {
public:
    Composition(std::vector<double> support_values, std::vector<std::uint64_t> counts);

    std::size_t size() const { return support_.size(); }
    const std::vector<double>& support() const { return support_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t length() const { return length_; }

private:
    std::vector<double> support_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t length_;
};

/// -log2(p) in bits; requires 0 < p <= 1.
double self_information(double p);

/// Entropy in bits.
double entropy(const Distribution& p);

/// Informational divergence D(pt || p) in bits. Every support value of pt
/// must lie in the support of p (otherwise the divergence is infinite and a
/// domain error is thrown).
double divergence(const Distribution& pt, const Distribution& p);

/// Half Maxwell-Boltzmann family: P(a) proportional to exp(-v*a^2).
Distribution maxwell_boltzmann(const std::vector<double>& support_values, double v);

struct MbFit {
    double v;
    Distribution dist;
};

/// Finds v such that the Maxwell-Boltzmann distribution on the given support
/// has the requested entropy, by bisection (entropy is strictly decreasing
/// in v). Requires 0 < target <= log2(support size).
MbFit mb_fit_entropy(const std::vector<double>& support_values, double target_entropy_bits,
                     double tol_bits = 1e-9);

/// Minimum-divergence n-type approximation of p: counts summing to n whose
/// empirical distribution minimizes D(counts/n || p). Floor allocation plus
/// greedy assignment of the remaining slots.
Composition n_type_quantize(const Distribution& p, std::uint64_t n);

}  // namespace smdm
