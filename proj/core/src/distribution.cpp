#include "smdm/distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace smdm {

namespace {

void check_distinct(const std::vector<double>& values, const char* who) {
    std::unordered_set<double> seen;
    for (double v : values) {
        if (!seen.insert(v).second) throw std::invalid_argument(std::string(who) + ": support values must be distinct");
    }
}

}  // namespace

Distribution::Distribution(std::vector<double> support_values, std::vector<double> probs) {
    if (support_values.size() != probs.size())
        throw std::invalid_argument("Distribution: support/probs size mismatch");
    if (support_values.empty()) throw std::invalid_argument("Distribution: empty support");
    check_distinct(support_values, "Distribution");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (p < 0.0 || !std::isfinite(p)) throw std::invalid_argument("Distribution: probabilities must be in [0,1]");
        sum += p;
        if (p > 0.0) {
            support_.push_back(support_values[i]);
            probs_.push_back(p);
        }
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("Distribution: probabilities must sum to 1");
    if (support_.empty()) throw std::invalid_argument("Distribution: all probabilities are zero");
}

std::optional<std::size_t> Distribution::find(double value) const {
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] == value) return i;
    }
    return std::nullopt;
}

double Distribution::prob_of(double value) const {
    const auto i = find(value);
    return i ? probs_[*i] : 0.0;
}

Composition::Composition(std::vector<double> support_values, std::vector<std::uint64_t> counts)
    : support_(std::move(support_values)), counts_(std::move(counts)) {
    if (support_.size() != counts_.size()) throw std::invalid_argument("Composition: support/counts size mismatch");
    if (support_.empty()) throw std::invalid_argument("Composition: empty support");
    check_distinct(support_, "Composition");
    length_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

double self_information(double p) {
    if (!(p > 0.0) || p > 1.0) throw std::domain_error("self_information: probability must be in (0,1]");
    return -std::log2(p);
}

double entropy(const Distribution& p) {
    double h = 0.0;
    for (double q : p.probs()) h -= q * std::log2(q);
    return h;
}

double divergence(const Distribution& pt, const Distribution& p) {
    double d = 0.0;
    for (std::size_t i = 0; i < pt.size(); ++i) {
        const double q = pt.prob(i);
        const double r = p.prob_of(pt.value(i));
        if (r == 0.0)
            throw std::domain_error("divergence: support of the first argument exceeds the second (infinite divergence)");
        d += q * std::log2(q / r);
    }
    return d;
}

Distribution maxwell_boltzmann(const std::vector<double>& support_values, double v) {
    if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("maxwell_boltzmann: v must be >= 0");
    check_distinct(support_values, "maxwell_boltzmann");
    // subtract the minimum energy before exponentiating so large v cannot underflow everything
    double e_min = support_values.empty() ? 0.0 : support_values[0] * support_values[0];
    for (double a : support_values) e_min = std::min(e_min, a * a);
    std::vector<double> w(support_values.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < support_values.size(); ++i) {
        const double a = support_values[i];
        w[i] = std::exp(-v * (a * a - e_min));
        sum += w[i];
    }
    for (double& x : w) x /= sum;
    return Distribution(support_values, w);
}

MbFit mb_fit_entropy(const std::vector<double>& support_values, double target_entropy_bits, double tol_bits) {
    const double h_max = std::log2(static_cast<double>(support_values.size()));
    if (!(target_entropy_bits > 0.0) || target_entropy_bits > h_max + tol_bits)
        throw std::domain_error("mb_fit_entropy: target entropy outside (0, log2 |support|]");

    auto h_at = [&](double v) { return entropy(maxwell_boltzmann(support_values, v)); };
    if (std::abs(h_at(0.0) - target_entropy_bits) <= tol_bits)
        return {0.0, maxwell_boltzmann(support_values, 0.0)};

    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (h_at(hi) > target_entropy_bits) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200) throw std::domain_error("mb_fit_entropy: entropy target unreachable on this support");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double h = h_at(mid);
        if (std::abs(h - target_entropy_bits) <= tol_bits) return {mid, maxwell_boltzmann(support_values, mid)};
        (h > target_entropy_bits ? lo : hi) = mid;
    }
    const double v = 0.5 * (lo + hi);
    return {v, maxwell_boltzmann(support_values, v)};
}

Composition n_type_quantize(const Distribution& p, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("n_type_quantize: n must be >= 1");
    const std::size_t k = p.size();
    std::vector<std::uint64_t> counts(k);
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
        counts[i] = static_cast<std::uint64_t>(std::floor(static_cast<double>(n) * p.prob(i)));
        assigned += counts[i];
    }
    auto kl_of = [&](const std::vector<std::uint64_t>& c) {
        double d = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            const double q = static_cast<double>(c[i]) / static_cast<double>(n);
            d += q * std::log2(q / p.prob(i));
        }
        return d;
    };
    // hand out the remaining slots one at a time, each to the symbol whose
    // increment lowers the divergence the most
    for (; assigned < n; ++assigned) {
        std::size_t best = 0;
        double best_d = 0.0;
        bool have = false;
        for (std::size_t i = 0; i < k; ++i) {
            ++counts[i];
            const double d = kl_of(counts);
            --counts[i];
            if (!have || d < best_d - 1e-15) {
                best = i;
                best_d = d;
                have = true;
            }
        }
        ++counts[best];
    }
    return Composition(p.support(), std::move(counts));
}

}  // namespace smdm
