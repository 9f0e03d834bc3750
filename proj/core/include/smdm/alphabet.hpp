#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace smdm {

/// Ordered output alphabet. Symbols are addressed by position (0-based);
/// the stored value is the physical quantity a symbol carries (e.g. an
/// amplitude). The given order is total and fixes all lexicographic
/// comparisons downstream.
class Alphabet {
public:
    explicit Alphabet(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double value(std::size_t symbol) const { return values_[symbol]; }
    const std::vector<double>& values() const { return values_; }

    /// Position of an exact value, if present.
    std::optional<std::size_t> find(double value) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<double> values_;
};

}  // namespace smdm
