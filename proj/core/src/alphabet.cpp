#include "smdm/alphabet.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace smdm {

Alphabet::Alphabet(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("Alphabet: need at least 2 symbols");
    std::unordered_set<double> seen;
    for (double v : values_) {
        if (!seen.insert(v).second) throw std::invalid_argument("Alphabet: symbol values must be distinct");
    }
}

std::optional<std::size_t> Alphabet::find(double value) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == value) return i;
    }
    return std::nullopt;
}

}  // namespace smdm
