#include "leftorder/pl_map.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>

namespace leftorder {

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size()) throw InvariantViolation("breakpoint/value count mismatch");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1] < breakpoints_[i])) {
            throw InvariantViolation("breakpoints not strictly increasing at " + to_string(breakpoints_[i]));
        }
        if (!(values_[i - 1] < values_[i])) {
            throw InvariantViolation("map not increasing: " + to_string(breakpoints_[i - 1]) + " -> " +
                                     to_string(values_[i - 1]) + " but " + to_string(breakpoints_[i]) + " -> " +
                                     to_string(values_[i]));
        }
    }
}

Rational PLMap::operator()(const Rational& x) const {
    if (breakpoints_.empty()) return x;
    if (x <= breakpoints_.front()) return values_.front() + (x - breakpoints_.front());
    if (x >= breakpoints_.back()) return values_.back() + (x - breakpoints_.back());
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - breakpoints_.begin());
    const std::size_t lo = hi - 1;
    if (breakpoints_[lo] == x) return values_[lo];
    const Rational slope = (values_[hi] - values_[lo]) / (breakpoints_[hi] - breakpoints_[lo]);
    return values_[lo] + slope * (x - breakpoints_[lo]);
}

PLMap PLMap::inverse() const { return PLMap(values_, breakpoints_); }

Rational compress(const Rational& x) {
    const Rational magnitude = x < 0 ? Rational(-x) : x;
    Rational y = (x / (1 + magnitude) - 1) / 2;
    y.canonicalize();
    return y;
}

Rational decompress(const Rational& y) {
    if (!(y > -1 && y < 0)) throw DomainError("decompress: " + to_string(y) + " outside (-1, 0)");
    const Rational z = 2 * y + 1;  // in (-1, 1)
    const Rational magnitude = z < 0 ? Rational(-z) : z;
    Rational x = z / (1 - magnitude);
    x.canonicalize();
    return x;
}

Rational CompressedMap::operator()(const Rational& y) const {
    if (y == 0) return Rational(0);
    return compress(inner_(decompress(y)));
}

CompressedMap compress_to_negative_ray(const PLMap& m) { return CompressedMap(m); }

}  // namespace leftorder
