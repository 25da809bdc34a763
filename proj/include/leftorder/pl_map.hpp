#pragma once

#include "leftorder/rational.hpp"

#include <vector>

namespace leftorder {

/// Orientation-preserving piecewise-linear homeomorphism of the line: affine
/// between consecutive breakpoints and a slope-1 translation beyond both ends.
/// With no breakpoints it is the identity.
class PLMap {
public:
    PLMap() = default;
    // Throws InvariantViolation unless both sequences are strictly increasing
    // and of equal length.
    PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

    Rational operator()(const Rational& x) const;
    PLMap inverse() const;

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

// x -> (x / (1 + |x|) - 1) / 2, an increasing bijection from the line onto (-1, 0).
Rational compress(const Rational& x);
// Inverse of compress on (-1, 0); DomainError elsewhere.
Rational decompress(const Rational& y);

/// The conjugate compress o inner o decompress on (-1, 0), extended by 0 -> 0.
class CompressedMap {
public:
    explicit CompressedMap(PLMap inner) : inner_(std::move(inner)) {}

    // DomainError outside (-1, 0].
    Rational operator()(const Rational& y) const;
    const PLMap& inner() const { return inner_; }

private:
    PLMap inner_;
};

CompressedMap compress_to_negative_ray(const PLMap& m);

}  // namespace leftorder
