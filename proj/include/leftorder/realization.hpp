#pragma once

#include "leftorder/order.hpp"
#include "leftorder/pl_map.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace leftorder {

struct EmbeddingEntry {
    Word word;
    Rational value;
};

/// An order-preserving injection t of finitely many group elements into the
/// rationals. The first `prefix_size` entries come from the enumeration; the
/// rest were placed later (by the same rule) as images g * g_i.
class Embedding {
public:
    const std::vector<EmbeddingEntry>& entries() const { return entries_; }
    std::size_t prefix_size() const { return prefix_size_; }
    std::size_t size() const { return entries_.size(); }

    // Test hook for negative controls: overwrite a stored value.
    void set_value(std::size_t index, const Rational& value);

    // Rebuilds an embedding from stored entries (no order queries).
    static Embedding from_entries(std::vector<EmbeddingEntry> entries, std::size_t prefix_size);

    friend Embedding build_embedding_t(std::span<const Word> enumeration, const OrderOracle& oracle);
    friend const Rational& place(Embedding& emb, const Word& word, const OrderOracle& oracle);

private:
    std::vector<EmbeddingEntry> entries_;
    std::vector<std::size_t> by_order_;  // entry indices sorted by value
    std::size_t prefix_size_ = 0;
};

/// t(g_0) = 0; a new maximum gets max + 1, a new minimum min - 1, anything
/// else the midpoint of its two order-neighbours among the placed elements.
/// The enumeration must start with the identity; Unknown comparisons and
/// duplicates raise PreconditionError.
Embedding build_embedding_t(std::span<const Word> enumeration, const OrderOracle& oracle);

// Value of `word`, placing it by the inductive rule if it is new.
const Rational& place(Embedding& emb, const Word& word, const OrderOracle& oracle);

// Value of `word` if placed; never modifies the embedding. Uses the oracle's
// normal form when it has one, otherwise pairwise Equal tests.
std::optional<Rational> lookup(const Embedding& emb, const Word& word, const OrderOracle& oracle);

/// The action of g: t(g_i) -> t(g g_i) over the enumeration prefix, placing
/// missing images first. Throws InvariantViolation on non-monotone data.
PLMap build_pl_action(Embedding& emb, const Word& g, const OrderOracle& oracle);

struct MapEntry {
    Word word;
    PLMap map;
};

struct GermOrbit {
    Word word;
    std::vector<Rational> values;  // compressed iterates starting from compress(0) = -1/2
    bool increasing = false;
};

/// Checks on a finite realization. The homomorphism property is only tested
/// at points where every value involved is a placed point.
struct RealizationChecks {
    bool order_compatible = true;
    bool faithful = true;
    bool monotone = true;
    bool partial_hom = true;
    bool germ_orbit = true;
    std::size_t partial_hom_points = 0;
    std::vector<GermOrbit> orbits;
    std::vector<std::string> failures;

    bool passed() const { return order_compatible && faithful && monotone && partial_hom && germ_orbit; }
};

RealizationChecks check_realization(const Embedding& emb, std::span<const MapEntry> maps, std::size_t iterates,
                                    const OrderOracle& oracle);

// Re-derives every stored value by replaying the placement rule in entry
// order. Empty string on success.
std::string replay_embedding(const Embedding& emb, const OrderOracle& oracle);

struct RealizationReport {
    Presentation presentation;
    std::string order;
    std::size_t radius = 0;
    std::size_t map_radius = 0;
    std::size_t iterates = 0;
    Budget budget;
    Embedding embedding;
    std::vector<MapEntry> maps;
    RealizationChecks checks;
};

/// End-to-end: enumerate the ball, build t, build maps for the elements of
/// length <= map_radius, and check. Unresolved ball elements raise
/// PreconditionError.
RealizationReport realize(const Presentation& p, const std::string& order, std::size_t radius,
                          std::size_t iterates, std::size_t map_radius, const Budget& budget);

}  // namespace leftorder
