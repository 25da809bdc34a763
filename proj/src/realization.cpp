#include "leftorder/realization.hpp"

#include "leftorder/ball.hpp"
#include "leftorder/errors.hpp"

#include <algorithm>

namespace leftorder {

void Embedding::set_value(std::size_t index, const Rational& value) { entries_.at(index).value = value; }

Embedding Embedding::from_entries(std::vector<EmbeddingEntry> entries, std::size_t prefix_size) {
    if (prefix_size > entries.size()) throw StructuralError("embedding prefix longer than its entries");
    Embedding emb;
    emb.entries_ = std::move(entries);
    emb.prefix_size_ = prefix_size;
    emb.by_order_.resize(emb.entries_.size());
    for (std::size_t i = 0; i < emb.by_order_.size(); ++i) emb.by_order_[i] = i;
    std::stable_sort(emb.by_order_.begin(), emb.by_order_.end(),
                     [&](std::size_t a, std::size_t b) { return emb.entries_[a].value < emb.entries_[b].value; });
    return emb;
}

namespace {

struct Placement {
    std::size_t position;              // index into by_order where the word belongs
    std::optional<std::size_t> equal;  // existing entry equal to the word
};

Placement locate(const std::vector<EmbeddingEntry>& entries, const std::vector<std::size_t>& by_order,
                 const Word& word, const OrderOracle& oracle) {
    std::size_t lo = 0, hi = by_order.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const EmbeddingEntry& other = entries[by_order[mid]];
        const Cmp c = oracle.compare(word, other.word);
        switch (c) {
            case Cmp::Unknown:
                throw PreconditionError("order oracle could not compare `" + to_string(word, oracle.presentation()) +
                                        "` with `" + to_string(other.word, oracle.presentation()) + "`");
            case Cmp::Equal: return {mid, by_order[mid]};
            case Cmp::Less: hi = mid; break;
            case Cmp::Greater: lo = mid + 1; break;
        }
    }
    return {lo, std::nullopt};
}

Rational rule_value(const std::vector<EmbeddingEntry>& entries, const std::vector<std::size_t>& by_order,
                    std::size_t position) {
    if (by_order.empty()) return Rational(0);
    if (position == by_order.size()) return entries[by_order.back()].value + 1;
    if (position == 0) return entries[by_order.front()].value - 1;
    Rational mid = (entries[by_order[position - 1]].value + entries[by_order[position]].value) / 2;
    mid.canonicalize();
    return mid;
}

// Finds entries by group element, tolerating corrupted values.
class Locator {
public:
    Locator(const Embedding& emb, const OrderOracle& oracle) : emb_(emb), oracle_(oracle) {
        if (oracle.canonical(Word())) {
            has_normal_form_ = true;
            for (std::size_t i = 0; i < emb.size(); ++i) {
                index_.emplace(*oracle.canonical(emb.entries()[i].word), i);
            }
        }
    }

    std::optional<std::size_t> find(const Word& word) const {
        if (has_normal_form_) {
            auto it = index_.find(*oracle_.canonical(word));
            if (it == index_.end()) return std::nullopt;
            return it->second;
        }
        for (std::size_t i = 0; i < emb_.size(); ++i) {
            if (oracle_.compare(word, emb_.entries()[i].word) == Cmp::Equal) return i;
        }
        return std::nullopt;
    }

    std::optional<Rational> value(const Word& word) const {
        auto i = find(word);
        if (!i) return std::nullopt;
        return emb_.entries()[*i].value;
    }

private:
    const Embedding& emb_;
    const OrderOracle& oracle_;
    bool has_normal_form_ = false;
    std::unordered_map<Word, std::size_t, WordHash> index_;
};

}  // namespace

Embedding build_embedding_t(std::span<const Word> enumeration, const OrderOracle& oracle) {
    if (enumeration.empty() || !enumeration.front().empty()) {
        throw PreconditionError("enumeration must begin with the identity");
    }
    Embedding emb;
    for (const Word& w : enumeration) {
        const Placement at = locate(emb.entries_, emb.by_order_, w, oracle);
        if (at.equal) {
            throw PreconditionError("duplicate element in enumeration: `" + to_string(w, oracle.presentation()) +
                                    "` equals `" +
                                    to_string(emb.entries_[*at.equal].word, oracle.presentation()) + "`");
        }
        emb.entries_.push_back({w, rule_value(emb.entries_, emb.by_order_, at.position)});
        emb.by_order_.insert(emb.by_order_.begin() + static_cast<std::ptrdiff_t>(at.position),
                             emb.entries_.size() - 1);
    }
    emb.prefix_size_ = emb.entries_.size();
    return emb;
}

const Rational& place(Embedding& emb, const Word& word, const OrderOracle& oracle) {
    const Placement at = locate(emb.entries_, emb.by_order_, word, oracle);
    if (at.equal) return emb.entries_[*at.equal].value;
    emb.entries_.push_back({word, rule_value(emb.entries_, emb.by_order_, at.position)});
    emb.by_order_.insert(emb.by_order_.begin() + static_cast<std::ptrdiff_t>(at.position), emb.entries_.size() - 1);
    return emb.entries_.back().value;
}

std::optional<Rational> lookup(const Embedding& emb, const Word& word, const OrderOracle& oracle) {
    return Locator(emb, oracle).value(word);
}

PLMap build_pl_action(Embedding& emb, const Word& g, const OrderOracle& oracle) {
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t i = 0; i < emb.prefix_size(); ++i) {
        const Word image = g * emb.entries()[i].word;
        Rational y = place(emb, image, oracle);
        points.emplace_back(emb.entries()[i].value, std::move(y));
    }
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rational> xs, ys;
    for (auto& [x, y] : points) {
        xs.push_back(std::move(x));
        ys.push_back(std::move(y));
    }
    return PLMap(std::move(xs), std::move(ys));
}

RealizationChecks check_realization(const Embedding& emb, std::span<const MapEntry> maps, std::size_t iterates,
                                    const OrderOracle& oracle) {
    const Presentation& p = oracle.presentation();
    RealizationChecks out;
    auto fail = [&](bool& flag, std::string why) {
        flag = false;
        if (out.failures.size() < 50) out.failures.push_back(std::move(why));
    };
    const auto& entries = emb.entries();

    if (entries.empty() || !entries[0].word.empty() || entries[0].value != 0) {
        fail(out.faithful, "first embedded element must be the identity at 0");
    }

    // Pairwise order compatibility of t.
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Cmp c = oracle.compare(entries[i].word, entries[j].word);
            const int by_value = entries[i].value < entries[j].value ? -1 : (entries[i].value > entries[j].value ? 1 : 0);
            const int by_order = c == Cmp::Less ? -1 : (c == Cmp::Greater ? 1 : 0);
            if (c == Cmp::Unknown || c == Cmp::Equal || by_value != by_order) {
                fail(out.order_compatible, "order-preservation: " + to_string(entries[i].word, p) + " is " +
                                               to_string(c) + " than " + to_string(entries[j].word, p) + " but t = " +
                                               to_string(entries[i].value) + " vs " + to_string(entries[j].value));
            }
        }
    }

    const Locator locator(emb, oracle);
    for (const MapEntry& m : maps) {
        const auto& xs = m.map.breakpoints();
        const auto& ys = m.map.values();
        for (std::size_t k = 1; k < xs.size(); ++k) {
            if (!(xs[k - 1] < xs[k]) || !(ys[k - 1] < ys[k])) {
                fail(out.monotone, "map of " + to_string(m.word, p) + " is not increasing at " + to_string(xs[k]));
            }
        }
        // The map must send t(g_i) to t(g g_i) on the prefix.
        for (std::size_t i = 0; i < emb.prefix_size(); ++i) {
            const auto expected = locator.value(m.word * entries[i].word);
            const Rational got = m.map(entries[i].value);
            if (!expected || *expected != got) {
                fail(out.monotone, "map of " + to_string(m.word, p) + " sends t(" + to_string(entries[i].word, p) +
                                       ") to " + to_string(got) + ", not t(g g_i)");
            }
        }
        const Rational at_zero = m.map(Rational(0));
        const Cmp vs_identity = oracle.compare(m.word, Word());
        if (vs_identity == Cmp::Equal) {
            for (std::size_t k = 0; k < xs.size(); ++k) {
                if (xs[k] != ys[k]) fail(out.faithful, "identity map moves " + to_string(xs[k]));
            }
        } else {
            const auto t = locator.value(m.word);
            if (!t || at_zero != *t || at_zero == 0) {
                fail(out.faithful, "faithfulness: " + to_string(m.word, p) + " sends 0 to " + to_string(at_zero));
            }
        }

        if (vs_identity == Cmp::Greater) {
            const CompressedMap c = compress_to_negative_ray(m.map);
            GermOrbit orbit{m.word, {}, true};
            Rational y = compress(Rational(0));
            for (std::size_t n = 0; n < iterates; ++n) {
                Rational next = c(y);
                if (!(next > y) || !(next < 0)) orbit.increasing = false;
                orbit.values.push_back(next);
                y = std::move(next);
            }
            if (!orbit.increasing) fail(out.germ_orbit, "compressed orbit of " + to_string(m.word, p) + " not increasing");
            out.orbits.push_back(std::move(orbit));
        }
    }

    // h(g)(h(h)(t(g_i))) = t(g h g_i) wherever h g_i is an enumerated point.
    for (const MapEntry& g : maps) {
        for (const MapEntry& h : maps) {
            const auto gh = locator.find(g.word * h.word);
            const MapEntry* composite = nullptr;
            if (gh) {
                for (const MapEntry& k : maps) {
                    if (locator.find(k.word) == gh) composite = &k;
                }
            }
            for (std::size_t i = 0; i < emb.prefix_size(); ++i) {
                const auto hgi = locator.find(h.word * entries[i].word);
                if (!hgi || *hgi >= emb.prefix_size()) continue;
                const auto target = locator.value(g.word * h.word * entries[i].word);
                if (!target) continue;
                const Rational x = entries[i].value;
                const Rational composed = g.map(h.map(x));
                ++out.partial_hom_points;
                if (composed != *target || (composite && composite->map(x) != composed)) {
                    fail(out.partial_hom, "homomorphism: g = " + to_string(g.word, p) + ", h = " +
                                              to_string(h.word, p) + " at t(" + to_string(entries[i].word, p) + ")");
                }
            }
        }
    }
    return out;
}

std::string replay_embedding(const Embedding& emb, const OrderOracle& oracle) {
    std::vector<Word> prefix;
    for (std::size_t i = 0; i < emb.prefix_size(); ++i) prefix.push_back(emb.entries()[i].word);
    try {
        Embedding rebuilt = build_embedding_t(prefix, oracle);
        for (std::size_t i = emb.prefix_size(); i < emb.size(); ++i) {
            const std::size_t before = rebuilt.size();
            place(rebuilt, emb.entries()[i].word, oracle);
            if (rebuilt.size() == before) return "extension entry " + std::to_string(i) + " duplicates an earlier one";
        }
        for (std::size_t i = 0; i < emb.size(); ++i) {
            if (rebuilt.entries()[i].value != emb.entries()[i].value) {
                return "entry " + std::to_string(i) + " (" + to_string(emb.entries()[i].word, oracle.presentation()) +
                       ") should be " + to_string(rebuilt.entries()[i].value);
            }
        }
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

RealizationReport realize(const Presentation& p, const std::string& order, std::size_t radius,
                          std::size_t iterates, std::size_t map_radius, const Budget& budget) {
    auto oracle = make_order_oracle(order, p, budget);
    const auto ball = enumerate_ball(p, radius, budget);
    std::vector<Word> enumeration;
    for (const BallElement& b : ball) {
        if (b.unresolved) {
            throw PreconditionError("ball element `" + to_string(b.word, p) + "` could not be separated from earlier ones");
        }
        enumeration.push_back(b.word);
    }
    RealizationReport report;
    report.presentation = p;
    report.order = order;
    report.radius = radius;
    report.map_radius = map_radius;
    report.iterates = iterates;
    report.budget = budget;
    report.embedding = build_embedding_t(enumeration, *oracle);
    for (const Word& g : enumeration) {
        if (g.length() > map_radius) continue;
        report.maps.push_back({g, build_pl_action(report.embedding, g, *oracle)});
    }
    report.checks = check_realization(report.embedding, report.maps, iterates, *oracle);
    return report;
}

}  // namespace leftorder
