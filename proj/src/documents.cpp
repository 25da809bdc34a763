#include "leftorder/documents.hpp"

#include "leftorder/errors.hpp"

#include "json.hpp"
#include <openssl/sha.h>

#include <cstdio>

namespace leftorder {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message, 1, 0); }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding `") + key + "`");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field `") + key + "`");
    return *it;
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(std::string("field `") + key + "` has the wrong type");
    }
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) fail(std::string("field `") + key + "` must be an array");
    return a;
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Integer integer_from(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) fail("malformed integer `" + j.get<std::string>() + "`");
        return z;
    }
    fail("expected an integer");
}

Json rational_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

Rational rational_from(const Integer& num, const Integer& den) {
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail("expected a [numerator, denominator] pair");
    return rational_from(integer_from(j[0]), integer_from(j[1]));
}

Json rationals_json(const std::vector<Rational>& qs) {
    Json out = Json::array();
    for (const Rational& q : qs) out.push_back(rational_json(q));
    return out;
}

std::vector<Rational> rationals_from(const Json& j) {
    if (!j.is_array()) fail("expected an array of rationals");
    std::vector<Rational> out;
    for (const Json& q : j) out.push_back(rational_from(q));
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), md);
    std::string out;
    char buf[3];
    for (unsigned char c : md) {
        std::snprintf(buf, sizeof buf, "%02x", c);
        out += buf;
    }
    return out;
}

Json header(const char* kind) {
    Json doc = Json::object();
    doc["format_version"] = kFormatVersion;
    doc["kind"] = kind;
    return doc;
}

std::string finish(Json doc) {
    doc["digest"] = sha256_hex(doc.dump());
    return doc.dump(2) + "\n";
}

Json open_document(std::string_view text, const char* kind) {
    Json doc = parse_json(text);
    if (get<int>(doc, "format_version") != kFormatVersion) fail("unsupported format_version");
    if (get<std::string>(doc, "kind") != kind) fail(std::string("expected a document of kind ") + kind);
    return doc;
}

// --- shared pieces --------------------------------------------------------

Json budget_json(const Budget& b) {
    return Json{{"max_word_length", b.max_word_length}, {"max_nodes", b.max_nodes}};
}

Budget budget_from(const Json& j) {
    return Budget{get<std::size_t>(j, "max_word_length"), get<std::size_t>(j, "max_nodes")};
}

Json trace_json(const IdentityTrace& t) {
    Json out = Json::array();
    for (const RewriteStep& s : t.steps) {
        out.push_back({{"relator", s.relator}, {"inverted", s.inverted}, {"rotation", s.rotation}, {"position", s.position}});
    }
    return out;
}

IdentityTrace trace_from(const Json& j) {
    if (!j.is_array()) fail("identity trace must be an array");
    IdentityTrace t;
    for (const Json& s : j) {
        t.steps.push_back({get<std::size_t>(s, "relator"), get<bool>(s, "inverted"), get<std::size_t>(s, "rotation"),
                           get<std::size_t>(s, "position")});
    }
    return t;
}

Json witness_json(const NotIdentityWitness& w) {
    Json out{{"kind", to_string(w.kind)}};
    if (w.kind == WitnessKind::Abelian) {
        Json f = Json::array();
        for (const Integer& z : w.functional) f.push_back(integer_json(z));
        out["functional"] = f;
        out["modulus"] = integer_json(w.modulus);
        out["image"] = integer_json(w.image);
    } else if (w.kind == WitnessKind::Matrix) {
        out["matrix_image"] = rationals_json({w.matrix_image.entries.begin(), w.matrix_image.entries.end()});
    }
    return out;
}

NotIdentityWitness witness_from(const Json& j) {
    NotIdentityWitness w;
    const auto kind = get<std::string>(j, "kind");
    if (kind == "free_group") {
        w.kind = WitnessKind::FreeGroup;
    } else if (kind == "abelian") {
        w.kind = WitnessKind::Abelian;
        for (const Json& z : array_field(j, "functional")) w.functional.push_back(integer_from(z));
        w.modulus = integer_from(field(j, "modulus"));
        w.image = integer_from(field(j, "image"));
    } else if (kind == "matrix") {
        w.kind = WitnessKind::Matrix;
        const auto entries = rationals_from(field(j, "matrix_image"));
        if (entries.size() != 4) fail("matrix_image needs four entries");
        std::copy(entries.begin(), entries.end(), w.matrix_image.entries.begin());
    } else {
        fail("unknown witness kind `" + kind + "`");
    }
    return w;
}

Json point_json(const GridPoint& pt) {
    return Json{{"x", rational_json(pt.x)}, {"s", rational_json(pt.s)}, {"shell", pt.shell}};
}

GridPoint point_from(const Json& j) {
    return GridPoint{rational_from(field(j, "x")), rational_from(field(j, "s")), get<std::size_t>(j, "shell")};
}

Json germ_json(const ParamGerm& g) {
    return Json{{"name", g.name}, {"expr", to_string(g.expression)}, {"rho", to_string(g.rho)}};
}

ParamGerm germ_from(const Json& j) {
    const Json& rho = field(j, "rho");
    Rational r;
    if (rho.is_number_integer()) {
        r = rational_from(integer_from(rho), Integer(1));
    } else if (rho.is_string()) {
        try {
            r = parse_rational(rho.get<std::string>());
        } catch (const Error& e) {
            fail(std::string("bad rho: ") + e.what());
        }
    } else {
        fail("rho must be an integer or a \"p/q\" string");
    }
    try {
        return make_germ(get<std::string>(j, "name"), get<std::string>(j, "expr"), r);
    } catch (const ParseError& e) {
        fail("germ `" + get<std::string>(j, "name") + "`: " + e.what());
    }
}

Json signs_json(const SignVector& v) { return Json(v); }

SignVector signs_from(const Json& j) {
    try {
        return j.get<SignVector>();
    } catch (const nlohmann::json::exception&) {
        fail("sign vector must be an array of integers");
    }
}

std::vector<std::size_t> indices_from(const Json& j) {
    try {
        return j.get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception&) {
        fail("expected an array of indices");
    }
}

Presentation presentation_from(const Json& doc) { return parse_presentation(get<std::string>(doc, "presentation")); }

}  // namespace

// --- non-left-orderability certificates ------------------------------------

std::string to_document(const CriterionResult& r) {
    const Presentation& p = r.presentation;
    Json doc = header("non_lo_certificate");
    doc["presentation"] = serialize(p);
    Json subset = Json::array();
    for (const SubsetElement& e : r.subset) subset.push_back({{"word", to_string(e.word, p)}, {"witness", witness_json(e.witness)}});
    doc["subset"] = subset;
    doc["max_len"] = r.max_len;
    doc["oracle_budget"] = budget_json(r.budget);
    doc["verdict"] = r.not_left_orderable ? "NotLeftOrderable" : "Undetermined";
    Json assignments = Json::array();
    for (const KilledAssignment& k : r.killed) {
        assignments.push_back({{"epsilons", signs_json(k.epsilons)},
                               {"killer_factors", k.killer.factors},
                               {"killer_word", to_string(k.killer.product, p)},
                               {"identity_trace", trace_json(k.trace)}});
    }
    doc["assignments"] = assignments;
    Json survivors = Json::array();
    for (const SignVector& s : r.survivors) survivors.push_back(signs_json(s));
    doc["survivors"] = survivors;
    return finish(std::move(doc));
}

CriterionResult parse_criterion_document(std::string_view text) {
    const Json doc = open_document(text, "non_lo_certificate");
    CriterionResult r;
    r.presentation = presentation_from(doc);
    const Presentation& p = r.presentation;
    for (const Json& e : array_field(doc, "subset")) {
        r.subset.push_back({parse_word(get<std::string>(e, "word"), p), witness_from(field(e, "witness"))});
    }
    r.max_len = get<std::size_t>(doc, "max_len");
    r.budget = budget_from(field(doc, "oracle_budget"));
    const auto verdict = get<std::string>(doc, "verdict");
    if (verdict != "NotLeftOrderable" && verdict != "Undetermined") fail("unknown verdict `" + verdict + "`");
    r.not_left_orderable = verdict == "NotLeftOrderable";
    for (const Json& a : array_field(doc, "assignments")) {
        KilledAssignment k;
        k.epsilons = signs_from(field(a, "epsilons"));
        k.killer.factors = indices_from(field(a, "killer_factors"));
        k.killer.product = parse_word(get<std::string>(a, "killer_word"), p);
        k.trace = trace_from(field(a, "identity_trace"));
        r.killed.push_back(std::move(k));
    }
    for (const Json& s : array_field(doc, "survivors")) r.survivors.push_back(signs_from(s));
    return r;
}

// --- realization reports ---------------------------------------------------

std::string to_document(const RealizationReport& r) {
    const Presentation& p = r.presentation;
    Json doc = header("realization_report");
    doc["presentation"] = serialize(p);
    doc["order"] = r.order;
    doc["radius"] = r.radius;
    doc["map_radius"] = r.map_radius;
    doc["iterates"] = r.iterates;
    doc["oracle_budget"] = budget_json(r.budget);
    doc["prefix_size"] = r.embedding.prefix_size();
    Json embedding = Json::array();
    for (const EmbeddingEntry& e : r.embedding.entries()) {
        embedding.push_back({{"word", to_string(e.word, p)},
                             {"value_num", integer_json(e.value.get_num())},
                             {"value_den", integer_json(e.value.get_den())}});
    }
    doc["embedding"] = embedding;
    Json maps = Json::array();
    for (const MapEntry& m : r.maps) {
        maps.push_back({{"word", to_string(m.word, p)},
                        {"breakpoints", rationals_json(m.map.breakpoints())},
                        {"values", rationals_json(m.map.values())}});
    }
    doc["maps"] = maps;
    const RealizationChecks& c = r.checks;
    Json orbits = Json::array();
    for (const GermOrbit& o : c.orbits) {
        orbits.push_back({{"word", to_string(o.word, p)}, {"values", rationals_json(o.values)}, {"increasing", o.increasing}});
    }
    doc["checks"] = {{"order_compatible", c.order_compatible},
                     {"faithful", c.faithful},
                     {"monotone", c.monotone},
                     {"partial_hom", c.partial_hom},
                     {"partial_hom_points", c.partial_hom_points},
                     {"germ_orbit_ok", c.germ_orbit},
                     {"germ_orbit", orbits},
                     {"failures", c.failures}};
    doc["status"] = c.passed() ? "PASS" : "FAILED";
    return finish(std::move(doc));
}

RealizationReport parse_realization_document(std::string_view text) {
    const Json doc = open_document(text, "realization_report");
    RealizationReport r;
    r.presentation = presentation_from(doc);
    const Presentation& p = r.presentation;
    r.order = get<std::string>(doc, "order");
    r.radius = get<std::size_t>(doc, "radius");
    r.map_radius = get<std::size_t>(doc, "map_radius");
    r.iterates = get<std::size_t>(doc, "iterates");
    r.budget = budget_from(field(doc, "oracle_budget"));
    std::vector<EmbeddingEntry> entries;
    for (const Json& e : array_field(doc, "embedding")) {
        entries.push_back({parse_word(get<std::string>(e, "word"), p),
                           rational_from(integer_from(field(e, "value_num")), integer_from(field(e, "value_den")))});
    }
    const auto prefix = get<std::size_t>(doc, "prefix_size");
    if (prefix > entries.size()) fail("prefix_size exceeds the embedding");
    r.embedding = Embedding::from_entries(std::move(entries), prefix);
    for (const Json& m : array_field(doc, "maps")) {
        try {
            r.maps.push_back({parse_word(get<std::string>(m, "word"), p),
                              PLMap(rationals_from(field(m, "breakpoints")), rationals_from(field(m, "values")))});
        } catch (const InvariantViolation& e) {
            fail(std::string("bad map: ") + e.what());
        }
    }
    const Json& c = field(doc, "checks");
    r.checks.order_compatible = get<bool>(c, "order_compatible");
    r.checks.faithful = get<bool>(c, "faithful");
    r.checks.monotone = get<bool>(c, "monotone");
    r.checks.partial_hom = get<bool>(c, "partial_hom");
    r.checks.partial_hom_points = get<std::size_t>(c, "partial_hom_points");
    r.checks.germ_orbit = get<bool>(c, "germ_orbit_ok");
    for (const Json& o : array_field(c, "germ_orbit")) {
        r.checks.orbits.push_back({parse_word(get<std::string>(o, "word"), p), rationals_from(field(o, "values")),
                                   get<bool>(o, "increasing")});
    }
    r.checks.failures = get<std::vector<std::string>>(c, "failures");
    const auto status = get<std::string>(doc, "status");
    if (status != (r.checks.passed() ? "PASS" : "FAILED")) fail("status disagrees with the recorded checks");
    return r;
}

// --- germ transcripts ------------------------------------------------------

std::string to_document(const GermOrderTranscript& t) {
    Json doc = header("germ_transcript");
    Json germs = Json::array();
    for (const ParamGerm& g : t.germs) germs.push_back(germ_json(g));
    doc["germs"] = germs;
    doc["depth"] = t.depth;
    doc["max_len"] = t.max_len;
    doc["sampling"] = "shells 1.." + std::to_string(t.depth) + "; equality is sampled equality";
    doc["epsilons"] = signs_json(t.epsilons);
    Json tiers = Json::array();
    for (const Tier& tier : t.tiers) {
        Json decisions = Json::array();
        for (const TierDecision& d : tier.decisions) {
            decisions.push_back({{"germ", d.germ}, {"case", to_string(d.how)}, {"epsilon", d.epsilon}});
        }
        Json seq = Json::array();
        for (const GridPoint& pt : tier.sequence) seq.push_back(point_json(pt));
        tiers.push_back({{"seed", tier.seed}, {"decisions", decisions}, {"deferred", tier.deferred}, {"sequence", seq}});
    }
    doc["tiers"] = tiers;
    Json witness = Json::array();
    for (const DiagonalPoint& dp : t.witness) {
        Json pt = point_json(dp.point);
        pt["tier"] = dp.tier;
        witness.push_back(pt);
    }
    doc["witness"] = witness;
    Json checks = Json::array();
    for (const WordCheck& c : t.checks) checks.push_back({{"factors", c.factors}, {"point", c.point}});
    doc["checks"] = checks;
    doc["status"] = t.passed ? "PASS" : "FAILED";
    doc["failure"] = t.failure;
    return finish(std::move(doc));
}

GermOrderTranscript parse_transcript_document(std::string_view text) {
    const Json doc = open_document(text, "germ_transcript");
    GermOrderTranscript t;
    for (const Json& g : array_field(doc, "germs")) t.germs.push_back(germ_from(g));
    t.depth = get<std::size_t>(doc, "depth");
    t.max_len = get<std::size_t>(doc, "max_len");
    t.epsilons = signs_from(field(doc, "epsilons"));
    for (const Json& tj : array_field(doc, "tiers")) {
        Tier tier;
        tier.seed = get<std::size_t>(tj, "seed");
        for (const Json& d : array_field(tj, "decisions")) {
            const auto how = get<std::string>(d, "case");
            SignCase c;
            if (how == "seed") c = SignCase::Seed;
            else if (how == "positive") c = SignCase::Positive;
            else if (how == "negative") c = SignCase::Negative;
            else fail("unknown case `" + how + "`");
            tier.decisions.push_back({get<std::size_t>(d, "germ"), c, get<int>(d, "epsilon")});
        }
        tier.deferred = indices_from(field(tj, "deferred"));
        for (const Json& pt : array_field(tj, "sequence")) tier.sequence.push_back(point_from(pt));
        t.tiers.push_back(std::move(tier));
    }
    for (const Json& w : array_field(doc, "witness")) t.witness.push_back({point_from(w), get<std::size_t>(w, "tier")});
    for (const Json& c : array_field(doc, "checks")) {
        t.checks.push_back({indices_from(field(c, "factors")), get<std::size_t>(c, "point")});
    }
    const auto status = get<std::string>(doc, "status");
    if (status != "PASS" && status != "FAILED") fail("unknown status `" + status + "`");
    t.passed = status == "PASS";
    t.failure = get<std::string>(doc, "failure");
    return t;
}

// --- obstruction reports ---------------------------------------------------

namespace {

Json moved_json(const std::optional<MovedPoint>& mp, const char* index_key) {
    if (!mp) return nullptr;
    Json out = point_json(mp->point);
    out[index_key] = mp->index;
    out["image"] = rational_json(mp->image);
    return out;
}

std::optional<MovedPoint> moved_from(const Json& j, const char* index_key) {
    if (j.is_null()) return std::nullopt;
    return MovedPoint{get<std::size_t>(j, index_key), point_from(j), rational_from(field(j, "image"))};
}

}  // namespace

std::string to_document(const ObstructionReport& r) {
    Json doc = header("obstruction_report");
    doc["presentation"] = serialize(r.presentation);
    Json assignment = Json::array();
    for (std::size_t g = 0; g < r.assignment.size(); ++g) {
        Json germ = germ_json(r.assignment[g]);
        germ["generator"] = g < r.presentation.rank() ? r.presentation.generators[g] : "";
        assignment.push_back(germ);
    }
    doc["assignment"] = assignment;
    doc["depth"] = r.depth;
    doc["betti"] = r.betti;
    doc["amenable"] = r.presentation.amenable ? Json(*r.presentation.amenable) : Json(nullptr);
    doc["verdict"] = to_string(r.verdict);
    doc["relator_witness"] = moved_json(r.relator_witness, "relator");
    doc["generator_witness"] = moved_json(r.generator_witness, "generator");
    doc["note"] = r.note;
    return finish(std::move(doc));
}

ObstructionReport parse_obstruction_document(std::string_view text) {
    const Json doc = open_document(text, "obstruction_report");
    ObstructionReport r;
    r.presentation = presentation_from(doc);
    const Json& assignment = array_field(doc, "assignment");
    for (std::size_t g = 0; g < assignment.size(); ++g) {
        if (g >= r.presentation.rank() || get<std::string>(assignment[g], "generator") != r.presentation.generators[g]) {
            fail("assignment does not follow the generator order");
        }
        r.assignment.push_back(germ_from(assignment[g]));
    }
    r.depth = get<std::size_t>(doc, "depth");
    r.betti = get<std::size_t>(doc, "betti");
    const auto verdict = get<std::string>(doc, "verdict");
    bool known = false;
    for (auto v : {ObstructionVerdict::NotARepresentation, ObstructionVerdict::NoObstruction,
                   ObstructionVerdict::ObstructionWitness, ObstructionVerdict::TrivialRepresentation,
                   ObstructionVerdict::HypothesesNotMet}) {
        if (verdict == to_string(v)) {
            r.verdict = v;
            known = true;
        }
    }
    if (!known) fail("unknown verdict `" + verdict + "`");
    r.relator_witness = moved_from(field(doc, "relator_witness"), "relator");
    r.generator_witness = moved_from(field(doc, "generator_witness"), "generator");
    r.note = get<std::string>(doc, "note");
    return r;
}

// --- verification ----------------------------------------------------------

namespace {

std::string verify_realization(const RealizationReport& r) {
    if (!r.checks.passed()) return "report records failed checks";
    auto oracle = make_order_oracle(r.order, r.presentation, r.budget);
    if (auto why = replay_embedding(r.embedding, *oracle); !why.empty()) return why;
    Embedding scratch = r.embedding;
    for (const MapEntry& m : r.maps) {
        if (m.word.length() > r.map_radius) return "map for a word longer than map_radius";
        if (!(build_pl_action(scratch, m.word, *oracle) == m.map)) return "map for " + to_string(m.word, r.presentation) + " does not match";
    }
    if (scratch.size() != r.embedding.size()) return "maps use points missing from the embedding";
    const RealizationChecks c = check_realization(r.embedding, r.maps, r.iterates, *oracle);
    if (!c.passed()) return c.failures.empty() ? "checks fail on replay" : c.failures.front();
    if (c.partial_hom_points != r.checks.partial_hom_points) return "partial homomorphism point count differs";
    if (c.orbits.size() != r.checks.orbits.size()) return "orbit list differs";
    for (std::size_t i = 0; i < c.orbits.size(); ++i) {
        if (!(c.orbits[i].word == r.checks.orbits[i].word) || c.orbits[i].values != r.checks.orbits[i].values) {
            return "orbit for " + to_string(c.orbits[i].word, r.presentation) + " differs";
        }
    }
    return {};
}

}  // namespace

VerifyOutcome verify_document(std::string_view text) {
    VerifyOutcome out;
    try {
        Json doc = parse_json(text);
        out.kind = get<std::string>(doc, "kind");
        const auto recorded = get<std::string>(doc, "digest");
        doc.erase("digest");
        if (sha256_hex(doc.dump()) != recorded) {
            out.message = "digest mismatch";
            return out;
        }
        std::string why;
        if (out.kind == "non_lo_certificate") {
            why = verify_criterion(parse_criterion_document(text));
        } else if (out.kind == "realization_report") {
            why = verify_realization(parse_realization_document(text));
        } else if (out.kind == "germ_transcript") {
            why = verify_transcript(parse_transcript_document(text));
        } else if (out.kind == "obstruction_report") {
            why = verify_obstruction(parse_obstruction_document(text));
        } else {
            why = "unknown document kind `" + out.kind + "`";
        }
        out.ok = why.empty();
        out.message = out.ok ? "ok" : why;
    } catch (const Error& e) {
        out.message = e.what();
    }
    return out;
}

// --- germ files ------------------------------------------------------------

std::vector<ParamGerm> parse_germ_file(std::string_view text) {
    const Json doc = parse_json(text);
    if (get<int>(doc, "format_version") != kFormatVersion) fail("unsupported format_version");
    std::vector<ParamGerm> out;
    for (const Json& g : array_field(doc, "germs")) out.push_back(germ_from(g));
    if (out.empty()) fail("germ file lists no germs");
    return out;
}

std::string germ_file(const std::vector<ParamGerm>& germs) {
    Json doc{{"format_version", kFormatVersion}};
    Json list = Json::array();
    for (const ParamGerm& g : germs) list.push_back(germ_json(g));
    doc["germs"] = list;
    return doc.dump(2) + "\n";
}

}  // namespace leftorder
