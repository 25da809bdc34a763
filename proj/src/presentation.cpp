#include "leftorder/presentation.hpp"

#include "leftorder/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace leftorder {

Rational Matrix2::determinant() const {
    return entries[0] * entries[3] - entries[1] * entries[2];
}

Matrix2 Matrix2::inverse() const {
    const Rational det = determinant();
    if (det == 0) throw DomainError("singular matrix has no inverse");
    Matrix2 out;
    out.entries = {entries[3] / det, -entries[1] / det, -entries[2] / det, entries[0] / det};
    return out;
}

bool Matrix2::is_identity() const { return *this == identity(); }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    const auto& x = a.entries;
    const auto& y = b.entries;
    Matrix2 out;
    out.entries = {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                   x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    return out;
}

std::string to_string(const Matrix2& m) {
    const auto& e = m.entries;
    return "[[" + to_string(e[0]) + "," + to_string(e[1]) + "],[" + to_string(e[2]) + "," +
           to_string(e[3]) + "]]";
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == name) return i;
    }
    return std::nullopt;
}

Matrix2 Presentation::represent(const Word& word) const {
    if (representation.size() != generators.size()) {
        throw PreconditionError("presentation has no registered matrix representation");
    }
    Matrix2 out = Matrix2::identity();
    for (const Letter& letter : word.letters()) {
        const Matrix2& base = representation.at(letter.generator);
        const Matrix2 step = letter.exponent > 0 ? base : base.inverse();
        const std::int64_t count = letter.exponent > 0 ? letter.exponent : -letter.exponent;
        for (std::int64_t i = 0; i < count; ++i) out = out * step;
    }
    return out;
}

namespace {

bool is_id_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_id_char(char c) { return is_id_start(c) || (c >= '0' && c <= '9') || c == '_'; }

// Character cursor over one logical line, reporting 1-based columns.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    char get() { return done() ? '\0' : text_[pos_++]; }
    std::size_t column() const { return offset_ + pos_ + 1; }
    std::size_t line() const { return line_; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column());
    }
    [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
        throw ParseError(message, line_, column);
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_space();
        if (!is_id_start(peek())) fail("expected identifier");
        std::string out;
        while (!done() && is_id_char(peek())) out += get();
        return out;
    }

    std::string number_text() {
        skip_space();
        std::string out;
        if (peek() == '-' || peek() == '+') out += get();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        return out;
    }

    Rational rational() {
        std::string text = number_text();
        if (peek() == '/') {
            get();
            const std::size_t col = column();
            std::string den = number_text();
            if (den.find_first_not_of("+0") == std::string::npos) fail_at("zero denominator", col);
            text += "/" + den;
        }
        return parse_rational(text);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

Word parse_word_at(Cursor& cur, const std::vector<std::string>& names, char stop) {
    std::vector<Letter> raw;
    bool any = false;
    for (;;) {
        cur.skip_space();
        if (cur.done() || cur.peek() == stop) break;
        any = true;
        if (cur.peek() == '1') {
            cur.get();
            continue;
        }
        const std::size_t col = cur.column();
        if (!is_id_start(cur.peek())) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
        std::string name = cur.identifier();
        std::size_t index = names.size();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) index = i;
        }
        if (index == names.size() && name == "e" && cur.peek() != '^') continue;  // identity, unless e is a generator
        if (index == names.size()) cur.fail_at("undeclared generator `" + name + "`", col);
        std::int64_t exponent = 1;
        if (cur.peek() == '^') {
            cur.get();
            if (std::isspace(static_cast<unsigned char>(cur.peek()))) cur.fail("expected exponent after '^'");
            try {
                exponent = std::stoll(cur.number_text());
            } catch (const std::out_of_range&) {
                cur.fail("exponent out of range");
            }
        }
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())) && cur.peek() != stop) {
            cur.fail(std::string("unexpected character '") + cur.peek() + "'");
        }
        raw.push_back({index, exponent});
    }
    if (!any) cur.fail("empty word");
    return Word::reduce(raw);
}

Matrix2 parse_matrix(Cursor& cur) {
    Matrix2 m;
    cur.expect('[');
    for (int row = 0; row < 2; ++row) {
        if (row == 1) cur.expect(',');
        cur.expect('[');
        m.entries[2 * row] = cur.rational();
        cur.expect(',');
        m.entries[2 * row + 1] = cur.rational();
        cur.expect(']');
    }
    cur.expect(']');
    return m;
}

struct RawLine {
    std::string key;
    std::string_view body;
    std::size_t line;
    std::size_t body_column;  // 0-based offset of body in the original line
    bool continuation = false;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
    std::vector<RawLine> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t first = line.find_first_not_of(" \t");
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos && first > 0 && !lines.empty() && lines.back().key == "rels") {
            lines.push_back({"rels", line, line_no, 0, true});
            if (end == text.size()) break;
            continue;
        }
        if (colon == std::string_view::npos) {
            throw ParseError("expected `key:` at start of line", line_no, first + 1);
        }
        std::string key(line.substr(first, colon - first));
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        if (key != "gens" && key != "rels" && key != "amenable" && key != "rep") {
            throw ParseError("unknown key `" + key + "`", line_no, first + 1);
        }
        lines.push_back({key, line.substr(colon + 1), line_no, colon + 1});
        if (end == text.size()) break;
    }

    Presentation p;
    bool have_gens = false;
    for (const RawLine& raw : lines) {
        if (raw.key != "gens") continue;
        if (have_gens) throw ParseError("duplicate `gens:` line", raw.line, 1);
        have_gens = true;
        Cursor cur(raw.body, raw.line, raw.body_column);
        for (;;) {
            cur.skip_space();
            if (cur.done()) break;
            const std::size_t col = cur.column();
            std::string name = cur.identifier();
            if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
                cur.fail(std::string("unexpected character '") + cur.peek() + "'");
            }
            if (p.generator_index(name)) cur.fail_at("duplicate generator `" + name + "`", col);
            p.generators.push_back(std::move(name));
        }
    }
    if (!have_gens) throw ParseError("missing `gens:` line", 1, 1);

    // A relator may run over continuation lines; it ends at a comma or with its block.
    std::optional<Word> pending;
    std::size_t pending_line = 0, pending_col = 0;
    auto flush = [&] {
        if (!pending) return;
        if (pending->empty()) throw ParseError("relator is empty after free reduction", pending_line, pending_col);
        p.relators.push_back(std::move(*pending));
        pending.reset();
    };
    for (const RawLine& raw : lines) {
        Cursor cur(raw.body, raw.line, raw.body_column);
        if (!raw.continuation) flush();
        if (raw.key == "rels") {
            for (;;) {
                cur.skip_space();
                if (cur.done()) break;
                if (!pending) {
                    pending = Word();
                    pending_line = raw.line;
                    pending_col = cur.column();
                }
                *pending = *pending * parse_word_at(cur, p.generators, ',');
                cur.skip_space();
                if (cur.done()) break;
                cur.expect(',');
                flush();
            }
        } else if (raw.key == "amenable") {
            cur.skip_space();
            const std::size_t col = cur.column();
            std::string value = cur.done() ? std::string() : cur.identifier();
            cur.skip_space();
            if (!cur.done() || (value != "true" && value != "false")) {
                cur.fail_at("expected `true` or `false`", col);
            }
            if (p.amenable) cur.fail_at("duplicate `amenable:` line", 1);
            p.amenable = value == "true";
        } else if (raw.key == "rep") {
            for (;;) {
                cur.skip_space();
                if (cur.done()) break;
                const std::size_t col = cur.column();
                std::string name = cur.identifier();
                auto index = p.generator_index(name);
                if (!index) cur.fail_at("undeclared generator `" + name + "`", col);
                cur.expect('=');
                Matrix2 m = parse_matrix(cur);
                if (m.determinant() == 0) cur.fail_at("singular matrix for `" + name + "`", col);
                if (p.representation.count(*index)) cur.fail_at("duplicate matrix for `" + name + "`", col);
                p.representation[*index] = m;
            }
        }
    }

    flush();

    if (!p.representation.empty()) {
        const RawLine* first_rep = nullptr;
        for (const RawLine& raw : lines) {
            if (raw.key == "rep") {
                first_rep = &raw;
                break;
            }
        }
        if (p.representation.size() != p.generators.size()) {
            throw ParseError("rep must give a matrix for every generator", first_rep->line, 1);
        }
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            if (!p.represent(p.relators[i]).is_identity()) {
                throw ParseError("rep does not send relator " + std::to_string(i + 1) + " to the identity",
                                 first_rep->line, 1);
            }
        }
    }
    return p;
}

std::string to_string(const Word& word, const Presentation& p) {
    return to_string(word, std::span<const std::string>(p.generators));
}

std::string serialize(const Presentation& p) {
    std::ostringstream out;
    out << "gens:";
    for (const auto& g : p.generators) out << ' ' << g;
    out << '\n';
    if (!p.relators.empty()) {
        out << "rels: ";
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            if (i) out << ", ";
            out << to_string(p.relators[i], p);
        }
        out << '\n';
    }
    if (p.amenable) out << "amenable: " << (*p.amenable ? "true" : "false") << '\n';
    if (!p.representation.empty()) {
        out << "rep:";
        for (const auto& [index, m] : p.representation) out << ' ' << p.generators[index] << " = " << to_string(m);
        out << '\n';
    }
    return out.str();
}

Word parse_word(std::string_view text, const Presentation& p) {
    Cursor cur(text, 1, 0);
    return parse_word_at(cur, p.generators, '\0');
}

void validate(const Presentation& p) {
    std::set<std::string> seen;
    for (const auto& g : p.generators) {
        if (g.empty() || !is_id_start(g[0])) throw StructuralError("invalid generator name `" + g + "`");
        for (char c : g) {
            if (!is_id_char(c)) throw StructuralError("invalid generator name `" + g + "`");
        }
        if (!seen.insert(g).second) throw StructuralError("duplicate generator `" + g + "`");
    }
    for (const Word& r : p.relators) {
        if (r.empty()) throw StructuralError("empty relator");
        if (r.max_generator() >= p.rank()) throw StructuralError("relator references undeclared generator");
    }
    if (!p.representation.empty() && p.representation.size() != p.rank()) {
        throw StructuralError("matrix representation must cover every generator");
    }
}

}  // namespace leftorder
