#include "leftorder/rational.hpp"

#include "leftorder/errors.hpp"

#include <cctype>

namespace leftorder {

namespace {

bool is_integer_text(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!is_integer_text(text)) {
        throw StructuralError("not an integer: '" + std::string(text) + "'");
    }
    if (text[0] == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Rational result;
    if (slash == std::string_view::npos) {
        result = Rational(parse_integer(text));
    } else {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
        result = Rational(num, den);
        result.canonicalize();
    }
    return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace leftorder
