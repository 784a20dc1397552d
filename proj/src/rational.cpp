#include "knotspec/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace knotspec {

std::string to_string(const ReducedFraction& a) {
    if (a.denominator == 1)
        return std::to_string(a.numerator);
    return std::to_string(a.numerator) + "/" + std::to_string(a.denominator);
}

namespace {

// Consumes an optionally-signed integer starting at pos; advances pos.
std::int64_t parse_int_at(const std::string& text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
        ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == digits_start)
        throw parse_error(std::string("expected ") + what + " at \"" +
                          text.substr(start) + "\"");
    return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
}

} // namespace

ReducedFraction parse_fraction(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    const std::int64_t p = parse_int_at(text, pos, "numerator");
    std::int64_t q = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        q = parse_int_at(text, pos, "denominator");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw parse_error("unexpected token \"" + text.substr(pos) + "\" after fraction");
    return reduce(p, q);
}

} // namespace knotspec
