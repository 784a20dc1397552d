#include "knotspec/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace knotspec {

ReducedFraction cf_eval(const ContinuedFraction& cf) {
    for (std::int64_t b : cf.coefficients)
        if (b == 0)
            throw invalid_fraction("continued fraction with zero coefficient");
    const ReducedFraction r = from_integer(cf.integer_part);
    if (cf.coefficients.empty())
        return r;
    // Fold from the innermost term; every t_i is inverted on the way out.
    ReducedFraction t = from_integer(cf.coefficients.back());
    for (std::size_t i = cf.coefficients.size() - 1; i-- > 0;) {
        if (t.numerator == 0)
            throw degenerate_tower("tower value 0 under coefficient " +
                                   std::to_string(cf.coefficients[i]));
        t = from_integer(cf.coefficients[i]) - reciprocal(t);
    }
    if (t.numerator == 0)
        throw degenerate_tower("outermost tower value 0");
    return r + reciprocal(t);
}

ContinuedFraction cf_canonical(const ReducedFraction& x) {
    ContinuedFraction out;
    if (is_integer(x)) {
        out.integer_part = x.numerator;
        return out;
    }
    const bool positive = x.numerator > 0;
    // Fractional part in (0,1) for the all-positive expansion, (-1,0) for
    // the all-negative one.
    out.integer_part = positive ? floor_div(x) : ceil_div(x);
    ReducedFraction t = reciprocal(x - from_integer(out.integer_part));
    while (true) {
        const std::int64_t b = positive ? ceil_div(t) : floor_div(t);
        out.coefficients.push_back(b);
        const ReducedFraction rem = from_integer(b) - t; // = 1/t_{i+1}, in [0,1)
        if (rem.numerator == 0)
            break;
        t = reciprocal(rem);
    }
    if (out.coefficients.size() % 2 == 0) {
        // Tail rewrite b_k = (b_k + s) - 1/s with s = sign, keeping the
        // uniform sign and making k odd.
        const std::int64_t s = positive ? 1 : -1;
        out.coefficients.back() += s;
        out.coefficients.push_back(s);
    }
    return out;
}

namespace {

// Appends to `out` every admissible tail [b_i,...,b_j] (all |b| >= 2,
// j - i + 1 <= depth) whose tower value is exactly t, each pushed onto
// `prefix`. Candidate leading coefficients are the integers within
// distance 1 of t: admissible continuations satisfy |1/t_next| < 1.
void enumerate_tails(const ReducedFraction& t, std::int64_t depth,
                     std::vector<std::int64_t>& prefix,
                     const ContinuedFraction& head,
                     std::vector<ContinuedFraction>& out) {
    if (depth <= 0)
        return;
    if (is_integer(t)) {
        // Integer targets terminate: b = t +- 1 would need |1/t_next| = 1.
        if (t.numerator >= 2 || t.numerator <= -2) {
            ContinuedFraction cf = head;
            cf.coefficients = prefix;
            cf.coefficients.push_back(t.numerator);
            out.push_back(std::move(cf));
        }
        return;
    }
    for (std::int64_t b : {floor_div(t), ceil_div(t)}) {
        if (b > -2 && b < 2)
            continue;
        prefix.push_back(b);
        enumerate_tails(reciprocal(from_integer(b) - t), depth - 1, prefix, head, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ContinuedFraction> cf_enumerate_ht(const ReducedFraction& x,
                                               std::int64_t depth_limit) {
    if (depth_limit < 1)
        throw precondition_violation("depth_limit must be >= 1");
    std::vector<ContinuedFraction> out;
    if (is_integer(x)) {
        out.push_back({x.numerator, {}});
        return out;
    }
    // r is pinned to floor(x) or ceil(x): any admissible tail has tower
    // value |t_1| > 1, so |x - r| = |1/t_1| < 1.
    for (std::int64_t r : {floor_div(x), ceil_div(x)}) {
        ContinuedFraction head{r, {}};
        std::vector<std::int64_t> prefix;
        enumerate_tails(reciprocal(x - from_integer(r)), depth_limit, prefix, head, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const ContinuedFraction& cf) {
    std::string s = std::to_string(cf.integer_part) + "+[";
    for (std::size_t i = 0; i < cf.coefficients.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(cf.coefficients[i]);
    }
    return s + "]";
}

ContinuedFraction parse_continued_fraction(const std::string& text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto parse_int = [&](const char* what) {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw parse_error(std::string("expected ") + what + " at \"" +
                              text.substr(start) + "\"");
        return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
    };

    ContinuedFraction cf;
    skip_space();
    if (pos == text.size())
        throw parse_error("empty continued fraction");

    // Optional "r+" head, present only when a '[' follows.
    if (text.find('[') != std::string::npos && text[pos] != '[') {
        cf.integer_part = parse_int("integer part");
        skip_space();
        if (pos >= text.size() || text[pos] != '+')
            throw parse_error("expected \"+[\" after integer part at \"" +
                              text.substr(pos) + "\"");
        ++pos;
        skip_space();
    }

    bool bracketed = false;
    if (pos < text.size() && text[pos] == '[') {
        bracketed = true;
        ++pos;
        skip_space();
    }
    if (bracketed && pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_space();
            cf.coefficients.push_back(parse_int("coefficient"));
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (bracketed) {
            if (pos >= text.size() || text[pos] != ']')
                throw parse_error("expected \"]\" at \"" + text.substr(pos) + "\"");
            ++pos;
        }
    }
    skip_space();
    if (pos != text.size())
        throw parse_error("unexpected token \"" + text.substr(pos) +
                          "\" after expansion");
    for (std::int64_t b : cf.coefficients)
        if (b == 0)
            throw parse_error("coefficient 0 is not allowed");
    return cf;
}

} // namespace knotspec
