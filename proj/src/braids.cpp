#include "knotspec/braids.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "knotspec/errors.hpp"

namespace knotspec {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// block repeated |power| times, inverted (reversed, signs flipped) when
// power < 0.
std::vector<BraidLetter> repeat_block(const std::vector<BraidLetter>& block,
                                      std::int64_t power) {
    std::vector<BraidLetter> letters;
    if (power == 0)
        return letters;
    std::vector<BraidLetter> unit = block;
    if (power < 0) {
        std::reverse(unit.begin(), unit.end());
        for (BraidLetter& l : unit)
            l.sign = -l.sign;
    }
    letters.reserve(static_cast<std::size_t>(abs64(power)) * unit.size());
    for (std::int64_t r = 0; r < abs64(power); ++r)
        letters.insert(letters.end(), unit.begin(), unit.end());
    return letters;
}

} // namespace

BraidWord make_braid_word(std::int64_t strands, std::vector<BraidLetter> letters) {
    if (strands < 1)
        throw invalid_strand_count("a braid word needs at least one strand");
    for (const BraidLetter& l : letters) {
        if (l.index < 1 || l.index > strands - 1)
            throw precondition_violation("generator index " + std::to_string(l.index) +
                                         " out of range for " + std::to_string(strands) +
                                         " strands");
        if (l.sign != 1 && l.sign != -1)
            throw precondition_violation("letter signs must be +1 or -1");
    }
    return BraidWord{strands, std::move(letters)};
}

BraidWord torus_braid_word(std::int64_t m, std::int64_t n) {
    if (m < 2)
        throw invalid_strand_count("torus braid words need at least 2 strands");
    std::vector<BraidLetter> block;
    for (std::int64_t i = 1; i <= m - 1; ++i)
        block.push_back(BraidLetter{i, -1});
    return BraidWord{m, repeat_block(block, n)};
}

BraidWord pretzel_cable_correction(std::int64_t m, std::int64_t p_sum) {
    if (m < 2)
        throw invalid_strand_count("framing corrections need at least 2 strands");
    std::vector<BraidLetter> block;
    for (std::int64_t i = m - 1; i >= 1; --i)
        block.push_back(BraidLetter{i, +1});
    return BraidWord{m, repeat_block(block, p_sum * m)};
}

BraidWord concatenate(const BraidWord& a, const BraidWord& b) {
    BraidWord out{std::max(a.strands, b.strands), a.letters};
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<BraidLetter> out;
    out.reserve(w.letters.size());
    for (const BraidLetter& l : w.letters) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord{w.strands, std::move(out)};
}

std::int64_t exponent_sum(const BraidWord& w) {
    return std::accumulate(w.letters.begin(), w.letters.end(), std::int64_t{0},
                           [](std::int64_t acc, const BraidLetter& l) {
                               return acc + l.sign;
                           });
}

BraidWord residual_two_strand_word(const PretzelKnot& p, std::int64_t m,
                                   std::int64_t n) {
    if (m != 2)
        throw unsupported_strand_count(
            "only the 2-strand residual is computed: free reduction is a "
            "normal form only on one generator");
    const std::int64_t sum =
        std::accumulate(p.twists.begin(), p.twists.end(), std::int64_t{0});
    return free_reduce(concatenate(pretzel_cable_correction(2, sum),
                                   torus_braid_word(2, n)));
}

std::string to_string(const BraidWord& w) {
    std::ostringstream out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j].index == w.letters[i].index &&
               w.letters[j].sign == w.letters[i].sign)
            ++j;
        if (i)
            out << ' ';
        out << 's' << w.letters[i].index << '^'
            << w.letters[i].sign * static_cast<std::int64_t>(j - i);
        i = j;
    }
    return out.str();
}

BraidWord parse_braid_word(const std::string& text) {
    std::vector<BraidLetter> letters;
    std::int64_t max_index = 0;
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto read_int = [&](const char* what) {
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw parse_error(std::string("expected ") + what + " in braid word");
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::exception&) {
            throw parse_error(std::string(what) + " out of range in braid word");
        }
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != 's')
            throw parse_error("expected generator 's<index>' at '" + text.substr(pos) +
                              "'");
        ++pos;
        const std::int64_t index = read_int("generator index");
        if (index < 1)
            throw parse_error("generator index must be at least 1");
        std::int64_t exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = read_int("exponent");
        }
        max_index = std::max(max_index, index);
        const std::int64_t sign = exponent < 0 ? -1 : 1;
        for (std::int64_t r = 0; r < abs64(exponent); ++r)
            letters.push_back(BraidLetter{index, sign});
        skip_space();
    }
    return BraidWord{max_index + 1, std::move(letters)};
}

} // namespace knotspec
