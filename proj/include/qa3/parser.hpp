#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"
#include "qa3/poly.hpp"
#include "qa3/presentation.hpp"

namespace qa3 {
namespace detail {

struct Token {
    enum Kind { plus, minus, star, slash, number, ident, gf4_w, gf4_w1 } kind;
    std::string text;
    int col;  // 1-based
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Lexes one relation line. Over GF4, the contiguous sequence `w+1` is a
/// single scalar token (when not followed by an identifier character).
inline std::vector<Token> lex_line(std::string_view src, int line, const Field& F) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '+') { toks.push_back({Token::plus, "+", col}); ++i; continue; }
        if (c == '-') { toks.push_back({Token::minus, "-", col}); ++i; continue; }
        if (c == '*') { toks.push_back({Token::star, "*", col}); ++i; continue; }
        if (c == '/') { toks.push_back({Token::slash, "/", col}); ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            toks.push_back({Token::number, std::string(src.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (ident_start(c)) {
            size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            std::string name(src.substr(i, j - i));
            if (F.kind() == FieldKind::gf4 && name == "w") {
                if (j + 1 < src.size() && src[j] == '+' && src[j + 1] == '1' &&
                    (j + 2 >= src.size() || !ident_char(src[j + 2]))) {
                    toks.push_back({Token::gf4_w1, "w+1", col});
                    i = j + 2;
                    continue;
                }
                toks.push_back({Token::gf4_w, "w", col});
                i = j;
                continue;
            }
            toks.push_back({Token::ident, std::move(name), col});
            i = j;
            continue;
        }
        if (c == '(' || c == ')') {
            // tolerated around GF4 scalars: (w+1)
            ++i;
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    return toks;
}

/// Splits an identifier into declared generator names, greedy longest match.
inline void segment_generators(const std::string& text, int line, int col,
                               const std::vector<std::string>& gens, Word& out) {
    size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        size_t best_len = 0;
        for (size_t g = 0; g < gens.size(); ++g) {
            const std::string& name = gens[g];
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                best = static_cast<int>(g);
                best_len = name.size();
            }
        }
        if (best < 0)
            throw ParseError(line, col + static_cast<int>(pos),
                             "'" + text.substr(pos) + "' does not start with a declared generator");
        out.letters.push_back(static_cast<char>(best));
        pos += best_len;
    }
}

}  // namespace detail

/// Parses one polynomial in the relation grammar: terms separated by +/-,
/// each term an optional scalar and *-or-juxtaposition-separated generators.
inline Poly parse_poly(std::string_view text, const std::vector<std::string>& gens,
                       const Field& F, int line = 1) {
    using detail::Token;
    std::vector<Token> toks = detail::lex_line(text, line, F);
    Poly out;
    size_t i = 0;
    bool first_term = true;
    while (i < toks.size()) {
        bool negative = false, saw_sign = false;
        while (i < toks.size() && (toks[i].kind == Token::plus || toks[i].kind == Token::minus)) {
            if (toks[i].kind == Token::minus) negative = !negative;
            saw_sign = true;
            ++i;
        }
        if (i >= toks.size()) {
            if (saw_sign) throw ParseError(line, toks.back().col, "dangling sign");
            break;
        }
        if (!first_term && !saw_sign)
            throw ParseError(line, toks[i].col, "expected '+' or '-' between terms");

        Scalar coeff = F.one();
        Word w;
        bool saw_factor = false;
        while (i < toks.size()) {
            const Token& t = toks[i];
            if (t.kind == Token::plus || t.kind == Token::minus) break;
            if (t.kind == Token::star) {
                if (!saw_factor) throw ParseError(line, t.col, "unexpected '*'");
                ++i;
                if (i >= toks.size() || toks[i].kind == Token::plus || toks[i].kind == Token::minus)
                    throw ParseError(line, t.col, "dangling '*'");
                continue;
            }
            if (t.kind == Token::slash) throw ParseError(line, t.col, "unexpected '/'");
            if (t.kind == Token::number) {
                Int num(t.text);
                ++i;
                if (i < toks.size() && toks[i].kind == Token::slash) {
                    ++i;
                    if (i >= toks.size() || toks[i].kind != Token::number)
                        throw ParseError(line, toks[i - 1].col, "expected denominator after '/'");
                    if (F.kind() != FieldKind::rationals)
                        throw ParseError(line, toks[i - 1].col, "fractions are only valid over Q");
                    Int den(toks[i].text);
                    if (den == 0) throw ParseError(line, toks[i].col, "zero denominator");
                    coeff = F.mul(coeff, Scalar{Rational(num, den)});
                    ++i;
                } else {
                    coeff = F.mul(coeff, F.from_integer(num));
                }
                saw_factor = true;
                continue;
            }
            if (t.kind == Token::gf4_w || t.kind == Token::gf4_w1) {
                coeff = F.mul(coeff, Scalar{Gf4Elem{static_cast<std::uint8_t>(t.kind == Token::gf4_w ? 2 : 3)}});
                saw_factor = true;
                ++i;
                continue;
            }
            // identifier: a run of generator names
            detail::segment_generators(t.text, line, t.col, gens, w);
            saw_factor = true;
            ++i;
        }
        if (!saw_factor) throw ParseError(line, 1, "empty term");
        if (negative) coeff = F.neg(coeff);
        add_term(out.terms, w, coeff, F);
        first_term = false;
    }
    return out;
}

/// Parses a field spec such as "Q", "F7", "F 7", "GF(4)", "GF4".
inline Field parse_field_spec(std::string_view spec, int line = 1) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s.push_back(c);
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "q" || lower == "qq" || lower == "rationals") return Field::rationals();
    if (lower == "gf4" || lower == "f4") return Field::gf4();
    size_t digits = 0;
    if (lower.rfind("gf", 0) == 0) digits = 2;
    else if (lower.rfind("f", 0) == 0) digits = 1;
    else throw ParseError(line, 1, "unknown field spec '" + std::string(spec) + "'");
    std::string num = s.substr(digits);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(line, 1, "unknown field spec '" + std::string(spec) + "'");
    unsigned long long p = 0;
    try {
        p = std::stoull(num);
    } catch (...) {
        throw ParseError(line, 1, "field modulus out of range");
    }
    if (p == 4) return Field::gf4();
    if (p >= (1ull << 31)) throw ParseError(line, 1, "field modulus must be below 2^31");
    try {
        return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const InvalidParameter& e) {
        throw ParseError(line, 1, e.what());
    }
}

/// Parses a full presentation file:
///   # comments run to end of line
///   field <spec>
///   gens <name> <name> ...
///   <one relation per line>
/// Relations must be homogeneous; zero relations are dropped with a warning
/// flag on the result.
inline Presentation parse_presentation(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, significant text)
    {
        int n = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t eol = text.find('\n', pos);
            std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            ++n;
            std::string s(raw.substr(0, raw.find('#')));
            if (s.find_first_not_of(" \t\r") != std::string::npos) lines.emplace_back(n, s);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "expected 'field ...' header");

    auto first_word = [](const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_first_of(" \t\r", b);
        return s.substr(b, e == std::string::npos ? std::string::npos : e - b);
    };
    auto rest_after_word = [](const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_first_of(" \t\r", b);
        if (e == std::string::npos) return std::string();
        return s.substr(e);
    };

    size_t li = 0;
    if (first_word(lines[li].second) != "field")
        throw ParseError(lines[li].first, 1, "expected 'field ...' header");
    Field field = parse_field_spec(rest_after_word(lines[li].second), lines[li].first);
    ++li;

    if (li >= lines.size() || first_word(lines[li].second) != "gens")
        throw ParseError(li < lines.size() ? lines[li].first : lines.back().first + 1, 1,
                         "expected 'gens ...' line");
    std::vector<std::string> gens;
    {
        std::string rest = rest_after_word(lines[li].second);
        size_t p = 0;
        while (p < rest.size()) {
            while (p < rest.size() && std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
            if (p >= rest.size()) break;
            size_t q = p;
            if (!detail::ident_start(rest[p]))
                throw ParseError(lines[li].first, static_cast<int>(p) + 1, "generator names must be identifiers");
            while (q < rest.size() && detail::ident_char(rest[q])) ++q;
            gens.emplace_back(rest.substr(p, q - p));
            p = q;
        }
        if (gens.empty()) throw ParseError(lines[li].first, 1, "at least one generator is required");
        if (gens.size() > 200) throw ParseError(lines[li].first, 1, "too many generators");
        for (size_t a = 0; a < gens.size(); ++a)
            for (size_t b = a + 1; b < gens.size(); ++b)
                if (gens[a] == gens[b]) throw DuplicateGenerator(gens[a]);
        if (field.kind() == FieldKind::gf4)
            for (const std::string& g : gens)
                if (g == "w") throw ParseError(lines[li].first, 1, "'w' is reserved for the GF4 scalar");
    }
    ++li;

    std::vector<Poly> rels;
    bool dropped = false;
    for (; li < lines.size(); ++li) {
        Poly r = parse_poly(lines[li].second, gens, field, lines[li].first);
        if (r.is_zero()) {
            dropped = true;
            continue;
        }
        if (!homogeneous_degree(r)) throw InhomogeneousRelation(lines[li].first);
        rels.push_back(std::move(r));
    }
    Presentation P = make_presentation(field, std::move(gens), rels);
    P.dropped_zero_relations = P.dropped_zero_relations || dropped;
    return P;
}

}  // namespace qa3
