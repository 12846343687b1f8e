#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qa3 {

/// Monomial in the free algebra: a sequence of generator indices (one byte
/// per letter). Index 0 is the first declared generator. The empty word is
/// the multiplicative identity.
struct Word {
    std::string letters;  // each char is a generator index

    Word() = default;
    explicit Word(std::string l) : letters(std::move(l)) {}
    Word(std::initializer_list<int> ls) {
        letters.reserve(ls.size());
        for (int l : ls) letters.push_back(static_cast<char>(l));
    }

    int degree() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    int letter(int i) const { return static_cast<unsigned char>(letters[static_cast<size_t>(i)]); }

    bool operator==(const Word&) const = default;

    Word operator*(const Word& rhs) const { return Word(letters + rhs.letters); }

    /// Leftmost occurrence of `sub` as a factor, or npos.
    size_t find(const Word& sub) const { return letters.find(sub.letters); }

    /// True if `sub` occurs as a factor.
    bool contains(const Word& sub) const { return find(sub) != std::string::npos; }

    /// True if `sub` is a suffix.
    bool ends_with(const Word& sub) const {
        return letters.size() >= sub.letters.size() &&
               letters.compare(letters.size() - sub.letters.size(), sub.letters.size(), sub.letters) == 0;
    }

    Word prefix(size_t n) const { return Word(letters.substr(0, n)); }
    Word suffix_from(size_t pos) const { return Word(letters.substr(pos)); }
};

/// The fixed monomial order: degree first, then left-to-right comparison with
/// the first declared generator largest (x > y > z). Returns <0, 0, >0 when
/// u < v, u = v, u > v.
inline int word_cmp(const Word& u, const Word& v) {
    if (u.letters.size() != v.letters.size())
        return u.letters.size() < v.letters.size() ? -1 : 1;
    for (size_t i = 0; i < u.letters.size(); ++i) {
        unsigned char a = static_cast<unsigned char>(u.letters[i]);
        unsigned char b = static_cast<unsigned char>(v.letters[i]);
        if (a != b) return a < b ? 1 : -1;  // smaller index = larger generator
    }
    return 0;
}

inline bool word_less(const Word& u, const Word& v) { return word_cmp(u, v) < 0; }
inline bool word_greater(const Word& u, const Word& v) { return word_cmp(u, v) > 0; }

/// Comparator putting the order-largest word first (used by Poly term maps).
struct WordGreater {
    bool operator()(const Word& u, const Word& v) const { return word_cmp(u, v) > 0; }
};

inline std::string word_to_string(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "1";
    std::string out;
    for (int i = 0; i < w.degree(); ++i) {
        if (i) out += "*";
        out += gens[static_cast<size_t>(w.letter(i))];
    }
    return out;
}

}  // namespace qa3
