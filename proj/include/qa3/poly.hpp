#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/fields.hpp"
#include "qa3/words.hpp"

namespace qa3 {

using TermMap = std::map<Word, Scalar, WordGreater>;

/// Noncommutative polynomial: finite map word -> nonzero scalar, kept in
/// decreasing monomial order so the leading term is the first entry.
struct Poly {
    TermMap terms;

    bool is_zero() const { return terms.empty(); }

    const Word& leading_word() const {
        if (terms.empty()) throw ZeroPolynomial();
        return terms.begin()->first;
    }

    const Scalar& leading_coeff() const {
        if (terms.empty()) throw ZeroPolynomial();
        return terms.begin()->second;
    }

    /// Degree of the leading word (the order is degree-first, so this is the
    /// maximal degree of any term).
    int degree() const { return leading_word().degree(); }

    bool operator==(const Poly&) const = default;
};

inline std::pair<Word, Scalar> leading_term(const Poly& f) {
    if (f.terms.empty()) throw ZeroPolynomial();
    return *f.terms.begin();
}

/// Adds c at word w, erasing the entry if it cancels.
inline void add_term(TermMap& terms, const Word& w, const Scalar& c, const Field& F) {
    if (F.is_zero(c)) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) terms.erase(it);
    }
}

inline Poly poly_zero() { return Poly{}; }

inline Poly monomial(const Word& w, const Scalar& c, const Field& F) {
    Poly p;
    add_term(p.terms, w, c, F);
    return p;
}

/// f + c*g
inline Poly axpy(const Poly& f, const Scalar& c, const Poly& g, const Field& F) {
    Poly out = f;
    for (const auto& [w, d] : g.terms) add_term(out.terms, w, F.mul(c, d), F);
    return out;
}

inline Poly add(const Poly& f, const Poly& g, const Field& F) { return axpy(f, F.one(), g, F); }
inline Poly sub(const Poly& f, const Poly& g, const Field& F) { return axpy(f, F.neg(F.one()), g, F); }

inline Poly scale(const Poly& f, const Scalar& c, const Field& F) {
    Poly out;
    for (const auto& [w, d] : f.terms) add_term(out.terms, w, F.mul(c, d), F);
    return out;
}

inline Poly multiply(const Poly& f, const Poly& g, const Field& F) {
    Poly out;
    for (const auto& [u, a] : f.terms)
        for (const auto& [v, b] : g.terms)
            add_term(out.terms, u * v, F.mul(a, b), F);
    return out;
}

/// u * f * v for words u, v.
inline Poly sandwich(const Word& u, const Poly& f, const Word& v, const Field& F) {
    Poly out;
    for (const auto& [w, c] : f.terms) out.terms.emplace(u * w * v, c);
    (void)F;
    return out;
}

/// Scales f so the leading coefficient is one.
inline Poly monicize(const Poly& f, const Field& F) {
    if (f.is_zero()) throw ZeroPolynomial();
    const Scalar& lc = f.leading_coeff();
    if (F.is_one(lc)) return f;
    return scale(f, F.inv(lc), F);
}

/// Uniform degree of all terms, or nullopt when the terms mix degrees.
/// The zero polynomial is homogeneous of every degree; we report degree 0.
inline std::optional<int> homogeneous_degree(const Poly& f) {
    if (f.terms.empty()) return 0;
    int d = f.terms.begin()->first.degree();
    for (const auto& [w, c] : f.terms)
        if (w.degree() != d) return std::nullopt;
    return d;
}

/// Full tip-reduction of f against a list of monic polynomials: while some
/// word of f contains the leading word of some g in G, subtract the matching
/// multiple. Deterministic: the order-largest reducible word is rewritten
/// first, using the first matching g in G's order at its leftmost occurrence.
/// Terminates because every rewrite replaces a word by strictly smaller ones.
inline Poly reduce(const Poly& f, std::span<const Poly> G, const Field& F) {
    TermMap work = f.terms;
    TermMap out;
    while (!work.empty()) {
        auto it = work.begin();
        const Word w = it->first;
        const Scalar c = it->second;
        const Poly* hit = nullptr;
        size_t pos = 0;
        for (const Poly& g : G) {
            size_t p = w.find(g.leading_word());
            if (p != std::string::npos) {
                hit = &g;
                pos = p;
                break;
            }
        }
        work.erase(it);
        if (!hit) {
            out.emplace(w, c);  // strictly smaller than everything already in out
            continue;
        }
        const Word& lw = hit->leading_word();
        const Word pre = w.prefix(pos);
        const Word suf = w.suffix_from(pos + lw.letters.size());
        bool leading = true;
        for (const auto& [u, d] : hit->terms) {
            if (leading) { leading = false; continue; }  // cancels against w exactly (g is monic)
            add_term(work, pre * u * suf, F.neg(F.mul(c, d)), F);
        }
    }
    return Poly{std::move(out)};
}

inline Poly reduce(const Poly& f, const std::vector<Poly>& G, const Field& F) {
    return reduce(f, std::span<const Poly>(G.data(), G.size()), F);
}

/// Substitutes each generator by the given degree-1 image and expands.
inline Poly substitute(const Poly& f, const std::vector<Poly>& images, size_t num_gens, const Field& F) {
    if (images.size() != num_gens)
        throw ArityMismatch("substitute needs exactly one image per generator, got " +
                            std::to_string(images.size()) + " for " + std::to_string(num_gens));
    for (const Poly& im : images) {
        auto d = homogeneous_degree(im);
        if (!d || (*d != 1 && !im.is_zero()))
            throw ArityMismatch("substitution images must be homogeneous of degree 1");
    }
    Poly out;
    for (const auto& [w, c] : f.terms) {
        Poly prod = monomial(Word{}, c, F);
        for (int i = 0; i < w.degree(); ++i)
            prod = multiply(prod, images[static_cast<size_t>(w.letter(i))], F);
        for (const auto& [u, d] : prod.terms) add_term(out.terms, u, d, F);
    }
    return out;
}

/// Renders a polynomial in the input grammar, e.g. "x*x + 2*z*x - 1/2*z*z".
inline std::string poly_to_string(const Poly& f, const std::vector<std::string>& gens, const Field& F) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms) {
        Scalar coeff = c;
        if (first) {
            first = false;
            if (formats_negative(F, coeff)) {
                out += "-";
                coeff = F.neg(coeff);
            }
        } else if (formats_negative(F, coeff)) {
            out += " - ";
            coeff = F.neg(coeff);
        } else {
            out += " + ";
        }
        const bool unit = F.is_one(coeff);
        if (unit && !w.empty()) {
            out += word_to_string(w, gens);
        } else if (w.empty()) {
            out += F.format(coeff);
        } else {
            out += F.format(coeff) + "*" + word_to_string(w, gens);
        }
    }
    return out;
}

}  // namespace qa3
