#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/poly.hpp"
#include "qa3/presentation.hpp"

namespace qa3 {

enum class GBStatus { complete, truncated };

/// Overlap ambiguity between two basis elements: a proper suffix of
/// lead(left), starting at `shift`, equals a proper prefix of lead(right).
/// The overlap word has degree shift + deg(lead(right)).
struct Overlap {
    int degree;
    int left;   // element id
    int right;  // element id
    int shift;  // 0 < shift < deg(lead(left))

    auto operator<=>(const Overlap&) const = default;
};

/// Tip-reduced noncommutative Groebner basis. When status is complete, every
/// overlap ambiguity of every pair reduces to zero (diamond lemma), so the
/// basis is a full Groebner basis of the ideal. Otherwise it is exact for
/// all degrees up to truncation_degree only.
struct GBasis {
    std::vector<Poly> elems;  // monic, inter-reduced, leading words pairwise distinct
    GBStatus status = GBStatus::complete;
    int truncation_degree = 0;  // the D that completion ran with
    size_t num_gens = 0;
    bool dropped_zero_relations = false;

    bool complete() const { return status == GBStatus::complete; }

    /// Largest degree at which normal words are exact.
    int reliable_degree() const { return complete() ? INT_MAX : truncation_degree; }

    std::vector<Word> leading_words() const {
        std::vector<Word> out;
        out.reserve(elems.size());
        for (const Poly& g : elems) out.push_back(g.leading_word());
        return out;
    }
};

namespace detail {

struct GBEntry {
    Poly p;
    Word lead;
    int degree;
    bool alive = true;
};

/// All overlaps where a proper suffix of `a` equals a proper prefix of `b`.
inline void enumerate_overlaps(const Word& a, const Word& b, int id_a, int id_b,
                               std::set<Overlap>& out) {
    const int la = a.degree(), lb = b.degree();
    for (int s = 1; s < la; ++s) {
        int k = la - s;  // length of the overlapping part
        if (k >= lb) continue;  // inclusion, impossible for tip-reduced bases
        if (a.letters.compare(static_cast<size_t>(s), static_cast<size_t>(k), b.letters, 0,
                              static_cast<size_t>(k)) == 0)
            out.insert(Overlap{s + lb, id_a, id_b, s});
    }
}

}  // namespace detail

/// Buchberger/diamond-lemma completion for homogeneous relations, truncated
/// at degree D. Ambiguities are processed in increasing degree of the overlap
/// word, ties broken by (left id, right id, shift); the basis is kept fully
/// tip-inter-reduced after every insertion, so the output is the canonical
/// reduced basis of the ideal (up to degree D when truncated).
///
/// Status is complete only when the ambiguity queue was exhausted and no
/// element was produced at the boundary degree D itself.
inline GBasis complete(const std::vector<Poly>& relations, int max_degree, const Field& F,
                       size_t num_gens) {
    GBasis result;
    result.truncation_degree = max_degree;
    result.num_gens = num_gens;

    std::vector<detail::GBEntry> entries;
    std::set<Overlap> ambiguities;
    // pending polynomials keyed by (degree, arrival sequence)
    std::map<std::pair<int, long>, Poly> pending;
    long seq = 0;
    bool produced_at_boundary = false;

    auto alive_basis = [&]() {
        std::vector<Poly> out;
        for (const auto& e : entries)
            if (e.alive) out.push_back(e.p);
        return out;
    };

    for (const Poly& r : relations) {
        if (r.is_zero()) {
            result.dropped_zero_relations = true;
            continue;
        }
        auto d = homogeneous_degree(r);
        if (!d)
            throw InhomogeneousRelations("Groebner completion requires homogeneous relations");
        if (*d > max_degree)
            throw DegreeBeyondTruncation("relation degree " + std::to_string(*d) +
                                         " exceeds the truncation degree " + std::to_string(max_degree));
        pending.emplace(std::make_pair(*d, seq++), monicize(r, F));
    }

    auto add_element = [&](Poly g) {
        const Word lead = g.leading_word();
        const int deg = g.degree();
        // displace elements whose leading word now reduces
        for (size_t i = 0; i < entries.size(); ++i) {
            auto& e = entries[i];
            if (e.alive && e.lead.contains(lead)) {
                e.alive = false;
                pending.emplace(std::make_pair(e.degree, seq++), std::move(e.p));
                e.p = Poly{};
            }
        }
        const int id = static_cast<int>(entries.size());
        entries.push_back(detail::GBEntry{std::move(g), lead, deg, true});
        // re-reduce the tails of the surviving elements against the new basis
        std::vector<Poly> basis = alive_basis();
        for (size_t i = 0; i + 1 < entries.size(); ++i) {
            auto& e = entries[i];
            if (!e.alive) continue;
            bool touched = false;
            for (auto it = std::next(e.p.terms.begin()); it != e.p.terms.end(); ++it)
                if (it->first.contains(lead)) { touched = true; break; }
            if (!touched) continue;
            Poly head = monomial(e.lead, e.p.leading_coeff(), F);
            Poly tail = sub(e.p, head, F);
            e.p = add(head, reduce(tail, basis, F), F);
            basis = alive_basis();
        }
        // new ambiguities with every alive element (including itself)
        for (size_t i = 0; i < entries.size(); ++i) {
            if (!entries[i].alive) continue;
            detail::enumerate_overlaps(entries[static_cast<size_t>(id)].lead, entries[i].lead,
                                       id, static_cast<int>(i), ambiguities);
            if (static_cast<int>(i) != id)
                detail::enumerate_overlaps(entries[i].lead, entries[static_cast<size_t>(id)].lead,
                                           static_cast<int>(i), id, ambiguities);
        }
        if (deg >= max_degree) produced_at_boundary = true;
    };

    bool ambiguities_beyond = false;
    while (true) {
        // drop ambiguities whose endpoints died
        while (!ambiguities.empty()) {
            const Overlap& o = *ambiguities.begin();
            if (entries[static_cast<size_t>(o.left)].alive &&
                entries[static_cast<size_t>(o.right)].alive)
                break;
            ambiguities.erase(ambiguities.begin());
        }
        const int pd = pending.empty() ? INT_MAX : pending.begin()->first.first;
        const int ad = ambiguities.empty() ? INT_MAX : ambiguities.begin()->degree;
        if (pd == INT_MAX && ad == INT_MAX) break;
        if (pd <= ad) {
            Poly p = std::move(pending.begin()->second);
            pending.erase(pending.begin());
            Poly r = reduce(p, alive_basis(), F);
            if (!r.is_zero()) add_element(monicize(r, F));
            continue;
        }
        if (ad > max_degree) {
            ambiguities_beyond = true;
            break;
        }
        const Overlap o = *ambiguities.begin();
        ambiguities.erase(ambiguities.begin());
        const detail::GBEntry& L = entries[static_cast<size_t>(o.left)];
        const detail::GBEntry& R = entries[static_cast<size_t>(o.right)];
        const int k = L.lead.degree() - o.shift;
        const Word suffix = R.lead.suffix_from(static_cast<size_t>(k));
        const Word prefix = L.lead.prefix(static_cast<size_t>(o.shift));
        Poly s = sub(sandwich(Word{}, L.p, suffix, F), sandwich(prefix, R.p, Word{}, F), F);
        Poly r = reduce(s, alive_basis(), F);
        if (!r.is_zero()) add_element(monicize(r, F));
    }

    result.elems = alive_basis();
    std::sort(result.elems.begin(), result.elems.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return word_greater(a.leading_word(), b.leading_word());
    });
    result.status = (ambiguities_beyond || produced_at_boundary) ? GBStatus::truncated
                                                                 : GBStatus::complete;
    return result;
}

inline GBasis complete(const Presentation& P, int max_degree) {
    GBasis b = complete(P.relations, max_degree, P.field, P.num_gens());
    b.dropped_zero_relations = b.dropped_zero_relations || P.dropped_zero_relations;
    return b;
}

/// Independent post-hoc certificate pass: re-enumerates every overlap of the
/// final basis and checks its S-polynomial reduces to zero.
inline bool verify_all_ambiguities(const GBasis& basis, const Field& F) {
    std::set<Overlap> overlaps;
    for (size_t i = 0; i < basis.elems.size(); ++i)
        for (size_t j = 0; j < basis.elems.size(); ++j)
            detail::enumerate_overlaps(basis.elems[i].leading_word(), basis.elems[j].leading_word(),
                                       static_cast<int>(i), static_cast<int>(j), overlaps);
    for (const Overlap& o : overlaps) {
        const Poly& L = basis.elems[static_cast<size_t>(o.left)];
        const Poly& R = basis.elems[static_cast<size_t>(o.right)];
        const int k = L.leading_word().degree() - o.shift;
        const Word suffix = R.leading_word().suffix_from(static_cast<size_t>(k));
        const Word prefix = L.leading_word().prefix(static_cast<size_t>(o.shift));
        Poly s = sub(sandwich(Word{}, L, suffix, F), sandwich(prefix, R, Word{}, F), F);
        if (!reduce(s, basis.elems, F).is_zero()) return false;
    }
    return true;
}

/// All degree-n words avoiding every leading word of the basis, in decreasing
/// monomial order.
inline std::vector<Word> normal_words(const GBasis& basis, int n) {
    if (n > basis.reliable_degree())
        throw DegreeBeyondTruncation("normal words at degree " + std::to_string(n) +
                                     " exceed the truncation degree " +
                                     std::to_string(basis.truncation_degree));
    std::vector<Word> leads = basis.leading_words();
    std::vector<Word> out;
    Word w;
    w.letters.reserve(static_cast<size_t>(n));
    auto clean_tail = [&]() {
        for (const Word& l : leads)
            if (w.ends_with(l)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            out.push_back(w);
            return;
        }
        for (size_t a = 0; a < basis.num_gens; ++a) {
            w.letters.push_back(static_cast<char>(a));
            if (clean_tail()) self(self, depth + 1);
            w.letters.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// True when the given quadratic relations already form a Groebner basis for
/// the fixed order: all (degree-3) overlap ambiguities reduce to zero. This
/// certifies the PBW property for the given generator basis only.
inline bool pbw_check(const Presentation& P) {
    if (!P.is_quadratic() && !P.relations.empty())
        throw Error("pbw_check requires a quadratic presentation");
    if (P.relations.empty()) return true;
    GBasis b = complete(P.relations, 3, P.field, P.num_gens());
    for (const Poly& g : b.elems)
        if (g.degree() > 2) return false;
    return b.complete();
}

}  // namespace qa3
