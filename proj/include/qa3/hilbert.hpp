#pragma once

#include <array>
#include <queue>
#include <string>
#include <vector>

#include "qa3/errors.hpp"
#include "qa3/groebner.hpp"
#include "qa3/linalg.hpp"
#include "qa3/series.hpp"

namespace qa3 {

/// Subword-avoidance automaton (Aho-Corasick) over the generator alphabet.
/// State 0 is the root; dead states are those whose suffix closes one of the
/// forbidden words. Counting walks of length n from the root through live
/// states counts the normal words of degree n.
class SubwordAutomaton {
public:
    SubwordAutomaton(const std::vector<Word>& forbidden, size_t alphabet)
        : alphabet_(alphabet) {
        nodes_.push_back(Node(alphabet));
        for (const Word& w : forbidden) {
            int s = 0;
            for (int i = 0; i < w.degree(); ++i) {
                int a = w.letter(i);
                if (nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(a)] < 0) {
                    nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(a)] =
                        static_cast<int>(nodes_.size());
                    nodes_.push_back(Node(alphabet));
                }
                s = nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(a)];
            }
            nodes_[static_cast<size_t>(s)].dead = true;
        }
        // BFS failure links; goto function completed in place
        std::queue<int> q;
        for (size_t a = 0; a < alphabet_; ++a) {
            int c = nodes_[0].child[a];
            if (c < 0) {
                nodes_[0].child[a] = 0;
            } else {
                nodes_[static_cast<size_t>(c)].fail = 0;
                q.push(c);
            }
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            if (nodes_[static_cast<size_t>(nodes_[static_cast<size_t>(s)].fail)].dead)
                nodes_[static_cast<size_t>(s)].dead = true;
            for (size_t a = 0; a < alphabet_; ++a) {
                int c = nodes_[static_cast<size_t>(s)].child[a];
                int f = nodes_[static_cast<size_t>(nodes_[static_cast<size_t>(s)].fail)].child[a];
                if (c < 0) {
                    nodes_[static_cast<size_t>(s)].child[a] = f;
                } else {
                    nodes_[static_cast<size_t>(c)].fail = f;
                    q.push(c);
                }
            }
        }
    }

    size_t states() const { return nodes_.size(); }
    bool dead(int s) const { return nodes_[static_cast<size_t>(s)].dead; }
    int step(int s, int letter) const {
        return nodes_[static_cast<size_t>(s)].child[static_cast<size_t>(letter)];
    }

private:
    struct Node {
        explicit Node(size_t alphabet) : child(alphabet, -1) {}
        std::vector<int> child;
        int fail = 0;
        bool dead = false;
    };
    size_t alphabet_;
    std::vector<Node> nodes_;
};

/// Dimension counts of the algebra: coeffs[n] = number of normal words of
/// degree n, for n <= D.
inline Series hilbert_series(const GBasis& basis, int D) {
    if (D > basis.reliable_degree())
        throw DegreeBeyondTruncation("Hilbert series to degree " + std::to_string(D) +
                                     " exceeds the truncation degree " +
                                     std::to_string(basis.truncation_degree));
    SubwordAutomaton aut(basis.leading_words(), basis.num_gens);
    Series H;
    H.c.reserve(static_cast<size_t>(D) + 1);
    std::vector<Int> cnt(aut.states(), Int(0));
    cnt[0] = 1;
    H.c.push_back(1);
    for (int n = 1; n <= D; ++n) {
        std::vector<Int> next(aut.states(), Int(0));
        for (size_t s = 0; s < cnt.size(); ++s) {
            if (cnt[s] == 0 || aut.dead(static_cast<int>(s))) continue;
            for (size_t a = 0; a < basis.num_gens; ++a) {
                int t = aut.step(static_cast<int>(s), static_cast<int>(a));
                if (!aut.dead(t)) next[static_cast<size_t>(t)] += cnt[s];
            }
        }
        cnt = std::move(next);
        Int total = 0;
        for (const Int& x : cnt) total += x;
        H.c.push_back(total);
    }
    return H;
}

enum class HClass {
    H1 = 1, H2, H3, H4, H5, H6, H7, H8, H9, H10, H11,
    not_applicable
};

inline std::string to_string(HClass c) {
    if (c == HClass::not_applicable) return "NotApplicable";
    return "H" + std::to_string(static_cast<int>(c));
}

/// The eleven closed forms of the possible Hilbert series in the
/// (dim A_1, dim A_2) = (3,3) regime, compiled in.
inline const RationalForm& hseries_form(int j) {
    static const std::array<RationalForm, 11> forms = {
        RationalForm({1, 3, 3}, {1}),
        RationalForm({1, 3, 3, 1}, {1}),
        RationalForm({1, 2, 0, -2}, {1, -1}),
        RationalForm({1, 3, 3, 2}, {1}),
        RationalForm({1, 3, 3, 2, 1}, {1}),
        RationalForm({1, 2, 0, -1, -1}, {1, -1}),
        RationalForm({1, 2, 0, -1}, {1, -1}),
        RationalForm({1, 2}, {1, -1}),
        RationalForm({1, 2, 0, 1}, {1, -1}),
        RationalForm({1, 1, -2, 1}, {1, -2, 1}),
        RationalForm({1, 2, -1, -1}, {1, -1, -1}),
    };
    if (j < 1 || j > 11) throw InvalidParameter("series index must be 1..11");
    return forms[static_cast<size_t>(j - 1)];
}

struct ClassifyResult {
    HClass label = HClass::not_applicable;
    Series series;  // filled when the (3,3) computation ran
};

/// Classifies a quadratic presentation on 3 generators by its Hilbert series.
/// Outside the (3,3) regime the result is NotApplicable. Inside it, the
/// degree-5 prefix identifies the class (the eleven prefixes are pairwise
/// distinct by degree 5) and the tail up to D is verified against the closed
/// form; any failure raises ClassificationConflict, which would falsify the
/// classification theorem rather than indicate bad input.
inline ClassifyResult classify_33(const Presentation& P, int D = 12) {
    if (P.num_gens() != 3) throw Error("classification requires exactly 3 generators");
    if (!P.is_quadratic()) throw Error("classification requires quadratic relations");
    if (D < 5) throw InvalidParameter("classification needs degree at least 5");

    std::vector<SparseVec> rows;
    for (const Poly& r : P.relations) {
        SparseVec v;
        for (const auto& [w, c] : r.terms)
            v.emplace_back(3 * w.letter(0) + w.letter(1), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(v));
    }
    if (rank(rows, P.field) != 6) return ClassifyResult{HClass::not_applicable, {}};

    GBasis basis = complete(P, D);
    Series H = hilbert_series(basis, D);

    static const int prefixes[11][3] = {
        {0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 0, 0}, {2, 1, 0}, {2, 1, 1},
        {2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {4, 5, 6}, {5, 8, 13}};
    int match = 0;
    for (int j = 1; j <= 11; ++j) {
        if (H[3] == prefixes[j - 1][0] && H[4] == prefixes[j - 1][1] && H[5] == prefixes[j - 1][2]) {
            match = j;
            break;
        }
    }
    auto series_text = [&]() {
        std::string s;
        for (size_t k = 0; k < H.c.size(); ++k) s += (k ? "," : "") + H.c[k].str();
        return s;
    };
    if (match == 0)
        throw ClassificationConflict("Hilbert series prefix matches no known class: " + series_text());
    SignedSeries expected = expand(hseries_form(match), D);
    for (int n = 0; n <= D; ++n)
        if (expected[n] != H[n])
            throw ClassificationConflict("series matches H" + std::to_string(match) +
                                         " to degree 5 but diverges at degree " + std::to_string(n) +
                                         ": " + series_text());
    return ClassifyResult{static_cast<HClass>(match), std::move(H)};
}

}  // namespace qa3
