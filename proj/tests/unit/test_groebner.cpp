#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qa3/catalog.hpp"
#include "qa3/groebner.hpp"
#include "qa3/hilbert.hpp"
#include "qa3/parser.hpp"
#include "qa3/rng.hpp"

using namespace qa3;

namespace {

const Field Q = Field::rationals();
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly qp(const std::string& s) { return parse_poly(s, XYZ, Q); }

std::vector<Poly> extras_of(const GBasis& b, const Presentation& P) {
    // completed basis minus the (inter-reduced) defining relations: everything
    // of degree > 2 for quadratic presentations
    std::vector<Poly> out;
    for (const Poly& g : b.elems)
        if (g.degree() > P.max_relation_degree()) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("monomial relations are already complete") {
    Presentation A2 = catalog_presentation("A2");
    GBasis b = complete(A2, 12);
    CHECK(b.complete());
    CHECK(b.elems.size() == 6);
    CHECK(extras_of(b, A2).empty());
}

TEST_CASE("completion adds exactly the tabulated elements") {
    Presentation A1 = catalog_presentation("A1");
    GBasis b = complete(A1, 12);
    CHECK(b.complete());
    std::vector<Poly> extras = extras_of(b, A1);
    std::vector<Poly> expected = {qp("z*z*x"), qp("z*z*y"), qp("z*z*z")};
    CHECK(extras == expected);
}

TEST_CASE("the infinite family is reported as truncated") {
    Presentation B = catalog_presentation("B");
    GBasis b = complete(B, 8);
    CHECK(!b.complete());
    CHECK(b.truncation_degree == 8);
    std::vector<Poly> extras = extras_of(b, B);
    REQUIRE(extras.size() == 6);
    for (int k = 1; k <= 6; ++k) {
        std::string xyk = "x";
        for (int i = 0; i < k; ++i) xyk += "*y";
        std::string yk1;
        for (int i = 0; i < k + 1; ++i) yk1 += (i ? "*y" : "y");
        CHECK(extras[static_cast<size_t>(k - 1)] == qp(xyk + "*x + " + yk1 + "*x"));
    }
}

TEST_CASE("empty relation list completes to the free algebra") {
    Presentation P = make_presentation(Q, XYZ, {});
    GBasis b = complete(P, 12);
    CHECK(b.complete());
    CHECK(b.elems.empty());
}

TEST_CASE("normal words") {
    GBasis b8 = complete(catalog_presentation("A8"), 12);
    std::vector<Word> n4 = normal_words(b8, 4);
    CHECK(n4 == std::vector<Word>{Word{0, 0, 0, 0}, Word{1, 1, 1, 1}, Word{2, 2, 2, 2}});

    GBasis b11 = complete(catalog_presentation("A11"), 12);
    CHECK(normal_words(b11, 3).size() == 5);

    std::vector<Poly> all9;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) all9.push_back(monomial(Word{i, j}, Q.one(), Q));
    GBasis ball = complete(all9, 12, Q, 3);
    CHECK(normal_words(ball, 2).empty());

    GBasis btr = complete(catalog_presentation("B"), 6);
    CHECK_THROWS_AS((void)normal_words(btr, 7), DegreeBeyondTruncation);
}

TEST_CASE("pbw check certifies the given basis only") {
    CHECK(pbw_check(catalog_presentation("A7")));
    CHECK(!pbw_check(catalog_presentation("A4")));  // zzz appears
    CHECK(!pbw_check(catalog_presentation("A5")));  // zyx appears
    CHECK(pbw_check(make_presentation(Q, XYZ, {})));
    for (const char* name : {"A2", "A8", "A9", "A10", "A11"})
        CHECK(pbw_check(catalog_presentation(name)));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((void)complete({qp("x*x + y")}, 12, Q, 3), InhomogeneousRelations);
    GBasis b = complete({Poly{}, qp("x*y")}, 12, Q, 3);
    CHECK(b.dropped_zero_relations);
    CHECK(b.elems.size() == 1);
    CHECK_THROWS_AS((void)complete({qp("x*y*z")}, 2, Q, 3), DegreeBeyondTruncation);
}

TEST_CASE("diamond soundness: every ambiguity of a complete basis reduces to zero") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11",
                             "C", "nonuko"}) {
        Presentation P = catalog_presentation(name);
        GBasis b = complete(P, 12);
        CHECK(b.complete());
        CHECK(verify_all_ambiguities(b, P.field));
    }
}

TEST_CASE("ideal membership: defining relations reduce to zero") {
    for (const char* name : {"A1", "A4", "B", "C", "nonuko", "B2"}) {
        Presentation P = catalog_presentation(name);
        GBasis b = complete(P, 10);
        for (const Poly& r : P.relations) CHECK(reduce(r, b.elems, P.field).is_zero());
    }
}

TEST_CASE("normal word counts agree with brute-force ideal dimensions") {
    // oracle: dim A_n = 3^n - rank{ u * r * v : r relation, |u| + 2 + |v| = n }
    Field F5 = Field::prime(5);
    SplitMix64 rng(4242);
    auto word_index = [](const Word& w) {
        int idx = 0;
        for (int i = 0; i < w.degree(); ++i) idx = idx * 3 + w.letter(i);
        return idx;
    };
    auto all_words = [](int n) {
        std::vector<Word> out;
        Word w;
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) { out.push_back(w); return; }
            for (int a = 0; a < 3; ++a) {
                w.letters.push_back(static_cast<char>(a));
                self(self, depth + 1);
                w.letters.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    for (int trial = 0; trial < 12; ++trial) {
        int m = 1 + static_cast<int>(rng.below(8));
        Presentation P = random_quadratic_presentation(rng, F5, m);
        GBasis b = complete(P, 6);
        Series H = hilbert_series(b, 4);
        for (int n = 2; n <= 4; ++n) {
            std::vector<SparseVec> span;
            for (const Poly& r : P.relations) {
                for (int lu = 0; lu <= n - 2; ++lu) {
                    for (const Word& u : all_words(lu)) {
                        for (const Word& v : all_words(n - 2 - lu)) {
                            SparseVec vec;
                            for (const auto& [w, c] : r.terms)
                                vec.emplace_back(word_index(u * w * v), c);
                            std::sort(vec.begin(), vec.end(),
                                      [](const auto& a, const auto& bb) { return a.first < bb.first; });
                            span.push_back(std::move(vec));
                        }
                    }
                }
            }
            Int expected = Int(1);
            for (int i = 0; i < n; ++i) expected *= 3;
            expected -= rank(span, F5);
            CHECK(H[n] == expected);
        }
    }
}

TEST_CASE("extending F2 to GF4 preserves the normal word count") {
    Field F2 = Field::prime(2);
    Field G4 = Field::gf4();
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + static_cast<int>(rng.below(8));
        Presentation P2 = random_quadratic_presentation(rng, F2, m);
        std::vector<Poly> lifted;
        for (const Poly& r : P2.relations) {
            Poly q;
            for (const auto& [w, c] : r.terms)
                add_term(q.terms, w, G4.from_int(static_cast<long long>(F2.code_of(c))), G4);
            lifted.push_back(std::move(q));
        }
        Presentation P4 = make_presentation(G4, XYZ, lifted);
        Series H2 = hilbert_series(complete(P2, 6), 6);
        Series H4 = hilbert_series(complete(P4, 6), 6);
        CHECK(H2 == H4);
    }
}
