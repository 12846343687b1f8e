#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qa3/catalog.hpp"
#include "qa3/groebner.hpp"
#include "qa3/hilbert.hpp"
#include "qa3/koszul.hpp"

using namespace qa3;

namespace {

std::vector<Poly> completed_extras(const Presentation& P, int D) {
    GBasis b = complete(P, D);
    std::vector<Poly> out;
    for (const Poly& g : b.elems)
        if (g.degree() > 2) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("entry lookups") {
    const CatalogEntry& a5 = catalog_entry("A5");
    CHECK(a5.relations == std::vector<std::string>{"x*x - y*x", "x*y", "y*y", "y*z", "z*x", "z*z"});
    CHECK(a5.expected_extras == std::vector<std::string>{"z*y*x"});
    CHECK(a5.series_class == 5);

    // the headline algebra is reachable under both names
    Presentation b1 = catalog_presentation("B");
    Presentation b2 = catalog_presentation("counterexample_A");
    CHECK(b1.relations == b2.relations);

    CHECK_THROWS_AS((void)catalog_entry("A12"), UnknownName);
}

TEST_CASE("alpha instantiation") {
    Field Q = Field::rationals();
    Presentation b7 = catalog_presentation("B7", Q, Q.from_int(2));
    std::vector<Poly> expected;
    for (const char* s : {"x*x - z*x", "x*y", "y*x", "x*z - 2*z*x", "y*z", "y*y"})
        expected.push_back(parse_poly(s, b7.gens, Q));
    CHECK(b7.relations == expected);

    CHECK_THROWS_AS((void)catalog_presentation("B5"), InvalidParameter);                    // missing
    CHECK_THROWS_AS((void)catalog_presentation("B5", Q, Q.from_int(1)), InvalidParameter);  // alpha = 1
    CHECK_THROWS_AS((void)catalog_presentation("B5", Q, Q.from_int(0)), InvalidParameter);  // alpha = 0
    CHECK_THROWS_AS((void)catalog_presentation("A5", Q, Q.from_int(2)), InvalidParameter);  // no parameter
    Field F3 = Field::prime(3);
    // alpha = 4 is 1 mod 3
    CHECK_THROWS_AS((void)catalog_presentation("B5", F3, F3.from_int(4)), InvalidParameter);
    CHECK(catalog_presentation("B5", F3, F3.from_int(2)).relations.size() == 6);
}

TEST_CASE("Z2 example lives over F2 by default") {
    Presentation z = catalog_presentation("Z2_example");
    CHECK(z.field == Field::prime(2));
    CHECK(z.relations.size() == 6);
}

TEST_CASE("golden closure: recomputation matches every stored expectation") {
    for (const CatalogEntry& e : catalog_entries()) {
        const Field F = e.default_field;
        std::optional<Scalar> alpha;
        if (e.needs_alpha) alpha = F.from_int(2);
        Presentation P = catalog_presentation(e, F, alpha);

        if (e.extras_note.empty()) {
            std::vector<Poly> extras = completed_extras(P, 10);
            CHECK_MESSAGE(extras == catalog_expected_extras(e, F), "extras of ", e.name);
        }
        if (e.series_form) {
            Series H = hilbert_series(complete(P, 10), 10);
            SignedSeries expect = expand(*e.series_form, 10);
            CHECK_MESSAGE(H.c == expect.c, "series of ", e.name);
        }
        if (e.series_class) {
            ClassifyResult r = classify_33(P, 10);
            CHECK_MESSAGE(static_cast<int>(r.label) == *e.series_class, "class of ", e.name);
        }
    }
}

TEST_CASE("the infinite extras family for B is observed up to truncation") {
    Presentation B = catalog_presentation("B");
    std::vector<Poly> extras = completed_extras(B, 10);
    REQUIRE(extras.size() == 8);  // k = 1..8 fit below degree 10
    for (int k = 1; k <= 8; ++k) {
        Word lead = extras[static_cast<size_t>(k - 1)].leading_word();
        Word want{0};
        for (int i = 0; i < k; ++i) want.letters.push_back(1);
        want.letters.push_back(0);
        CHECK(lead == want);  // x y^k x
    }
}

TEST_CASE("duality pairs match the tabulated dual relations") {
    // fixed pairs
    for (const char* name : {"B", "C", "B2", "nonuko"}) {
        const CatalogEntry& e = catalog_entry(name);
        Presentation P = catalog_presentation(e);
        std::vector<Poly> expected = catalog_expected_dual(e, P.field);
        std::vector<SparseVec> exp_rows;
        for (const Poly& r : expected) exp_rows.push_back(relation_vector(r, 3));
        CHECK_MESSAGE(span_equal(relation_rows(koszul_dual(P)), exp_rows, P.field), "dual of ", name);
    }
    // alpha pairs over Q and over F7, both with alpha = 2
    for (const char* name : {"B5", "B6", "B7"}) {
        for (Field F : {Field::rationals(), Field::prime(7)}) {
            const CatalogEntry& e = catalog_entry(name);
            Scalar alpha = F.from_int(2);
            Presentation P = catalog_presentation(e, F, alpha);
            std::vector<SparseVec> exp_rows;
            for (const Poly& r : catalog_expected_dual(e, F, alpha))
                exp_rows.push_back(relation_vector(r, 3));
            CHECK_MESSAGE(span_equal(relation_rows(koszul_dual(P)), exp_rows, F), "dual of ", name,
                          " over ", F.spec_string());
        }
    }
}

TEST_CASE("the dual of the cube-type example completes with the recorded extras") {
    const CatalogEntry& e = catalog_entry("nonuko");
    Presentation P = catalog_presentation(e);
    Presentation D = koszul_dual(P);
    std::vector<Poly> extras = completed_extras(D, 10);
    std::vector<Poly> expected;
    for (const std::string& s : e.expected_dual_extras)
        expected.push_back(parse_poly(s, D.gens, D.field));
    CHECK(extras == expected);
    // and its series is the third one on the list
    Series H = hilbert_series(complete(D, 10), 10);
    CHECK(H.c == expand(hseries_form(3), 10).c);
}

TEST_CASE("entries print and reparse identically") {
    for (const CatalogEntry& e : catalog_entries()) {
        std::optional<Scalar> alpha;
        if (e.needs_alpha) alpha = e.default_field.from_int(2);
        Presentation P = catalog_presentation(e, e.default_field, alpha);
        Presentation Q = parse_presentation(print_presentation(P));
        CHECK(Q.field == P.field);
        CHECK(Q.gens == P.gens);
        CHECK(Q.relations == P.relations);
    }
}
