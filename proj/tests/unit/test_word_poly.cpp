#include <doctest.h>

#include <vector>

#include "qa3/koszul.hpp"
#include "qa3/parser.hpp"
#include "qa3/poly.hpp"
#include "qa3/rng.hpp"
#include "qa3/words.hpp"

using namespace qa3;

namespace {

const Field Q = Field::rationals();
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly qp(const std::string& s) { return parse_poly(s, XYZ, Q); }

Word rand_word(SplitMix64& rng, int max_len) {
    Word w;
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<char>(rng.below(3)));
    return w;
}

}  // namespace

TEST_CASE("degree-then-left-to-right order with x > y > z") {
    Word xy{0, 1}, zz{2, 2}, zzz{2, 2, 2};
    CHECK(word_greater(xy, zz));       // same degree, x > z at the first letter
    CHECK(word_greater(zzz, xy));      // degree wins
    CHECK(word_cmp(xy, xy) == 0);
    // leading word of xz - 2 zx is xz
    CHECK(qp("x*z - 2*z*x").leading_word() == Word{0, 2});
}

TEST_CASE("leading terms") {
    CHECK(leading_term(qp("x*x + y*x")) == std::make_pair(Word{0, 0}, Q.one()));
    CHECK(leading_term(qp("y*z - z*y + z*z")).first == Word{1, 2});
    CHECK(leading_term(qp("3*z*z*z")) == std::make_pair(Word{2, 2, 2}, Q.from_int(3)));
    CHECK_THROWS_AS((void)leading_term(Poly{}), ZeroPolynomial);
}

TEST_CASE("the order is total and multiplicative") {
    SplitMix64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        Word u = rand_word(rng, 8), v = rand_word(rng, 8);
        const int ab = word_cmp(u, v), ba = word_cmp(v, u);
        CHECK(ab == -ba);                      // antisymmetry
        CHECK((ab == 0) == (u == v));          // trichotomy
    }
    for (int i = 0; i < 2000; ++i) {
        Word a = rand_word(rng, 6), b = rand_word(rng, 6), c = rand_word(rng, 6);
        // transitivity
        if (word_cmp(a, b) <= 0 && word_cmp(b, c) <= 0) CHECK(word_cmp(a, c) <= 0);
        // compatibility with multiplication
        Word u = rand_word(rng, 5), v = rand_word(rng, 5);
        if (word_less(u, v)) {
            Word w = rand_word(rng, 4), w2 = rand_word(rng, 4);
            CHECK(word_less(w * u * w2, w * v * w2));
        }
    }
}

TEST_CASE("reduction examples") {
    std::vector<Poly> G1 = {qp("x*y")};
    CHECK(reduce(qp("x*y*z"), G1, Q).is_zero());
    std::vector<Poly> G2 = {qp("x*x - z*x")};
    CHECK(reduce(qp("x*x"), G2, Q) == qp("z*x"));
    CHECK(reduce(qp("z*x*x"), G2, Q) == qp("z*z*x"));
}

TEST_CASE("reduce is idempotent and linear") {
    Field F5 = Field::prime(5);
    SplitMix64 rng(99);
    auto rand_poly = [&](int deg) {
        Poly p;
        for (int t = 0; t < 5; ++t) {
            Word w;
            for (int i = 0; i < deg; ++i) w.letters.push_back(static_cast<char>(rng.below(3)));
            add_term(p.terms, w, random_scalar(rng, F5), F5);
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Poly> G;
        for (int g = 0; g < 3; ++g) {
            Poly p = rand_poly(2);
            if (!p.is_zero()) G.push_back(monicize(p, F5));
        }
        Poly f = rand_poly(4), g = rand_poly(4);
        Scalar a = random_scalar(rng, F5), b = random_scalar(rng, F5);
        Poly rf = reduce(f, G, F5);
        CHECK(reduce(rf, G, F5) == rf);
        Poly lhs = reduce(add(scale(f, a, F5), scale(g, b, F5), F5), G, F5);
        Poly rhs = add(scale(rf, a, F5), scale(reduce(g, G, F5), b, F5), F5);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplication and substitution") {
    CHECK(multiply(qp("x"), qp("y"), Q) == qp("x*y"));
    // images x -> x, y -> x+y, z -> z
    std::vector<Poly> images = {qp("x"), qp("x + y"), qp("z")};
    CHECK(substitute(qp("x*x + y*x"), images, 3, Q) == qp("2*x*x + y*x"));

    // renaming y to x+y identifies the three-relation algebra {xx+yx, xz, zy}
    // with {yx, xz, zx-zy}: rewriting the old generators through y -> y-x
    // carries the first span onto the second, and y -> x+y carries the second
    // back onto the first
    std::vector<Poly> relsB = {qp("x*x + y*x"), qp("x*z"), qp("z*y")};
    std::vector<Poly> relsA = {qp("y*x"), qp("x*z"), qp("z*x - z*y")};
    std::vector<Poly> down = {qp("x"), qp("y - x"), qp("z")};
    std::vector<SparseVec> rowsB, rowsA, mapped;
    for (const Poly& r : relsB) {
        rowsB.push_back(relation_vector(r, 3));
        mapped.push_back(relation_vector(substitute(r, down, 3, Q), 3));
    }
    for (const Poly& r : relsA) rowsA.push_back(relation_vector(r, 3));
    CHECK(span_equal(mapped, rowsA, Q));
    std::vector<SparseVec> back;
    for (const Poly& r : relsA) back.push_back(relation_vector(substitute(r, images, 3, Q), 3));
    CHECK(span_equal(back, rowsB, Q));

    CHECK_THROWS_AS((void)substitute(qp("x*y"), {qp("x"), qp("y")}, 3, Q), ArityMismatch);
    CHECK_THROWS_AS((void)substitute(qp("x*y"), {qp("x"), qp("y*y"), qp("z")}, 3, Q), ArityMismatch);
}

TEST_CASE("homogeneity and monic normalization") {
    CHECK(homogeneous_degree(qp("x*x + y*x")) == 2);
    CHECK(!homogeneous_degree(qp("x*x + y")));
    CHECK(monicize(qp("3*z*z*z"), Q) == qp("z*z*z"));
    CHECK(poly_to_string(qp("x*x - y*x"), XYZ, Q) == "x*x - y*x");
    CHECK(poly_to_string(qp("-x*x + y*x"), XYZ, Q) == "-x*x + y*x");
}
