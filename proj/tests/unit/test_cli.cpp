#include <doctest.h>

#include "qa3/catalog.hpp"
#include "qa3/parser.hpp"

using namespace qa3;

TEST_CASE("presentation files parse") {
    Presentation P = parse_presentation("field Q\ngens x y z\nx*x + y*x\nx*z\nz*y");
    CHECK(P.field == Field::rationals());
    CHECK(P.gens == std::vector<std::string>{"x", "y", "z"});
    CHECK(P.relations == catalog_presentation("B").relations);

    // empty body: the free algebra
    Presentation F0 = parse_presentation("field F5\ngens a b c\n");
    CHECK(F0.relations.empty());
    CHECK(F0.field == Field::prime(5));

    // comments and blank lines are ignored
    Presentation C = parse_presentation("# header\nfield Q # trailing\n\ngens x y z\n# nothing\nx*y\n");
    CHECK(C.relations.size() == 1);
}

TEST_CASE("parse failures carry positions") {
    CHECK_THROWS_AS((void)parse_presentation("field Q\ngens x y z\nx*x + y"), InhomogeneousRelation);
    try {
        parse_presentation("field Q\ngens x y z\nx*x + y");
    } catch (const InhomogeneousRelation& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS((void)parse_presentation("field Q\ngens x y x\nx*y"), DuplicateGenerator);
    try {
        parse_presentation("field Q\ngens x y z\nx*x + $");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 7);
    }
    CHECK_THROWS_AS((void)parse_presentation("gens x y z\nx*y"), ParseError);
    CHECK_THROWS_AS((void)parse_presentation("field Z9\ngens x y z"), ParseError);
    CHECK_THROWS_AS((void)parse_presentation("field F9\ngens x y z"), ParseError);  // 9 not prime
    // fractions only make sense over Q
    CHECK_THROWS_AS((void)parse_presentation("field F5\ngens x y z\n1/2*x*y"), ParseError);
    // 'w' is the GF4 scalar, not a generator
    CHECK_THROWS_AS((void)parse_presentation("field GF4\ngens w y z\nw*y"), ParseError);
}

TEST_CASE("field specs") {
    CHECK(parse_field_spec("Q") == Field::rationals());
    CHECK(parse_field_spec("F7") == Field::prime(7));
    CHECK(parse_field_spec("F 7") == Field::prime(7));
    CHECK(parse_field_spec("GF(7)") == Field::prime(7));
    CHECK(parse_field_spec("GF4") == Field::gf4());
    CHECK(parse_field_spec("GF(4)") == Field::gf4());
    CHECK(parse_field_spec("F4") == Field::gf4());
}

TEST_CASE("grammar corners") {
    const std::vector<std::string> gens = {"x", "y", "z"};
    Field Q = Field::rationals();
    // juxtaposition, spacing, signs
    CHECK(parse_poly("xz - 2 z x", gens, Q) == parse_poly("x*z - 2*z*x", gens, Q));
    CHECK(parse_poly("x + -2*y", gens, Q) == parse_poly("x - 2*y", gens, Q));
    CHECK(parse_poly("- x - - y", gens, Q) == parse_poly("y - x", gens, Q));
    CHECK(parse_poly("3/6*x", gens, Q) == parse_poly("1/2*x", gens, Q));
    // terms collapse
    CHECK(parse_poly("x*y - x*y", gens, Q).is_zero());
    // multi-letter generator names use longest match
    Presentation M = parse_presentation("field Q\ngens ab a b\nab*a - a*b");
    CHECK(M.relations.size() == 1);
    CHECK(M.relations[0].leading_word() == Word{0, 1});

    // GF4 scalars, including the contiguous w+1 token
    Field G = Field::gf4();
    Poly p = parse_poly("w*x*y + w+1*y*x", gens, G);
    CHECK(p.terms.size() == 2);
    Scalar w1{Gf4Elem{3}};
    CHECK(p.terms.at(Word{1, 0}) == w1);
    Poly q = parse_poly("(w+1)*z*z", gens, G);
    CHECK(q.terms.at(Word{2, 2}) == w1);
    // and they print back in parseable form
    CHECK(parse_poly(poly_to_string(p, gens, G), gens, G) == p);
}

TEST_CASE("zero relations are dropped with the warning flag") {
    Presentation P = parse_presentation("field Q\ngens x y z\nx*y - x*y\nx*z");
    CHECK(P.dropped_zero_relations);
    CHECK(P.relations.size() == 1);
}
