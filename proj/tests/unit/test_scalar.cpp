#include <doctest.h>

#include "qa3/fields.hpp"
#include "qa3/rng.hpp"

using namespace qa3;

namespace {

Scalar rand_rational(SplitMix64& rng) {
    long long num = static_cast<long long>(rng.below(41)) - 20;
    long long den = static_cast<long long>(rng.below(19)) + 1;
    return Scalar{Rational(num, den)};
}

Scalar rand_elem(SplitMix64& rng, const Field& F) {
    if (F.kind() == FieldKind::rationals) return rand_rational(rng);
    return random_scalar(rng, F);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Field Q = Field::rationals();
    Scalar half{Rational(1, 2)}, third{Rational(1, 3)};
    CHECK(Q.add(half, third) == Scalar{Rational(5, 6)});
    CHECK(Q.format(Q.add(half, third)) == "5/6");
    // canonical form: lowest terms, sign carried by the numerator
    CHECK(Scalar{Rational(2, 4)} == Scalar{Rational(1, 2)});
    CHECK(Q.sub(Q.zero(), half) == Scalar{Rational(-1, 2)});
    CHECK(Q.format(Q.sub(Q.zero(), half)) == "-1/2");
    CHECK(Q.format(Q.from_int(-7)) == "-7");
}

TEST_CASE("prime field basics") {
    Field F2 = Field::prime(2);
    CHECK(F2.is_zero(F2.add(F2.one(), F2.one())));
    Field F7 = Field::prime(7);
    CHECK(F7.format(F7.from_int(-1)) == "6");
    CHECK(F7.mul(F7.from_int(3), F7.from_int(5)) == F7.from_int(1));
    CHECK(F7.inv(F7.from_int(3)) == F7.from_int(5));
}

TEST_CASE("GF4 multiplication table is forced by w^2+w+1=0") {
    Field G = Field::gf4();
    Scalar w{Gf4Elem{2}}, w1{Gf4Elem{3}};
    CHECK(G.mul(w, w) == w1);
    CHECK(G.mul(w, w1) == G.one());
    CHECK(G.mul(w1, w1) == w);
    CHECK(G.add(w, G.one()) == w1);
    CHECK(G.inv(w) == w1);
    CHECK(G.format(w1) == "w+1");
}

TEST_CASE("field axioms hold exactly on random triples") {
    for (Field F : {Field::rationals(), Field::prime(5), Field::prime(101), Field::gf4()}) {
        SplitMix64 rng(2024);
        for (int i = 0; i < 1000; ++i) {
            Scalar a = rand_elem(rng, F), b = rand_elem(rng, F), c = rand_elem(rng, F);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("inverses") {
    for (Field F : {Field::rationals(), Field::prime(5), Field::prime(101), Field::gf4()}) {
        SplitMix64 rng(7);
        for (int i = 0; i < 200; ++i) {
            Scalar a = rand_elem(rng, F);
            if (F.is_zero(a)) continue;
            CHECK(F.inv(F.inv(a)) == a);
            CHECK(F.is_one(F.mul(a, F.inv(a))));
        }
        CHECK_THROWS_AS((void)F.inv(F.zero()), DivisionByZero);
    }
}

TEST_CASE("Fermat: a^p = a in F_p") {
    for (std::uint32_t p : {2u, 5u, 7u, 13u}) {
        Field F = Field::prime(p);
        for (std::uint32_t v = 0; v < p; ++v) {
            Scalar a = F.from_int(v);
            Scalar pow = F.one();
            for (std::uint32_t k = 0; k < p; ++k) pow = F.mul(pow, a);
            CHECK(pow == a);
        }
    }
}

TEST_CASE("field mismatch is detected") {
    Field Q = Field::rationals();
    Field F5 = Field::prime(5);
    CHECK_THROWS_AS((void)Q.add(Q.one(), F5.one()), FieldMismatch);
    CHECK_THROWS_AS((void)F5.mul(Q.one(), F5.one()), FieldMismatch);
    CHECK_THROWS_AS((void)Field::gf4().check(F5.one()), FieldMismatch);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Field::prime(4), InvalidParameter);
    CHECK_THROWS_AS(Field::prime(1), InvalidParameter);
    CHECK_THROWS_AS(Field::prime(91), InvalidParameter);  // 7*13
    CHECK(Field::prime(2147483647).modulus() == 2147483647u);  // 2^31 - 1
    CHECK_THROWS_AS(Field::prime(2147483648u), InvalidParameter);
}

TEST_CASE("finite field enumeration codes round trip") {
    for (Field F : {Field::prime(5), Field::gf4()}) {
        for (std::uint64_t c = 0; c < F.size(); ++c)
            CHECK(F.code_of(F.element_from_code(c)) == c);
    }
    CHECK_THROWS_AS((void)Field::rationals().size(), InfiniteFieldUnsupported);
}
