#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padl/padic.hpp"

using padl::CycloElt;
using padl::Integer;
using padl::PadicInt;
using padl::Rational;

TEST_CASE("construction and canonical lifts") {
    PadicInt a(5, 3, Integer(-1));
    CHECK(a.lift() == 124);
    CHECK(a.precision() == 3);
    CHECK(PadicInt(5, 2, Integer(148)).lift() == 23);
    CHECK_THROWS(PadicInt(6, 2, Integer(1)));
    CHECK_THROWS(PadicInt(5, 0, Integer(1)));
}

TEST_CASE("rational embeddings") {
    CHECK(PadicInt::from_rational(Rational(1, 3), 5, 2).lift() == 17);  // 3 * 17 = 51 = 1 mod 25
    CHECK(PadicInt::from_rational(Rational(-1, 12), 5, 3).lift() * 12 % 125 == 125 - 1);
    CHECK(PadicInt::from_rational(Rational(50, 3), 5, 4).valuation() == 2);
    CHECK_THROWS(PadicInt::from_rational(Rational(1, 5), 5, 3));
    CHECK_THROWS(PadicInt::from_rational(Rational(3, 10), 5, 3));
}

TEST_CASE("arithmetic and precision mixing") {
    PadicInt a = PadicInt::from_rational(Rational(1, 3), 5, 4);
    PadicInt b = PadicInt::from_rational(Rational(2, 3), 5, 2);
    PadicInt s = a + b;
    CHECK(s.precision() == 2);
    CHECK(s.lift() == 1);
    CHECK((a * a.inverse()).lift() == 1);
    CHECK((-a + a).is_zero());
    CHECK((a - a).valuation() == 4);
    CHECK_THROWS(a += PadicInt(7, 4, Integer(1)));
    CHECK(pow(PadicInt(5, 3, Integer(2)), 10).lift() == 1024 % 125);
    CHECK_THROWS(PadicInt(5, 3, Integer(5)).inverse());
}

TEST_CASE("teichmuller lifts") {
    // frozen: the 4th roots of unity in Z_5 to precision 3
    CHECK(PadicInt::teichmuller(Integer(2), 5, 3).lift() == 57);
    CHECK(PadicInt::teichmuller(Integer(3), 5, 3).lift() == 68);
    CHECK(PadicInt::teichmuller(Integer(4), 5, 3).lift() == 124);
    CHECK(PadicInt::teichmuller(Integer(1), 5, 3).lift() == 1);
    CHECK(PadicInt::teichmuller(Integer(10), 5, 3).is_zero());

    // defining properties: omega(a)^{p-1} = 1 and omega(a) = a mod p
    for (long a = 1; a <= 6; ++a) {
        PadicInt w = PadicInt::teichmuller(Integer(a), 7, 5);
        CHECK(pow(w, 6).lift() == 1);
        CHECK(w.lift() % 7 == a % 7);
    }
    // multiplicativity: omega factors through the residue, omega(2) omega(3) = omega(6) = omega(1) = 1 mod 5
    Integer prod = PadicInt::teichmuller(Integer(2), 5, 3).lift() * PadicInt::teichmuller(Integer(3), 5, 3).lift();
    CHECK(prod % 125 == 1);
}

TEST_CASE("embedding cyclotomic scalars of order dividing p-1") {
    // zeta_4 -> teichmuller image of the smallest primitive root mod 5
    PadicInt i4 = embed_cyclo(CycloElt::root_of_unity(4, 1), 5, 3);
    CHECK(i4.lift() == 57);
    CHECK((i4 * i4).lift() == 124);  // squares to -1
    CHECK(embed_cyclo(CycloElt(Rational(7, 3)), 5, 2) == PadicInt::from_rational(Rational(7, 3), 5, 2));
    CHECK(embed_cyclo(CycloElt::root_of_unity(2, 1), 5, 3).lift() == 124);
    CHECK_THROWS(embed_cyclo(CycloElt::root_of_unity(5, 1), 5, 3));
    CHECK_THROWS(embed_cyclo(CycloElt::root_of_unity(8, 1), 5, 3));

    // the embedding is a ring homomorphism
    CycloElt x = CycloElt::root_of_unity(4, 1) + 3;
    CycloElt y = CycloElt::root_of_unity(4, 3) - CycloElt(Rational(1, 2));
    CHECK(embed_cyclo(x * y, 5, 4) == embed_cyclo(x, 5, 4) * embed_cyclo(y, 5, 4));
    CHECK(embed_cyclo(x + y, 5, 4) == embed_cyclo(x, 5, 4) + embed_cyclo(y, 5, 4));

    // values merely stored at a larger order descend before embedding
    CHECK(embed_cyclo(CycloElt::root_of_unity(20, 5), 5, 3) == i4);
    CHECK_THROWS(embed_cyclo(CycloElt::root_of_unity(20, 1), 5, 3));
}

TEST_CASE("string form") {
    CHECK(PadicInt(5, 3, Integer(57)).str() == "57 + O(5^3)");
}
