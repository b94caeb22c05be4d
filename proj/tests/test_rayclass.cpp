#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padl/rayclass.hpp"

#include <set>

using namespace padl;

namespace {

FracIdeal rational_prime(const QuadField& F, long p) {
    return FracIdeal::principal(FieldElt(F, Rational(p)));
}

}  // namespace

TEST_CASE("ray classes of Q mod 5 at level 1 form the cyclic group of order 4") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    CHECK(G->order() == 4);
    REQUIRE(G->basis_order().size() == 1);
    CHECK(G->basis_order()[0] == 4);
    CHECK(G->eps_plus_order() == 1);

    // representatives are the first positive integers prime to 5 in new residue classes
    std::set<Rational> norms;
    for (const auto& r : G->reps()) norms.insert(r.norm());
    CHECK(norms == std::set<Rational>{Rational(1), Rational(2), Rational(3), Rational(4)});

    // (7)/(3) and (4) agree: 7 * 3^{-1} = 7 * 2 = 14 = 4 mod 5
    FracIdeal I7 = rational_prime(Q, 7);
    FracIdeal I3 = rational_prime(Q, 3);
    FracIdeal I4 = rational_prime(Q, 4);
    CHECK(G->class_of(I7 * I3.inverse()) == G->class_of(I4));
    CHECK(G->class_of_residue(FieldElt(Q, Rational(3))) == G->class_of(rational_prime(Q, 3)));

    // the flip element is negative, 1 mod 5, and lands in the class of (4)
    CHECK(G->sign_flip_elt(0).sign_at(0) < 0);
    CHECK(G->sign_flip_class(0) == G->class_of(I4));
}

TEST_CASE("characters of Q mod 5: one even quadratic, two odd of order 4") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    auto chars = characters_of(G);
    REQUIRE(chars.size() == 4);
    CHECK(chars[0].is_trivial());
    CHECK(chars[0].infinity_sign(0) == +1);

    unsigned quadratic = 0, quartic_odd = 0;
    for (const auto& chi : chars) {
        if (chi.order() == 2) {
            CHECK(chi.infinity_sign(0) == +1);
            ++quadratic;
        }
        if (chi.order() == 4) {
            CHECK(chi.infinity_sign(0) == -1);
            ++quartic_odd;
        }
    }
    CHECK(quadratic == 1);
    CHECK(quartic_odd == 2);

    // row orthogonality: sum over classes vanishes for nontrivial characters
    for (const auto& chi : chars) {
        CycloElt s(Rational(0));
        for (unsigned j = 0; j < G->order(); ++j) s = s + chi.value(j);
        if (chi.is_trivial())
            CHECK(s == CycloElt(Rational(4)));
        else
            CHECK(s.is_zero());
    }

    // parity bookkeeping: the quadratic character matches even k only
    for (const auto& chi : chars)
        if (chi.order() == 2) {
            CHECK(chi.parity_matches(2));
            CHECK_FALSE(chi.parity_matches(3));
        }
}

TEST_CASE("conductor exponents over Q split by character order") {
    QuadField Q = QuadField::rationals();
    auto G2 = RayClassData::build(Q, rational_prime(Q, 5), 2);
    CHECK(G2->order() == 20);
    REQUIRE(G2->basis_order().size() == 1);
    CHECK(G2->basis_order()[0] == 20);

    auto chars = characters_of(G2);
    unsigned c0 = 0, c1 = 0, c2 = 0;
    for (const auto& chi : chars) {
        unsigned c = conductor_exponent(chi);
        if (c == 0) ++c0;
        if (c == 1) ++c1;
        if (c == 2) ++c2;
        // a character factors through level 1 exactly when its order divides 4
        CHECK((c <= 1) == (4 % chi.order() == 0));
    }
    CHECK(c0 == 1);
    CHECK(c1 == 3);
    CHECK(c2 == 16);

    // primitive avatar evaluates consistently on test ideals
    for (const auto& chi : chars) {
        if (conductor_exponent(chi) != 1) continue;
        HeckeChar prim = primitive_avatar(chi);
        CHECK(prim.group().level() == 1);
        for (long p : {2L, 3L, 7L, 11L}) {
            FracIdeal I = rational_prime(Q, p);
            CHECK(prim.value_ideal(I) == chi.value_ideal(I));
        }
    }
}

TEST_CASE("level 0 over Q is trivial and level 3 is cyclic of order 100") {
    QuadField Q = QuadField::rationals();
    auto G0 = RayClassData::build(Q, rational_prime(Q, 5), 0);
    CHECK(G0->order() == 1);
    CHECK(characters_of(G0).size() == 1);

    auto G3 = RayClassData::build(Q, rational_prime(Q, 5), 3);
    CHECK(G3->order() == 100);
    REQUIRE(G3->basis_order().size() == 1);
    CHECK(G3->basis_order()[0] == 100);
    CHECK(G3->class_of(rational_prime(Q, 126)) == G3->identity());
}

TEST_CASE("ray classes of Q(sqrt5) mod sqrt5: order 2 at levels 1 and 2") {
    QuadField F = QuadField::real_quadratic(5);
    FracIdeal P = primes_above(F, 5).at(0);

    auto G1 = RayClassData::build(F, P, 1);
    CHECK(G1->order() == 2);
    CHECK(G1->eps_plus_order() == 2);
    CHECK(G1->reps()[1].norm() == Rational(4));  // the ideal (2)

    // units cover residues {1,4} with all-positive signs, so 2 and 3 generate
    // the nontrivial class while eps+ = 1+omega falls in the identity
    CHECK(G1->class_of_residue(FieldElt(F, Rational(2))) == 1);
    CHECK(G1->class_of_residue(FieldElt(F, Rational(3))) == 1);
    CHECK(G1->class_of_residue(FieldElt(F, Rational(4))) == G1->identity());
    CHECK(G1->class_of_residue(FieldElt(F, Rational(1), Rational(1))) == G1->identity());

    // both sign flips land in the nontrivial class: (1,-+) and (1,+-) are
    // outside the unit image in residues x signs
    CHECK(G1->sign_flip_class(0) == 1);
    CHECK(G1->sign_flip_class(1) == 1);

    auto G2 = RayClassData::build(F, P, 2);
    CHECK(G2->order() == 2);
    CHECK(G2->eps_plus_order() == 10);

    auto chars2 = characters_of(G2);
    REQUIRE(chars2.size() == 2);
    CHECK(conductor_exponent(chars2[0]) == 0);
    CHECK(conductor_exponent(chars2[1]) == 1);
    HeckeChar prim = primitive_avatar(chars2[1]);
    CHECK(prim.group().level() == 1);
    CHECK(prim.value(1) == CycloElt(Rational(-1)));
}

TEST_CASE("nontrivial character mod sqrt5 is odd at each place but even in total") {
    QuadField F = QuadField::real_quadratic(5);
    FracIdeal P = primes_above(F, 5).at(0);
    auto G = RayClassData::build(F, P, 1);
    auto chars = characters_of(G);
    REQUIRE(chars.size() == 2);
    const HeckeChar& chi = chars[1];
    CHECK(chi.order() == 2);
    CHECK(chi.infinity_sign(0) == -1);
    CHECK(chi.infinity_sign(1) == -1);
    // total value on (-1) is the product of the per-place signs
    CHECK(chi.value_ideal(FracIdeal::principal(FieldElt(F, Rational(-1)))) == CycloElt(Rational(1)));
    // matched parity happens at odd k only, despite the even total
    CHECK_FALSE(chi.parity_matches(2));
    CHECK(chi.parity_matches(3));
    CHECK_FALSE(chi.parity_matches(4));
}

TEST_CASE("split prime norms are handled in the equivalence test over Q(sqrt2)") {
    QuadField F = QuadField::real_quadratic(2);
    auto Ps = primes_above(F, 7);
    REQUIRE(Ps.size() == 2);
    FracIdeal P = Ps[0];      // [7, 3+omega]
    FracIdeal Pbar = Ps[1];   // [7, 4+omega] = (5+3omega)

    auto G = RayClassData::build(F, P, 1);
    CHECK(G->order() == 2);
    CHECK(G->eps_plus_order() == 3);
    CHECK(G->reps()[1] == primes_above(F, 2).at(0));  // the ramified (sqrt2)

    // Pbar has norm 7 = 0 mod 7, forcing the raised-modulus branch
    CHECK(G->class_of(Pbar) == 1);
    CHECK(G->equivalent(Pbar * rational_prime(F, 8), Pbar));
    CHECK_FALSE(G->equivalent(rational_prime(F, 8), Pbar));

    // fractional inverse of Pbar sits in the inverse class
    CHECK(G->class_of(Pbar.inverse()) == G->inv(1));
}

TEST_CASE("character algebra: products, powers, conjugates") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    auto chars = characters_of(G);
    for (const auto& chi : chars) {
        HeckeChar prod = chi * chi.conjugate();
        CHECK(prod.is_trivial());
        CHECK(chi.power(static_cast<long>(chi.order())).is_trivial());
        CHECK(chi.power(-1).value(2) == chi.conjugate().value(2));
    }
    // column orthogonality at a nontrivial class
    CycloElt s(Rational(0));
    for (const auto& chi : chars) s = s + chi.value(1);
    CHECK(s.is_zero());
}

TEST_CASE("modulus validation rejects non-prime ideals and non-integral arguments") {
    QuadField Q = QuadField::rationals();
    CHECK_THROWS_AS(RayClassData::build(Q, rational_prime(Q, 6), 1), std::invalid_argument);
    CHECK_THROWS_AS(RayClassData::build(Q, rational_prime(Q, 4), 1), std::invalid_argument);

    QuadField F = QuadField::real_quadratic(5);
    FracIdeal P = primes_above(F, 5).at(0);
    auto G = RayClassData::build(F, P, 1);
    CHECK_THROWS_AS(G->class_of(P * rational_prime(F, 2)), std::invalid_argument);
    CHECK_THROWS_AS(G->equivalent(P.inverse(), P), std::invalid_argument);
    CHECK_THROWS_AS(RayClassData::build(Q, rational_prime(Q, 5), 0)->class_of_residue(FieldElt(Q, Rational(2))),
                    std::logic_error);
}
