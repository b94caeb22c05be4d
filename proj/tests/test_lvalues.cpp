#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padl/lvalues.hpp"

#include <cmath>

using namespace padl;

namespace {

FracIdeal rational_prime(const QuadField& F, long p) {
    return FracIdeal::principal(FieldElt(F, Rational(p)));
}

// sqrt(5) = z5 - z5^2 - z5^3 + z5^4 inside the fifth cyclotomic field
CycloElt cyclo_sqrt5() {
    CycloElt z = CycloElt::root_of_unity(5, 1);
    return z - pow(z, 2) - pow(z, 3) + pow(z, 4);
}

}  // namespace

TEST_CASE("dedekind zeta values at negative integers") {
    QuadField Q = QuadField::rationals();
    CHECK(dedekind_zeta_neg(Q, 2) == Rational(-1, 12));
    CHECK(dedekind_zeta_neg(Q, 4) == Rational(1, 120));

    QuadField F5 = QuadField::real_quadratic(5);
    CHECK(dedekind_zeta_neg(F5, 1) == Rational(0));
    CHECK(dedekind_zeta_neg(F5, 2) == Rational(1, 30));
    CHECK(dedekind_zeta_neg(F5, 3) == Rational(0));
    CHECK(dedekind_zeta_neg(F5, 4) == Rational(1, 60));

    QuadField F2 = QuadField::real_quadratic(2);
    CHECK(dedekind_zeta_neg(F2, 2) == Rational(1, 12));
}

TEST_CASE("partial zeta values over Q reduce to Hurwitz zeta values") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);

    // zeta(-1, a mod 5) = -5 B_2(a/5) / 2
    CHECK(partial_zeta_neg(*G, G->class_of_residue(FieldElt(Q, Rational(1))), 2) == Rational(-1, 60));
    CHECK(partial_zeta_neg(*G, G->class_of_residue(FieldElt(Q, Rational(2))), 2) == Rational(11, 60));
    CHECK(partial_zeta_neg(*G, G->class_of_residue(FieldElt(Q, Rational(3))), 2) == Rational(11, 60));
    CHECK(partial_zeta_neg(*G, G->class_of_residue(FieldElt(Q, Rational(4))), 2) == Rational(-1, 60));

    CHECK_THROWS_AS(partial_zeta_neg(*G, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(partial_zeta_neg(*G, 99, 2), std::invalid_argument);
}

TEST_CASE("hecke L-values over Q mod 5") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    auto chars = characters_of(G);
    REQUIRE(chars.size() == 4);

    // the trivial character recovers zeta with the 5-Euler factor removed
    CHECK(hecke_L_neg(chars[0], 2) == CycloElt(Rational(1, 3)));

    // quadratic character: L(-1) = -B_2/2 with B_2 = 4/5
    const HeckeChar* quad = nullptr;
    for (const auto& chi : chars)
        if (chi.order() == 2) quad = &chi;
    REQUIRE(quad != nullptr);
    CHECK(hecke_L_neg(*quad, 2) == CycloElt(Rational(-2, 5)));
    CHECK(hecke_L_neg(*quad, 1).is_zero());   // even character, odd k
    CHECK(hecke_L_neg(*quad, 3).is_zero());

    // the two odd quartic characters: L(0, chi) L(0, chibar) = (3+i)(3-i)/25
    CycloElt prod(Rational(1));
    for (const auto& chi : chars)
        if (chi.order() == 4) prod = prod * hecke_L_neg(chi, 1);
    CHECK(prod == CycloElt(Rational(2, 5)));
}

TEST_CASE("partial zeta and L-values over real quadratic fields") {
    QuadField F5 = QuadField::real_quadratic(5);
    FracIdeal P = FracIdeal::principal(FieldElt(F5, Rational(-1), Rational(2)));  // (sqrt 5)
    auto G = RayClassData::build(F5, P, 1);
    REQUIRE(G->order() == 2);
    auto chars = characters_of(G);

    CHECK(partial_zeta_neg(*G, G->identity(), 1) == Rational(1, 5));
    CHECK(partial_zeta_neg(*G, 1 - G->identity(), 1) == Rational(-1, 5));

    // trivial character: (1 - Np^{k-1}) zeta_K(1-k)
    CHECK(hecke_L_neg(chars[0], 2) == CycloElt(Rational(-2, 15)));
    CHECK(hecke_L_neg(chars[0], 4) == CycloElt(Rational(-31, 15)));

    // the nontrivial character is odd at both places
    CHECK(chars[1].infinity_sign(0) == -1);
    CHECK(chars[1].infinity_sign(1) == -1);
    CHECK(hecke_L_neg(chars[1], 1) == CycloElt(Rational(2, 5)));
    CHECK(hecke_L_neg(chars[1], 3) == CycloElt(Rational(4, 5)));
    CHECK(hecke_L_neg(chars[1], 2).is_zero());
    CHECK(hecke_L_neg(chars[1], 4).is_zero());

    // mixed-parity characters vanish at every negative integer
    QuadField F2 = QuadField::real_quadratic(2);
    FracIdeal P7 = primes_above(F2, Integer(7)).at(0);
    auto G7 = RayClassData::build(F2, P7, 1);
    auto chars7 = characters_of(G7);
    REQUIRE(G7->order() == 2);
    CHECK(hecke_L_neg(chars7[0], 2) == CycloElt(Rational(-1, 2)));
    CHECK(chars7[1].infinity_sign(0) != chars7[1].infinity_sign(1));
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK_FALSE(chars7[1].parity_matches(k));
        CHECK(hecke_L_neg(chars7[1], k).is_zero());
    }
}

TEST_CASE("parallel partial zeta tables agree with the serial reference") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 2);
    CHECK(partial_zeta_table(*G, 2) == partial_zeta_table_serial(*G, 2));

    QuadField F5 = QuadField::real_quadratic(5);
    FracIdeal P = FracIdeal::principal(FieldElt(F5, Rational(-1), Rational(2)));
    auto G5 = RayClassData::build(F5, P, 1);
    CHECK(partial_zeta_table(*G5, 3) == partial_zeta_table_serial(*G5, 3));
}

TEST_CASE("additive character data") {
    QuadField Q = QuadField::rationals();
    FracIdeal P5 = rational_prime(Q, 5);
    CHECK(residue_characteristic(P5) == 5);
    CHECK(additive_character_base(Q, P5, 1) == FieldElt(Q, Rational(5)));
    CHECK(additive_character_exponent(FieldElt(Q, Rational(3)), FieldElt(Q, Rational(5)), Integer(5)) == 3);

    QuadField F5 = QuadField::real_quadratic(5);
    FracIdeal P = FracIdeal::principal(FieldElt(F5, Rational(-1), Rational(2)));
    CHECK(residue_characteristic(P) == 5);
    // pi = 2 + w generates (sqrt 5) = the different, so the base is (2+w)^2 = 5 + 5w
    CHECK(additive_character_base(F5, P, 1) == FieldElt(F5, Rational(5), Rational(5)));
    CHECK(additive_character_exponent(FieldElt(F5, Rational(1)), FieldElt(F5, Rational(5), Rational(5)), Integer(5)) ==
          3);

    QuadField F2 = QuadField::real_quadratic(2);
    FracIdeal P7 = primes_above(F2, Integer(7)).at(0);
    CHECK(residue_characteristic(P7) == 7);
}

TEST_CASE("gauss sums at the conductor") {
    QuadField Q = QuadField::rationals();
    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    auto chars = characters_of(G);

    CHECK(gauss_sum(chars[0]) == CycloElt(Rational(1)));  // unramified

    const HeckeChar* quad = nullptr;
    for (const auto& chi : chars)
        if (chi.order() == 2) quad = &chi;
    REQUIRE(quad != nullptr);
    CHECK(gauss_sum(*quad) == cyclo_sqrt5());

    // tau(chi) tau(chi^{-1}) = chi(-1) N(cond) for every primitive character
    auto check_tau_product = [](const HeckeChar& chi) {
        CycloElt prod = gauss_sum(chi) * gauss_sum(chi.power(-1));
        long sign = 1;
        for (unsigned v = 0; v < chi.group().field().degree; ++v) sign *= chi.infinity_sign(v);
        HeckeChar prim = primitive_avatar(chi);
        Rational ncond = prim.group().prime_ideal().pow(static_cast<long>(prim.group().level())).norm();
        CHECK(prod == CycloElt(Rational(sign) * ncond));
    };
    for (const auto& chi : chars) check_tau_product(chi);

    auto G2 = RayClassData::build(Q, rational_prime(Q, 5), 2);
    for (const auto& chi : characters_of(G2)) check_tau_product(chi);

    QuadField F5 = QuadField::real_quadratic(5);
    FracIdeal P = FracIdeal::principal(FieldElt(F5, Rational(-1), Rational(2)));
    auto G5 = RayClassData::build(F5, P, 1);
    for (const auto& chi : characters_of(G5)) check_tau_product(chi);
}

TEST_CASE("level sums match primitive L-values for characters of smaller conductor") {
    QuadField Q = QuadField::rationals();
    auto G2 = RayClassData::build(Q, rational_prime(Q, 5), 2);
    bool found = false;
    for (const auto& chi : characters_of(G2)) {
        if (chi.is_trivial() || conductor_exponent(chi) != 1 || !chi.parity_matches(2)) continue;
        found = true;
        HeckeChar prim = primitive_avatar(chi);
        CHECK(hecke_L_neg(chi, 2) == hecke_L_neg(prim, 2));
        CHECK(hecke_L_neg(chi, 2) == CycloElt(Rational(-2, 5)));
    }
    CHECK(found);
}

TEST_CASE("reciprocal L-values") {
    QuadField Q = QuadField::rationals();
    auto G0 = RayClassData::build(Q, rational_prime(Q, 5), 0);
    auto triv0 = characters_of(G0).at(0);
    CHECK(reciprocal_L_at_k(triv0, 2) == CycloElt(Rational(-12)));

    auto G = RayClassData::build(Q, rational_prime(Q, 5), 1);
    auto chars = characters_of(G);
    CHECK(reciprocal_L_at_k(chars[0], 2) == CycloElt(Rational(-25, 2)));

    const HeckeChar* quad = nullptr;
    for (const auto& chi : chars)
        if (chi.order() == 2) quad = &chi;
    REQUIRE(quad != nullptr);
    CHECK(reciprocal_L_at_k(*quad, 2) == CycloElt(Rational(-25, 2)) * cyclo_sqrt5());
    CHECK_THROWS_AS(reciprocal_L_at_k(*quad, 3), std::domain_error);
    CHECK_THROWS_AS(reciprocal_L_at_k(chars[0], 3), std::domain_error);

    // degree 2, totally odd quadratic character at k = 3:
    // the formula collapses to N(p)^{2(k-1)} tau(chi) / L(-2, chi) = 25 tau / (4/5)
    QuadField F5 = QuadField::real_quadratic(5);
    FracIdeal P = FracIdeal::principal(FieldElt(F5, Rational(-1), Rational(2)));
    auto G5 = RayClassData::build(F5, P, 1);
    auto chi5 = characters_of(G5).at(1);
    CHECK(reciprocal_L_at_k(chi5, 3) == CycloElt(Rational(125, 4)) * gauss_sum(chi5));
    CHECK_THROWS_AS(reciprocal_L_at_k(chi5, 2), std::domain_error);
}

TEST_CASE("numeric dedekind zeta at 2 matches the functional equation transfer") {
    const double PI = 3.14159265358979323846;

    QuadField F5 = QuadField::real_quadratic(5);
    double z5 = dedekind_zeta2_numeric(F5, 100000);
    double fe5 = 4.0 * std::pow(PI, 4) * (1.0 / 30.0) / (5.0 * std::sqrt(5.0));
    CHECK(std::abs(z5 - fe5) < 1e-6);
    CHECK(z5 == dedekind_zeta2_numeric_serial(F5, 100000));

    QuadField F2 = QuadField::real_quadratic(2);
    double z2 = dedekind_zeta2_numeric(F2, 100000);
    double fe2 = 4.0 * std::pow(PI, 4) * (1.0 / 12.0) / (8.0 * std::sqrt(8.0));
    CHECK(std::abs(z2 - fe2) < 1e-6);
}
