#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "padl/measures.hpp"

using namespace padl;

namespace {

RayClassPtr group_Q(unsigned level) {
    QuadField Q = QuadField::rationals();
    FracIdeal P = FracIdeal::principal(FieldElt(Q, Rational(5)));
    return RayClassData::build(Q, P, level);
}

RayClassPtr group_F5(unsigned level) {
    QuadField F = QuadField::real_quadratic(5);
    FracIdeal P = primes_above(F, Integer(5))[0];
    return RayClassData::build(F, P, level);
}

FracIdeal ideal_two(const QuadField& F) { return FracIdeal::principal(FieldElt(F, Rational(2))); }

unsigned class_order(const RayClassPtr& G, unsigned c) {
    unsigned n = 1, cur = c;
    while (cur != G->identity()) {
        cur = G->mul(cur, c);
        ++n;
    }
    return n;
}

// total mass of each level-m class under the coarser level-1 grouping
std::vector<CycloElt> push_to_level_one(const RayClassPtr& G1, const RayClassPtr& Gm,
                                        const std::vector<CycloElt>& masses) {
    std::vector<CycloElt> push(G1->order());
    for (unsigned C = 0; C < Gm->order(); ++C) push[G1->class_of(Gm->reps()[C])] += masses[C];
    return push;
}

CycloElt i_basis(const Rational& re, const Rational& im) { return CycloElt(4, {re, im}); }

}  // namespace

TEST_CASE("weight-k cells integrate to reciprocal L-values over Q") {
    auto G1 = group_Q(1);
    auto chars = characters_of(G1);
    REQUIRE(chars.size() == 4);

    Distribution d2 = build_lambda(G1, 2);
    CHECK(d2.weight == 2);
    CHECK(d2.haar_cell == Rational(25, 8));
    REQUIRE(d2.values.size() == 4);
    CHECK(d2.values[0] == CycloElt(Rational(-3)));
    CHECK(d2.values[1] == CycloElt(Rational(-7, 4)));
    CHECK(d2.values[2] == CycloElt(Rational(-7, 4)));
    CHECK(d2.values[3] == CycloElt(Rational(-3)));
    CHECK(d2.cell_class == std::vector<unsigned>{0, 1, 2, 3});

    // even weight pairs with the even characters; the odd rows vanish
    CHECK(interpolation_applicable(chars[0], 2));
    CHECK(!interpolation_applicable(chars[1], 2));
    CHECK(integrate_character(d2, chars[0], true) == CycloElt(Rational(3)));
    CHECK(integrate_character(d2, chars[0], true) == interpolation_target(chars[0], 2));
    CHECK(integrate_character(d2, chars[1], true) == CycloElt());
    CHECK(integrate_character(d2, chars[2], true) == CycloElt(Rational(-5, 2)));
    CHECK(integrate_character(d2, chars[2], true) == interpolation_target(chars[2], 2));
    CHECK(integrate_character(d2, chars[3], true) == CycloElt());

    Distribution d3 = build_lambda(G1, 3);
    CHECK(d3.haar_cell == Rational(0));
    CHECK(!interpolation_applicable(chars[0], 3));
    CHECK(interpolation_applicable(chars[1], 3));
    CHECK(integrate_character(d3, chars[0], true) == CycloElt());
    CHECK(integrate_character(d3, chars[1], true) == i_basis(Rational(-1), Rational(1, 2)));
    CHECK(integrate_character(d3, chars[1], true) == interpolation_target(chars[1], 3));
    CHECK(integrate_character(d3, chars[2], true) == CycloElt());
    CHECK(integrate_character(d3, chars[3], true) == i_basis(Rational(-1), Rational(-1, 2)));

    Distribution d4 = build_lambda(G1, 4);
    CHECK(d4.haar_cell == Rational(-78125, 3224));
    CHECK(integrate_character(d4, chars[0], true) == CycloElt(Rational(-30, 31)));
    CHECK(integrate_character(d4, chars[0], true) == interpolation_target(chars[0], 4));
    CHECK(integrate_character(d4, chars[2], true) == CycloElt(Rational(1, 2)));

    Distribution d5 = build_lambda(G1, 5);
    CHECK(d5.haar_cell == Rational(0));
    CHECK(integrate_character(d5, chars[1], true) == i_basis(Rational(37, 293), Rational(-43, 586)));
    CHECK(integrate_character(d5, chars[1], true) == interpolation_target(chars[1], 5));
    CHECK(integrate_character(d5, chars[3], true) == i_basis(Rational(37, 293), Rational(43, 586)));
}

TEST_CASE("cell masses refine consistently across levels over Q") {
    auto G1 = group_Q(1);
    auto G2 = group_Q(2);
    auto m1 = class_masses(build_lambda(G1, 2));
    auto m2 = class_masses(build_lambda(G2, 2));
    auto push = push_to_level_one(G1, G2, m2);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == CycloElt(Rational(1, 8)));
    CHECK(m1[1] == CycloElt(Rational(11, 8)));
    CHECK(m1[2] == CycloElt(Rational(11, 8)));
    CHECK(m1[3] == CycloElt(Rational(1, 8)));
    for (unsigned C = 0; C < G1->order(); ++C) CHECK(push[C] == m1[C]);
}

TEST_CASE("weight-k cells over the real quadratic field") {
    auto G1 = group_F5(1);
    auto chars = characters_of(G1);
    REQUIRE(chars.size() == 2);
    CHECK(G1->eps_plus_order() == 2);

    Distribution d2 = build_lambda(G1, 2);
    CHECK(d2.haar_cell == Rational(-125, 16));
    CHECK(integrate_character(d2, chars[0], true) == CycloElt(Rational(-15, 2)));
    CHECK(integrate_character(d2, chars[0], true) == interpolation_target(chars[0], 2));
    CHECK(integrate_character(d2, chars[1], true) == CycloElt());

    Distribution d3 = build_lambda(G1, 3);
    CHECK(d3.haar_cell == Rational(0));
    CHECK(integrate_character(d3, chars[0], true) == CycloElt());
    CHECK(integrate_character(d3, chars[1], true) == CycloElt(Rational(5, 4)));
    CHECK(integrate_character(d3, chars[1], true) == interpolation_target(chars[1], 3));

    Distribution d4 = build_lambda(G1, 4);
    CHECK(d4.haar_cell == Rational(-78125, 6448));
    CHECK(integrate_character(d4, chars[0], true) == CycloElt(Rational(-15, 31)));
    CHECK(integrate_character(d4, chars[0], true) == interpolation_target(chars[0], 4));

    // total mass equals the trivial-character integral
    CycloElt total;
    for (const auto& m : class_masses(d2)) total += m;
    CHECK(total == CycloElt(Rational(-15, 2)));

    auto G2 = group_F5(2);
    auto m1 = class_masses(d2);
    auto push = push_to_level_one(G1, G2, class_masses(build_lambda(G2, 2)));
    CHECK(m1[0] == CycloElt(Rational(-15, 4)));
    CHECK(m1[1] == CycloElt(Rational(-15, 4)));
    for (unsigned C = 0; C < G1->order(); ++C) CHECK(push[C] == m1[C]);
}

TEST_CASE("smoothed measure class values, pushforward, and grid over Q") {
    auto G1 = group_Q(1);
    auto G2 = group_Q(2);
    FracIdeal c = ideal_two(G1->field());

    auto mu1 = mu_class_values(G1, c);
    REQUIRE(mu1.size() == 4);
    CHECK(mu1[0] == Rational(1, 2));
    CHECK(mu1[1] == Rational(-1, 2));
    CHECK(mu1[2] == Rational(1, 2));
    CHECK(mu1[3] == Rational(-1, 2));

    // the refinement is p-integral and pushes forward to the coarse level
    auto mu2 = mu_class_values(G2, c);
    std::vector<Rational> push(G1->order(), Rational(0));
    for (unsigned C = 0; C < G2->order(); ++C) {
        CHECK(mu2[C].get_den() % 5 != 0);
        push[G1->class_of(G2->reps()[C])] += mu2[C];
    }
    for (unsigned C = 0; C < G1->order(); ++C) CHECK(push[C] == mu1[C]);

    auto chars = characters_of(G1);
    CHECK(dr_moment(chars[0], 2, c) == CycloElt(Rational(-1)));

    // Fourier inversion: summing chi against the class values returns the moment
    for (const auto& chi : chars) {
        CycloElt s;
        for (unsigned C = 0; C < G1->order(); ++C) s += chi.value(C) * CycloElt(mu1[C]);
        CHECK(s == dr_moment(chi, 1, c));
    }

    Distribution grid = build_mu1c(G1, c);
    CHECK(grid.weight == 1);
    CHECK(grid.haar_cell == Rational(0));
    auto masses = class_masses(grid);
    for (unsigned C = 0; C < G1->order(); ++C) CHECK(masses[C] == CycloElt(mu1[C]));
}

TEST_CASE("finite-level Riemann sums match moments to level precision") {
    QuadField Q = QuadField::rationals();
    FracIdeal c = ideal_two(Q);
    for (unsigned m : {1u, 2u}) {
        auto Gm = group_Q(m);
        for (const auto& chi : characters_of(Gm)) {
            // the sums take values in Z_p, so only characters landing in
            // mu_{p-1} participate
            if (4 % chi.order() != 0) continue;
            for (unsigned k : {1u, 2u, 3u}) {
                PadicInt rs = dr_moment_riemann(Gm, c, chi, k, 12);
                PadicInt ex = embed_cyclo(dr_moment(chi, k, c), 5, 12);
                if (k == 1) {
                    CHECK(rs == ex);
                } else {
                    PadicInt diff = rs - ex;
                    CHECK((diff.is_zero() || diff.valuation() >= m));
                }
            }
        }
    }

    // sharper frozen samples: the defect of the level-m sum for the k-th
    // moment sits at valuation exactly m (k = 2) and 2m (k = 3) here
    auto G1 = group_Q(1);
    auto chars1 = characters_of(G1);
    CHECK((dr_moment_riemann(G1, c, chars1[1], 2, 12) - embed_cyclo(dr_moment(chars1[1], 2, c), 5, 12))
              .valuation() == 1);
    auto G2 = group_Q(2);
    auto chars2 = characters_of(G2);
    CHECK(chars2[5].order() == 4);
    CHECK((dr_moment_riemann(G2, c, chars2[5], 3, 12) - embed_cyclo(dr_moment(chars2[5], 3, c), 5, 12))
              .valuation() == 4);
}

TEST_CASE("smoothed measure over the real quadratic field") {
    auto G1 = group_F5(1);
    auto G2 = group_F5(2);
    FracIdeal c = ideal_two(G1->field());

    auto mu1 = mu_class_values(G1, c);
    REQUIRE(mu1.size() == 2);
    CHECK(mu1[0] == Rational(1));
    CHECK(mu1[1] == Rational(-1));

    auto mu2 = mu_class_values(G2, c);
    std::vector<Rational> push(G1->order(), Rational(0));
    for (unsigned C = 0; C < G2->order(); ++C) {
        CHECK(mu2[C].get_den() % 5 != 0);
        push[G1->class_of(G2->reps()[C])] += mu2[C];
    }
    for (unsigned C = 0; C < G1->order(); ++C) CHECK(push[C] == mu1[C]);

    for (const auto& chi : characters_of(G1)) {
        CycloElt s;
        for (unsigned C = 0; C < G1->order(); ++C) s += chi.value(C) * CycloElt(mu1[C]);
        CHECK(s == dr_moment(chi, 1, c));
        for (unsigned k : {1u, 2u, 3u}) {
            PadicInt rs = dr_moment_riemann(G1, c, chi, k, 12);
            PadicInt ex = embed_cyclo(dr_moment(chi, k, c), 5, 12);
            if (k == 1) {
                CHECK(rs == ex);
            } else {
                PadicInt diff = rs - ex;
                CHECK((diff.is_zero() || diff.valuation() >= 1));
            }
        }
    }
}

TEST_CASE("twisted integrals equal regularized inverse moments") {
    auto G1 = group_Q(1);
    FracIdeal c = ideal_two(G1->field());
    auto chars = characters_of(G1);
    for (unsigned k : {2u, 3u, 4u}) {
        Distribution d = build_lambda(G1, k);
        for (const auto& chi : chars) CHECK(integrate_character(d, chi, true) == mu_star_moment(chi, k, c));
    }

    auto H1 = group_F5(1);
    FracIdeal c5 = ideal_two(H1->field());
    auto hchars = characters_of(H1);
    for (unsigned k : {2u, 3u}) {
        Distribution d = build_lambda(H1, k);
        for (const auto& chi : hchars) CHECK(integrate_character(d, chi, true) == mu_star_moment(chi, k, c5));
    }

    // frozen samples of the inverse moments themselves
    CHECK(mu_star_moment(chars[2], 2, c) == CycloElt(Rational(-5, 2)));
    CHECK(mu_star_moment(chars[1], 3, c) == i_basis(Rational(-1), Rational(1, 2)));
    CHECK(mu_star_moment(chars[1], 2, c) == CycloElt());
}

TEST_CASE("Teichmuller branches split and reassemble the measure") {
    auto G3 = group_Q(3);
    FracIdeal c = ideal_two(G3->field());
    REQUIRE(G3->order() == 100);

    unsigned q = omega_order(G3);
    CHECK(q == 4);
    auto delta = delta_component(G3);
    CHECK(std::set<unsigned>(delta.begin(), delta.end()).size() == 4);

    unsigned gam = gamma_class_index(G3);
    CHECK(gam == G3->class_of(FracIdeal::principal(FieldElt(G3->field(), Rational(6)))));
    CHECK(class_order(G3, gam) == 25);

    auto mu = mu_class_values(G3, c);
    std::vector<CycloElt> masses(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) masses[i] = CycloElt(mu[i]);

    // mass(C) = (1/q) sum_i B_i(C)
    std::vector<CycloElt> reasm(G3->order());
    std::vector<std::vector<CycloElt>> branches;
    for (unsigned i = 0; i < q; ++i) {
        branches.push_back(omega_branch(masses, G3, i));
        for (unsigned C = 0; C < G3->order(); ++C) reasm[C] += branches[i][C];
    }
    CycloElt invq(Rational(1, 4ul));
    for (unsigned C = 0; C < G3->order(); ++C) CHECK(invq * reasm[C] == masses[C]);

    // a character pairs to zero with every branch but the one matching its
    // Teichmuller restriction; even characters die with their branch
    auto chars = characters_of(G3);
    auto pairing = [&](const HeckeChar& chi, unsigned i) {
        CycloElt s;
        for (unsigned C = 0; C < G3->order(); ++C) s += chi.value(C) * branches[i][C];
        return s;
    };
    CHECK(chars[1].order() == 100);
    CHECK(pairing(chars[1], 0) == CycloElt());
    CHECK(pairing(chars[1], 1) == CycloElt());
    CHECK(pairing(chars[1], 2) == CycloElt());
    CHECK(!(pairing(chars[1], 3) == CycloElt()));
    CHECK(chars[3].order() == 100);
    CHECK(!(pairing(chars[3], 1) == CycloElt()));
    CHECK(pairing(chars[3], 3) == CycloElt());
    CHECK(chars[2].order() == 50);
    for (unsigned i = 0; i < q; ++i) CHECK(pairing(chars[2], i) == CycloElt());

    // Delta-invariant masses live entirely in branch 0, scaled by |Delta|
    std::vector<CycloElt> flat(G3->order(), CycloElt(Rational(1)));
    auto B0 = omega_branch(flat, G3, 0);
    for (const auto& v : B0) CHECK(v == CycloElt(Rational(4)));
    for (unsigned i = 1; i < q; ++i)
        for (const auto& v : omega_branch(flat, G3, i)) CHECK(v == CycloElt());
}

TEST_CASE("live branch series invert with unit constant terms") {
    auto G3 = group_Q(3);
    FracIdeal c = ideal_two(G3->field());
    unsigned q = omega_order(G3);
    unsigned gam = gamma_class_index(G3);

    auto mu = mu_class_values(G3, c);
    std::vector<CycloElt> masses(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) masses[i] = CycloElt(mu[i]);
    auto wv = omega_values(G3);
    auto icls = mu_inverse_classes(G3, c);

    std::vector<PadicInt> frozen_ct = {PadicInt(5, 6, Integer(0)), PadicInt(5, 6, Integer(14558)),
                                       PadicInt(5, 6, Integer(0)), PadicInt(5, 6, Integer(1069))};
    for (unsigned i = 0; i < q; ++i) {
        IwasawaSeries f = to_iwasawa_series(omega_branch(masses, G3, i), G3, gam, 6, 8);
        CHECK(f.coeffs[0] == frozen_ct[i]);

        std::vector<CycloElt> chiv(G3->order());
        for (unsigned C = 0; C < G3->order(); ++C) chiv[C] = pow(wv[C].conj(), static_cast<long>(i));
        HeckeChar wchi(G3, chiv, "w^-" + std::to_string(i));
        CycloElt mom = dr_moment(wchi, 1, c);
        if (i % 2 == 0) {
            CHECK(mom == CycloElt());
            CHECK(!f.coeffs[0].is_unit());
            continue;
        }
        // the constant term is the first moment of the branch
        CHECK(mom == i_basis(Rational(1), i == 1 ? Rational(1) : Rational(-1)));
        CHECK(embed_cyclo(mom, 5, 6) == f.coeffs[0]);
        CHECK(f.coeffs[0].is_unit());

        IwasawaSeries g = series_invert(f);
        IwasawaSeries h = convolve(f, g);
        CHECK(h.coeffs[0] == PadicInt(5, 6, Integer(1)));
        for (unsigned j = 1; j < h.truncation; ++j) CHECK(h.coeffs[j].is_zero());

        // the reciprocal measure's branch convolves to 1 up to the relation
        // ideal of the finite level, so the tail is divisible by p
        IwasawaSeries fr = to_iwasawa_series(omega_branch(icls, G3, i), G3, gam, 6, 8);
        CHECK(fr.coeffs[0] * f.coeffs[0] == PadicInt(5, 6, Integer(1)));
        IwasawaSeries conv = convolve(fr, f);
        CHECK(conv.coeffs[0] == PadicInt(5, 6, Integer(1)));
        for (unsigned j = 1; j < conv.truncation; ++j)
            CHECK((conv.coeffs[j].is_zero() || conv.coeffs[j].valuation() >= 1));
    }

    // point masses transcribe to monomials in 1 + T
    std::vector<CycloElt> pt(G3->order());
    pt[G3->identity()] = CycloElt(Rational(1));
    IwasawaSeries f1 = to_iwasawa_series(pt, G3, gam, 6, 8);
    CHECK(f1.coeffs[0] == PadicInt(5, 6, Integer(1)));
    for (unsigned j = 1; j < 8; ++j) CHECK(f1.coeffs[j].is_zero());
    std::vector<CycloElt> pt2(G3->order());
    pt2[gam] = CycloElt(Rational(1));
    IwasawaSeries f2 = to_iwasawa_series(pt2, G3, gam, 6, 8);
    CHECK(f2.coeffs[0] == PadicInt(5, 6, Integer(1)));
    CHECK(f2.coeffs[1] == PadicInt(5, 6, Integer(1)));
    for (unsigned j = 2; j < 8; ++j) CHECK(f2.coeffs[j].is_zero());

    // invert(1 + pT) is the geometric series in -pT
    IwasawaSeries lin{5, 6, 8, std::vector<PadicInt>(8, PadicInt(5, 6, Integer(0)))};
    lin.coeffs[0] = PadicInt(5, 6, Integer(1));
    lin.coeffs[1] = PadicInt(5, 6, Integer(5));
    IwasawaSeries linv = series_invert(lin);
    Integer pw(1);
    for (unsigned j = 0; j < 8; ++j) {
        CHECK(linv.coeffs[j] == PadicInt(5, 6, pw));
        pw *= Integer(-5);
    }
}

TEST_CASE("seven-adic branch decomposition") {
    QuadField Q = QuadField::rationals();
    FracIdeal P7 = primes_above(Q, Integer(7))[0];
    FracIdeal c = FracIdeal::principal(FieldElt(Q, Rational(3)));
    auto K2 = RayClassData::build(Q, P7, 2);
    REQUIRE(K2->order() == 42);
    unsigned q = omega_order(K2);
    CHECK(q == 6);
    auto delta = delta_component(K2);
    CHECK(std::set<unsigned>(delta.begin(), delta.end()).size() == 6);

    unsigned gam = gamma_class_index(K2);
    CHECK(gam == K2->class_of(FracIdeal::principal(FieldElt(Q, Rational(8)))));
    CHECK(class_order(K2, gam) == 7);

    auto mu = mu_class_values(K2, c);
    std::vector<CycloElt> masses(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) {
        CHECK(mu[i].get_den() % 7 != 0);
        masses[i] = CycloElt(mu[i]);
    }
    auto wv = omega_values(K2);
    auto icls = mu_inverse_classes(K2, c);

    std::vector<Integer> frozen_ct = {Integer(0),     Integer(69936), Integer(0),
                                      Integer(4),     Integer(0),     Integer(47715)};
    for (unsigned i = 0; i < q; ++i) {
        IwasawaSeries f = to_iwasawa_series(omega_branch(masses, K2, i), K2, gam, 6, 6);
        CHECK(f.coeffs[0] == PadicInt(7, 6, frozen_ct[i]));
        std::vector<CycloElt> chiv(K2->order());
        for (unsigned C = 0; C < K2->order(); ++C) chiv[C] = pow(wv[C].conj(), static_cast<long>(i));
        HeckeChar wchi(K2, chiv, "w^-" + std::to_string(i));
        CycloElt mom = dr_moment(wchi, 1, c);
        if (i % 2 == 0) {
            CHECK(mom == CycloElt());
            continue;
        }
        CHECK(embed_cyclo(mom, 7, 6) == f.coeffs[0]);
        IwasawaSeries fr = to_iwasawa_series(omega_branch(icls, K2, i), K2, gam, 6, 6);
        CHECK(fr.coeffs[0] * f.coeffs[0] == PadicInt(7, 6, Integer(1)));
    }
}

TEST_CASE("degenerate inputs are refused") {
    auto G0 = group_Q(0);
    auto G1 = group_Q(1);
    auto G2 = group_Q(2);
    CHECK_THROWS_AS(build_lambda(G0, 2), std::invalid_argument);

    // a character of one group cannot integrate a distribution on another
    Distribution d = build_lambda(G1, 2);
    auto chars2 = characters_of(G2);
    CHECK_THROWS_AS(integrate_character(d, chars2[0]), std::invalid_argument);

    // nontrivial imprimitive characters have no clean interpolation target
    bool found = false;
    for (const auto& chi : chars2) {
        if (chi.is_trivial() || conductor_exponent(chi) != 1 || !chi.parity_matches(2)) continue;
        CHECK_THROWS_AS(interpolation_target(chi, 2), std::invalid_argument);
        found = true;
        break;
    }
    CHECK(found);

    // parity mismatch means the L-value vanishes
    auto chars1 = characters_of(G1);
    CHECK_THROWS_AS(interpolation_target(chars1[2], 3), std::domain_error);
    CHECK_THROWS_AS(interpolation_target(chars1[0], 3), std::domain_error);

    IwasawaSeries f{5, 4, 3, {PadicInt(5, 4, Integer(5)), PadicInt(5, 4, Integer(1)), PadicInt(5, 4, Integer(0))}};
    CHECK_THROWS_AS(series_invert(f), std::domain_error);
    IwasawaSeries g{7, 4, 3, {PadicInt(7, 4, Integer(1)), PadicInt(7, 4, Integer(0)), PadicInt(7, 4, Integer(0))}};
    CHECK_THROWS_AS(convolve(f, g), std::invalid_argument);

    CHECK_THROWS_AS(to_iwasawa_series(std::vector<CycloElt>(3), G1, 0, 4, 4), std::invalid_argument);

    // omega over F5 is quadratic; over a split prime there is no omega at all
    CHECK(omega_order(group_F5(1)) == 2);
    QuadField F2 = QuadField::real_quadratic(2);
    FracIdeal P7s = primes_above(F2, Integer(7))[0];
    auto S2 = RayClassData::build(F2, P7s, 2);
    CHECK_THROWS_AS(omega_values(S2), std::domain_error);
}
