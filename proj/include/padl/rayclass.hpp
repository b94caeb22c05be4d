#pragma once

#include "padl/cyclotomic.hpp"
#include "padl/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace padl {

// Strict ray class group of modulus P^level * (all real places): fractional
// ideals prime to P modulo principal ideals with a totally positive generator
// congruent to 1 multiplicatively mod P^level.  Built by enumerating integral
// ideals of increasing norm and classifying them with the exact equivalence
// test below until the group order, known in advance from
//
//   |G| = h+ * |(O/P^level)^*| / ord(eps+ mod P^level),
//
// is reached.  Class 0 is always the identity (the unit ideal).
class RayClassData {
public:
    static std::shared_ptr<const RayClassData> build(const QuadField& F, const FracIdeal& prime, unsigned level);

    const QuadField& field() const { return F_; }
    const FracIdeal& prime_ideal() const { return prime_; }
    unsigned level() const { return level_; }
    unsigned order() const { return static_cast<unsigned>(reps_.size()); }
    unsigned identity() const { return 0; }
    const std::vector<FracIdeal>& reps() const { return reps_; }
    unsigned mul(unsigned i, unsigned j) const { return mul_[i][j]; }
    unsigned inv(unsigned i) const { return inv_[i]; }

    // I ~ J when I conj(J) has a totally positive generator congruent to
    // N(J) multiplicatively mod P^level; both arguments integral and prime
    // to P.  The unit sweep runs over +-eps^t for a full residue-and-sign
    // cycle, and the modulus is raised by the P-valuation of N(J) so split
    // primes dividing the norm are handled exactly.
    bool equivalent(const FracIdeal& I, const FracIdeal& J) const;
    // any fractional ideal, prime to P when the level is positive
    unsigned class_of(const FracIdeal& I) const;
    // class of (alpha) for a totally positive lift alpha of the unit residue
    // x mod P^level; level >= 1
    unsigned class_of_residue(const FieldElt& x) const;
    // x plus the first nonnegative integer multiple of the rational generator
    // of P^level /\ Z that makes the sum totally positive
    FieldElt totally_positive_lift(const FieldElt& x) const;

    // element congruent to 1 mod P^level and negative exactly at one place
    const FieldElt& sign_flip_elt(unsigned place) const { return flip_elts_.at(place); }
    unsigned sign_flip_class(unsigned place) const { return flip_classes_.at(place); }

    const ResidueRing& ring() const;  // level >= 1

    // cyclic decomposition G = <b_1> x ... x <b_r>, orders descending under
    // divisibility; coords(j) are the exponents of class j on that basis
    const std::vector<unsigned>& basis_class() const { return basis_class_; }
    const std::vector<unsigned>& basis_order() const { return basis_order_; }
    const std::vector<unsigned>& coords(unsigned j) const { return coords_[j]; }

    const FieldElt& eps_plus() const { return eps_plus_; }
    unsigned eps_plus_order() const { return eps_order_; }  // ord(eps+ mod P^level)

    // memoized weight-k cone sums: every character sum against the same
    // group reuses one table, so repeated L-value calls stay cheap
    std::optional<std::vector<Rational>> cached_zeta_table(unsigned k) const;
    const std::vector<Rational>& store_zeta_table(unsigned k, std::vector<Rational> table) const;

private:
    RayClassData(const QuadField& F, const FracIdeal& prime, unsigned level);
    void enumerate_classes();
    void build_tables();
    void decompose();
    void find_sign_flips();
    std::vector<FieldElt> unit_sweep(unsigned modulus_exponent) const;
    unsigned class_of_integral(const FracIdeal& I) const;

    QuadField F_;
    FracIdeal prime_;
    unsigned level_;
    FieldElt eps_plus_;
    unsigned eps_order_ = 1;
    unsigned expected_ = 0;
    Integer p_power_ = 1;  // positive generator of P^level /\ Z
    std::unique_ptr<ResidueRing> ring_;
    std::vector<FracIdeal> reps_;
    std::map<Integer, unsigned> residue_class_;  // degree 1: residue mod p^level -> class
    std::vector<std::vector<unsigned>> mul_;
    std::vector<unsigned> inv_;
    std::vector<unsigned> basis_class_, basis_order_;
    std::vector<std::vector<unsigned>> coords_;
    std::vector<FieldElt> flip_elts_;
    std::vector<unsigned> flip_classes_;
    mutable std::mutex sweep_mutex_;
    mutable std::map<unsigned, std::vector<FieldElt>> sweep_cache_;
    mutable std::mutex zeta_mutex_;
    mutable std::map<unsigned, std::vector<Rational>> zeta_cache_;
};

using RayClassPtr = std::shared_ptr<const RayClassData>;

// Character of a strict ray class group, stored by its value (a root of
// unity) on every class.
class HeckeChar {
public:
    HeckeChar(RayClassPtr G, std::vector<CycloElt> values, std::string name);

    const RayClassData& group() const { return *G_; }
    const RayClassPtr& group_ptr() const { return G_; }
    const std::string& name() const { return name_; }
    const CycloElt& value(unsigned cls) const { return values_.at(cls); }
    CycloElt value_ideal(const FracIdeal& I) const { return values_.at(G_->class_of(I)); }
    CycloElt value_residue(const FieldElt& x) const { return values_.at(G_->class_of_residue(x)); }

    unsigned order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    HeckeChar conjugate() const;
    HeckeChar power(long e) const;
    HeckeChar operator*(const HeckeChar& o) const;

    // chi_v(-1): value at the class of a sign flip element, +1 or -1
    int infinity_sign(unsigned place) const;
    // chi_v(-1) = (-1)^k at every real place
    bool parity_matches(unsigned k) const;

private:
    RayClassPtr G_;
    std::vector<CycloElt> values_;
    std::string name_;
    unsigned order_;
};

// all |G| characters, trivial first, in mixed-radix order over the basis
std::vector<HeckeChar> characters_of(const RayClassPtr& G);

// smallest level m' <= level such that chi factors through the group of
// modulus P^m' * infinity
unsigned conductor_exponent(const HeckeChar& chi);
// the character on the conductor-level group that induces chi
HeckeChar primitive_avatar(const HeckeChar& chi);

}  // namespace padl
