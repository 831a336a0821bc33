#pragma once

#include <map>
#include <optional>

#include "qfx/quot.hpp"

namespace qfx {

// A closed point of the projective line over E: a monic irreducible
// polynomial, or the degree valuation at infinity.
class Place {
public:
    static Place finite(Poly p);            // validates monic irreducible
    static Place infinity(const Field& f);

    bool is_infinity() const { return !p_.has_value(); }
    const Poly& poly() const;
    const Field& field() const { return field_; }
    int degree() const { return p_ ? p_->deg() : 1; }
    std::string str() const { return p_ ? p_->str() : "inf"; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }

private:
    Place(Field f, std::optional<Poly> p) : field_(std::move(f)), p_(std::move(p)) {}

    Field field_;
    std::optional<Poly> p_;
};

// canonical place order: degree, then coefficients; infinity last
bool place_less(const Place& a, const Place& b);

struct PlaceLess {
    bool operator()(const Place& a, const Place& b) const { return place_less(a, b); }
};

// Reduced fraction num/den with monic denominator; num = 0 forces den = 1.
class RatFunc {
public:
    static RatFunc of(Poly num, Poly den);
    static RatFunc of(Poly num);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator*(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_, den_;
};

// An element of k_1 E_p: one bit plus the canonical witness (1 or the
// canonical non-square of the residue field, constant at infinity).
struct SquareClass {
    Place place;
    bool nontrivial;
    Poly witness;
};

// integer valuation; ZeroFunction on r = 0
int valuation(const Place& place, const RatFunc& r);

// the residue of a unit at the place, as a reduced polynomial (an element
// of E_p; constant for the infinite place); NonUnitAtPlace
Poly residue(const Place& place, const RatFunc& r);

// is the given residue-field element a square at this place
bool square_at(const Place& place, const Poly& residue_value);
Poly canonical_nonsquare_at(const Place& place);

// tame symbol: class of (-1)^{v(f)v(g)} f^{-v(g)} g^{v(f)} at the place
SquareClass tame_symbol(const Place& place, const RatFunc& f, const RatFunc& g);

// A ramification sequence: finitely many nontrivial k_1 E_p classes whose
// summed norms vanish; over the fields in scope that is exactly the
// evenness of the support (Hilbert reciprocity).
class RamSeq {
public:
    explicit RamSeq(Field field) : field_(std::move(field)) {}

    // validated construction from user input: trivial entries dropped,
    // witnesses canonicalized, evenness enforced (InvalidRamSeq)
    static RamSeq from_entries(const Field& field, const std::vector<SquareClass>& entries);

    const Field& field() const { return field_; }
    const std::map<Place, SquareClass, PlaceLess>& entries() const { return entries_; }
    size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::vector<Place> support() const;
    bool nontrivial_at(const Place& p) const { return entries_.count(p) > 0; }
    bool is_valid() const { return entries_.size() % 2 == 0; }

    // pointwise class addition (each k_1 E_p has order two)
    RamSeq operator+(const RamSeq& o) const;
    bool operator==(const RamSeq& o) const;
    bool operator!=(const RamSeq& o) const { return !(*this == o); }

    RamSeq restricted_to_finite() const;

    // unchecked insert of a nontrivial class; used by the internal builders
    void insert_nontrivial(const Place& p);

private:
    Field field_;
    std::map<Place, SquareClass, PlaceLess> entries_;
};

// ramification of the symbol {f, g}: tame symbols over every place where
// either argument is not a unit, plus infinity; zero classes dropped.
// The evenness of the support is asserted, not checked.
RamSeq ramify(const RatFunc& f, const RatFunc& g);
RamSeq ramify(const Poly& f, const Poly& g);

// class in k_1 E
struct K1Class {
    bool nontrivial;
    Fq witness;

    bool operator==(const K1Class& o) const { return nontrivial == o.nontrivial; }
};

// summed norms N_{E_p/E} over the entries; trivial iff the support has
// even size over the fields in scope
K1Class nmap(const RamSeq& rho);

K1Class k1_class_of(const Fq& x);  // ZeroInput on 0

// the class at infinity of rho (trivial when absent)
K1Class infinity_class(const RamSeq& rho);

}  // namespace qfx
