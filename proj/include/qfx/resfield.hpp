#pragma once

#include "qfx/poly.hpp"

namespace qfx {

// The residue field E_p = E[X]/(p) of a monic irreducible p, with elements
// kept as reduced polynomials over E.  Avoids flattening towers: square
// tests, square roots and norms to E only need exponentiation mod p.
class ResidueField {
public:
    explicit ResidueField(Poly p);

    const Field& base() const { return p_.field(); }
    const Poly& modulus() const { return p_; }
    int degree() const { return p_.deg(); }
    u128 order() const { return order_; }

    Poly zero() const { return Poly::zero(base()); }
    Poly one() const { return Poly::one(base()); }
    Poly reduce(const Poly& a) const { return a % p_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % p_; }
    Poly pow(const Poly& a, u128 e) const { return powmod(a, e, p_); }
    Poly inv(const Poly& a) const { return invmod(a, p_); }

    // canonical element enumeration: coefficient sequences (a_0, ..., a_{d-1})
    // in lexicographic order, matching the base-field convention
    Poly nth_element(u128 n) const;

    bool is_square(const Poly& a) const;  // ZeroInput on a = 0 mod p
    Poly canonical_nonsquare() const;
    Poly sqrt(const Poly& a) const;  // NotASquare; least root in element order

    Fq norm_to_base(const Poly& a) const;  // N_{E_p/E}

    // class of N_{E_p/E}(a) in k_1 E; true means non-square
    bool norm_class_nontrivial(const Poly& a) const;

private:
    u128 elem_ordinal(const Poly& a) const;

    Poly p_;
    u128 order_;
};

}  // namespace qfx
