#pragma once

#include "qfx/resfield.hpp"

namespace qfx {

// The quotient algebra E_f = E[X]/(f).  Elements are reduced polynomial
// representatives; the factorization of the monic associate is computed once
// at construction.  Values are immutable and safe to share.
class QuotAlg {
public:
    explicit QuotAlg(Poly f);  // f != 0 (ZeroPolynomial)

    const Field& base() const { return f_.field(); }
    const Poly& f() const { return f_; }
    const Poly& monic_f() const { return monic_f_; }
    const Fq& leading_coeff() const { return lc_; }
    const Factorization& factorization() const { return fact_; }
    int dim() const { return f_.deg(); }
    bool squarefree() const { return squarefree_; }
    bool zero_ring() const { return f_.is_constant(); }

    // residue fields of the distinct irreducible factors, in canonical
    // place order (degree, then coefficients)
    const std::vector<ResidueField>& components() const { return comps_; }

    Poly reduce(const Poly& a) const;
    Poly theta() const { return reduce(Poly::X(base())); }
    bool is_unit(const Poly& a) const;

    // N_{E_f/E} as Res(monic_f, rep); multiplicative.  NonInvertible.
    Fq norm(const Poly& a) const;

    // per-component square test of a unit; requires f square-free
    std::vector<bool> square_class(const Poly& a) const;

    // whether a and b generate the same square class (a*b a square in E_f)
    bool same_square_class(const Poly& a, const Poly& b) const;

    // 2^r representatives built by CRT from {1, canonical nonsquare} per
    // component; the first is 1.  Requires f square-free.
    std::vector<Poly> square_class_reps() const;

    // subset with N(alpha) in squares union lc(f)*squares
    std::vector<Poly> norm_condition_filter(const std::vector<Poly>& reps) const;

private:
    void require_squarefree() const;

    Poly f_, monic_f_;
    Fq lc_;
    Factorization fact_;
    bool squarefree_;
    std::vector<ResidueField> comps_;
};

}  // namespace qfx
