#include "qfx/resfield.hpp"

namespace qfx {

ResidueField::ResidueField(Poly p) : p_(std::move(p)) {
    check(p_.deg() >= 1 && p_.is_monic(), "BadModulus", "residue field needs a monic nonconstant modulus");
    order_ = 1;
    for (int i = 0; i < p_.deg(); ++i) order_ *= base()->q();
}

Poly ResidueField::nth_element(u128 n) const {
    int d = degree();
    uint64_t q = base()->q();
    std::vector<Fq> c(static_cast<size_t>(d), base()->zero());
    u128 weight = order_ / q;  // weight of a_0, the most significant digit
    for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = base()->element(static_cast<uint64_t>(n / weight));
        n %= weight;
        if (weight > 1) weight /= q;
    }
    return Poly::from_coeffs(base(), std::move(c));
}

u128 ResidueField::elem_ordinal(const Poly& a) const {
    u128 n = 0;
    for (int i = 0; i < degree(); ++i) n = n * base()->q() + a.coeff(i).index();
    return n;
}

bool ResidueField::is_square(const Poly& a) const {
    Poly r = reduce(a);
    check(!r.is_zero(), "ZeroInput", "square test needs a unit of the residue field");
    return pow(r, (order_ - 1) / 2).is_one();
}

Poly ResidueField::canonical_nonsquare() const {
    for (u128 n = 1; n < order_; ++n) {
        Poly x = nth_element(n);
        if (!is_square(x)) return x;
    }
    throw consistency_failure("no non-square in an odd-order residue field");
}

Poly ResidueField::sqrt(const Poly& a) const {
    Poly x = reduce(a);
    check(!x.is_zero() && is_square(x), "NotASquare", "element has no square root in the residue field");
    u128 m = order_ - 1;
    unsigned s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    Poly r = pow(x, (m + 1) / 2);
    if (s > 1) {
        Poly c = pow(canonical_nonsquare(), m);
        Poly t = pow(x, m);
        unsigned e = s;
        while (!t.is_one()) {
            Poly t2 = t;
            unsigned i = 0;
            while (!t2.is_one()) {
                t2 = mul(t2, t2);
                ++i;
            }
            Poly b = c;
            for (unsigned j = 0; j + i + 1 < e; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            t = mul(t, c);
            e = i;
        }
    }
    internal_check(mul(r, r) == x, "residue-field square root verification failed");
    Poly other = reduce(-r);
    return elem_ordinal(r) <= elem_ordinal(other) ? r : other;
}

Fq ResidueField::norm_to_base(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero()) return base()->zero();
    u128 e = (order_ - 1) / (base()->q() - 1);
    Poly n = pow(r, e);
    internal_check(n.is_constant(), "norm did not land in the base field");
    return n.coeff(0);
}

bool ResidueField::norm_class_nontrivial(const Poly& a) const {
    Fq n = norm_to_base(a);
    check(!n.is_zero(), "ZeroInput", "norm class of a non-unit");
    return !qfx::is_square(n);
}

}  // namespace qfx
