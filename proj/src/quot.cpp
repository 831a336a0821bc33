#include "qfx/quot.hpp"

namespace qfx {

QuotAlg::QuotAlg(Poly f) : f_(std::move(f)) {
    check(!f_.is_zero(), "ZeroPolynomial", "quotient by the zero ideal");
    lc_ = f_.lc();
    monic_f_ = f_.monic();
    if (!zero_ring()) {
        fact_ = factor(monic_f_);
        squarefree_ = true;
        for (const auto& [p, e] : fact_.factors) {
            if (e > 1) squarefree_ = false;
            comps_.emplace_back(p);
        }
    } else {
        fact_ = Factorization{base()->one(), {}};
        squarefree_ = true;  // units are square-free by the convention
    }
}

void QuotAlg::require_squarefree() const {
    check(squarefree_, "NotSquareFree", "operation needs a square-free defining polynomial");
}

Poly QuotAlg::reduce(const Poly& a) const {
    if (zero_ring()) return Poly::zero(base());
    return a % monic_f_;
}

bool QuotAlg::is_unit(const Poly& a) const {
    if (zero_ring()) return true;  // zero ring: single element, trivially a unit of it
    return gcd(a, monic_f_).is_constant() && !reduce(a).is_zero();
}

Fq QuotAlg::norm(const Poly& a) const {
    check(!zero_ring(), "ZeroRing", "norm is undefined on the zero ring");
    Poly r = reduce(a);
    check(is_unit(r), "NonInvertible", "norm of a non-invertible element");
    return resultant(monic_f_, r);
}

std::vector<bool> QuotAlg::square_class(const Poly& a) const {
    require_squarefree();
    check(is_unit(a), "NonInvertible", "square class of a non-invertible element");
    std::vector<bool> out;
    out.reserve(comps_.size());
    for (const auto& comp : comps_) out.push_back(comp.is_square(a));
    return out;
}

bool QuotAlg::same_square_class(const Poly& a, const Poly& b) const {
    require_squarefree();
    check(is_unit(a) && is_unit(b), "NonInvertible", "square class of a non-invertible element");
    for (const auto& comp : comps_)
        if (comp.is_square(a) != comp.is_square(b)) return false;
    return true;
}

std::vector<Poly> QuotAlg::square_class_reps() const {
    require_squarefree();
    if (zero_ring()) return {};
    size_t r = comps_.size();
    std::vector<std::pair<Poly, Poly>> congruences;
    congruences.reserve(r);
    for (const auto& comp : comps_) congruences.emplace_back(comp.modulus(), comp.one());
    std::vector<Poly> reps;
    reps.reserve(size_t{1} << r);
    for (uint64_t mask = 0; mask < (uint64_t{1} << r); ++mask) {
        for (size_t i = 0; i < r; ++i)
            congruences[i].second = (mask >> i) & 1 ? comps_[i].canonical_nonsquare() : comps_[i].one();
        reps.push_back(crt(base(), congruences));
    }
    return reps;
}

std::vector<Poly> QuotAlg::norm_condition_filter(const std::vector<Poly>& reps) const {
    std::vector<Poly> out;
    for (const Poly& alpha : reps) {
        Fq n = norm(alpha);
        if (is_square(n) || is_square(n * lc_.inv())) out.push_back(alpha);
    }
    return out;
}

}  // namespace qfx
