#include "qfx/hyperell.hpp"

namespace qfx {

std::optional<OddPoint> odd_point_search(const Poly& f, int degree_cap) {
    check(f.deg() >= 1, "ConstantPolynomial", "the curve needs a nonconstant polynomial");
    check(is_squarefree(f), "NotSquareFree", "the curve needs a square-free polynomial");
    const Field& field = f.field();
    for (int d = 1; d <= degree_cap; d += 2) {
        for (const Poly& p : monic_irreducibles(field, d)) {
            Poly r = f % p;
            if (r.is_zero()) return OddPoint{d, p, Poly::zero(field)};
            ResidueField comp(p);
            if (comp.is_square(r)) return OddPoint{d, p, comp.sqrt(r)};
        }
    }
    return std::nullopt;
}

MinOddDegreeResult min_odd_degree(const Poly& f) {
    check(f.deg() >= 1, "ConstantPolynomial", "the curve needs a nonconstant polynomial");
    check(is_squarefree(f), "NotSquareFree", "the curve needs a square-free polynomial");
    bool halving = f.deg() % 2 == 0 && !is_square(f.lc());
    int cap = halving ? f.deg() / 2 : f.deg();
    return MinOddDegreeResult{odd_point_search(f, cap), cap, halving};
}

bool verify_odd_point(const Poly& f, const OddPoint& pt) {
    if (pt.p.deg() != pt.degree || pt.degree % 2 == 0) return false;
    return (pt.y * pt.y - f) % pt.p == Poly::zero(f.field());
}

}  // namespace qfx
