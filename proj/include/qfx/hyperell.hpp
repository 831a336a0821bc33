#pragma once

#include "qfx/resfield.hpp"

namespace qfx {

// A point of odd degree on the affine curve Y^2 = f(X): the minimal
// polynomial p of the x-coordinate and a y with y^2 = f(x) in E_p
// (y = 0 when p divides f).
struct OddPoint {
    int degree;
    Poly p;
    Poly y;
};

// scan odd degrees d = 1, 3, ... <= degree_cap over monic irreducibles in
// canonical order; first hit.  ConstantPolynomial, NotSquareFree.
std::optional<OddPoint> odd_point_search(const Poly& f, int degree_cap);

struct MinOddDegreeResult {
    std::optional<OddPoint> point;
    int cap_used;
    bool complete;  // absence up to the cap proves absence everywhere
};

// Exhaustive search up to the relevant bound: deg(f)/2 when deg(f) is even
// and lc(f) is a non-square (complete by the halving argument), deg(f)
// otherwise.
MinOddDegreeResult min_odd_degree(const Poly& f);

// y^2 = f(x) holds in E_p
bool verify_odd_point(const Poly& f, const OddPoint& pt);

}  // namespace qfx
