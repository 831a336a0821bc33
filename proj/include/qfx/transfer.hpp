#pragma once

#include "qfx/quot.hpp"

namespace qfx {

using GramMatrix = std::vector<std::vector<Fq>>;

// The n-1 quadratic forms on E_f x E cut out by the coordinate functionals
// s_1, ..., s_{n-1} of the power basis (1, theta, ..., theta^{n-1}):
//   q_1(x, z) = s_1(g(theta) x^2) - z^2,   q_i(x, z) = s_i(g(theta) x^2).
// Gram matrices are (n+1) x (n+1); the z-coordinate sits at index n.
struct QuadSystem {
    Poly f, g;
    int n;
    std::vector<GramMatrix> grams;

    const Field& field() const { return f.field(); }
};

QuadSystem build_system(const Poly& f, const Poly& g);  // NotSeparable, NotCoprime, DegreeTooSmall

int gram_rank(const GramMatrix& m);

// every nonzero linear combination of the Gram matrices has rank >= 3;
// checked over all projective combinations
bool pencil_rank_check(const QuadSystem& sys);

struct ProjPoint {
    std::vector<Fq> coords;  // n+1 coordinates over the extension, first nonzero = 1
    bool affine;             // z-coordinate nonzero
    bool norm_nonzero;       // N(x-part) != 0
};

struct PointEnumResult {
    std::vector<ProjPoint> solutions;  // all projective solutions of the system
    uint64_t points_c;                 // affine solutions with nonvanishing norm
};

// full projective enumeration over F_{q^m}; BudgetExceeded when the point
// count of P^n exceeds the budget
PointEnumResult point_enum(const QuadSystem& sys, int ext_degree, uint64_t budget);

struct EquivalenceReport {
    bool lhs;  // the curve has a point over the extension
    bool rhs;  // some a with (X-a) g a square mod f and f(a) != 0
    bool agree;
    std::optional<Fq> witness_a;  // over the extension field
};

// both sides computed independently; disagreement is a fatal consistency
// error
EquivalenceReport equivalence_check(const Poly& f, const Poly& g, int ext_degree, uint64_t budget);

// least a in E with theta - a in alpha * squares, per square class rep
struct RealisationEntry {
    Poly rep;
    std::optional<Fq> a;
};
std::vector<RealisationEntry> linear_realisation_scan(const Poly& f);  // NotSeparable

}  // namespace qfx
