#pragma once

#include <variant>

#include "qfx/places.hpp"

namespace qfx {

// A verified witness set: for every norm-admissible square class alpha of
// E_f, a polynomial g coprime to f with g + (f) in alpha times squares and
// f a square mod g, of degree at most floor(3 deg(f)/2).
struct SqRefCertificate {
    Poly f;
    std::vector<std::pair<Poly, Poly>> entries;  // (class representative, witness g)
};

// A norm-admissible class with no witness up to the degree bound; sound as
// a refutation by the bounded-search characterization.  Never produced over
// the base fields in scope.
struct SqRefRefutation {
    Poly f;
    Poly alpha;
};

using CertifyResult = std::variant<SqRefCertificate, SqRefRefutation>;

inline int sqref_degree_bound(int n) { return (3 * n) / 2; }

// whether f is a square modulo g, decided on the radical of g (a unit is a
// square mod p^e iff it is mod p, odd characteristic); g a unit gives true
bool is_square_mod(const Poly& f, const Poly& g);  // NotCoprime

// deterministic minimal witness for one class by the bounded exhaustive
// search (degree ascending, then canonical coefficient order), or absent
std::optional<Poly> check_pair(const Poly& f, const Poly& alpha);

struct CertifyOptions {
    bool exhaustive_only = false;
};

CertifyResult certify(const Poly& f, const CertifyOptions& opts = {});

bool verify_certificate(const SqRefCertificate& cert);

// monic irreducible q = g0 (mod f) of the requested degree parity, degree
// at most degree_cap; exhaustive over small candidate spaces, seeded
// sampling otherwise.  CapExceeded signals the cap, not nonexistence.
Poly kornblum_find(const Poly& f, const Poly& g0, int degree_parity, int degree_cap);

// g with ramify(f, g) = rho, for square-free f with Supp(rho) inside
// Supp(f) + infinity and rho_infinity in {0, {lc f}}.  Fast path via a
// Kornblum irreducible (unit-adjusted to match the class at infinity);
// exhaustive fallback over deg(g) <= floor(deg(f)/2), which is complete.
Poly realize_ramification(const RamSeq& rho, const Poly& f);
// UnsupportedSupport, BadInfinityClass, NotSquareFree

// CRT interpolation of the class witnesses of rho on Supp(f): g coprime to
// f, deg(g) < deg(f), with Supp(rho - ramify(f,g)) inside Supp(g) + infinity
Poly ram_reduce(const RamSeq& rho, const Poly& f);  // UnsupportedSupport, NotSquareFree

// monic square-free g* with deg(g*) < deg(f), deg(g*) = deg(f)-1 mod 2 and
// g g* a square modulo f; first such in degree-ascending canonical order
Poly bezout_reduce(const Poly& f, const Poly& g);
// DegreeTooSmall, NotCoprime, NotMonic, NotSquareFree

}  // namespace qfx
