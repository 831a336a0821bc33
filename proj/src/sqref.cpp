#include "qfx/sqref.hpp"

namespace qfx {

namespace {

constexpr uint64_t kKornblumExhaust = 8192;  // enumerate fully below this
constexpr int kKornblumTrials = 4000;        // sampled candidates otherwise

// monic irreducible q = g0 (mod monic_f) of exact degree m, or absent.
// g0 must be reduced; candidates of degree >= deg(f) are g0 + monic_f * h
// with h monic.  Deterministic: full enumeration in canonical order when
// the space is small, otherwise sampling from rng.
std::optional<Poly> monic_irreducible_in_class(const Poly& monic_f, const Poly& g0, int m, Rng& rng) {
    const Field& field = monic_f.field();
    int n = monic_f.deg();
    if (m < 1) return std::nullopt;
    if (m < n) {
        if (g0.deg() == m && g0.is_monic() && (m == 1 || is_irreducible(g0))) return g0;
        return std::nullopt;
    }
    uint64_t count = 1;
    bool overflow = false;
    for (int i = 0; i < m - n; ++i) {
        count *= field->q();
        if (count > kKornblumExhaust) {
            overflow = true;
            break;
        }
    }
    if (!overflow && count <= kKornblumExhaust) {
        for (uint64_t ord = 0; ord < count; ++ord) {
            Poly q = g0 + monic_f * nth_monic_of_degree(field, m - n, ord);
            if (m == 1 || is_irreducible(q)) return q;
        }
        return std::nullopt;
    }
    for (int trial = 0; trial < kKornblumTrials; ++trial) {
        Poly q = g0 + monic_f * random_monic_poly(field, m - n, rng);
        if (is_irreducible(q)) return q;
    }
    return std::nullopt;
}

// unit c'' with class(c''^n) = sigma, when one exists
std::optional<Fq> unit_adjustment(const Field& field, int n, bool sigma) {
    if (n % 2 == 0) {
        if (sigma) return std::nullopt;
        return field->one();
    }
    return sigma ? canonical_nonsquare(field) : field->one();
}

// class of (-1)^{n m} lc^m in k_1 E
bool infinity_sign_class(const Fq& lc, int n, int m) {
    Fq v = lc.field()->one();
    if ((n * m) % 2 == 1) v = -v;
    if (m % 2 == 1) v = v * lc;
    return !is_square(v);
}

bool entry_conditions_hold(const QuotAlg& A, const Poly& alpha, const Poly& g) {
    if (!gcd(A.monic_f(), g).is_constant()) return false;
    if (!A.same_square_class(g, alpha)) return false;
    return is_square_mod(A.f(), g);
}

// Kornblum-backed witness for one class, bounded by the certificate degree
// bound: g = c'' q with q monic irreducible, c'' q = alpha exactly in E_f,
// and deg(q) parity matching the forced class at infinity.  Hilbert
// reciprocity then makes f a square mod q.
std::optional<Poly> kornblum_witness(const QuotAlg& A, const Poly& alpha, Rng& rng) {
    int n = A.dim();
    int cap = sqref_degree_bound(n);
    bool tau = !is_square(A.norm(alpha));  // the class at infinity, forced
    for (int m = 1; m <= cap; ++m) {
        bool sigma = tau ^ infinity_sign_class(A.leading_coeff(), n, m);
        auto cpp = unit_adjustment(A.base(), n, sigma);
        if (!cpp) continue;
        Poly g0 = A.reduce(alpha * Poly::constant(cpp->inv()));
        auto q = monic_irreducible_in_class(A.monic_f(), g0, m, rng);
        if (!q) continue;
        Poly g = *q * Poly::constant(*cpp);
        internal_check(entry_conditions_hold(A, alpha, g), "Kornblum witness failed verification");
        return g;
    }
    return std::nullopt;
}

std::optional<Poly> check_pair_impl(const QuotAlg& A, const Poly& alpha) {
    const Field& field = A.base();
    int bound = sqref_degree_bound(A.dim());
    for (int d = 0; d <= bound; ++d) {
        uint64_t count = count_polys_of_degree(field, d);
        for (uint64_t ord = 0; ord < count; ++ord) {
            Poly g = nth_poly_of_degree(field, d, ord);
            if (!gcd(A.monic_f(), g).is_constant()) continue;
            if (!A.same_square_class(g, alpha)) continue;
            if (!is_square_mod(A.f(), g)) continue;
            return g;
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_square_mod(const Poly& f, const Poly& g) {
    check(!g.is_zero(), "ZeroPolynomial", "modulus is zero");
    check(gcd(f, g).is_constant(), "NotCoprime", "square test mod a non-coprime polynomial");
    if (g.is_constant()) return true;  // zero ring
    for (const auto& [p, e] : factor(g).factors) {
        ResidueField comp(p);
        if (!comp.is_square(f % p)) return false;
    }
    return true;
}

std::optional<Poly> check_pair(const Poly& f, const Poly& alpha) {
    QuotAlg A(f);
    check(A.squarefree(), "NotSquareFree", "check_pair needs a square-free polynomial");
    check(A.is_unit(alpha), "NonInvertible", "class representative is not a unit");
    return check_pair_impl(A, alpha);
}

CertifyResult certify(const Poly& f, const CertifyOptions& opts) {
    check(!f.is_zero(), "ZeroPolynomial", "cannot certify the zero polynomial");
    check(is_squarefree(f), "NotSquareFree", "certify needs a square-free polynomial");
    SqRefCertificate cert{f, {}};
    if (f.is_constant()) return cert;  // vacuous quantifier over the zero ring

    QuotAlg A(f);
    Rng rng(mix_seed(global_seed(), poly_hash(f)));
    std::vector<Poly> reps = A.norm_condition_filter(A.square_class_reps());
    for (const Poly& alpha : reps) {
        std::optional<Poly> witness;
        if (!opts.exhaustive_only) {
            // unit witnesses first: the square condition is vacuous for them
            for (uint64_t i = 1; i < A.base()->q() && !witness; ++i) {
                Poly g = Poly::constant(A.base()->element(i));
                if (A.same_square_class(g, alpha)) witness = g;
            }
            if (!witness) witness = kornblum_witness(A, alpha, rng);
        }
        if (!witness) witness = check_pair_impl(A, alpha);
        if (!witness) return SqRefRefutation{f, alpha};
        cert.entries.emplace_back(alpha, *witness);
    }
    internal_check(verify_certificate(cert), "emitted certificate failed re-verification");
    return cert;
}

bool verify_certificate(const SqRefCertificate& cert) {
    if (cert.f.is_zero() || !is_squarefree(cert.f)) return false;
    if (cert.f.is_constant()) return cert.entries.empty();
    QuotAlg A(cert.f);
    std::vector<Poly> reps = A.norm_condition_filter(A.square_class_reps());
    if (reps.size() != cert.entries.size()) return false;
    int bound = sqref_degree_bound(A.dim());
    for (size_t i = 0; i < reps.size(); ++i) {
        const auto& [alpha, g] = cert.entries[i];
        if (alpha != reps[i]) return false;
        if (g.is_zero() || g.deg() > bound) return false;
        if (!entry_conditions_hold(A, alpha, g)) return false;
    }
    return true;
}

Poly kornblum_find(const Poly& f, const Poly& g0, int degree_parity, int degree_cap) {
    check(!f.is_zero() && !g0.is_zero(), "ZeroPolynomial", "Kornblum search needs nonzero inputs");
    check(gcd(f, g0).is_constant(), "NotCoprime", "residue class not coprime to the modulus");
    const Field& field = f.field();
    Rng rng(mix_seed(global_seed(), poly_hash(f) ^ poly_hash(g0) ^ static_cast<uint64_t>(degree_parity)));
    for (int m = 1; m <= degree_cap; ++m) {
        if (m % 2 != degree_parity % 2) continue;
        std::optional<Poly> q;
        if (f.is_constant()) {
            // the zero ring: every monic irreducible matches the class
            for (uint64_t ord = 0; ord < count_polys_of_degree(field, m) / (field->q() - 1) && !q; ++ord) {
                Poly cand = nth_monic_of_degree(field, m, ord);
                if (m == 1 || is_irreducible(cand)) q = cand;
            }
        } else {
            q = monic_irreducible_in_class(f.monic(), g0 % f.monic(), m, rng);
        }
        if (q) return *q;
    }
    throw error("CapExceeded", "no irreducible found up to the degree cap (cap too small, not nonexistence)");
}

Poly realize_ramification(const RamSeq& rho, const Poly& f) {
    check(!f.is_zero(), "ZeroPolynomial", "realization needs a nonzero polynomial");
    check(is_squarefree(f), "NotSquareFree", "realization needs a square-free polynomial");
    const Field& field = f.field();
    QuotAlg A(f);
    for (const auto& [p, cls] : rho.entries()) {
        if (p.is_infinity()) {
            check(!is_square(f.lc()), "BadInfinityClass",
                  "class at infinity must be 0 or {lc(f)}, and lc(f) is a square");
        } else {
            check(divides(p.poly(), A.monic_f()), "UnsupportedSupport",
                  "support of rho must lie in Supp(f) + infinity");
        }
    }
    if (rho.empty()) return Poly::one(field);

    // the class vector on Supp(f), as an exact element of E_f
    std::vector<std::pair<Poly, Poly>> congruences;
    for (const auto& comp : A.components()) {
        bool nt = rho.nontrivial_at(Place::finite(comp.modulus()));
        congruences.emplace_back(comp.modulus(), nt ? comp.canonical_nonsquare() : comp.one());
    }
    Poly alpha = crt(field, congruences);
    bool tau = rho.nontrivial_at(Place::infinity(field));

    int n = f.deg();
    Rng rng(mix_seed(global_seed(), poly_hash(f) ^ 0x9a11u));
    int max_cap = (n + 4) * 8;  // base cap n+4, doubled over four retries
    if (n >= 1) {
        for (int m = 1; m <= max_cap; ++m) {
            bool sigma = tau ^ infinity_sign_class(f.lc(), n, m);
            auto cpp = unit_adjustment(field, n, sigma);
            if (!cpp) continue;
            Poly g0 = A.reduce(alpha * Poly::constant(cpp->inv()));
            auto q = monic_irreducible_in_class(A.monic_f(), g0, m, rng);
            if (!q) continue;
            Poly g = *q * Poly::constant(*cpp);
            internal_check(ramify(f, g) == rho, "Kornblum realization failed the round trip");
            return g;
        }
    }
    // complete fallback: a realizing g, when one exists, exists in degree
    // at most floor(deg(f)/2)
    for (int d = 0; d <= n / 2; ++d) {
        uint64_t count = count_polys_of_degree(field, d);
        for (uint64_t ord = 0; ord < count; ++ord) {
            Poly g = nth_poly_of_degree(field, d, ord);
            if (ramify(f, g) == rho) return g;
        }
    }
    throw consistency_failure("valid ramification sequence admitted no realization");
}

Poly ram_reduce(const RamSeq& rho, const Poly& f) {
    check(!f.is_zero(), "ZeroPolynomial", "reduction needs a nonzero polynomial");
    check(is_squarefree(f), "NotSquareFree", "reduction needs a square-free polynomial");
    const Field& field = f.field();
    QuotAlg A(f);
    for (const auto& [p, cls] : rho.entries())
        check(p.is_infinity() || divides(p.poly(), A.monic_f()), "UnsupportedSupport",
              "support of rho must lie in Supp(f) + infinity");
    if (f.is_constant()) return Poly::one(field);
    std::vector<std::pair<Poly, Poly>> congruences;
    for (const auto& comp : A.components()) {
        bool nt = rho.nontrivial_at(Place::finite(comp.modulus()));
        congruences.emplace_back(comp.modulus(), nt ? comp.canonical_nonsquare() : comp.one());
    }
    Poly g = crt(field, congruences);
    if (g.is_zero()) g = Poly::one(field);
    RamSeq diff = rho + ramify(f, g);
    for (const auto& [p, cls] : diff.entries())
        internal_check(p.is_infinity() || divides(p.poly(), g),
                       "support did not shrink into Supp(g) + infinity");
    return g;
}

Poly bezout_reduce(const Poly& f, const Poly& g) {
    check(f.deg() >= 2, "DegreeTooSmall", "reduction needs deg(f) >= 2");
    check(f.is_monic(), "NotMonic", "reduction needs a monic polynomial");
    check(is_squarefree(f), "NotSquareFree", "reduction needs a square-free polynomial");
    check(gcd(f, g).is_constant(), "NotCoprime", "inputs must be coprime");
    const Field& field = f.field();
    QuotAlg A(f);
    int n = f.deg();
    for (int d = (n - 1) % 2; d < n; d += 2) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= field->q();
        for (uint64_t ord = 0; ord < count; ++ord) {
            Poly cand = nth_monic_of_degree(field, d, ord);
            if (!is_squarefree(cand)) continue;
            bool ok = true;
            for (const auto& comp : A.components()) {
                Poly r = (g * cand) % comp.modulus();
                if (!r.is_zero() && !comp.is_square(r)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return cand;
        }
    }
    throw consistency_failure("no transfer reduction found below deg(f)");
}

}  // namespace qfx
