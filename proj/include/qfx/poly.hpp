#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfx/gf.hpp"
#include "qfx/rng.hpp"

namespace qfx {

// Univariate polynomial over a fixed field, dense ascending coefficients,
// no trailing zeros.  deg(0) is the -infinity sentinel kNegInfDeg.
class Poly {
public:
    static constexpr int kNegInfDeg = INT32_MIN;

    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(f->one()); }
    static Poly X(const Field& f);
    static Poly constant(const Fq& c);
    static Poly from_coeffs(const Field& f, std::vector<Fq> coeffs);
    static Poly from_ints(const Field& f, const std::vector<int64_t>& coeffs);

    const Field& field() const { return field_; }
    int deg() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_unit() const { return c_.size() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Fq lc() const;                       // leading coefficient, f != 0
    Fq coeff(int i) const;               // zero beyond the degree
    const std::vector<Fq>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Fq& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;                  // f / lc(f)
    Poly derivative() const;
    Fq eval(const Fq& x) const;
    Poly times_X_pow(int e) const;

    std::string str() const;

private:
    void trim();

    Field field_;
    std::vector<Fq> c_;
};

// quotient and remainder; throws DivisionByZero on zero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly gcd(const Poly& a, const Poly& b);  // monic unless both zero
// g = gcd (monic), u*a + v*b = g
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult xgcd(const Poly& a, const Poly& b);
Poly invmod(const Poly& a, const Poly& m);  // throws NotInvertible
Poly powmod(const Poly& base, u128 e, const Poly& m);

struct Factorization {
    Fq unit;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity

    Poly product() const;
};

// Complete factorization into monic irreducibles; deterministic for a fixed
// global seed (equal-degree splitting derives its stream from the input).
Factorization factor(const Poly& f);

bool is_squarefree(const Poly& f);   // throws ZeroPolynomial
bool is_irreducible(const Poly& f);  // Rabin test; throws ConstantInput

// product of the distinct monic irreducible factors
Poly squarefree_part(const Poly& f);

// monic product of the factors of odd multiplicity: f equals
// lc(f) * odd_multiplicity_part(f) * (a square)
Poly odd_multiplicity_part(const Poly& f);

// exact square root: s with s*s = f, or absent
std::optional<Poly> poly_sqrt(const Poly& f);

// Res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f
Fq resultant(const Poly& f, const Poly& g);

// unique solution of degree < sum deg(m_i); moduli nonconstant and pairwise
// coprime (NonCoprimeModuli)
Poly crt(const Field& field, const std::vector<std::pair<Poly, Poly>>& congruences);

// canonical order: degree, then coefficients compared from the top down in
// the canonical element order; the zero polynomial comes first
bool poly_less(const Poly& a, const Poly& b);

uint64_t poly_hash(const Poly& f);

// enumeration in canonical order
uint64_t count_polys_of_degree(const Field& f, int d);  // (q-1) * q^d
Poly nth_poly_of_degree(const Field& f, int d, uint64_t n);
Poly nth_monic_of_degree(const Field& f, int d, uint64_t n);  // n < q^d
std::vector<Poly> monic_irreducibles(const Field& f, int d);

Poly random_poly(const Field& f, int max_deg, Rng& rng);  // uniform incl. zero
Poly random_nonzero_poly(const Field& f, int max_deg, Rng& rng);
Poly random_monic_poly(const Field& f, int d, Rng& rng);

// text grammar: terms `c*X^e` joined by `+`/`-`; coefficients are integers,
// `t`-atoms, or parenthesized element expressions, e.g. "2*X^4 + (t+1)*X + 1"
Poly parse_poly(const Field& f, const std::string& text);
Fq parse_element(const Field& f, const std::string& text);

}  // namespace qfx
