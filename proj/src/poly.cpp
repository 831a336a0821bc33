#include "qfx/poly.hpp"

#include <algorithm>
#include <cctype>

namespace qfx {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::X(const Field& f) {
    Poly r(f);
    r.c_ = {f->zero(), f->one()};
    return r;
}

Poly Poly::constant(const Fq& c) {
    check(c.field() != nullptr, "NullElement", "constant needs a field element");
    Poly r(c.field());
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

Poly Poly::from_coeffs(const Field& f, std::vector<Fq> coeffs) {
    Poly r(f);
    for (const auto& c : coeffs)
        check(c.field() && c.field()->same(*f), "FieldMismatch", "coefficient from a different field");
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

Poly Poly::from_ints(const Field& f, const std::vector<int64_t>& coeffs) {
    std::vector<Fq> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(f->from_int(v));
    return from_coeffs(f, std::move(c));
}

Fq Poly::lc() const {
    check(!c_.empty(), "ZeroPolynomial", "zero polynomial has no leading coefficient");
    return c_.back();
}

Fq Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[static_cast<size_t>(i)];
}

namespace {
const Field& common_field(const Poly& a, const Poly& b) {
    check(a.field() && b.field(), "NullPolynomial", "polynomial has no field");
    check(a.field()->same(*b.field()), "FieldMismatch", "polynomials over different fields");
    return a.field();
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    const Field& f = common_field(*this, o);
    std::vector<Fq> r(std::max(c_.size(), o.c_.size()), f->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return from_coeffs(f, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const Field& f = common_field(*this, o);
    if (is_zero() || o.is_zero()) return Poly(f);
    std::vector<Fq> r(c_.size() + o.c_.size() - 1, f->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return from_coeffs(f, std::move(r));
}

Poly Poly::operator*(const Fq& s) const {
    Poly r(field_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    common_field(*this, o);
    return c_.size() == o.c_.size() &&
           std::equal(c_.begin(), c_.end(), o.c_.begin(),
                      [](const Fq& a, const Fq& b) { return a.index() == b.index(); });
}

Poly Poly::monic() const {
    check(!is_zero(), "ZeroPolynomial", "cannot normalize the zero polynomial");
    return *this * lc().inv();
}

Poly Poly::derivative() const {
    Poly r(field_);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * field_->from_int(static_cast<int64_t>(i)));
    r.trim();
    return r;
}

Fq Poly::eval(const Fq& x) const {
    Fq acc = field_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::times_X_pow(int e) const {
    if (is_zero()) return *this;
    Poly r(field_);
    r.c_.assign(static_cast<size_t>(e), field_->zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    check(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
    if (a.deg() < b.deg()) return {Poly(f), a};
    std::vector<Fq> rem(a.coeffs());
    int db = b.deg();
    Fq li = b.lc().inv();
    std::vector<Fq> quot(static_cast<size_t>(a.deg() - db) + 1, f->zero());
    for (int i = a.deg(); i >= db; --i) {
        Fq c = rem[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Fq qc = c * li;
        quot[static_cast<size_t>(i - db)] = qc;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(i - db + j);
            rem[idx] = rem[idx] - qc * b.coeff(j);
        }
    }
    return {Poly::from_coeffs(f, std::move(quot)), Poly::from_coeffs(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return Poly(f);
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    const Field& f = common_field(a, b);
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly(f);
    Poly t0 = Poly(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fq li = r0.lc().inv();
    return {r0 * li, s0 * li, t0 * li};
}

Poly invmod(const Poly& a, const Poly& m) {
    auto [g, u, v] = xgcd(a % m, m);
    check(g.is_one(), "NotInvertible", "element not invertible modulo the given polynomial");
    (void)v;
    return u % m;
}

Poly powmod(const Poly& base, u128 e, const Poly& m) {
    Poly r = Poly::one(base.field()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

Poly Factorization::product() const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

namespace {

// p-th root of f when f' = 0: f = g(X^p), coefficients mapped through the
// inverse Frobenius a -> a^{p^{k-1}}
Poly pth_root(const Poly& f) {
    const Field& fld = f.field();
    uint64_t p = fld->p();
    u128 inv_frob = 1;
    for (uint64_t i = 0; i + 1 < fld->k(); ++i) inv_frob *= p;
    std::vector<Fq> c;
    for (int i = 0; i <= f.deg(); i += static_cast<int>(p))
        c.push_back(f.coeff(i).pow(inv_frob));
    return Poly::from_coeffs(fld, std::move(c));
}

u128 q_pow(const Field& f, int d) {
    u128 r = 1;
    for (int i = 0; i < d; ++i) r *= f->q();
    return r;
}

// one irreducible factor of a squarefree monic nonconstant s, of the least
// degree occurring in s
Poly some_irreducible_factor(const Poly& s, Rng& rng) {
    const Field& fld = s.field();
    Poly x = Poly::X(fld);
    Poly h = x % s;  // X^{q^d} mod s, built incrementally
    for (int d = 1; 2 * d <= s.deg(); ++d) {
        h = powmod(h, fld->q(), s);
        Poly g = gcd(h - x, s);
        if (g.is_constant()) continue;
        // g is a product of irreducible factors of degree exactly d;
        // split by Cantor-Zassenhaus
        Poly target = g;
        while (target.deg() > d) {
            Poly a = random_nonzero_poly(fld, target.deg() - 1, rng);
            Poly w = powmod(a, (q_pow(fld, d) - 1) / 2, target);
            Poly t = gcd(w - Poly::one(fld), target);
            if (!t.is_constant() && t.deg() < target.deg()) {
                target = 2 * t.deg() <= target.deg() ? t : target / t;
                target = target.monic();
            }
        }
        return target.monic();
    }
    return s.monic();  // s itself irreducible
}

}  // namespace

Factorization factor(const Poly& f) {
    check(!f.is_zero(), "ZeroPolynomial", "cannot factor the zero polynomial");
    const Field& fld = f.field();
    Factorization out{f.lc(), {}};
    Poly m = f.monic();
    Rng rng(mix_seed(global_seed(), poly_hash(f)));
    while (m.deg() >= 1) {
        Poly mm = m;
        while (mm.derivative().is_zero()) mm = pth_root(mm);
        Poly s = mm / gcd(mm, mm.derivative());
        Poly r = some_irreducible_factor(s, rng);
        int e = 0;
        while (divides(r, m)) {
            m = m / r;
            ++e;
        }
        out.factors.emplace_back(r, e);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_squarefree(const Poly& f) {
    check(!f.is_zero(), "ZeroPolynomial", "square-freeness of zero is undefined");
    if (f.is_constant()) return true;
    Poly d = f.derivative();
    if (d.is_zero()) return false;  // a p-th power
    return gcd(f, d).is_constant();
}

bool is_irreducible(const Poly& f) {
    check(f.deg() >= 1, "ConstantInput", "irreducibility needs a nonconstant polynomial");
    const Field& fld = f.field();
    Poly m = f.monic();
    int n = m.deg();
    Poly x = Poly::X(fld) % m;
    Poly xq = powmod(Poly::X(fld), q_pow(fld, n), m);
    if (xq != x) return false;
    for (int ell = 2; ell <= n; ++ell) {
        if (n % ell != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= ell; ++d)
            if (ell % d == 0) prime = false;
        if (!prime) continue;
        Poly h = powmod(Poly::X(fld), q_pow(fld, n / ell), m);
        if (!gcd(h - x, m).is_constant()) return false;
    }
    return true;
}

Poly squarefree_part(const Poly& f) {
    Poly r = Poly::one(f.field());
    for (const auto& [p, e] : factor(f).factors) r = r * p;
    return r;
}

Poly odd_multiplicity_part(const Poly& f) {
    Poly r = Poly::one(f.field());
    for (const auto& [p, e] : factor(f).factors)
        if (e % 2 == 1) r = r * p;
    return r;
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    const Field& fld = f.field();
    if (f.is_zero()) return Poly(fld);
    if (f.deg() % 2 != 0) return std::nullopt;
    if (!is_square(f.lc())) return std::nullopt;
    int m = f.deg() / 2;
    std::vector<Fq> s(static_cast<size_t>(m) + 1, fld->zero());
    s[static_cast<size_t>(m)] = sqrt(f.lc());
    Fq half = fld->from_int(2).inv();
    for (int i = m - 1; i >= 0; --i) {
        // coefficient of X^{m+i} in s^2 is 2 s_m s_i plus products of the
        // already determined coefficients s_{i+1}, ..., s_{m-1}
        Fq acc = fld->zero();
        for (int j = i + 1; j <= m - 1; ++j)
            acc = acc + s[static_cast<size_t>(j)] * s[static_cast<size_t>(m + i - j)];
        s[static_cast<size_t>(i)] = (f.coeff(m + i) - acc) * half * s[static_cast<size_t>(m)].inv();
    }
    Poly root = Poly::from_coeffs(fld, std::move(s));
    if (root * root == f) return root;
    return std::nullopt;
}

Fq resultant(const Poly& f, const Poly& g) {
    const Field& fld = common_field(f, g);
    check(!f.is_zero() && !g.is_zero(), "ZeroPolynomial", "resultant needs nonzero inputs");
    Poly a = f, b = g;
    Fq acc = fld->one();
    for (;;) {
        if (a.deg() == 0) return acc * a.lc().pow(static_cast<u128>(b.deg()));
        if (b.deg() == 0) return acc * b.lc().pow(static_cast<u128>(a.deg()));
        Poly r = a % b;
        if (r.is_zero()) return fld->zero();
        if ((a.deg() & 1) && (b.deg() & 1)) acc = -acc;
        acc = acc * b.lc().pow(static_cast<u128>(a.deg() - r.deg()));
        a = b;
        b = r;
    }
}

Poly crt(const Field& field, const std::vector<std::pair<Poly, Poly>>& congruences) {
    if (congruences.empty()) return Poly(field);
    for (const auto& [m, v] : congruences) {
        common_field(m, v);
        check(m.deg() >= 1, "ConstantModulus", "crt moduli must be nonconstant");
    }
    for (size_t i = 0; i < congruences.size(); ++i)
        for (size_t j = i + 1; j < congruences.size(); ++j)
            check(gcd(congruences[i].first, congruences[j].first).is_constant(),
                  "NonCoprimeModuli", "crt moduli must be pairwise coprime");
    Poly M = Poly::one(field);
    for (const auto& [m, v] : congruences) M = M * m;
    Poly r(field);
    for (const auto& [m, v] : congruences) {
        Poly Mi = M / m;
        Poly inv = invmod(Mi, m);
        r = r + v * Mi * inv;
    }
    return r % M;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        uint64_t ai = a.coeff(i).index(), bi = b.coeff(i).index();
        if (ai != bi) return ai < bi;
    }
    return false;
}

uint64_t poly_hash(const Poly& f) {
    const Field& fld = f.field();
    uint64_t h = fnv1a64(fld->designator());
    for (uint64_t m : fld->modulus()) h = fnv1a64(std::string_view(reinterpret_cast<const char*>(&m), 8), h);
    for (const auto& c : f.coeffs()) {
        uint64_t i = c.index();
        h = fnv1a64(std::string_view(reinterpret_cast<const char*>(&i), 8), h);
    }
    return h;
}

uint64_t count_polys_of_degree(const Field& f, int d) {
    uint64_t n = f->q() - 1;
    for (int i = 0; i < d; ++i) n *= f->q();
    return n;
}

Poly nth_poly_of_degree(const Field& f, int d, uint64_t n) {
    uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= f->q();
    uint64_t lead = 1 + n / qd;
    check(lead < f->q(), "IndexOutOfRange", "polynomial ordinal exceeds the count");
    uint64_t rest = n % qd;
    std::vector<Fq> c(static_cast<size_t>(d) + 1, f->zero());
    c[static_cast<size_t>(d)] = f->element(lead);
    for (int i = d - 1; i >= 0; --i) {
        qd /= f->q();
        c[static_cast<size_t>(i)] = f->element(rest / qd);
        rest %= qd;
    }
    return Poly::from_coeffs(f, std::move(c));
}

Poly nth_monic_of_degree(const Field& f, int d, uint64_t n) {
    uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= f->q();
    check(n < qd, "IndexOutOfRange", "polynomial ordinal exceeds the count");
    std::vector<Fq> c(static_cast<size_t>(d) + 1, f->zero());
    c[static_cast<size_t>(d)] = f->one();
    for (int i = d - 1; i >= 0; --i) {
        qd /= f->q();
        c[static_cast<size_t>(i)] = f->element(n / qd);
        n %= qd;
    }
    return Poly::from_coeffs(f, std::move(c));
}

std::vector<Poly> monic_irreducibles(const Field& f, int d) {
    std::vector<Poly> out;
    uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= f->q();
    for (uint64_t n = 0; n < qd; ++n) {
        Poly cand = nth_monic_of_degree(f, d, n);
        if (d == 1 || is_irreducible(cand)) out.push_back(cand);
    }
    return out;
}

Poly random_poly(const Field& f, int max_deg, Rng& rng) {
    std::vector<Fq> c;
    c.reserve(static_cast<size_t>(max_deg) + 1);
    for (int i = 0; i <= max_deg; ++i) c.push_back(f->element(rng.below(f->q())));
    return Poly::from_coeffs(f, std::move(c));
}

Poly random_nonzero_poly(const Field& f, int max_deg, Rng& rng) {
    for (;;) {
        Poly r = random_poly(f, max_deg, rng);
        if (!r.is_zero()) return r;
    }
}

Poly random_monic_poly(const Field& f, int d, Rng& rng) {
    std::vector<Fq> c;
    c.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) c.push_back(f->element(rng.below(f->q())));
    c.push_back(f->one());
    return Poly::from_coeffs(f, std::move(c));
}

// ---------------------------------------------------------------------------
// text I/O

namespace {

struct Parser {
    const Field& field;
    const std::string& s;
    size_t pos = 0;
    bool allow_x;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw error("ParseError", what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    uint64_t parse_uint() {
        skip_ws();
        check(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])), "ParseError",
              "expected a number in \"" + s + "\"");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
            check(v < (1ull << 40), "ParseError", "number too large");
            ++pos;
        }
        return v;
    }

    // product of atoms: integer, t[^e], (element-expr), X[^e]
    Poly parse_term() {
        Fq coeff = field->one();
        int xexp = 0;
        bool any = false;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * field->from_int(static_cast<int64_t>(parse_uint()));
                any = true;
            } else if (c == 't') {
                ++pos;
                uint64_t e = eat('^') ? parse_uint() : 1;
                check(field->k() > 1, "ParseError", "generator t used over a prime field");
                coeff = coeff * field->generator().pow(e);
                any = true;
            } else if (c == '(') {
                ++pos;
                Fq v = parse_element_expr();
                if (!eat(')')) fail("expected ')'");
                coeff = coeff * v;
                any = true;
            } else if ((c == 'X' || c == 'x') && allow_x) {
                ++pos;
                uint64_t e = eat('^') ? parse_uint() : 1;
                xexp += static_cast<int>(e);
                any = true;
            } else {
                break;
            }
            if (!eat('*')) break;
        }
        if (!any) fail("expected a term");
        return Poly::constant(coeff).times_X_pow(xexp);
    }

    Fq parse_element_expr() {
        bool saved = allow_x;
        allow_x = false;
        Poly r = parse_sum();
        allow_x = saved;
        internal_check(r.is_constant(), "element expression is not constant");
        return r.is_zero() ? field->zero() : r.coeff(0);
    }

    Poly parse_sum() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Poly t = parse_term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

Poly parse_poly(const Field& f, const std::string& text) {
    Parser p{f, text, 0, true};
    Poly r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Fq parse_element(const Field& f, const std::string& text) {
    Parser p{f, text, 0, false};
    Poly r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    internal_check(r.is_constant(), "element expression is not constant");
    return r.is_zero() ? f->zero() : r.coeff(0);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        Fq c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        bool compound = cs.find_first_of("+*^t") != std::string::npos;
        if (i == 0) {
            out += compound ? "(" + cs + ")" : cs;
        } else {
            if (!c.is_one()) out += (compound ? "(" + cs + ")" : cs) + "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qfx
