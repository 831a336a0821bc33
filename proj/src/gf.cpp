#include "qfx/gf.hpp"

#include <algorithm>

namespace qfx {

namespace {

constexpr uint64_t kTableLimit = 2048;  // build lookup tables up to this q
constexpr uint64_t kFieldLimit = 1u << 26;

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[t] arithmetic on ascending coefficient vectors, used only for
// modulus selection; the general machinery lives in poly.cpp.
using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, uint64_t p) {
    fp_trim(a);
    while (a.size() >= m.size()) {
        uint64_t c = a.back();  // m is monic
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t t = (c * m[i]) % p;
            a[i + shift] = (a[i + shift] + p - t) % p;
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(r), m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    auto inv_mod_p = [p](uint64_t x) {
        uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        uint64_t li = inv_mod_p(b.back());
        FpPoly bm = b;
        for (auto& c : bm) c = c * li % p;
        a = fp_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Irreducibility of a monic polynomial over F_p by the Rabin criterion.
bool fp_irreducible(const FpPoly& f, uint64_t p) {
    size_t n = f.size() - 1;
    if (n == 0) return false;
    auto powmod_x = [&](u128 e) {
        FpPoly result{1}, base{0, 1};
        base = fp_mod(std::move(base), f, p);
        while (e) {
            if (e & 1) result = fp_mulmod(result, base, f, p);
            base = fp_mulmod(base, base, f, p);
            e >>= 1;
        }
        return result;
    };
    u128 pn = 1;
    for (size_t i = 0; i < n; ++i) pn *= p;
    FpPoly xq = powmod_x(pn);  // X^{p^n} mod f
    FpPoly x{0, 1};
    x = fp_mod(std::move(x), f, p);
    if (xq != x) return false;
    for (uint64_t ell = 2; ell <= n; ++ell) {
        if (n % ell != 0) continue;
        bool prime = is_prime_u64(ell);
        if (!prime) continue;
        u128 pe = 1;
        for (size_t i = 0; i < n / ell; ++i) pe *= p;
        FpPoly h = powmod_x(pe);
        // gcd(X^{p^{n/ell}} - X, f) must be constant
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(diff, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

FpPoly canonical_modulus(uint64_t p, uint64_t k) {
    // least monic irreducible of degree k, graded-lex on (c_{k-1}, ..., c_0)
    std::vector<uint64_t> c(k, 0);
    for (;;) {
        FpPoly f(c.rbegin(), c.rend());  // ascending: c_0 first
        f.push_back(1);
        if (fp_irreducible(f, p)) return f;
        size_t i = k;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            internal_check(i != 0, "no irreducible of requested degree");
        }
    }
}

}  // namespace

FieldImpl::FieldImpl(uint64_t p, uint64_t k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint64_t i = 0; i < k_; ++i) {
        q_ *= p_;
        check(q_ <= kFieldLimit, "FieldTooLarge", "p^k exceeds the supported size");
    }
    one_idx_ = k_ == 1 ? 1 : [&] {
        std::vector<uint64_t> d(k_, 0);
        d[0] = 1;
        return from_digits(d);
    }();
    if (q_ <= kTableLimit) {
        add_t_.resize(q_ * q_);
        mul_t_.resize(q_ * q_);
        neg_t_.resize(q_);
        inv_t_.resize(q_);
        for (uint64_t a = 0; a < q_; ++a) {
            auto da = to_digits(a);
            for (uint64_t b = 0; b < q_; ++b) {
                auto db = to_digits(b);
                std::vector<uint64_t> s(k_);
                for (uint64_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_t_[a * q_ + b] = static_cast<uint32_t>(from_digits(s));
                mul_t_[a * q_ + b] = static_cast<uint32_t>(mul_digits(a, b));
            }
            std::vector<uint64_t> n(k_);
            for (uint64_t i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
            neg_t_[a] = static_cast<uint32_t>(from_digits(n));
        }
        tabled_ = true;
        inv_t_[0] = 0;
        for (uint64_t a = 1; a < q_; ++a) inv_t_[a] = static_cast<uint32_t>(pow_idx(a, q_ - 2));
    }
}

std::vector<uint64_t> FieldImpl::to_digits(uint64_t idx) const {
    // canonical index: c_0 is the most significant digit
    std::vector<uint64_t> d(k_);
    for (uint64_t i = k_; i-- > 0;) {
        d[i] = idx % p_;
        idx /= p_;
    }
    return d;
}

uint64_t FieldImpl::from_digits(const std::vector<uint64_t>& d) const {
    uint64_t idx = 0;
    for (uint64_t i = 0; i < k_; ++i) idx = idx * p_ + d[i] % p_;
    return idx;
}

uint64_t FieldImpl::mul_digits(uint64_t a, uint64_t b) const {
    if (k_ == 1) return a * b % p_;
    auto da = to_digits(a), db = to_digits(b);
    std::vector<uint64_t> r(2 * k_ - 1, 0);
    for (uint64_t i = 0; i < k_; ++i)
        for (uint64_t j = 0; j < k_; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    // reduce by the monic modulus
    for (uint64_t d = 2 * k_ - 2; d >= k_; --d) {
        uint64_t c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (uint64_t i = 0; i < k_; ++i) {
            uint64_t t = c * modulus_[i] % p_;
            r[d - k_ + i] = (r[d - k_ + i] + p_ - t) % p_;
        }
    }
    r.resize(k_);
    return from_digits(r);
}

uint64_t FieldImpl::add_idx(uint64_t a, uint64_t b) const {
    if (tabled_) return add_t_[a * q_ + b];
    auto da = to_digits(a), db = to_digits(b);
    std::vector<uint64_t> s(k_);
    for (uint64_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
    return from_digits(s);
}

uint64_t FieldImpl::neg_idx(uint64_t a) const {
    if (tabled_) return neg_t_[a];
    auto da = to_digits(a);
    std::vector<uint64_t> n(k_);
    for (uint64_t i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
    return from_digits(n);
}

uint64_t FieldImpl::sub_idx(uint64_t a, uint64_t b) const { return add_idx(a, neg_idx(b)); }

uint64_t FieldImpl::mul_idx(uint64_t a, uint64_t b) const {
    if (tabled_) return mul_t_[a * q_ + b];
    return mul_digits(a, b);
}

uint64_t FieldImpl::pow_idx(uint64_t a, u128 e) const {
    uint64_t r = one_idx_, base = a;
    while (e) {
        if (e & 1) r = mul_idx(r, base);
        base = mul_idx(base, base);
        e >>= 1;
    }
    return r;
}

uint64_t FieldImpl::inv_idx(uint64_t a) const {
    check(a != 0, "DivisionByZero", "inverse of zero");
    if (tabled_) return inv_t_[a];
    return pow_idx(a, q_ - 2);
}

Fq FieldImpl::element(uint64_t idx) const {
    check(idx < q_, "IndexOutOfRange", "element index exceeds field size");
    return Fq(shared_from_this(), idx);
}

Fq FieldImpl::from_int(int64_t v) const {
    int64_t m = static_cast<int64_t>(p_);
    uint64_t c = static_cast<uint64_t>(((v % m) + m) % m);
    std::vector<uint64_t> d(k_, 0);
    d[0] = c;
    return Fq(shared_from_this(), from_digits(d));
}

Fq FieldImpl::from_coeffs(const std::vector<uint64_t>& c) const {
    check(c.size() <= k_, "BadCoefficients", "too many coefficients for this field");
    std::vector<uint64_t> d(k_, 0);
    for (size_t i = 0; i < c.size(); ++i) d[i] = c[i] % p_;
    return Fq(shared_from_this(), from_digits(d));
}

Fq FieldImpl::generator() const {
    check(k_ > 1, "NoGenerator", "prime field has no extension generator");
    std::vector<uint64_t> d(k_, 0);
    d[1] = 1;
    return Fq(shared_from_this(), from_digits(d));
}

std::string FieldImpl::designator() const {
    if (k_ == 1) return "gf(" + std::to_string(p_) + ")";
    return "gf(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

Field make_field(uint64_t p, uint64_t k) {
    check(p != 2, "EvenCharacteristic", "characteristic 2 is excluded");
    check(p % 2 == 1 && is_prime_u64(p), "NonPrime", std::to_string(p) + " is not an odd prime");
    check(k >= 1, "BadDegree", "extension degree must be positive");
    std::vector<uint64_t> modulus;
    if (k > 1) modulus = canonical_modulus(p, k);
    return std::shared_ptr<const FieldImpl>(new FieldImpl(p, k, std::move(modulus)));
}

Field make_field(uint64_t p, uint64_t k, const std::vector<uint64_t>& modulus) {
    check(p != 2, "EvenCharacteristic", "characteristic 2 is excluded");
    check(p % 2 == 1 && is_prime_u64(p), "NonPrime", std::to_string(p) + " is not an odd prime");
    check(k > 1, "BadDegree", "explicit modulus requires k > 1");
    check(modulus.size() == k + 1 && modulus[k] == 1, "BadModulus", "modulus must be monic of degree k");
    FpPoly m(modulus);
    for (auto& c : m) c %= p;
    check(fp_irreducible(m, p), "BadModulus", "modulus is reducible over the prime field");
    return std::shared_ptr<const FieldImpl>(new FieldImpl(p, k, std::move(m)));
}

std::vector<uint64_t> Fq::coeffs() const {
    check(field_ != nullptr, "NullElement", "element has no field");
    std::vector<uint64_t> d(field_->k());
    uint64_t idx = idx_;
    for (uint64_t i = field_->k(); i-- > 0;) {
        d[i] = idx % field_->p();
        idx /= field_->p();
    }
    return d;
}

bool Fq::is_one() const { return field_ && *this == field_->one(); }

namespace {
const Field& common_field(const Fq& a, const Fq& b) {
    check(a.field() && b.field(), "NullElement", "element has no field");
    check(a.field()->same(*b.field()), "FieldMismatch", "elements of different fields");
    return a.field();
}
}  // namespace

Fq Fq::operator+(const Fq& o) const {
    const Field& f = common_field(*this, o);
    return f->element(f->add_idx(idx_, o.idx_));
}
Fq Fq::operator-(const Fq& o) const {
    const Field& f = common_field(*this, o);
    return f->element(f->sub_idx(idx_, o.idx_));
}
Fq Fq::operator*(const Fq& o) const {
    const Field& f = common_field(*this, o);
    return f->element(f->mul_idx(idx_, o.idx_));
}
Fq Fq::operator/(const Fq& o) const {
    const Field& f = common_field(*this, o);
    return f->element(f->mul_idx(idx_, f->inv_idx(o.idx_)));
}
Fq Fq::operator-() const { return field_->element(field_->neg_idx(idx_)); }
Fq Fq::inv() const { return field_->element(field_->inv_idx(idx_)); }
Fq Fq::pow(u128 e) const { return field_->element(field_->pow_idx(idx_, e)); }

bool Fq::operator==(const Fq& o) const {
    common_field(*this, o);
    return idx_ == o.idx_;
}

std::string Fq::str() const {
    check(field_ != nullptr, "NullElement", "element has no field");
    auto c = coeffs();
    if (field_->k() == 1) return std::to_string(c[0]);
    std::string s;
    for (uint64_t i = field_->k(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool is_square(const Fq& x) {
    check(!x.is_zero(), "ZeroInput", "square test needs a nonzero element");
    return x.pow((x.field()->q() - 1) / 2).is_one();
}

Fq canonical_nonsquare(const Field& field) {
    for (uint64_t i = 1; i < field->q(); ++i) {
        Fq x = field->element(i);
        if (!is_square(x)) return x;
    }
    throw consistency_failure("no non-square found in an odd-order field");
}

Fq sqrt(const Fq& x) {
    check(!x.is_zero() && is_square(x), "NotASquare", "element has no square root");
    const Field& f = x.field();
    uint64_t q = f->q();
    uint64_t m = q - 1;
    unsigned s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    Fq r = x.pow((m + 1) / 2);
    if (s > 1) {
        Fq z = canonical_nonsquare(f);
        Fq c = z.pow(m);
        Fq t = x.pow(m);
        unsigned e = s;
        while (!t.is_one()) {
            Fq t2 = t;
            unsigned i = 0;
            while (!t2.is_one()) {
                t2 = t2 * t2;
                ++i;
            }
            Fq b = c;
            for (unsigned j = 0; j + i + 1 < e; ++j) b = b * b;
            r = r * b;
            c = b * b;
            t = t * c;
            e = i;
        }
    }
    internal_check(r * r == x, "square root verification failed");
    Fq other = -r;
    return r.index() <= other.index() ? r : other;
}

Fq embed(const Fq& x, const Field& into) {
    const Field& sub = x.field();
    check(sub != nullptr, "NullElement", "element has no field");
    check(sub->p() == into->p() && into->k() % sub->k() == 0, "NotASubfield",
          sub->designator() + " is not a subfield of " + into->designator());
    if (sub->k() == 1) return into->from_int(static_cast<int64_t>(x.index()));
    if (sub->same(*into)) return into->element(x.index());
    // canonical image of the subfield generator: least root of its modulus
    const auto& m = sub->modulus();
    for (uint64_t i = 0; i < into->q(); ++i) {
        Fq r = into->element(i);
        Fq acc = into->zero();
        Fq pw = into->one();
        for (size_t d = 0; d < m.size(); ++d) {
            acc = acc + into->from_int(static_cast<int64_t>(m[d])) * pw;
            pw = pw * r;
        }
        if (acc.is_zero()) {
            Fq result = into->zero();
            Fq rp = into->one();
            auto c = x.coeffs();
            for (size_t d = 0; d < c.size(); ++d) {
                result = result + into->from_int(static_cast<int64_t>(c[d])) * rp;
                rp = rp * r;
            }
            return result;
        }
    }
    throw consistency_failure("subfield modulus has no root in the extension");
}

Fq norm_to_subfield(const Fq& x, const Field& subfield) {
    const Field& big = x.field();
    check(big != nullptr, "NullElement", "element has no field");
    check(big->p() == subfield->p() && big->k() % subfield->k() == 0, "NotASubfield",
          subfield->designator() + " is not a subfield of " + big->designator());
    if (x.is_zero()) return subfield->zero();
    uint64_t e = (big->q() - 1) / (subfield->q() - 1);
    Fq n = x.pow(e);
    if (subfield->same(*big)) return subfield->element(n.index());
    if (subfield->k() == 1) {
        auto d = n.coeffs();
        for (size_t i = 1; i < d.size(); ++i)
            internal_check(d[i] == 0, "norm did not land in the prime field");
        return subfield->element(d[0]);
    }
    // invert the canonical embedding on the (small) subfield
    for (uint64_t i = 0; i < subfield->q(); ++i) {
        Fq cand = subfield->element(i);
        if (embed(cand, big) == n) return cand;
    }
    throw consistency_failure("norm did not land in the requested subfield");
}

}  // namespace qfx
