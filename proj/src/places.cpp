#include "qfx/places.hpp"

#include <algorithm>

namespace qfx {

Place Place::finite(Poly p) {
    check(p.deg() >= 1, "ConstantInput", "a finite place needs a nonconstant polynomial");
    check(p.is_monic(), "NotMonic", "a finite place must be monic");
    check(p.deg() == 1 || is_irreducible(p), "NotIrreducible", "a finite place must be irreducible");
    Field f = p.field();
    return Place(std::move(f), std::move(p));
}

Place Place::infinity(const Field& f) { return Place(f, std::nullopt); }

const Poly& Place::poly() const {
    check(p_.has_value(), "InfinitePlace", "the infinite place carries no polynomial");
    return *p_;
}

bool Place::operator==(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return false;
    return is_infinity() || *p_ == *o.p_;
}

bool place_less(const Place& a, const Place& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return poly_less(a.poly(), b.poly());
}

RatFunc RatFunc::of(Poly num, Poly den) {
    check(!den.is_zero(), "DivisionByZero", "zero denominator");
    if (num.is_zero()) return RatFunc(std::move(num), Poly::one(den.field()));
    Poly g = gcd(num, den);
    num = num / g;
    den = den / g;
    Fq li = den.lc().inv();
    return RatFunc(num * li, den * li);
}

RatFunc RatFunc::of(Poly num) {
    Field f = num.field();
    return RatFunc(std::move(num), Poly::one(f));
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return of(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    check(!is_zero(), "DivisionByZero", "inverse of the zero function");
    return of(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    RatFunc base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    RatFunc acc = of(Poly::one(field()));
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

int multiplicity(const Poly& p, Poly a) {
    int m = 0;
    for (;;) {
        auto [q, r] = divmod(a, p);
        if (!r.is_zero()) return m;
        a = q;
        ++m;
        if (a.is_constant()) return m;
    }
}

}  // namespace

int valuation(const Place& place, const RatFunc& r) {
    check(!r.is_zero(), "ZeroFunction", "valuation of zero");
    if (place.is_infinity()) return r.den().deg() - r.num().deg();
    return multiplicity(place.poly(), r.num()) - multiplicity(place.poly(), r.den());
}

Poly residue(const Place& place, const RatFunc& r) {
    check(!r.is_zero(), "ZeroFunction", "residue of zero");
    check(valuation(place, r) == 0, "NonUnitAtPlace", "residue of a non-unit at " + place.str());
    if (place.is_infinity())
        return Poly::constant(r.num().lc() / r.den().lc());
    const Poly& p = place.poly();
    Poly num = r.num(), den = r.den();
    while (divides(p, num) && divides(p, den)) {
        num = num / p;
        den = den / p;
    }
    return (num * invmod(den, p)) % p;
}

bool square_at(const Place& place, const Poly& value) {
    if (place.is_infinity()) {
        internal_check(value.is_constant(), "infinite-place residue must be constant");
        return is_square(value.coeff(0));
    }
    return ResidueField(place.poly()).is_square(value);
}

Poly canonical_nonsquare_at(const Place& place) {
    if (place.is_infinity()) return Poly::constant(canonical_nonsquare(place.field()));
    return ResidueField(place.poly()).canonical_nonsquare();
}

SquareClass tame_symbol(const Place& place, const RatFunc& f, const RatFunc& g) {
    check(!f.is_zero() && !g.is_zero(), "ZeroFunction", "tame symbol of zero");
    int a = valuation(place, f);
    int b = valuation(place, g);
    RatFunc u = f.pow(-b) * g.pow(a);
    if ((a & 1) && (b & 1)) u = -u;
    Poly r = residue(place, u);
    bool nontrivial = !square_at(place, r);
    Poly witness = nontrivial ? canonical_nonsquare_at(place) : Poly::one(place.field());
    return SquareClass{place, nontrivial, std::move(witness)};
}

RamSeq RamSeq::from_entries(const Field& field, const std::vector<SquareClass>& entries) {
    RamSeq rho(field);
    for (const auto& e : entries) {
        bool nontrivial = !square_at(e.place, e.witness);
        check(nontrivial == e.nontrivial, "InvalidRamSeq", "witness does not match the stated class");
        if (nontrivial) rho.insert_nontrivial(e.place);
    }
    check(rho.is_valid(), "InvalidRamSeq", "a ramification sequence has even support");
    return rho;
}

void RamSeq::insert_nontrivial(const Place& p) {
    entries_.insert_or_assign(p, SquareClass{p, true, canonical_nonsquare_at(p)});
}

std::vector<Place> RamSeq::support() const {
    std::vector<Place> out;
    out.reserve(entries_.size());
    for (const auto& [p, c] : entries_) out.push_back(p);
    return out;
}

RamSeq RamSeq::operator+(const RamSeq& o) const {
    check(field_->same(*o.field_), "FieldMismatch", "ramification sequences over different fields");
    RamSeq r(field_);
    for (const auto& [p, c] : entries_)
        if (!o.nontrivial_at(p)) r.insert_nontrivial(p);
    for (const auto& [p, c] : o.entries_)
        if (!nontrivial_at(p)) r.insert_nontrivial(p);
    return r;
}

bool RamSeq::operator==(const RamSeq& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    auto it = entries_.begin();
    auto jt = o.entries_.begin();
    for (; it != entries_.end(); ++it, ++jt)
        if (!(it->first == jt->first)) return false;
    return true;
}

RamSeq RamSeq::restricted_to_finite() const {
    RamSeq r(field_);
    for (const auto& [p, c] : entries_)
        if (!p.is_infinity()) r.insert_nontrivial(p);
    return r;
}

RamSeq ramify(const RatFunc& f, const RatFunc& g) {
    check(!f.is_zero() && !g.is_zero(), "ZeroFunction", "ramification of zero");
    const Field& field = f.field();
    std::vector<Place> candidates;
    auto add_factors = [&](const Poly& h) {
        if (h.is_constant()) return;
        for (const auto& [p, e] : factor(h).factors) {
            Place pl = Place::finite(p);
            bool seen = false;
            for (const auto& c : candidates)
                if (c == pl) seen = true;
            if (!seen) candidates.push_back(pl);
        }
    };
    add_factors(f.num());
    add_factors(f.den());
    add_factors(g.num());
    add_factors(g.den());
    candidates.push_back(Place::infinity(field));
    RamSeq rho(field);
    for (const auto& p : candidates) {
        SquareClass c = tame_symbol(p, f, g);
        if (c.nontrivial) rho.insert_nontrivial(p);
    }
    internal_check(rho.is_valid(), "ramification of a symbol has odd support");
    return rho;
}

RamSeq ramify(const Poly& f, const Poly& g) { return ramify(RatFunc::of(f), RatFunc::of(g)); }

K1Class k1_class_of(const Fq& x) {
    check(!x.is_zero(), "ZeroInput", "class of zero");
    bool nontrivial = !is_square(x);
    return K1Class{nontrivial, nontrivial ? canonical_nonsquare(x.field()) : x.field()->one()};
}

K1Class nmap(const RamSeq& rho) {
    const Field& field = rho.field();
    bool nontrivial = false;
    for (const auto& [p, c] : rho.entries()) {
        bool comp;
        if (p.is_infinity()) {
            comp = !is_square(c.witness.coeff(0));
        } else {
            comp = ResidueField(p.poly()).norm_class_nontrivial(c.witness);
        }
        nontrivial ^= comp;
    }
    return K1Class{nontrivial, nontrivial ? canonical_nonsquare(field) : field->one()};
}

K1Class infinity_class(const RamSeq& rho) {
    const Field& field = rho.field();
    bool nt = rho.nontrivial_at(Place::infinity(field));
    return K1Class{nt, nt ? canonical_nonsquare(field) : field->one()};
}

}  // namespace qfx
