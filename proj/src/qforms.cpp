#include "qfx/qforms.hpp"

#include <algorithm>

namespace qfx {

namespace {

constexpr uint64_t kSearchExhaust = uint64_t{1} << 20;
constexpr int kSearchTrials = 20000;

DiagEntry normalize_entry(const Poly& a) {
    check(!a.is_zero(), "ZeroEntry", "diagonal entries of a regular form are nonzero");
    return DiagEntry{a.lc(), odd_multiplicity_part(a)};
}

// the normalized polynomial representative lc * (odd-multiplicity part) of
// the square class of a
Poly class_normalize(const Poly& a) {
    DiagEntry e = normalize_entry(a);
    return e.value();
}

}  // namespace

DiagForm DiagForm::from_polys(const std::vector<Poly>& entries) {
    check(!entries.empty(), "EmptyForm", "a form needs at least one entry");
    DiagForm phi;
    phi.field_ = entries.front().field();
    for (const Poly& a : entries) {
        check(a.field()->same(*phi.field_), "FieldMismatch", "entries over different fields");
        phi.entries_.push_back(normalize_entry(a));
    }
    return phi;
}

DiagForm DiagForm::from_strings(const Field& field, const std::vector<std::string>& entries) {
    std::vector<Poly> polys;
    polys.reserve(entries.size());
    for (const auto& s : entries) polys.push_back(parse_poly(field, s));
    return from_polys(polys);
}

DiagForm DiagForm::scaled(const RatFunc& lambda) const {
    check(!lambda.is_zero(), "ZeroEntry", "scaling by zero destroys regularity");
    std::vector<Poly> scaled;
    scaled.reserve(entries_.size());
    for (const auto& e : entries_) scaled.push_back(class_normalize(e.value() * lambda.num() * lambda.den()));
    return from_polys(scaled);
}

std::string DiagForm::str() const {
    std::string out = "<";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += "; ";
        out += entry_value(i).str();
    }
    return out + ">";
}

const char* justification_name(Justification j) {
    switch (j) {
        case Justification::Anisotropic1Dim: return "Anisotropic1Dim";
        case Justification::TwoDimSquare: return "TwoDimSquare";
        case Justification::SymbolVanishes: return "SymbolVanishes";
        case Justification::SymbolNonzero: return "SymbolNonzero";
        case Justification::LocalGlobal: return "LocalGlobal";
        case Justification::SlotPartner: return "SlotPartner";
        case Justification::Dim5Plus: return "Dim5Plus";
    }
    return "?";
}

namespace {

// isotropy of a diagonal residue form over the residue field of the place
bool residue_form_isotropic(const Place& place, const std::vector<Poly>& residues) {
    if (residues.size() >= 3) return true;  // finite residue fields have u = 2
    if (residues.size() <= 1) return false;
    Poly prod = place.is_infinity() ? Poly::constant(-(residues[0].coeff(0) * residues[1].coeff(0)))
                                    : (-(residues[0] * residues[1])) % place.poly();
    return square_at(place, prod);
}

}  // namespace

bool local_isotropy(const DiagForm& phi, const Place& place) {
    check(phi.dim() >= 1, "EmptyForm", "a form needs at least one entry");
    std::vector<Poly> even_part, odd_part;
    if (place.is_infinity()) {
        for (const auto& e : phi.entries()) {
            Poly lc = Poly::constant(e.c);
            (e.s.deg() % 2 == 0 ? even_part : odd_part).push_back(lc);
        }
    } else {
        const Poly& p = place.poly();
        for (const auto& e : phi.entries()) {
            if (divides(p, e.s))
                odd_part.push_back(((e.s / p) * e.c) % p);
            else
                even_part.push_back((e.s * e.c) % p);
        }
    }
    return residue_form_isotropic(place, even_part) || residue_form_isotropic(place, odd_part);
}

std::vector<Place> support_places(const DiagForm& phi) {
    std::vector<Place> out;
    for (const auto& e : phi.entries()) {
        if (e.s.is_constant()) continue;
        for (const auto& [p, mult] : factor(e.s).factors) {
            Place pl = Place::finite(p);
            bool seen = false;
            for (const auto& c : out)
                if (c == pl) seen = true;
            if (!seen) out.push_back(pl);
        }
    }
    std::sort(out.begin(), out.end(), place_less);
    out.push_back(Place::infinity(phi.field()));
    return out;
}

SlotShape to_slot_shape(const DiagForm& phi) {
    check(phi.dim() == 4, "BadDimension", "slot shape applies to 4-dimensional forms");
    Poly a1 = phi.entry_value(0), a2 = phi.entry_value(1), a3 = phi.entry_value(2), a4 = phi.entry_value(3);
    Poly f = class_normalize(a1 * a2 * a3 * a4);
    Poly g = class_normalize(-(f * a1 * a2));
    Poly h = class_normalize(-(f * a1 * a3));
    return SlotShape{f, g, h};
}

IsotropyVerdict is_isotropic(const DiagForm& phi) {
    check(phi.dim() >= 1, "EmptyForm", "a form needs at least one entry");
    IsotropyVerdict v{};
    if (phi.dim() == 1) {
        v.isotropic = false;
        v.justification = Justification::Anisotropic1Dim;
        return v;
    }
    if (phi.dim() == 2) {
        const auto& e = phi.entries();
        bool sq = e[0].s == e[1].s && is_square(-(e[0].c * e[1].c));
        v.isotropic = sq;
        v.justification = Justification::TwoDimSquare;
        return v;
    }
    if (phi.dim() == 3) {
        // <a,b,c> is isotropic iff {-ab, -ac} = 0, iff its ramification is
        // empty (the ramification map is injective here)
        Poly a = phi.entry_value(0), b = phi.entry_value(1), c = phi.entry_value(2);
        RamSeq rho = ramify(class_normalize(-(a * b)), class_normalize(-(a * c)));
        v.isotropic = rho.empty();
        v.justification = v.isotropic ? Justification::SymbolVanishes : Justification::SymbolNonzero;
        if (!v.isotropic) v.obstruction = rho.support().front();
        return v;
    }
    if (phi.dim() == 4) {
        bool all_ok = true;
        for (const Place& p : support_places(phi)) {
            bool ok = local_isotropy(phi, p);
            v.local_table.push_back(LocalCheck{p, ok});
            all_ok = all_ok && ok;
        }
        // the slot-partner construction is an independent route; the two
        // must agree
        SlotShape shape = to_slot_shape(phi);
        auto partner = find_slot_partner(shape.f, shape.g, shape.h);
        internal_check(partner.has_value() == all_ok,
                       "local scan and slot-partner route disagree on a 4-dimensional form");
        v.isotropic = all_ok;
        if (all_ok) {
            v.justification = Justification::SlotPartner;
            v.slot_partner = partner;
        } else {
            v.justification = Justification::LocalGlobal;
        }
        return v;
    }
    v.isotropic = true;  // u(E(X)) <= 4
    v.justification = Justification::Dim5Plus;
    return v;
}

std::optional<Poly> find_slot_partner(const Poly& f, const Poly& g, const Poly& h) {
    check(!f.is_zero() && !g.is_zero() && !h.is_zero(), "ZeroPolynomial", "slot search needs nonzero inputs");
    check(is_squarefree(f), "NotSquareFree", "the slot candidate must be square-free");
    const Field& field = f.field();
    RamSeq ram_gh = ramify(g, h);
    int n = std::max(f.deg(), 0);
    Fq c = f.lc();

    // local obstructions, read off the ramification of {g, h}
    Poly prod_s = Poly::one(field);
    for (const Place& p : ram_gh.support()) {
        if (p.is_infinity()) {
            if (n % 2 == 0 && is_square(c)) return std::nullopt;  // obstruction at infinity
            continue;
        }
        prod_s = prod_s * p.poly();
        if (!divides(p.poly(), f)) {
            // the completion forces the class of f at p to match the symbol
            Poly fres = f % p.poly();
            if (square_at(p, fres)) return std::nullopt;  // obstruction at p
        }
    }

    Fq cprime = infinity_class(ram_gh).witness;
    Poly aux = prod_s;
    if (n % 2 == 1) {
        Fq scale = cprime;
        if (prod_s.deg() % 2 == 1) scale = -scale;
        aux = prod_s * scale;
    }
    RamSeq rho = ramify(f, aux) + ram_gh;
    Poly q = realize_ramification(rho, f);
    Poly partner = aux * q;
    internal_check(ramify(f, partner) == ram_gh, "slot partner failed the ramification round trip");
    return partner;
}

CommonSlot common_slot(const Field& field, const std::vector<std::pair<Poly, Poly>>& symbols) {
    std::vector<RamSeq> rams;
    rams.reserve(symbols.size());
    for (const auto& [g, h] : symbols) rams.push_back(ramify(g, h));
    std::vector<Poly> primes;
    for (const auto& rho : rams)
        for (const Place& p : rho.support()) {
            if (p.is_infinity()) continue;
            bool seen = false;
            for (const auto& q : primes)
                if (q == p.poly()) seen = true;
            if (!seen) primes.push_back(p.poly());
        }
    if (primes.empty()) primes.push_back(Poly::X(field));  // pad to keep f nonconstant
    std::sort(primes.begin(), primes.end(), poly_less);
    Poly f = Poly::constant(canonical_nonsquare(field));
    for (const auto& p : primes) f = f * p;
    CommonSlot out{f, {}};
    for (const auto& rho : rams) out.partners.push_back(realize_ramification(rho, f));
    return out;
}

namespace {

// decode one candidate tuple; component i gets base-q digits of its block,
// low coefficient first
std::vector<Poly> decode_tuple(const Field& field, size_t n, int delta, u128 ord) {
    std::vector<Poly> xs;
    xs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Fq> coeffs;
        coeffs.reserve(static_cast<size_t>(delta) + 1);
        for (int j = 0; j <= delta; ++j) {
            coeffs.push_back(field->element(static_cast<uint64_t>(ord % field->q())));
            ord /= field->q();
        }
        xs.push_back(Poly::from_coeffs(field, std::move(coeffs)));
    }
    return xs;
}

bool is_witness(const DiagForm& phi, const std::vector<Poly>& xs) {
    bool nonzero = false;
    Poly sum = Poly::zero(phi.field());
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!xs[i].is_zero()) nonzero = true;
        sum = sum + phi.entry_value(i) * xs[i] * xs[i];
    }
    return nonzero && sum.is_zero();
}

}  // namespace

std::optional<std::vector<Poly>> vector_search(const DiagForm& phi, int degree_cap) {
    check(phi.dim() >= 2, "BadDimension", "vector search needs dimension at least 2");
    const Field& field = phi.field();
    size_t n = phi.dim();

    if (n == 2) {
        // complete: <a,b> has a zero iff -ab is a square of E(X)
        auto root = poly_sqrt(-(phi.entry_value(0) * phi.entry_value(1)));
        if (!root) return std::nullopt;
        Poly x1 = *root, x2 = phi.entry_value(0);
        Poly g = gcd(x1, x2);
        if (!g.is_constant()) {
            x1 = x1 / g;
            x2 = x2 / g;
        }
        if (x1.deg() <= degree_cap && x2.deg() <= degree_cap && is_witness(phi, {x1, x2}))
            return std::vector<Poly>{x1, x2};
    }

    Rng rng(mix_seed(global_seed(), fnv1a64(phi.str()) ^ static_cast<uint64_t>(degree_cap)));
    for (int delta = 0; delta <= degree_cap; ++delta) {
        u128 space = 1;
        bool big = false;
        for (size_t i = 0; i < n * static_cast<size_t>(delta + 1); ++i) {
            space *= field->q();
            if (space > kSearchExhaust) {
                big = true;
                break;
            }
        }
        if (!big) {
            for (u128 ord = 1; ord < space; ++ord) {
                auto xs = decode_tuple(field, n, delta, ord);
                if (is_witness(phi, xs)) return xs;
            }
            continue;
        }
        // sampled: draw the tail, solve the head by an exact square root
        for (int trial = 0; trial < kSearchTrials; ++trial) {
            std::vector<Poly> xs(n, Poly::zero(field));
            Poly rest = Poly::zero(field);
            bool tail_nonzero = false;
            for (size_t i = 1; i < n; ++i) {
                xs[i] = random_poly(field, delta, rng);
                if (!xs[i].is_zero()) tail_nonzero = true;
                rest = rest + phi.entry_value(i) * xs[i] * xs[i];
            }
            if (!tail_nonzero) continue;
            if (rest.is_zero()) return xs;
            auto [quot, rem] = divmod(-rest, phi.entry_value(0));
            if (!rem.is_zero()) continue;
            auto root = poly_sqrt(quot);
            if (!root || root->deg() > degree_cap) continue;
            xs[0] = *root;
            internal_check(is_witness(phi, xs), "sampled witness failed verification");
            return xs;
        }
    }
    return std::nullopt;
}

DiagForm hyper_example_form(const Poly& f, const Poly& p) {
    check(!f.is_zero() && is_squarefree(f), "NotSquareFree", "the construction needs square-free f");
    check(p.deg() >= 1 && p.is_monic() && is_irreducible(p) && divides(p, f), "PreconditionViolated",
          "p must be a monic irreducible factor of f");
    Fq f0 = f.eval(f.field()->zero());
    Fq p0 = p.eval(f.field()->zero());
    check(!f0.is_zero() && is_square(f0 * p0), "PreconditionViolated",
          "f(0) p(0) must be a nonzero square");
    Poly x = Poly::X(f.field());
    return DiagForm::from_polys({f, -p, x, -(p * x)});
}

DiagForm counterexample_form(const Poly& f, const Poly& alpha) {
    QuotAlg A(f);
    check(A.squarefree(), "NotSquareFree", "the construction needs square-free f");
    check(A.is_unit(alpha), "NonInvertible", "the class representative must be a unit");
    const Field& field = f.field();

    // the ramification sequence attached to alpha, with the forced class
    // at infinity
    RamSeq rho(field);
    for (const auto& comp : A.components())
        if (!comp.is_square(alpha % comp.modulus())) rho.insert_nontrivial(Place::finite(comp.modulus()));
    if (!is_square(A.norm(alpha))) rho.insert_nontrivial(Place::infinity(field));
    internal_check(rho.is_valid(), "class-induced sequence has odd support");

    Poly gstar = bezout_reduce(f.monic(), A.reduce(alpha));
    RamSeq rho2 = rho + ramify(f, gstar);
    Fq cprime = field->one();
    if (rho2.nontrivial_at(Place::infinity(field))) {
        internal_check(!is_square(f.lc()), "class at infinity survived with a square leading coefficient");
        cprime = canonical_nonsquare(field);
    }
    Poly cg = gstar * cprime;
    Poly h = realize_ramification(rho2, cg);
    return DiagForm::from_polys({f, -cg, -h, cg * h});
}

}  // namespace qfx
