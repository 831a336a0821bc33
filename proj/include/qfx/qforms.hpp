#pragma once

#include "qfx/sqref.hpp"

namespace qfx {

// One diagonal entry, normalized modulo squares of E(X): a unit times a
// monic square-free polynomial.
struct DiagEntry {
    Fq c;
    Poly s;

    Poly value() const { return s * c; }
};

// A regular diagonal quadratic form over E(X).  Entries are normalized at
// construction; zero entries are rejected.
class DiagForm {
public:
    static DiagForm from_polys(const std::vector<Poly>& entries);  // ZeroEntry
    static DiagForm from_strings(const Field& field, const std::vector<std::string>& entries);

    size_t dim() const { return entries_.size(); }
    const std::vector<DiagEntry>& entries() const { return entries_; }
    const Field& field() const { return field_; }
    Poly entry_value(size_t i) const { return entries_[i].value(); }

    // the similar form lambda * phi, renormalized
    DiagForm scaled(const RatFunc& lambda) const;

    std::string str() const;

private:
    Field field_;
    std::vector<DiagEntry> entries_;
};

enum class Justification {
    Anisotropic1Dim,
    TwoDimSquare,
    SymbolVanishes,
    SymbolNonzero,
    LocalGlobal,
    SlotPartner,
    Dim5Plus,
};

const char* justification_name(Justification j);

struct LocalCheck {
    Place place;
    bool isotropic;
};

struct IsotropyVerdict {
    bool isotropic;
    Justification justification;
    std::optional<Place> obstruction;    // SymbolNonzero
    std::optional<Poly> slot_partner;    // SlotPartner
    std::vector<LocalCheck> local_table;  // dim-4 decisions
};

// Springer decision over the completion at the place: split the entries by
// valuation parity and test the two residue forms over E_p.
bool local_isotropy(const DiagForm& phi, const Place& place);

// distinct finite places dividing some entry, plus infinity
std::vector<Place> support_places(const DiagForm& phi);

// exact isotropy decision in every dimension
IsotropyVerdict is_isotropic(const DiagForm& phi);

// partner q with ramify(g, h) = ramify(f, q), certifying that f is a slot
// of {g, h} and hence that <f, -g, -h, gh> is isotropic; absent exactly
// when a local obstruction exists.  NotSquareFree on f.
std::optional<Poly> find_slot_partner(const Poly& f, const Poly& g, const Poly& h);

// common slot f (square-free, non-square leading coefficient) together
// with partners realizing every input symbol as {f, partner}
struct CommonSlot {
    Poly f;
    std::vector<Poly> partners;
};
CommonSlot common_slot(const Field& field, const std::vector<std::pair<Poly, Poly>>& symbols);

// direct search for an isotropic vector with deg(x_i) <= degree_cap.
// Exhausts small coefficient spaces in canonical order and samples large
// ones with a seeded budget; absence is NOT an anisotropy proof.
std::optional<std::vector<Poly>> vector_search(const DiagForm& phi, int degree_cap);

// <f, -p, X, -pX> for a monic irreducible factor p of square-free f with
// f(0)p(0) a nonzero square; locally isotropic at every place
DiagForm hyper_example_form(const Poly& f, const Poly& p);  // PreconditionViolated

// the similar shape <f, -G, -H, GH> of a 4-dimensional form, with f the
// normalized determinant class
struct SlotShape {
    Poly f, g, h;
};
SlotShape to_slot_shape(const DiagForm& phi);

// Guarded constructor of the 4-dimensional locally-isotropic form of
// determinant class f attached to an unrealizable square class; over the
// base fields in scope certify never produces the refutation feeding it.
DiagForm counterexample_form(const Poly& f, const Poly& alpha);

}  // namespace qfx
