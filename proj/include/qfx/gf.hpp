#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qfx/error.hpp"

namespace qfx {

using u128 = unsigned __int128;

class FieldImpl;

// Fields are immutable after construction and shared by handle.
using Field = std::shared_ptr<const FieldImpl>;

// F_{p^k} with the canonical modulus: the least monic irreducible of
// degree k over F_p in graded-lex coefficient order (high coefficient
// compared first).  Throws NonPrime / EvenCharacteristic.
Field make_field(uint64_t p, uint64_t k = 1);

// Same field with a caller-chosen monic irreducible modulus, given by
// ascending coefficients (modulus[i] = coefficient of t^i, size k+1).
Field make_field(uint64_t p, uint64_t k, const std::vector<uint64_t>& modulus);

class Fq {
public:
    Fq() = default;  // null element; usable only as a container placeholder

    const Field& field() const { return field_; }
    uint64_t index() const { return idx_; }

    // Coefficients (c_0, ..., c_{k-1}) of the value as a polynomial in the
    // field generator; c_0 is the constant term.
    std::vector<uint64_t> coeffs() const;

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq inv() const;
    Fq pow(u128 e) const;

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend class FieldImpl;
    Fq(Field f, uint64_t idx) : field_(std::move(f)), idx_(idx) {}

    Field field_;
    uint64_t idx_ = 0;
};

class FieldImpl : public std::enable_shared_from_this<FieldImpl> {
public:
    uint64_t p() const { return p_; }
    uint64_t k() const { return k_; }
    uint64_t q() const { return q_; }

    // Ascending-coefficient modulus; empty for prime fields.
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    Fq zero() const { return element(0); }
    Fq one() const { return element(one_idx_); }
    Fq generator() const;  // t; requires k > 1
    Fq from_int(int64_t v) const;
    // Element with the given canonical index; the enumeration orders
    // coefficient sequences (c_0, ..., c_{k-1}) lexicographically.
    Fq element(uint64_t idx) const;
    Fq from_coeffs(const std::vector<uint64_t>& c) const;

    bool same(const FieldImpl& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    std::string designator() const;  // "gf(p)" or "gf(p^k)"

    // index-level arithmetic
    uint64_t add_idx(uint64_t a, uint64_t b) const;
    uint64_t sub_idx(uint64_t a, uint64_t b) const;
    uint64_t mul_idx(uint64_t a, uint64_t b) const;
    uint64_t neg_idx(uint64_t a) const;
    uint64_t inv_idx(uint64_t a) const;
    uint64_t pow_idx(uint64_t a, u128 e) const;

private:
    friend Field make_field(uint64_t, uint64_t);
    friend Field make_field(uint64_t, uint64_t, const std::vector<uint64_t>&);
    FieldImpl(uint64_t p, uint64_t k, std::vector<uint64_t> modulus);

    std::vector<uint64_t> to_digits(uint64_t idx) const;
    uint64_t from_digits(const std::vector<uint64_t>& d) const;
    uint64_t mul_digits(uint64_t a, uint64_t b) const;

    uint64_t p_, k_, q_;
    uint64_t one_idx_;
    std::vector<uint64_t> modulus_;  // ascending coefficients, size k+1; empty if k == 1
    bool tabled_ = false;
    std::vector<uint32_t> add_t_, mul_t_, neg_t_, inv_t_;
};

// Euler criterion x^((q-1)/2) = 1.  Throws ZeroInput on x = 0.
bool is_square(const Fq& x);

// Deterministic Tonelli-Shanks; returns the least of the two roots in the
// canonical element order.  Throws NotASquare.
Fq sqrt(const Fq& x);

// First non-square in the canonical element enumeration.
Fq canonical_nonsquare(const Field& field);

// Norm x -> x^((q^d - 1)/(q - 1)) into a subfield (same p, degree dividing).
// Throws NotASubfield.
Fq norm_to_subfield(const Fq& x, const Field& subfield);

// Canonical embedding of a subfield element: the subfield generator maps to
// the least root of the subfield modulus in `into`.
Fq embed(const Fq& x, const Field& into);

}  // namespace qfx
