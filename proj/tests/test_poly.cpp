#include <doctest.h>

#include "qfx/poly.hpp"

using namespace qfx;

namespace {

template <class F>
std::string thrown_code(F&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return "";
}

Poly P(const Field& f, const std::vector<int64_t>& ascending) { return Poly::from_ints(f, ascending); }

}  // namespace

TEST_CASE("degree convention and arithmetic") {
    Field f3 = make_field(3);
    Poly zero = Poly::zero(f3);
    CHECK(zero.deg() == Poly::kNegInfDeg);
    Poly x = Poly::X(f3);
    CHECK((x * x + x).deg() == 2);
    CHECK((x - x).is_zero());
    Poly a = P(f3, {1, 2, 0, 1});  // X^3 + 2X + 1
    Poly b = P(f3, {2, 1});        // X + 2
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
    CHECK(thrown_code([&] { divmod(a, zero); }) == "DivisionByZero");
}

TEST_CASE("factor examples") {
    Field f3 = make_field(3);
    // X^3 - X has the three roots of F_3
    Factorization fa = factor(P(f3, {0, 2, 0, 1}));
    CHECK(fa.unit.is_one());
    REQUIRE(fa.factors.size() == 3);
    CHECK(fa.factors[0].first == P(f3, {0, 1}));  // X
    CHECK(fa.factors[1].first == P(f3, {1, 1}));  // X+1
    CHECK(fa.factors[2].first == P(f3, {2, 1}));  // X+2
    for (const auto& [p, e] : fa.factors) CHECK(e == 1);

    // X^2 + 1 is irreducible: -1 is a non-square mod 3
    Factorization fb = factor(P(f3, {1, 0, 1}));
    REQUIRE(fb.factors.size() == 1);
    CHECK(fb.factors[0] == std::pair<Poly, int>(P(f3, {1, 0, 1}), 1));

    // 2 X^2 (X+1)
    Factorization fc = factor(P(f3, {0, 0, 2, 2}));
    CHECK(fc.unit == f3->from_int(2));
    REQUIRE(fc.factors.size() == 2);
    CHECK(fc.factors[0] == std::pair<Poly, int>(P(f3, {0, 1}), 2));
    CHECK(fc.factors[1] == std::pair<Poly, int>(P(f3, {1, 1}), 1));

    CHECK(thrown_code([&] { factor(Poly::zero(f3)); }) == "ZeroPolynomial");
}

TEST_CASE("factor round trip on random inputs") {
    for (auto [p, k] : std::vector<std::pair<uint64_t, uint64_t>>{{3, 1}, {5, 1}, {3, 2}}) {
        Field f = k == 1 ? make_field(p) : make_field(p, k);
        Rng rng(0xfac70 + p * 10 + k);
        for (int trial = 0; trial < 1000; ++trial) {
            Poly a = random_nonzero_poly(f, 1 + static_cast<int>(rng.below(9)), rng);
            Factorization fa = factor(a);
            CHECK(fa.product() == a);
            for (const auto& [prime, e] : fa.factors) {
                CHECK(prime.is_monic());
                CHECK(is_irreducible(prime));
            }
            CHECK(is_squarefree(a) == std::all_of(fa.factors.begin(), fa.factors.end(),
                                                  [](const auto& pe) { return pe.second == 1; }));
        }
    }
}

TEST_CASE("p-th power inputs factor correctly") {
    Field f9 = make_field(3, 2);
    Poly x = Poly::X(f9);
    Poly g = x * x + Poly::constant(f9->generator());  // X^2 + t
    Poly cube = g * g * g;                             // derivative vanishes
    Factorization fa = factor(cube);
    CHECK(fa.product() == cube);
    CHECK(!is_squarefree(cube));
}

TEST_CASE("is_squarefree") {
    Field f3 = make_field(3);
    CHECK(is_squarefree(P(f3, {0, 2, 0, 1})));  // distinct roots
    Poly sq = P(f3, {1, 0, 1});
    CHECK(!is_squarefree(sq * sq * Poly::constant(f3->from_int(2))));
    CHECK(is_squarefree(P(f3, {2})));  // units are square-free
    CHECK(thrown_code([&] { is_squarefree(Poly::zero(f3)); }) == "ZeroPolynomial");
}

TEST_CASE("is_irreducible") {
    Field f3 = make_field(3), f5 = make_field(5);
    CHECK(is_irreducible(P(f3, {1, 0, 1})));   // X^2+1
    CHECK(!is_irreducible(P(f3, {2, 0, 1})));  // X^2+2 = (X-1)(X+1)
    CHECK(is_irreducible(P(f5, {2, 0, 1})));   // -2 = 3 is a non-square mod 5
    CHECK(thrown_code([&] { is_irreducible(P(f3, {1})); }) == "ConstantInput");

    // oracle: a quadratic or cubic is irreducible iff it has no root
    for (int d = 2; d <= 3; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= 3;
        for (uint64_t ord = 0; ord < count; ++ord) {
            Poly f = nth_monic_of_degree(f3, d, ord);
            bool has_root = false;
            for (int a = 0; a < 3; ++a)
                if (f.eval(f3->from_int(a)).is_zero()) has_root = true;
            CHECK(is_irreducible(f) == !has_root);
        }
    }
}

TEST_CASE("resultant examples and multiplicativity") {
    Field f3 = make_field(3);
    // Res(X^2+1, X): the product of X over the roots +-i is -i^2 = 1
    CHECK(resultant(P(f3, {1, 0, 1}), P(f3, {0, 1})) == f3->one());
    CHECK(resultant(P(f3, {0, 1}), P(f3, {0, 1})) == f3->zero());
    CHECK(resultant(P(f3, {2, 1}), P(f3, {2})) == f3->from_int(2));  // deg f = 1: Res = g(1)

    Rng rng(0x7e5);
    for (int trial = 0; trial < 300; ++trial) {
        Poly f = random_nonzero_poly(f3, 4, rng);
        Poly g = random_nonzero_poly(f3, 3, rng);
        Poly h = random_nonzero_poly(f3, 3, rng);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
        CHECK((resultant(f, g) == f3->zero()) == !gcd(f, g).is_constant());
    }
}

TEST_CASE("crt") {
    Field f3 = make_field(3);
    // p(0) = 1 and p(-1) = 2 give p = 2X + 1
    Poly r = crt(f3, {{P(f3, {0, 1}), P(f3, {1})}, {P(f3, {1, 1}), P(f3, {2})}});
    CHECK(r == P(f3, {1, 2}));
    CHECK(crt(f3, {{P(f3, {0, 1}), Poly::zero(f3)}}) == Poly::zero(f3));
    CHECK(thrown_code([&] {
              crt(f3, {{P(f3, {0, 1}), P(f3, {1})}, {P(f3, {0, 1}), P(f3, {2})}});
          }) == "NonCoprimeModuli");

    Rng rng(0xc27);
    for (int trial = 0; trial < 200; ++trial) {
        Poly m1 = nth_monic_of_degree(f3, 2, rng.below(9));
        Poly m2 = nth_monic_of_degree(f3, 3, rng.below(27));
        if (!gcd(m1, m2).is_constant()) continue;
        Poly v1 = random_poly(f3, 1, rng);
        Poly v2 = random_poly(f3, 2, rng);
        Poly u = crt(f3, {{m1, v1}, {m2, v2}});
        CHECK(u % m1 == v1 % m1);
        CHECK(u % m2 == v2 % m2);
        CHECK(u.deg() < m1.deg() + m2.deg());
    }
}

TEST_CASE("square roots of polynomials") {
    Field f3 = make_field(3);
    Rng rng(0x59);
    for (int trial = 0; trial < 200; ++trial) {
        Poly s = random_nonzero_poly(f3, 4, rng);
        auto r = poly_sqrt(s * s);
        REQUIRE(r.has_value());
        CHECK(*r * *r == s * s);
        Poly not_square = s * s + Poly::one(f3);
        auto r2 = poly_sqrt(not_square);
        if (r2) CHECK(*r2 * *r2 == not_square);
    }
    CHECK(!poly_sqrt(P(f3, {0, 1})).has_value());
    CHECK(!poly_sqrt(P(f3, {2, 0, 1})).has_value());  // lc fine but (X^2+2) is not a square
}

TEST_CASE("odd multiplicity part") {
    Field f3 = make_field(3);
    Poly x = P(f3, {0, 1}), x1 = P(f3, {1, 1});
    Poly f = Poly::constant(f3->from_int(2)) * x * x * x * x1;
    CHECK(odd_multiplicity_part(f) == x * x1);
}

TEST_CASE("canonical enumeration") {
    Field f3 = make_field(3);
    CHECK(count_polys_of_degree(f3, 0) == 2);
    CHECK(count_polys_of_degree(f3, 2) == 18);
    CHECK(nth_poly_of_degree(f3, 0, 0) == P(f3, {1}));
    CHECK(nth_poly_of_degree(f3, 1, 0) == P(f3, {0, 1}));   // X
    CHECK(nth_poly_of_degree(f3, 1, 1) == P(f3, {1, 1}));   // X+1
    CHECK(nth_monic_of_degree(f3, 2, 1) == P(f3, {1, 0, 1}));
    // the order is strictly increasing in poly_less
    for (uint64_t n = 0; n + 1 < 18; ++n)
        CHECK(poly_less(nth_poly_of_degree(f3, 2, n), nth_poly_of_degree(f3, 2, n + 1)));
    CHECK(monic_irreducibles(f3, 1).size() == 3);
    CHECK(monic_irreducibles(f3, 2).size() == 3);
    CHECK(monic_irreducibles(f3, 3).size() == 8);
    CHECK(monic_irreducibles(f3, 4).size() == 18);
}

TEST_CASE("text grammar round trip") {
    Field f3 = make_field(3);
    Field f9 = make_field(3, 2);
    CHECK(parse_poly(f3, "2*X^4 + X + 1") == P(f3, {1, 1, 0, 0, 2}));
    CHECK(parse_poly(f3, "X^3-X") == P(f3, {0, 2, 0, 1}));
    CHECK(parse_poly(f9, "2*X^4 + (t+1)*X + 1").coeff(1) == f9->generator() + f9->one());
    Rng rng(0x909);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = random_poly(f9, 5, rng);
        CHECK(parse_poly(f9, f.str()) == f);
    }
    CHECK(thrown_code([&] { parse_poly(f3, "X^^2"); }) == "ParseError");
    CHECK(thrown_code([&] { parse_poly(f3, "t+1"); }) == "ParseError");  // no generator over F_3
}
