#include <doctest.h>

#include <set>

#include "qfx/gf.hpp"
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

// oracle: squares of the unit group by exhaustive squaring
std::set<uint64_t> square_set(const Field& f) {
    std::set<uint64_t> s;
    for (uint64_t i = 1; i < f->q(); ++i) {
        Fq x = f->element(i);
        s.insert((x * x).index());
    }
    return s;
}

}  // namespace

TEST_CASE("make_field basics and errors") {
    Field f3 = make_field(3);
    CHECK(f3->p() == 3);
    CHECK(f3->k() == 1);
    CHECK(f3->q() == 3);
    CHECK(f3->modulus().empty());

    CHECK(thrown_code([] { make_field(2, 1); }) == "EvenCharacteristic");
    CHECK(thrown_code([] { make_field(9, 1); }) == "NonPrime");
    CHECK(thrown_code([] { make_field(1, 1); }) == "NonPrime");
    CHECK(thrown_code([] { make_field(3, 0); }) == "BadDegree");
}

TEST_CASE("canonical modulus of F_9 is the least irreducible quadratic") {
    // oracle: walk monic quadratics X^2 + b X + c in lex order of (b, c) and
    // return the first with no root in F_3
    Field f3 = make_field(3);
    std::vector<uint64_t> expected;
    bool found = false;
    for (uint64_t b = 0; b < 3 && !found; ++b) {
        for (uint64_t c = 0; c < 3 && !found; ++c) {
            bool has_root = false;
            for (uint64_t a = 0; a < 3; ++a)
                if ((a * a + b * a + c) % 3 == 0) has_root = true;
            if (!has_root) {
                expected = {c, b, 1};
                found = true;
            }
        }
    }
    REQUIRE(found);
    Field f9 = make_field(3, 2);
    CHECK(f9->modulus() == expected);
    CHECK(f9->modulus() == std::vector<uint64_t>{1, 0, 1});  // X^2 + 1

    // user-supplied modulus: X^2 + X + 2 is irreducible over F_3
    Field f9b = make_field(3, 2, {2, 1, 1});
    CHECK(f9b->q() == 9);
    CHECK(thrown_code([] { make_field(3, 2, {2, 0, 1}); }) == "BadModulus");  // X^2+2 = (X-1)(X+1)
}

TEST_CASE("is_square") {
    Field f3 = make_field(3), f5 = make_field(5), f9 = make_field(3, 2);
    CHECK(!is_square(f3->from_int(2)));  // -1 is a non-square mod 3
    CHECK(is_square(f5->from_int(4)));   // 4 = 2^2
    CHECK(thrown_code([&] { is_square(f3->zero()); }) == "ZeroInput");

    // a multiplicative generator of F_9 is not a square
    auto squares = square_set(f9);
    for (uint64_t i = 1; i < 9; ++i) {
        Fq x = f9->element(i);
        bool gen = true;
        Fq pw = x;
        for (int e = 1; e < 8; ++e) {
            if (e < 8 && pw.is_one()) gen = false;
            pw = pw * x;
        }
        if (gen) CHECK(!is_square(x));
        CHECK(is_square(x) == (squares.count(i) > 0));
    }
}

TEST_CASE("sqrt is canonical and exact") {
    Field f3 = make_field(3), f5 = make_field(5), f7 = make_field(7);
    CHECK(sqrt(f5->from_int(4)).index() == 2);  // 2^2 = 4 and 2 < 3
    CHECK(sqrt(f3->from_int(1)).index() == 1);
    // oracle over F_7: 3^2 = 9 = 2, 4^2 = 16 = 2, least root is 3
    CHECK(sqrt(f7->from_int(2)).index() == 3);
    CHECK(thrown_code([&] { sqrt(f3->from_int(2)); }) == "NotASquare");

    for (uint64_t qk : {3u, 5u, 7u, 9u, 25u, 27u, 81u}) {
        Field f = qk == 9 ? make_field(3, 2)
                 : qk == 25 ? make_field(5, 2)
                 : qk == 27 ? make_field(3, 3)
                 : qk == 81 ? make_field(3, 4)
                            : make_field(qk);
        auto squares = square_set(f);
        CHECK(squares.size() == (f->q() - 1) / 2);
        for (uint64_t i : squares) {
            Fq x = f->element(i);
            Fq r = sqrt(x);
            CHECK(r * r == x);
            CHECK(sqrt(x) == r);  // deterministic
            CHECK(r.index() <= (-r).index());
        }
    }
}

TEST_CASE("canonical_nonsquare") {
    CHECK(canonical_nonsquare(make_field(3)).index() == 2);
    CHECK(canonical_nonsquare(make_field(5)).index() == 2);  // squares of F_5 are {1,4}
    Field f9 = make_field(3, 2);
    auto squares = square_set(f9);
    Fq ns = canonical_nonsquare(f9);
    CHECK(squares.count(ns.index()) == 0);
    for (uint64_t i = 1; i < ns.index(); ++i) CHECK(squares.count(i) == 1);
}

TEST_CASE("square classes partition the unit group") {
    for (uint64_t qk : {3u, 5u, 7u, 9u, 27u, 81u}) {
        Field f = qk == 9 ? make_field(3, 2)
                 : qk == 27 ? make_field(3, 3)
                 : qk == 81 ? make_field(3, 4)
                            : make_field(qk);
        Fq ns = canonical_nonsquare(f);
        for (uint64_t i = 1; i < f->q(); ++i) {
            Fq x = f->element(i);
            CHECK(is_square(x) != is_square(x * ns));
        }
    }
}

TEST_CASE("norm to the prime field") {
    Field f3 = make_field(3);
    Field f9 = make_field(3, 2);
    // modulus is X^2+1, so t^2 = -1 and t plays the role of i
    Fq i = f9->generator();
    CHECK(i * i == -f9->one());
    CHECK(norm_to_subfield(i, f3) == f3->one());  // i^4 = 1

    // a generator has norm of order 2, hence -1 = 2
    Fq g = f9->element(0);
    for (uint64_t idx = 1; idx < 9; ++idx) {
        Fq x = f9->element(idx);
        bool gen = true;
        Fq pw = x;
        for (int e = 1; e < 8; ++e) {
            if (pw.is_one()) gen = false;
            pw = pw * x;
        }
        if (gen) {
            g = x;
            break;
        }
    }
    CHECK(norm_to_subfield(g, f3) == f3->from_int(2));
    CHECK(norm_to_subfield(f3->from_int(2), f3) == f3->from_int(2));  // identity extension

    CHECK(thrown_code([&] { norm_to_subfield(i, make_field(5)); }) == "NotASubfield");
    CHECK(thrown_code([&] { norm_to_subfield(make_field(3, 3)->generator(), f9); }) == "NotASubfield");
}

TEST_CASE("norm is multiplicative, surjective and a square-class isomorphism") {
    Field f3 = make_field(3);
    for (uint64_t d = 1; d <= 4; ++d) {
        Field big = d == 1 ? f3 : make_field(3, d);
        std::set<uint64_t> image;
        for (uint64_t i = 1; i < big->q(); ++i) {
            Fq x = big->element(i);
            Fq n = norm_to_subfield(x, f3);
            image.insert(n.index());
            CHECK(is_square(n) == is_square(x));  // classes map to classes
            for (uint64_t j = 1; j < std::min<uint64_t>(big->q(), 25); ++j) {
                Fq y = big->element(j);
                CHECK(norm_to_subfield(x * y, f3) == norm_to_subfield(x, f3) * norm_to_subfield(y, f3));
            }
        }
        CHECK(image.size() == 2);  // both unit classes of F_3 are hit
    }
}

TEST_CASE("norm to an intermediate subfield") {
    Field f9 = make_field(3, 2);
    Field f81 = make_field(3, 4);
    for (uint64_t i = 1; i < 81; i += 7) {
        Fq x = f81->element(i);
        Fq n = norm_to_subfield(x, f9);
        CHECK(embed(n, f81) == x.pow(10));  // (81-1)/(9-1) = 10
    }
}

TEST_CASE("element text round trip") {
    Field f9 = make_field(3, 2);
    for (uint64_t i = 0; i < 9; ++i) {
        Fq x = f9->element(i);
        CHECK(parse_element(f9, x.str()) == x);
    }
    CHECK(parse_element(f9, "t+1") == f9->generator() + f9->one());
}

TEST_CASE("tables and generic arithmetic agree") {
    // gf(101^2) has q = 10201, above the table limit; exercise the generic
    // digit arithmetic against basic identities
    Field f = make_field(101, 2);
    Fq a = f->element(1234), b = f->element(8888);
    CHECK(a + (-a) == f->zero());
    CHECK((a * b) * b.inv() == a);
    CHECK(a.pow(f->q() - 1) == f->one());
}
