#include "helpers.hpp"

using namespace lnk;
using th::pp;

TEST_CASE("field arithmetic basics") {
    const int64_t p = 32003;
    CHECK(fp::add(p - 1, 1, p) == 0);
    CHECK(fp::sub(0, 1, p) == p - 1);
    CHECK(fp::mul(fp::inv(7, p), 7, p) == 1);
    CHECK(fp::pow(3, p - 1, p) == 1);
    CHECK(fp::is_prime(32003));
    CHECK_FALSE(fp::is_prime(32001));
    CHECK_THROWS_AS(fp::inv(0, p), std::domain_error);
}

TEST_CASE("ring construction validation") {
    CHECK_THROWS_AS(PolyRing::make(32004, {"x"}), LnkError);
    CHECK_THROWS_AS(PolyRing::make(2, {"x"}), LnkError);
    CHECK_THROWS_AS(PolyRing::make(32003, {"x", "x"}), LnkError);
    CHECK_THROWS_AS(PolyRing::make(32003, {"x", "y"}, MonOrder::grevlex, {1}), LnkError);
    CHECK_THROWS_AS(PolyRing::make(32003, {"x"}, MonOrder::grevlex, {0}), LnkError);
}

TEST_CASE("polynomial arithmetic examples") {
    auto S = th::S_xy();
    CHECK(to_string(poly_add(pp(S, "x+y"), pp(S, "-y"))) == "x");
    CHECK(to_string(poly_mul(pp(S, "x+y"), pp(S, "x-y"))) == "x^2 + 32002*y^2");

    auto T = PolyRing::make(3, {"x", "y"});
    CHECK(to_string(poly_mul(pp(T, "2*x"), pp(T, "2*y"))) == "x*y");

    auto U = th::S_xyz();
    CHECK_THROWS_AS(poly_add(pp(S, "x"), pp(U, "x")), RingMismatch);
}

TEST_CASE("monomial orders") {
    auto S = th::S_xyz();
    Expo xz{1, 0, 1}, y2{0, 2, 0}, x2{2, 0, 0}, xy{1, 1, 0}, yz{0, 1, 1}, z2{0, 0, 2};
    // degree-2 grevlex chain: x^2 > xy > y^2 > xz > yz > z^2
    CHECK(mono_cmp(*S, x2, xy) > 0);
    CHECK(mono_cmp(*S, xy, y2) > 0);
    CHECK(mono_cmp(*S, y2, xz) > 0);
    CHECK(mono_cmp(*S, xz, yz) > 0);
    CHECK(mono_cmp(*S, yz, z2) > 0);
    CHECK(mono_cmp(*S, xz, xz) == 0);

    auto L = PolyRing::make(32003, {"x", "y"}, MonOrder::lex);
    CHECK(mono_cmp(*L, Expo{1, 0}, Expo{0, 3}) > 0); // x > y^3 under lex

    CHECK_THROWS_AS(mono_cmp(*S, Expo{1, 0}, Expo{1, 0, 0}), LnkError);
}

TEST_CASE("order refines divisibility and respects multiplication") {
    auto S = th::S_xyz();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ex(0, 4);
    for (int it = 0; it < 200; ++it) {
        Expo a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) a[i] = ex(rng), b[i] = ex(rng), c[i] = ex(rng);
        if (mono_divides(a, b) && a != b) CHECK(mono_cmp(*S, b, a) > 0);
        int before = mono_cmp(*S, a, b);
        int after = mono_cmp(*S, mono_mul(a, c), mono_mul(b, c));
        CHECK(before == after);
    }
}

TEST_CASE("ring axioms on random triples") {
    auto S = th::S_xyz();
    std::mt19937_64 rng(42);
    for (int it = 0; it < 60; ++it) {
        Poly a = th::random_poly(S, rng), b = th::random_poly(S, rng), c = th::random_poly(S, rng);
        CHECK(to_string(poly_add(poly_add(a, b), c)) == to_string(poly_add(a, poly_add(b, c))));
        CHECK(to_string(poly_mul(poly_mul(a, b), c)) == to_string(poly_mul(a, poly_mul(b, c))));
        CHECK(to_string(poly_mul(a, poly_add(b, c))) ==
              to_string(poly_add(poly_mul(a, b), poly_mul(a, c))));
        CHECK(to_string(poly_mul(a, b)) == to_string(poly_mul(b, a)));
        CHECK(to_string(poly_sub(a, a)) == "0");
    }
}

TEST_CASE("canonical form survives parse-print roundtrip") {
    auto S = th::S_xyz();
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        Poly f = th::random_poly(S, rng, 8, 5);
        std::string s1 = to_string(f);
        Poly g = parse_poly(S, s1);
        CHECK(to_string(g) == s1);
        // canonical invariants: strictly descending, nonzero coefficients
        for (std::size_t i = 0; i + 1 < g.terms.size(); ++i)
            CHECK(mono_cmp(*S, g.terms[i].e, g.terms[i + 1].e) > 0);
        for (const auto& t : g.terms) CHECK((t.c > 0 && t.c < S->p));
    }
}

TEST_CASE("homogeneity preservation") {
    auto S = th::S_xyz();
    Poly a = pp(S, "x^2 + y*z"), b = pp(S, "x*y + z^2");
    CHECK(a.is_homogeneous());
    CHECK(poly_add(a, b).is_homogeneous());
    Poly prod = poly_mul(a, b);
    CHECK(prod.is_homogeneous());
    CHECK(prod.degree() == 4);
    CHECK_FALSE(pp(S, "x^2 + y").is_homogeneous());
}

TEST_CASE("weighted grading") {
    auto W = PolyRing::make(32003, {"x", "y"}, MonOrder::grevlex, {1, 2});
    CHECK(pp(W, "x^2 + y").is_homogeneous());
    CHECK(pp(W, "x^2 + y").degree() == 2);
    CHECK_FALSE(pp(W, "x + y").is_homogeneous());
}

TEST_CASE("parser errors and syntax") {
    auto S = th::S_xy();
    CHECK_THROWS_AS(pp(S, "w + 1"), ParseError);
    CHECK_THROWS_AS(pp(S, "x +"), ParseError);
    CHECK_THROWS_AS(pp(S, "+ x"), ParseError);
    CHECK_THROWS_AS(pp(S, "x^"), ParseError);
    CHECK(to_string(pp(S, "x - x")) == "0");
    CHECK(to_string(pp(S, "2*x + 32001*x")) == "0");
    CHECK(to_string(pp(S, "2*x + 32002*x")) == "x");
    auto U = th::S_xyz();
    CHECK(to_string(pp(U, "3*x^2*y - z")) == "3*x^2*y + 32002*z");
}

TEST_CASE("exponent overflow is a hard error") {
    Expo big{INT32_MAX, 0};
    Expo one{1, 0};
    CHECK_THROWS_AS(mono_mul(big, one), CapExceeded);
}
