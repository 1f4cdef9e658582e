#include <doctest.h>

#include <random>

#include "minv/poly.hpp"

using namespace minv;

namespace {

PrimeField f3(3);

Polynomial var(PrimeField f, int n, int i) { return Polynomial::variable(f, n, i); }

// brute-force equality of polynomial functions on all points of F_p^n;
// for the degrees used here function equality pins down the polynomials
void check_eval_equal(const Polynomial& a, const Polynomial& b) {
    REQUIRE(a.nvars() == b.nvars());
    std::uint32_t p = a.field().p();
    std::uint64_t total = 1;
    for (int i = 0; i < a.nvars(); ++i)
        total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> pt(static_cast<std::size_t>(a.nvars()));
        std::uint64_t t = idx;
        for (auto& x : pt) {
            x = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        CHECK(a.eval(pt) == b.eval(pt));
    }
}

Polynomial random_poly(std::mt19937& rng, PrimeField f, int nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> coeff(0, f.p() - 1);
    std::vector<std::pair<Exponents, std::int64_t>> raw;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        int budget = max_deg;
        for (auto& x : e) {
            x = expo(rng) % (budget + 1);
            budget -= x;
        }
        raw.emplace_back(std::move(e), coeff(rng));
    }
    return Polynomial::from_terms(f, nvars, std::move(raw));
}

} // namespace

TEST_CASE("addition with cancellation") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    CHECK(x1 + x2 + x1.scaled(2) == x2); // 3*x1 = 0
    Polynomial f = x1 * x1 + x2;
    CHECK(f + Polynomial::zero(f3, 2) == f);
    CHECK((x1 * x1) + (x2 * x2) == Polynomial::from_terms(f3, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));
}

TEST_CASE("product with cross-term cancellation") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    // (x1+x2)(x1+2x2) = x1^2 + 2x2^2 over F_3
    Polynomial prod = (x1 + x2) * (x1 + x2.scaled(2));
    Polynomial expect = Polynomial::from_terms(f3, 2, {{{2, 0}, 1}, {{0, 2}, 2}});
    CHECK(prod == expect);
    check_eval_equal(prod, expect);
    CHECK(prod * Polynomial::constant(f3, 2, 1) == prod);
    CHECK(prod * Polynomial::zero(f3, 2) == Polynomial::zero(f3, 2));
}

TEST_CASE("power: Frobenius cube over F_3") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    Polynomial cube = (x1 + x2).pow(3);
    CHECK(cube == x1.pow(3) + x2.pow(3));
    CHECK((x1 + x2).pow(1) == x1 + x2);
    CHECK((x1 + x2).pow(0) == Polynomial::constant(f3, 2, 1));
}

TEST_CASE("homogeneity reporting") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    Homogeneity h = (x1 * x1 + x1 * x2).homogeneity();
    CHECK(h.homogeneous);
    CHECK(*h.degree == 2);
    h = (x1 * x1 + x2).homogeneity();
    CHECK(!h.homogeneous);
    h = Polynomial::zero(f3, 2).homogeneity();
    CHECK(h.homogeneous);
    CHECK(!h.degree.has_value());
}

TEST_CASE("canonical term order is graded lex, highest first") {
    Polynomial f = Polynomial::from_terms(
        f3, 2, {{{0, 2}, 1}, {{2, 0}, 1}, {{1, 1}, 2}, {{0, 0}, 1}, {{1, 0}, 2}});
    std::vector<Exponents> order;
    for (const Term& t : f.terms())
        order.push_back(t.mono.exps);
    CHECK(order == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 0}});
}

TEST_CASE("substitution basics") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    SubstitutionMap s({x1 + x2, x2});
    // x1^2 -> x1^2 + 2 x1 x2 + x2^2
    Polynomial img = substitute(x1 * x1, s);
    CHECK(img == Polynomial::from_terms(f3, 2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));

    SubstitutionMap id = SubstitutionMap::identity(f3, 2);
    Polynomial f = x1 * x1 * x2 + x2.scaled(2);
    CHECK(substitute(f, id) == f);

    SubstitutionMap swap({x2, x1});
    CHECK(substitute(x1 * x2, swap) == x1 * x2);
}

TEST_CASE("substitution into zero image kills terms") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    SubstitutionMap s({Polynomial::zero(f3, 2), x2});
    CHECK(substitute(x1 * x2 + x2, s) == x2);
    CHECK(substitute(x1, s).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240817);
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 100; ++trial) {
            int nvars = 1 + static_cast<int>(rng() % 5);
            Polynomial a = random_poly(rng, f, nvars, 6, 6);
            Polynomial b = random_poly(rng, f, nvars, 6, 6);
            Polynomial c = random_poly(rng, f, nvars, 6, 6);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("substitution is a ring homomorphism on random inputs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = (trial % 2 == 0) ? 3 : 5;
        PrimeField f(p);
        int nvars = 1 + static_cast<int>(rng() % 3);
        std::vector<Polynomial> images;
        for (int i = 0; i < nvars; ++i)
            images.push_back(random_poly(rng, f, nvars, 3, 4));
        SubstitutionMap s(images);
        Polynomial a = random_poly(rng, f, nvars, 4, 5);
        Polynomial b = random_poly(rng, f, nvars, 4, 5);
        CHECK(substitute(a * b, s) == substitute(a, s) * substitute(b, s));
        CHECK(substitute(a + b, s) == substitute(a, s) + substitute(b, s));
    }
}

TEST_CASE("Frobenius identity on random pairs") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = (trial % 2 == 0) ? 3 : 5;
        PrimeField f(p);
        int nvars = 1 + static_cast<int>(rng() % 3);
        Polynomial a = random_poly(rng, f, nvars, 4, 5);
        Polynomial b = random_poly(rng, f, nvars, 4, 5);
        CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
}

TEST_CASE("reindexing embeds variables") {
    Polynomial x1 = var(f3, 2, 0), x2 = var(f3, 2, 1);
    Polynomial f = x1 * x1 + x2.scaled(2);
    Polynomial g = f.reindexed(4, 1); // x1 -> y2, x2 -> y3
    Polynomial y2 = var(f3, 4, 1), y3 = var(f3, 4, 2);
    CHECK(g == y2 * y2 + y3.scaled(2));
    CHECK_THROWS_AS(f.reindexed(2, 1), std::invalid_argument);
}

TEST_CASE("shape mismatches are rejected") {
    Polynomial a = var(f3, 2, 0);
    Polynomial b = var(f3, 3, 0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    PrimeField f5(5);
    Polynomial c = var(f5, 2, 0);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("exponent overflow guard") {
    CHECK_THROWS_AS(Monomial(Exponents{1 << 30, 1 << 30}), std::overflow_error);
    CHECK_THROWS_AS(Monomial(Exponents{-1}), std::invalid_argument);
    Polynomial big = Polynomial::from_terms(f3, 1, {{{1 << 29}, 1}});
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big.pow(4), std::overflow_error);
}

TEST_CASE("large-variable-count fallback path matches packed path results") {
    // 9 variables forces the generic accumulator; verify against evaluation
    PrimeField f(3);
    std::mt19937 rng(99);
    Polynomial a = random_poly(rng, f, 9, 3, 5);
    Polynomial b = random_poly(rng, f, 9, 3, 5);
    Polynomial prod = a * b;
    std::uniform_int_distribution<std::uint32_t> pick(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> pt(9);
        for (auto& x : pt)
            x = pick(rng);
        CHECK(prod.eval(pt) == f.mul(a.eval(pt), b.eval(pt)));
    }
}
