#include <doctest.h>

#include "minv/field.hpp"

using minv::PrimeField;

TEST_CASE("modular arithmetic basics") {
    PrimeField f3(3), f5(5);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f5.add(0, 4) == 4);
    CHECK(f3.add(1, 2) == 0);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f3.mul(0, 2) == 0);
    CHECK(f5.inv(2) == 3);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.inv(1) == 1);
    CHECK_THROWS_AS(f3.inv(0), std::invalid_argument);
}

TEST_CASE("context rejects non-primes and out-of-range moduli") {
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(91), std::invalid_argument); // 7*13
    CHECK_THROWS_AS(PrimeField(1u << 17), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(65521));
}

TEST_CASE("field axioms exhaustively for p in {3,5}") {
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            CHECK(f.mul(1, a) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.pow(a, p) == a); // Fermat
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < p; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("reduce handles negatives") {
    PrimeField f3(3);
    CHECK(f3.reduce(-1) == 2);
    CHECK(f3.reduce(-3) == 0);
    CHECK(f3.reduce(7) == 1);
}

TEST_CASE("primitive roots") {
    CHECK(PrimeField(3).primitive_root() == 2);
    CHECK(PrimeField(5).primitive_root() == 2);
    CHECK(PrimeField(7).primitive_root() == 3);
}
