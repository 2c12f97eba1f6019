#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pir/gf.hpp"

using pir::Error;
using pir::ErrorKind;
namespace gf = pir::gf;

TEST_CASE("prime power sieve matches trial factorization") {
    for (long long q = 1; q <= 3000; ++q) {
        // oracle: factorize q and count distinct primes
        long long rest = q;
        int distinct = 0;
        for (long long d = 2; d * d <= rest; ++d) {
            if (rest % d == 0) {
                ++distinct;
                while (rest % d == 0) rest /= d;
            }
        }
        if (rest > 1) ++distinct;
        bool expected = (q >= 2) && distinct == 1;
        CHECK(gf::is_prime_power(q) == expected);
    }
    long long p = 0;
    int n = 0;
    REQUIRE(gf::is_prime_power(243, &p, &n));
    CHECK(p == 3);
    CHECK(n == 5);
}

TEST_CASE("make_field basics") {
    gf::Field f5 = gf::Field::make(5);
    CHECK(f5.p() == 5);
    CHECK(f5.n() == 1);
    CHECK(f5.mul(2, 3) == 1); // 6 mod 5

    gf::Field f4 = gf::Field::make(4);
    CHECK(f4.p() == 2);
    CHECK(f4.n() == 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1}); // 1 + x + x^2
    // x * (1+x) = x + x^2 = 1 under x^2 = x+1; element 2 encodes x, 3 encodes 1+x
    CHECK(f4.mul(2, 3) == 1);

    CHECK_THROWS_AS(gf::Field::make(6), Error);
    CHECK_THROWS_AS(gf::Field::make(1), Error);
    try {
        gf::Field::make(6);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrimePower);
    }
}

TEST_CASE("GF(4) multiplication against brute-force polynomial table") {
    gf::Field f = gf::Field::make(4);
    // oracle: multiply coefficient vectors by hand, reduce via x^2 = x+1
    auto slow_mul = [](int a, int b) {
        int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
        c0 = (c0 + c2) & 1; // x^2 -> 1 + x
        c1 = (c1 + c2) & 1;
        return c0 + 2 * c1;
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(f.mul(a, b) == slow_mul(a, b));
}

TEST_CASE("field axioms exhaustively for q <= 64") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        gf::Field f = gf::Field::make(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group of order q-1") {
    for (long long q : {4, 5, 7, 8, 9, 16, 25, 27, 49, 64}) {
        gf::Field f = gf::Field::make(q);
        // element orders divide q-1 and some element attains it
        bool found_generator = false;
        for (int a = 1; a < q; ++a) {
            int x = a;
            int order = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++order;
            }
            CHECK((static_cast<int>(q) - 1) % order == 0);
            if (order == q - 1) found_generator = true;
        }
        CHECK(found_generator);
    }
}

TEST_CASE("built-in moduli are irreducible and lexicographically least") {
    for (long long q : {4, 8, 16, 32, 64, 128, 256, 9, 27, 81, 243, 25, 125, 49, 121, 169}) {
        long long p = 0;
        int n = 0;
        REQUIRE(gf::is_prime_power(q, &p, &n));
        auto mod = gf::default_modulus(static_cast<int>(p), n);
        REQUIRE(static_cast<int>(mod.size()) == n + 1);
        CHECK(mod[n] == 1);
        CHECK(gf::is_irreducible(mod, static_cast<int>(p)));
        // lexicographically least: every smaller monic candidate is reducible
        long long given = 0;
        for (int i = n - 1; i >= 0; --i) given = given * p + mod[i];
        for (long long low = 0; low < given; ++low) {
            std::vector<int> cand(n + 1, 0);
            cand[n] = 1;
            long long rest = low;
            for (int i = 0; i < n; ++i) {
                cand[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            CHECK(!gf::is_irreducible(cand, static_cast<int>(p)));
        }
    }
}

TEST_CASE("inv(0) raises DivisionByZero") {
    gf::Field f = gf::Field::make(9);
    try {
        f.inv(0);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("coefficient round-trip") {
    gf::Field f = gf::Field::make(27);
    for (int a = 0; a < 27; ++a) CHECK(f.from_coeffs(f.coeffs(a)) == a);
}
