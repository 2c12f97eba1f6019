#pragma once

#include <cstdint>
#include <vector>

#include "pir/errors.hpp"

namespace pir::gf {

// Writes p and n such that q = p^n when q is a prime power (n >= 1).
bool is_prime_power(long long q, long long* p_out = nullptr, int* n_out = nullptr);

// Monic irreducible polynomial of degree n over GF(p), coefficients
// low-to-high, length n+1, leading coefficient 1. Entries for p^n <= 256 come
// from a fixed built-in table; beyond that the lexicographically least
// irreducible is searched deterministically. Either way the result is the
// lexicographically least monic irreducible, where "least" compares the
// non-leading coefficient vector encoded as sum(c_i * p^i).
std::vector<int> default_modulus(int p, int n);

bool is_irreducible(const std::vector<int>& poly, int p);

// GF(p^n) with elements represented as integers in [0, q). The integer a
// encodes the coefficient vector of a polynomial of degree < n via
// a = sum(c_i * p^i); arithmetic is mod (modulus, p). The canonical element
// order used everywhere downstream is simply 0, 1, ..., q-1.
class Field {
public:
    static Field make(long long q);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const; // DivisionByZero on 0
    int pow(int a, long long e) const;

    std::vector<int> coeffs(int a) const; // length n, low-to-high
    int from_coeffs(const std::vector<int>& c) const;

private:
    Field() = default;

    int mul_slow(int a, int b) const;

    int p_ = 0;
    int n_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    // Full tables when q is small (always the case for constructed
    // geometries); empty otherwise and ops fall back to polynomial math.
    std::vector<int> add_table_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
};

} // namespace pir::gf
