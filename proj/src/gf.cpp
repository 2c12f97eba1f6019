#include "pir/gf.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace pir::gf {

bool is_prime_power(long long q, long long* p_out, int* n_out) {
    if (q < 2) return false;
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q; // q itself prime
    long long rest = q;
    int n = 0;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (n_out) *n_out = n;
    return true;
}

namespace {

// Polynomials over GF(p) as low-to-high coefficient vectors.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a[da];
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = (t - c * m[i]) % p;
                if (t < 0) t += p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

long long poly_encode(const Poly& a, int p) {
    long long v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly poly_decode(long long v, int p) {
    Poly a;
    while (v > 0) {
        a.push_back(static_cast<int>(v % p));
        v /= p;
    }
    return a;
}

} // namespace

bool is_irreducible(const std::vector<int>& poly, int p) {
    Poly f = poly;
    trim(f);
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2. Desk-scale
    // degrees only (n <= 4 in practice), so the p^(deg/2+1) scan is cheap.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long low = 0; low < count; ++low) {
            Poly g = poly_decode(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            Poly rem = poly_mod(f, g, p);
            if (rem.empty()) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> search_modulus(int p, int n) {
    if (n == 1) return {0, 1}; // the polynomial x: GF(p) itself
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
        Poly f = poly_decode(low, p);
        f.resize(n + 1, 0);
        f[n] = 1;
        if (is_irreducible(f, p)) return f;
    }
    fail(ErrorKind::ConstructionFailed,
         "no irreducible polynomial found for p=" + std::to_string(p) +
             ", n=" + std::to_string(n));
}

struct ModulusEntry {
    int p;
    int n;
    std::vector<int> modulus;
};

// Lexicographically least monic irreducibles for every proper prime power
// p^n <= 256 (n >= 2). Verified against search_modulus by the unit tests.
const std::array<ModulusEntry, 15>& modulus_table() {
    static const std::array<ModulusEntry, 15> table = {{
        {2, 2, {1, 1, 1}},             // x^2+x+1
        {2, 3, {1, 1, 0, 1}},          // x^3+x+1
        {2, 4, {1, 1, 0, 0, 1}},       // x^4+x+1
        {2, 5, {1, 0, 1, 0, 0, 1}},    // x^5+x^2+1
        {2, 6, {1, 1, 0, 0, 0, 0, 1}}, // x^6+x+1
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},             // x^2+1
        {3, 3, {1, 2, 0, 1}},          // x^3+2x+1
        {3, 4, {2, 1, 0, 0, 1}},       // x^4+x+2
        {3, 5, {1, 2, 0, 0, 0, 1}},    // x^5+2x+1
        {5, 2, {2, 0, 1}},             // x^2+2
        {5, 3, {1, 1, 0, 1}},          // x^3+x+1
        {7, 2, {1, 0, 1}},             // x^2+1
        {11, 2, {1, 0, 1}},            // x^2+1
    }};
    return table;
}

} // namespace

std::vector<int> default_modulus(int p, int n) {
    if (n == 1) return {0, 1};
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    if (q <= 256) {
        for (const auto& e : modulus_table())
            if (e.p == p && e.n == n) return e.modulus;
        if (p == 13 && n == 2) return {2, 0, 1}; // x^2+2
    }
    return search_modulus(p, n);
}

Field Field::make(long long q) {
    long long p = 0;
    int n = 0;
    if (!is_prime_power(q, &p, &n))
        fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    Field f;
    f.p_ = static_cast<int>(p);
    f.n_ = n;
    f.q_ = static_cast<int>(q);
    f.modulus_ = default_modulus(f.p_, f.n_);
    if (!is_irreducible(f.modulus_, f.p_))
        fail(ErrorKind::ConstructionFailed, "built-in modulus is reducible");
    if (q <= 256) {
        f.add_table_.resize(q * q);
        f.mul_table_.resize(q * q);
        f.inv_table_.assign(q, -1);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                // addition is coefficientwise mod p
                Poly pa = poly_decode(a, f.p_), pb = poly_decode(b, f.p_);
                size_t len = std::max(pa.size(), pb.size());
                pa.resize(len, 0);
                pb.resize(len, 0);
                for (size_t i = 0; i < len; ++i) pa[i] = (pa[i] + pb[i]) % f.p_;
                f.add_table_[a * q + b] = static_cast<int>(poly_encode(pa, f.p_));
                f.mul_table_[a * q + b] = f.mul_slow(a, b);
                if (f.mul_table_[a * q + b] == 1) f.inv_table_[a] = b;
            }
        }
    }
    return f;
}

int Field::mul_slow(int a, int b) const {
    Poly pa = poly_decode(a, p_), pb = poly_decode(b, p_);
    Poly r = poly_mulmod(pa, pb, modulus_, p_);
    return static_cast<int>(poly_encode(r, p_));
}

int Field::add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    Poly pa = poly_decode(a, p_), pb = poly_decode(b, p_);
    size_t len = std::max(pa.size(), pb.size());
    pa.resize(len, 0);
    pb.resize(len, 0);
    for (size_t i = 0; i < len; ++i) pa[i] = (pa[i] + pb[i]) % p_;
    return static_cast<int>(poly_encode(pa, p_));
}

int Field::neg(int a) const {
    Poly pa = poly_decode(a, p_);
    for (int& c : pa) c = (p_ - c) % p_;
    return static_cast<int>(poly_encode(pa, p_));
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

int Field::inv(int a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    // q-2 exponentiation; only reached for q > 256
    return pow(a, q_ - 2);
}

int Field::pow(int a, long long e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    long long ord = q_ - 1;
    e %= ord;
    if (e < 0) e += ord;
    int base = a, result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c = poly_decode(a, p_);
    c.resize(n_, 0);
    return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
    long long v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] < 0 || c[i] >= p_)
            fail(ErrorKind::InvalidParameter, "coefficient out of range");
        v = v * p_ + c[i];
    }
    return static_cast<int>(v);
}

} // namespace pir::gf
