#include "addel/scalar/prime_field.hpp"

namespace addel {

using detail::mulmod;
using detail::powmod;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // these witnesses are exact for every n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_large_prime(unsigned bits, std::mt19937_64& rng) {
    if (bits < 20 || bits > 62) throw AddelError("prime size out of range [20,62]: " + std::to_string(bits));
    const std::uint64_t lo = 1ull << (bits - 1), hi = (1ull << bits) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t zc = 2;
    while (powmod(zc, (p - 1) / 2, p) != p - 1) ++zc;
    std::uint64_t m = s;
    std::uint64_t c = powmod(zc, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        std::uint64_t b = powmod(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

}  // namespace addel
