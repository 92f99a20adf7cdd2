#include "addel/integer_factor.hpp"

namespace addel {

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // Brent's cycle variant; n odd composite, no small factors
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        mpz_class seedc(c);
        while (d == 1) {
            x = (x * x + seedc) % n;
            y = (y * y + seedc) % n;
            y = (y * y + seedc) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        if (c > 64) return 0;  // give up
    }
}

bool mpz_probab_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

bool factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return true;
    if (mpz_probab_prime(n)) {
        ++out[n];
        return true;
    }
    mpz_class d = pollard_rho(n);
    if (d == 0) return false;
    return factor_into(d, out) && factor_into(n / d, out);
}

}  // namespace

std::optional<std::map<mpz_class, unsigned>> factor_integer(mpz_class n) {
    std::map<mpz_class, unsigned> out;
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= static_cast<long>(p);
        }
    }
    if (n > 1 && !factor_into(n, out)) return std::nullopt;
    return out;
}

std::optional<mpz_class> squarefree_part(const mpz_class& n) {
    auto f = factor_integer(n);
    if (!f) return std::nullopt;
    mpz_class d = n < 0 ? -1 : 1;
    for (auto& [p, e] : *f)
        if (e % 2) d *= p;
    return d;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        if (root) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            *root = r;
        }
        return true;
    }
    return false;
}

}  // namespace addel
