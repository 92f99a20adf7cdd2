#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "addel/errors.hpp"

namespace addel {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero{};
    // extended Euclid on signed 128-bit to avoid overflow
    __int128 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        __int128 q = r / nr;
        auto tmp_t = t - q * nt; t = nt; nt = tmp_t;
        auto tmp_r = r - q * nr; r = nr; nr = tmp_r;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace detail

// Element of F_p for a runtime prime p < 2^62. A default-constructed value is
// a context-free zero: it adopts the modulus of whatever it is first combined
// with. Nonzero values always carry their modulus.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
    static Fp from_int(long long v, std::uint64_t p) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return p_ != 0 && v_ == 1; }

    Fp operator-() const { return p_ == 0 ? Fp{} : Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        std::uint64_t p = joint(o);
        if (p == 0) return Fp{};
        std::uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const {
        std::uint64_t p = joint(o);
        if (p == 0) return Fp{};
        return Fp(detail::mulmod(v_, o.v_, p), p);
    }
    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero{};
        return Fp(detail::invmod(v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp pow(std::uint64_t e) const {
        if (p_ == 0) return e == 0 ? Fp{} : Fp{};  // neutral zero; 0^0 handled by callers
        return Fp(detail::powmod(v_, e, p_), p_);
    }

    bool operator==(const Fp& o) const {
        if (p_ && o.p_ && p_ != o.p_) throw MixedBackends("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    std::uint64_t joint(const Fp& o) const {
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        if (p_ != o.p_) throw MixedBackends("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
        return p_;
    }
    std::uint64_t v_, p_;
};

inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp zero_like(const Fp&) { return Fp{}; }
inline Fp from_int(const Fp& a, long n) { return Fp::from_int(n, a.modulus()); }

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

// A probable prime with exactly `bits` bits, 20 <= bits <= 62.
std::uint64_t random_large_prime(unsigned bits, std::mt19937_64& rng);

// Square root mod p by Tonelli-Shanks; nullopt when a is a non-residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

}  // namespace addel
