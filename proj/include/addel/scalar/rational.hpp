#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "addel/errors.hpp"

namespace addel {

// Arbitrary-precision rational, always reduced with positive denominator
// (mpq_class canonicalizes on construction and after every operation).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero{};
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    static Rat from_string(const std::string& s);  // "a" or "a/b"

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DivisionByZero{};
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    Rat inverse() const {
        if (is_zero()) throw DivisionByZero{};
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const { return v_.get_str(); }

    // Rough size measure used for pivot selection in exact elimination.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

private:
    mpq_class v_;
};

inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat from_int(const Rat&, long n) { return Rat(n); }

}  // namespace addel
