#pragma once

#include <cstdlib>
#include <string>

#include "addel/scalar/rational.hpp"

namespace addel {

// Element u + v*sqrt(D) of a quadratic extension of the rationals. D is a
// squarefree integer != 0, 1, carried at runtime. Canonical form: v == 0
// forces D == 0, so plain rationals embed uniquely and mixed-D comparisons
// are only legal when at least one side is rational.
class QuadRat {
public:
    QuadRat() : u_(), v_(), d_(0) {}
    QuadRat(Rat u) : u_(std::move(u)), v_(), d_(0) {}
    QuadRat(Rat u, Rat v, long long d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
        if (v_.is_zero()) d_ = 0;
        else if (d_ == 0 || d_ == 1) throw AddelError("quadratic extension needs squarefree D != 0,1");
    }
    static QuadRat sqrt_d(long long d) { return QuadRat(Rat(0), Rat(1), d); }

    const Rat& rational_part() const { return u_; }
    const Rat& surd_part() const { return v_; }
    long long disc() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return v_.is_zero() && u_.is_one(); }

    QuadRat operator-() const { return QuadRat(-u_, -v_, d_); }
    QuadRat conj() const { return QuadRat(u_, -v_, d_); }
    Rat norm() const { return u_ * u_ - v_ * v_ * Rat(d_); }

    QuadRat operator+(const QuadRat& o) const {
        long long d = joint(o);
        return QuadRat(u_ + o.u_, v_ + o.v_, d);
    }
    QuadRat operator-(const QuadRat& o) const { return *this + (-o); }
    QuadRat operator*(const QuadRat& o) const {
        long long d = joint(o);
        return QuadRat(u_ * o.u_ + v_ * o.v_ * Rat(d), u_ * o.v_ + v_ * o.u_, d);
    }
    QuadRat inverse() const {
        if (is_zero()) throw DivisionByZero{};
        Rat n = norm();  // nonzero: D is not a rational square
        return QuadRat(u_ / n, -v_ / n, d_);
    }
    QuadRat operator/(const QuadRat& o) const { return *this * o.inverse(); }
    QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
    QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
    QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
    QuadRat& operator/=(const QuadRat& o) { return *this = *this / o; }

    bool operator==(const QuadRat& o) const {
        if (d_ && o.d_ && d_ != o.d_) return false;  // distinct surds are never equal
        return u_ == o.u_ && v_ == o.v_;
    }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    std::string str() const {
        if (v_.is_zero()) return u_.str();
        std::string s = u_.is_zero() ? "" : u_.str();
        std::string vs = v_.is_one() ? "" : (v_ == Rat(-1) ? "-" : v_.str() + "*");
        if (!s.empty() && v_.sign() > 0) s += "+";
        return s + vs + "sqrt(" + std::to_string(d_) + ")";
    }

    std::size_t bit_size() const { return u_.bit_size() + v_.bit_size(); }

private:
    long long joint(const QuadRat& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0) return d_;
        if (d_ != o.d_) throw MixedBackends("sqrt(" + std::to_string(d_) + ") vs sqrt(" + std::to_string(o.d_) + ")");
        return d_;
    }
    Rat u_, v_;
    long long d_;
};

inline QuadRat one_like(const QuadRat&) { return QuadRat(Rat(1)); }
inline QuadRat zero_like(const QuadRat&) { return QuadRat(); }
inline QuadRat from_int(const QuadRat&, long n) { return QuadRat(Rat(n)); }

}  // namespace addel
