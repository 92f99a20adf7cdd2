#pragma once

#include <memory>
#include <string>
#include <vector>

#include "addel/scalar/prime_field.hpp"

namespace addel {

// Defining data of F_{p^k}: a monic irreducible modulus over F_p,
// stored as coefficients c_0..c_{k-1} of x^k = -(c_{k-1} x^{k-1} + ... + c_0).
struct FqCtx {
    std::uint64_t p;
    std::vector<std::uint64_t> modulus;  // low-to-high, length k, of the monic modulus minus x^k
    unsigned degree() const { return static_cast<unsigned>(modulus.size()); }
};

// Element of F_{p^k} as a residue polynomial of degree < k. Default value is
// the context-free zero, mirroring Fp.
class Fq {
public:
    Fq() = default;
    Fq(std::vector<std::uint64_t> coeffs, std::shared_ptr<const FqCtx> ctx)
        : c_(std::move(coeffs)), ctx_(std::move(ctx)) {
        c_.resize(ctx_->degree(), 0);
        for (auto& v : c_) v %= ctx_->p;
        trim();
    }
    static Fq from_fp(const Fp& a, std::shared_ptr<const FqCtx> ctx) {
        std::vector<std::uint64_t> c(ctx->degree(), 0);
        if (ctx->degree() == 0) throw AddelError("extension of degree 0");
        c[0] = a.value();
        return Fq(std::move(c), std::move(ctx));
    }
    // the residue class of x, a root of the modulus
    static Fq generator(std::shared_ptr<const FqCtx> ctx) {
        std::vector<std::uint64_t> c(ctx->degree(), 0);
        if (ctx->degree() < 2) throw AddelError("generator needs extension degree >= 2");
        c[1] = 1;
        return Fq(std::move(c), std::move(ctx));
    }

    const std::shared_ptr<const FqCtx>& ctx() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Fq operator-() const {
        if (!ctx_) return {};
        auto c = c_;
        c.resize(ctx_->degree(), 0);
        for (auto& v : c) v = v == 0 ? 0 : ctx_->p - v;
        return Fq(std::move(c), ctx_);
    }
    Fq operator+(const Fq& o) const {
        auto ctx = joint(o);
        if (!ctx) return {};
        std::vector<std::uint64_t> c(ctx->degree(), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = (c[i] + o.c_[i]) % ctx->p;
        return Fq(std::move(c), ctx);
    }
    Fq operator-(const Fq& o) const { return *this + (-o); }
    Fq operator*(const Fq& o) const {
        auto ctx = joint(o);
        if (!ctx) return {};
        if (is_zero() || o.is_zero()) return Fq(std::vector<std::uint64_t>{}, ctx);
        const auto p = ctx->p;
        const unsigned k = ctx->degree();
        std::vector<std::uint64_t> prod(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                prod[i + j] = (prod[i + j] + detail::mulmod(c_[i], o.c_[j], p)) % p;
        }
        // reduce by x^k = -modulus
        for (std::size_t i = prod.size(); i-- > k;) {
            std::uint64_t v = prod[i];
            if (!v) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < k; ++j) {
                std::uint64_t sub = detail::mulmod(v, ctx->modulus[j], p);
                prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
            }
        }
        prod.resize(k);
        return Fq(std::move(prod), ctx);
    }
    Fq inverse() const;
    Fq operator/(const Fq& o) const { return *this * o.inverse(); }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    Fq& operator/=(const Fq& o) { return *this = *this / o; }

    bool operator==(const Fq& o) const {
        if (ctx_ && o.ctx_ && ctx_ != o.ctx_ && (ctx_->p != o.ctx_->p || ctx_->modulus != o.ctx_->modulus))
            throw MixedBackends("distinct extension field contexts");
        return c_ == o.c_;
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::shared_ptr<const FqCtx> joint(const Fq& o) const {
        if (!ctx_) return o.ctx_;
        if (!o.ctx_) return ctx_;
        if (ctx_ != o.ctx_ && (ctx_->p != o.ctx_->p || ctx_->modulus != o.ctx_->modulus))
            throw MixedBackends("distinct extension field contexts");
        return ctx_;
    }
    std::vector<std::uint64_t> c_;  // trimmed: no trailing zeros
    std::shared_ptr<const FqCtx> ctx_;
};

inline Fq one_like(const Fq& a) {
    if (!a.ctx()) throw AddelError("one_like on context-free Fq zero");
    return Fq({1}, a.ctx());
}
inline Fq zero_like(const Fq&) { return Fq{}; }
inline Fq from_int(const Fq& a, long n) {
    if (!a.ctx()) throw AddelError("from_int on context-free Fq zero");
    return Fq::from_fp(Fp::from_int(n, a.ctx()->p), a.ctx());
}

inline Fq Fq::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    const auto p = ctx_->p;
    // extended Euclid in F_p[x] between the modulus and this residue
    std::vector<std::uint64_t> r0 = ctx_->modulus;  // represents monic modulus: x^k + ...
    r0.push_back(1);
    std::vector<std::uint64_t> r1 = c_;
    std::vector<std::uint64_t> t0{}, t1{1};
    auto deg = [](const std::vector<std::uint64_t>& v) -> int { return static_cast<int>(v.size()) - 1; };
    auto trimv = [](std::vector<std::uint64_t>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<std::uint64_t> q(std::max(0, deg(r0) - deg(r1)) + 1, 0);
        auto rem = r0;
        std::uint64_t lead_inv = detail::invmod(r1.back(), p);
        for (int d = deg(rem); d >= deg(r1); --d) {
            std::uint64_t c = rem[d];
            if (!c) continue;
            std::uint64_t f = detail::mulmod(c, lead_inv, p);
            q[d - deg(r1)] = f;
            for (int j = 0; j <= deg(r1); ++j)
                rem[d - deg(r1) + j] = (rem[d - deg(r1) + j] + p - detail::mulmod(f, r1[j], p)) % p;
        }
        trimv(rem);
        // t_new = t0 - q*t1
        std::vector<std::uint64_t> tn(std::max(t0.size(), q.size() + t1.size()), 0);
        for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (std::size_t j = 0; j < t1.size(); ++j)
                tn[i + j] = (tn[i + j] + p - detail::mulmod(q[i], t1[j], p)) % p;
        }
        trimv(tn);
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(tn);
    }
    // r0 = gcd (a unit since modulus is irreducible and c_ != 0)
    if (deg(r0) != 0) throw AddelError("modulus not coprime to element; reducible extension modulus?");
    std::uint64_t scale = detail::invmod(r0[0], p);
    for (auto& v : t0) v = detail::mulmod(v, scale, p);
    return Fq(std::move(t0), ctx_);
}

inline std::string Fq::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(c_[i]);
        if (i == 1) s += "*a";
        else if (i > 1) s += "*a^" + std::to_string(i);
    }
    return s;
}

}  // namespace addel
