#pragma once

#include <utility>
#include <vector>

#include "addel/errors.hpp"
#include "addel/poly/homogeneous.hpp"

namespace addel {

// Dense univariate polynomial, coefficients low to high. Used for
// dehomogenized binary forms, gcds and factorization.
template <Field K>
struct UPoly {
    std::vector<K> c;  // trimmed: c.empty() => zero, else c.back() != 0

    UPoly() = default;
    explicit UPoly(std::vector<K> cc) : c(std::move(cc)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const K& lead() const { return c.back(); }

    K eval(const K& a) const {
        K acc{};
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
        return acc;
    }

    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<K> r(c.size() + o.c.size() - 1, K{});
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return UPoly(std::move(r));
    }
    UPoly operator-(const UPoly& o) const {
        std::vector<K> r(std::max(c.size(), o.c.size()), K{});
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return UPoly(std::move(r));
    }
    UPoly operator*(const K& a) const {
        UPoly r = *this;
        for (auto& v : r.c) v *= a;
        r.trim();
        return r;
    }
    bool operator==(const UPoly& o) const { return c == o.c; }

    UPoly monic() const {
        if (is_zero()) return {};
        return *this * lead().inverse();
    }
    UPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<K> r(c.size() - 1, K{});
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * from_int(c[i], static_cast<long>(i));
        return UPoly(std::move(r));
    }
};

template <Field K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw DivisionByZero{};
    UPoly<K> r = a;
    if (a.degree() < b.degree()) return {UPoly<K>{}, r};
    std::vector<K> q(a.degree() - b.degree() + 1, K{});
    const K li = b.lead().inverse();
    for (int d = r.degree(); d >= b.degree() && !r.is_zero(); d = r.degree()) {
        K f = r.c[d] * li;
        q[d - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) r.c[d - b.degree() + j] -= f * b.c[j];
        r.trim();
    }
    return {UPoly<K>(std::move(q)), r};
}

template <Field K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Binary form in (s,t): coefficient i belongs to s^(degree-i) t^i. Like
// HPoly, the zero form keeps its degree tag.
template <Field K>
class BinForm {
public:
    explicit BinForm(int degree = 0) : deg_(degree), c_(degree + 1, K{}) {}
    BinForm(int degree, std::vector<K> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != degree + 1) throw DegreeMismatch("binary form coefficient count");
    }

    int degree() const { return deg_; }
    const std::vector<K>& coeffs() const { return c_; }
    K& operator[](int i) { return c_[i]; }
    const K& operator[](int i) const { return c_[i]; }
    bool is_zero() const {
        for (auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool operator==(const BinForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }

    BinForm operator*(const BinForm& o) const {
        BinForm r(deg_ + o.deg_);
        for (int i = 0; i <= deg_; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j <= o.deg_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }

    // multiplicity of the root [1:0] (i.e. the power of t dividing the form)
    int mult_at_infinity() const {
        int m = 0;
        while (m <= deg_ && c_[m].is_zero()) ++m;
        return m > deg_ ? deg_ + 1 : m;
    }

    // u(s, 1) as a univariate in s: coefficient of s^a is c_[deg-a]
    UPoly<K> dehomogenize() const {
        std::vector<K> r(deg_ + 1, K{});
        for (int i = 0; i <= deg_; ++i) r[deg_ - i] = c_[i];
        return UPoly<K>(std::move(r));
    }

    K eval(const K& sv, const K& tv) const {
        K acc{};
        for (int i = 0; i <= deg_; ++i) {
            if (c_[i].is_zero()) continue;
            K v = c_[i];
            for (int a = 0; a < deg_ - i; ++a) v *= sv;
            for (int a = 0; a < i; ++a) v *= tv;
            acc += v;
        }
        return acc;
    }

private:
    int deg_;
    std::vector<K> c_;
};

// Squarefree part of a nonzero univariate over a field of characteristic 0
// or of characteristic p larger than the degree (the only uses here).
template <Field K>
UPoly<K> squarefree_part(const UPoly<K>& u) {
    if (u.is_zero()) throw ZeroForm{};
    if (u.degree() == 0) return u.monic();
    auto d = u.derivative();
    if (d.is_zero()) throw AddelError("p-th power univariate: characteristic too small for degree");
    auto g = gcd(u, d);
    return divmod(u, g).first.monic();
}

// Squarefree part of a binary form. The root at infinity is split off as an
// explicit t factor, never via a silent degree drop.
template <Field K>
BinForm<K> squarefree_part(const BinForm<K>& u) {
    if (u.is_zero()) throw ZeroForm{};
    const int m = u.mult_at_infinity();
    UPoly<K> sf = squarefree_part(u.dehomogenize());
    const int shift = m > 0 ? 1 : 0;  // one factor of t iff [1:0] is a root
    BinForm<K> r(sf.degree() + shift);
    for (int a = 0; a <= sf.degree(); ++a) r[sf.degree() - a + shift] = sf.c[a];
    return r;
}

// Number of distinct roots of the form over the algebraic closure.
template <Field K>
int distinct_root_count(const BinForm<K>& u) {
    if (u.is_zero()) throw ZeroForm{};
    return squarefree_part(u.dehomogenize()).degree() + (u.mult_at_infinity() > 0 ? 1 : 0);
}

// f(s^2, st, t^2): the restriction of f to the normal-form conic y^2 = xz.
template <Field K>
BinForm<K> substitute_standard_conic(const HPoly<K>& f) {
    BinForm<K> r(2 * f.degree());
    for (auto& [mn, c] : f.terms()) {
        // x^i y^j z^k -> s^(2i+j) t^(j+2k); t-exponent = j + 2k
        r[mn.j + 2 * mn.k] += c;
    }
    return r;
}

// Deterministic basis of the projective line V(L): the two points
// g_i*e_j - g_j*e_i for the first index i with L_i != 0.
template <Field K>
std::array<std::array<K, 3>, 2> line_span(const std::array<K, 3>& L) {
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
        if (!L[i].is_zero()) { i0 = i; break; }
    if (i0 < 0) throw AddelError("zero line");
    std::array<std::array<K, 3>, 2> out{};
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == i0) continue;
        std::array<K, 3> v{K{}, K{}, K{}};
        v[j] = L[i0];
        v[i0] = -L[j];
        out[slot++] = v;
    }
    return out;
}

// f restricted to the standard rational parametrization s*P + t*Q of V(L).
template <Field K>
BinForm<K> substitute_line_param(const HPoly<K>& f, const std::array<K, 3>& L) {
    auto span = line_span(L);
    const int d = f.degree();
    BinForm<K> r(d);
    // powers of the two linear-in-(s,t) coordinate functions
    // coordinate c of the parametrized point is span[0][c]*s + span[1][c]*t
    std::array<std::vector<std::vector<K>>, 3> pw;  // pw[c][e] = coeffs of (..)^e as BinForm coeff vector
    for (int cidx = 0; cidx < 3; ++cidx) {
        pw[cidx].push_back({one_like_any(f, span)});
        std::vector<K> base{span[0][cidx], span[1][cidx]};
        pw[cidx].push_back(base);
    }
    auto mul_vec = [](const std::vector<K>& a, const std::vector<K>& b) {
        std::vector<K> r2(a.size() + b.size() - 1, K{});
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r2[i + j] += a[i] * b[j];
        return r2;
    };
    auto power = [&](int cidx, int e) -> const std::vector<K>& {
        while (static_cast<int>(pw[cidx].size()) <= e)
            pw[cidx].push_back(mul_vec(pw[cidx].back(), pw[cidx][1]));
        return pw[cidx][e];
    };
    for (auto& [mn, c] : f.terms()) {
        std::vector<K> acc{c};
        acc = mul_vec(acc, power(0, mn.i));
        acc = mul_vec(acc, power(1, mn.j));
        acc = mul_vec(acc, power(2, mn.k));
        for (std::size_t i = 0; i < acc.size(); ++i) r[static_cast<int>(i)] += acc[i];
    }
    return r;
}

template <Field K>
K one_like_any(const HPoly<K>& f, const std::array<std::array<K, 3>, 2>& span) {
    for (auto& row : span)
        for (auto& v : row)
            if (!v.is_zero()) return one_like(v);
    if (auto* s = f.sample()) return one_like(*s);
    return K{};
}

}  // namespace addel
