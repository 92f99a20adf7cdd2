#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "addel/errors.hpp"
#include "addel/poly/monomial.hpp"
#include "addel/scalar/field.hpp"

namespace addel {

enum class Var : int { x = 0, y = 1, z = 2 };

// Homogeneous trivariate polynomial over K. The zero polynomial still carries
// its degree tag; graded bookkeeping never infers degree from content.
// Stored terms have nonzero coefficients and the map keeps them in a fixed
// monomial order, so equality is representation equality.
template <Field K>
class HPoly {
public:
    explicit HPoly(int degree = 0) : deg_(degree) {}
    HPoly(int degree, std::map<Mono, K> terms) : deg_(degree), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.degree() != deg_) throw DegreeMismatch("term degree vs polynomial degree");
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }

    static HPoly monomial(const Mono& m, K c) {
        HPoly p(m.degree());
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static HPoly variable(Var v, const K& one) {
        Mono m;
        (v == Var::x ? m.i : v == Var::y ? m.j : m.k) = 1;
        return monomial(m, one);
    }

    int degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, K>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    K coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K{} : it->second;
    }
    // any nonzero coefficient, for minting context-carrying constants
    const K* sample() const { return terms_.empty() ? nullptr : &terms_.begin()->second; }

    void add_term(const Mono& m, const K& c) {
        if (m.degree() != deg_) throw DegreeMismatch("term degree vs polynomial degree");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HPoly operator+(const HPoly& o) const {
        if (deg_ != o.deg_) throw DegreeMismatch("add needs equal degrees");
        HPoly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    HPoly operator-(const HPoly& o) const { return *this + (-o); }
    HPoly operator-() const {
        HPoly r(deg_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    HPoly operator*(const HPoly& o) const {
        HPoly r(deg_ + o.deg_);
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    HPoly operator*(const K& c) const {
        HPoly r(deg_);
        if (c.is_zero()) return r;
        for (auto& [m, cc] : terms_) r.add_term(m, cc * c);
        return r;
    }

    bool operator==(const HPoly& o) const { return deg_ == o.deg_ && terms_ == o.terms_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    // true when o == lambda * this for a nonzero scalar lambda
    bool is_associate_of(const HPoly& o) const {
        if (deg_ != o.deg_ || terms_.size() != o.terms_.size()) return false;
        if (is_zero()) return o.is_zero();
        auto it1 = terms_.begin();
        auto it2 = o.terms_.begin();
        const K lam = it2->second / it1->second;
        for (; it1 != terms_.end(); ++it1, ++it2) {
            if (!(it1->first == it2->first)) return false;
            if (it1->second * lam != it2->second) return false;
        }
        return true;
    }

    K evaluate(const std::array<K, 3>& pt) const {
        K acc{};
        for (auto& [m, c] : terms_) {
            K v = c;
            for (int a = 0; a < m.i; ++a) v *= pt[0];
            for (int a = 0; a < m.j; ++a) v *= pt[1];
            for (int a = 0; a < m.k; ++a) v *= pt[2];
            acc += v;
        }
        return acc;
    }

private:
    int deg_;
    std::map<Mono, K> terms_;
};

template <Field K>
HPoly<K> partial_derivative(const HPoly<K>& f, Var v) {
    HPoly<K> r(f.degree() == 0 ? 0 : f.degree() - 1);
    for (auto& [m, c] : f.terms()) {
        int e = v == Var::x ? m.i : v == Var::y ? m.j : m.k;
        if (e == 0) continue;
        Mono mm = m;
        (v == Var::x ? mm.i : v == Var::y ? mm.j : mm.k) -= 1;
        r.add_term(mm, c * from_int(c, e));
    }
    return r;
}

// f with each variable replaced by a linear form; rows[r] holds the
// coefficients of the form substituted for variable r.
template <Field K>
HPoly<K> substitute_linear(const HPoly<K>& f, const std::array<std::array<K, 3>, 3>& rows) {
    const K one = [&] {
        for (auto& row : rows)
            for (auto& c : row)
                if (!c.is_zero()) return one_like(c);
        if (auto* s = f.sample()) return one_like(*s);
        return K{};
    }();
    std::array<HPoly<K>, 3> lin = {HPoly<K>(1), HPoly<K>(1), HPoly<K>(1)};
    for (int r = 0; r < 3; ++r) {
        lin[r].add_term({1, 0, 0}, rows[r][0]);
        lin[r].add_term({0, 1, 0}, rows[r][1]);
        lin[r].add_term({0, 0, 1}, rows[r][2]);
    }
    // memoized powers keep this cheap for the degree-14 inputs
    std::array<std::vector<HPoly<K>>, 3> pow;
    for (int r = 0; r < 3; ++r) pow[r].push_back(HPoly<K>::monomial({0, 0, 0}, one));
    auto power = [&](int r, int e) -> const HPoly<K>& {
        while (static_cast<int>(pow[r].size()) <= e) pow[r].push_back(pow[r].back() * lin[r]);
        return pow[r][e];
    };
    HPoly<K> out(f.degree());
    for (auto& [m, c] : f.terms()) {
        HPoly<K> t = power(0, m.i) * power(1, m.j) * power(2, m.k);
        out = out + t * c;
    }
    return out;
}

// coefficient-wise image under a field map (e.g. Rat -> Fp or Rat -> QuadRat)
template <Field K2, Field K1, class F>
HPoly<K2> map_poly(const HPoly<K1>& f, F&& fn) {
    HPoly<K2> out(f.degree());
    for (auto& [m, c] : f.terms()) out.add_term(m, fn(c));
    return out;
}

}  // namespace addel
