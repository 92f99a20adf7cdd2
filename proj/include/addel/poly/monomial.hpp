#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace addel {

// Exponent triple of a monomial x^i y^j z^k. Ordering is graded lex with
// x > y > z; inside one graded piece that is plain lex descending, which is
// also the dense-index order used by the linear algebra.
struct Mono {
    int i = 0, j = 0, k = 0;
    int degree() const { return i + j + k; }
    Mono operator*(const Mono& o) const { return {i + o.i, j + o.j, k + o.k}; }
    bool operator==(const Mono& o) const = default;
    // graded lex: lower degree first, then lex ascending in (i,j) so that the
    // map iteration order is deterministic; display order reverses this.
    auto operator<=>(const Mono& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = o.i <=> i; c != 0) return c;
        return o.j <=> j;
    }
};

inline int mono_count(int d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

// Dense position of m inside the graded piece of its degree, matching
// mono_basis order.
inline int mono_index(const Mono& m) {
    const int d = m.degree();
    const int t = d - m.i;
    return t * (t + 1) / 2 + (d - m.i - m.j);
}

inline std::vector<Mono> mono_basis(int d) {
    std::vector<Mono> out;
    out.reserve(mono_count(d));
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

}  // namespace addel
