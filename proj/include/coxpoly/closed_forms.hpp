#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "coxpoly/errors.hpp"
#include "coxpoly/int_matrix.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

// Coxeter polynomial of the path algebra of a linear quiver on n vertices:
// 1 + x + ... + x^n.
inline Poly poly_linear_a(int n) {
    if (n < 1) throw InvalidWeightsError("linear type needs n >= 1");
    return Poly::ones(static_cast<std::size_t>(n));
}

namespace detail {

inline std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] < 1) throw InvalidWeightsError("branch lengths must be >= 1");
    return t;
}

}  // namespace detail

// Coxeter polynomial of the three-branch star with branch lengths a <= b <= c
// as a product formula over linear-type polynomials:
//
//   (1+...+x^a)(1+...+x^{b+c+1}) - x (1+...+x^{a-1})(1+...+x^b)(1+...+x^c)
inline Poly poly_boldt_t(int a, int b, int c) {
    const auto [sa, sb, sc] = detail::sorted_triple(a, b, c);
    const Poly first = Poly::ones(sa) * Poly::ones(static_cast<std::size_t>(sb + sc + 1));
    const Poly second = Poly::monomial(1, 1) * Poly::ones(static_cast<std::size_t>(sa - 1)) *
                        Poly::ones(sb) * Poly::ones(sc);
    return first - second;
}

// Closed form for the top coefficient window of the star polynomial: the
// coefficient of x^{(a+b+c)-l} equals (1-l)(2+l)/2 for 0 <= l <= a.
inline Int coeff_t_window(int a, int b, int c, int l) {
    const auto t = detail::sorted_triple(a, b, c);
    if (l < 0 || l > t[0])
        throw OutOfWindowError("offset " + std::to_string(l) + " outside 0.." +
                               std::to_string(t[0]));
    return Int(1 - l) * Int(2 + l) / 2;
}

// Explicit Coxeter polynomial of the star with branch lengths (1, b, c):
//
//   x^{b+c+2} + sum_{j=c+1}^{b+c+1} (j-b-c) x^j
//             + sum_{j=b+1}^{c} (1-b) x^j + sum_{j=1}^{b} (2-j) x^j + 1
inline Poly poly_t_one(int b, int c) {
    if (b > c) std::swap(b, c);
    if (b < 1) throw InvalidWeightsError("branch lengths must be >= 1");
    IntVec v(static_cast<std::size_t>(b + c + 3));
    v[static_cast<std::size_t>(b + c + 2)] = 1;
    for (int j = c + 1; j <= b + c + 1; ++j) v[static_cast<std::size_t>(j)] += j - b - c;
    for (int j = b + 1; j <= c; ++j) v[static_cast<std::size_t>(j)] += 1 - b;
    for (int j = 1; j <= b; ++j) v[static_cast<std::size_t>(j)] += 2 - j;
    v[0] += 1;
    return Poly(std::move(v));
}

namespace detail {

// p x p with ones on the subdiagonal.
inline IntMatrix shift_block(int p) {
    IntMatrix j(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int i = 1; i < p; ++i) j.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
    return j;
}

// p x q with a first row of ones.
inline IntMatrix ones_row_block(int p, int q) {
    IntMatrix k(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) k.at(0, static_cast<std::size_t>(j)) = 1;
    return k;
}

}  // namespace detail

// Coxeter matrix of the three-branch star assembled directly from its block
// structure; the block row order is branch a, branch b, branch c, centre.
// Matches coxeter_matrix(cartan_matrix(build_star({a,b,c}))) entry for entry,
// which pins this library's star numbering convention.
inline IntMatrix star_coxeter_blocks(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidWeightsError("branch lengths must be >= 1");
    const int n = a + b + c + 1;
    IntMatrix phi(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const std::array<int, 3> len{a, b, c};
    std::array<int, 3> off{};
    for (int i = 1; i < 3; ++i) off[i] = off[i - 1] + len[i - 1];
    const int centre = a + b + c;

    for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj) {
            const IntMatrix block = bi == bj ? detail::shift_block(len[bi])
                                             : detail::ones_row_block(len[bi], len[bj]);
            phi.paste(static_cast<std::size_t>(off[bi]), static_cast<std::size_t>(off[bj]), block);
        }
    for (int bi = 0; bi < 3; ++bi) {
        phi.at(static_cast<std::size_t>(off[bi]), static_cast<std::size_t>(centre)) = 1;
        for (int j = 0; j < len[bi]; ++j)
            phi.at(static_cast<std::size_t>(centre), static_cast<std::size_t>(off[bi] + j)) = -1;
    }
    phi.at(static_cast<std::size_t>(centre), static_cast<std::size_t>(centre)) = -1;
    return phi;
}

// The row vector m C_B^{-1} for the star with branch lengths (a, b, c) and
// m = (1,...,1,2): -1 at the head of each branch, 2 at the centre.
inline IntVec m_cinv_vector(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidWeightsError("branch lengths must be >= 1");
    IntVec v(static_cast<std::size_t>(a + b + c + 1));
    v[0] = -1;
    v[static_cast<std::size_t>(a)] = -1;
    v[static_cast<std::size_t>(a + b)] = -1;
    v.back() = 2;
    return v;
}

// Predicted coefficients of the Coxeter polynomial of the canonical algebra
// built on the star with branch lengths a <= b <= c, as a partial map from
// offset l to the coefficient of x^{n-l}, where n = a+b+c+1. Offsets -1 and 0
// (the leading coefficient and the negated trace) are always present. The
// remaining entries depend on which family the triple falls in:
//
//   (1, 2, c), c >= 5 :  l = 1..4  ->  0, -1, -1, 0
//   (1, b, c), b >= 3 :  l = 1..b-1 -> 0,  l = b -> -[b==c] - 1
//   (a, b, c), a >= 2 :  l = 1..a-1 -> 1,  l = a -> -[a==b] - [a==c]
//
// Triples outside these families are refused rather than extrapolated.
inline std::map<int, Int> predicted_canonical_coeffs(int a, int b, int c) {
    const auto [sa, sb, sc] = detail::sorted_triple(a, b, c);
    std::map<int, Int> out{{-1, Int(1)}, {0, Int(1)}};
    if (sa >= 2) {
        for (int r = 1; r < sa; ++r) out[r] = 1;
        out[sa] = Int(-(sa == sb ? 1 : 0) - (sa == sc ? 1 : 0));
        return out;
    }
    if (sb >= 3) {
        for (int r = 1; r < sb; ++r) out[r] = 0;
        out[sb] = Int(-(sb == sc ? 1 : 0) - 1);
        return out;
    }
    if (sb == 2 && sc >= 5) {
        out[1] = 0;
        out[2] = -1;
        out[3] = -1;
        out[4] = 0;
        return out;
    }
    throw OutsideLemmaHypothesesError("no coefficient prediction for branch lengths (" +
                                      std::to_string(sa) + "," + std::to_string(sb) + "," +
                                      std::to_string(sc) + ")");
}

}  // namespace coxpoly
