#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "coxpoly/errors.hpp"
#include "coxpoly/int_matrix.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

namespace detail {

// Exact integer division; a failed division means a broken invariant in the
// fraction-free algorithms, so it is an error, never a rounding.
inline Int divide_exact(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw NonIntegerResultError("exact division failed: " + num.str() + " / " + den.str());
    return q;
}

}  // namespace detail

// Fraction-free (Bareiss) determinant. Pivots on the first nonzero entry of
// each column; every internal division is exact by the Bareiss identity.
inline Int determinant(IntMatrix m) {
    m.require_square("determinant");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) =
                    detail::divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

// Exact inverse of a matrix with determinant +-1 via fraction-free
// Gauss-Jordan elimination on [M | I].
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    m.require_square("inverse_unimodular");
    const Int det = determinant(m);
    if (det != 1 && det != -1)
        throw NotUnimodularError("determinant is " + det.str() + ", not +-1");

    const std::size_t n = m.rows();
    IntMatrix aug(n, 2 * n);
    aug.paste(0, 0, m);
    for (std::size_t i = 0; i < n; ++i) aug.at(i, n + i) = 1;

    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (aug.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && aug.at(piv, k) == 0) ++piv;
            if (piv == n)  // unreachable: det is +-1
                throw NotUnimodularError("pivot vanished during elimination");
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(k, j), aug.at(piv, j));
        }
        const Int pivot = aug.at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                aug.at(i, j) =
                    detail::divide_exact(pivot * aug.at(i, j) - aug.at(i, k) * aug.at(k, j), prev);
            }
            aug.at(i, k) = 0;
        }
        prev = pivot;
    }

    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = aug.at(i, i);
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = detail::divide_exact(aug.at(i, n + j), d);
    }
    return inv;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence.
// The divisions by the step index are exact over the integers; this is
// asserted, not assumed.
inline Poly char_poly(const IntMatrix& m) {
    m.require_square("char_poly");
    const std::size_t n = m.rows();
    IntVec c(n + 1);
    c[n] = 1;
    IntMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = M * (M_{k-1} + c_{n-k+1} I)
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
        mk = m * mk;
        c[n - k] = detail::divide_exact(-mk.trace(), Int(k));
    }
    return Poly(std::move(c));
}

// (p x q) kron (r x s) -> (pr x qs); block (i,j) is A[i,j] * B.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k.at(i * b.rows() + r, j * b.cols() + s) = a.at(i, j) * b.at(r, s);
        }
    return k;
}

// Trace of M^k; k = 0 gives the matrix size.
inline Int power_trace(const IntMatrix& m, std::size_t k) {
    m.require_square("power_trace");
    if (k == 0) return Int(m.rows());
    IntMatrix p = m;
    for (std::size_t i = 1; i < k; ++i) p = p * m;
    return p.trace();
}

}  // namespace coxpoly
