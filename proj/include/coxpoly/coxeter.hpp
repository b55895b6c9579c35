#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/errors.hpp"
#include "coxpoly/exact_linalg.hpp"
#include "coxpoly/int_matrix.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

// Coxeter matrix -C^{-t} C of an algebra with unimodular Cartan matrix C.
inline IntMatrix coxeter_matrix(const IntMatrix& cartan) {
    return -(inverse_unimodular(cartan).transpose() * cartan);
}

inline Poly coxeter_polynomial(const IntMatrix& cartan) {
    return char_poly(coxeter_matrix(cartan));
}

// Cartan matrix with its inverse, Coxeter matrix and Coxeter polynomial,
// computed once and reused by the classification and verification passes.
struct CoxeterData {
    IntMatrix cartan;
    IntMatrix cartan_inv;
    IntMatrix coxeter;
    Poly chi;

    static CoxeterData from_cartan(IntMatrix c) {
        CoxeterData d;
        d.cartan_inv = inverse_unimodular(c);
        d.coxeter = -(d.cartan_inv.transpose() * c);
        d.chi = char_poly(d.coxeter);
        d.cartan = std::move(c);
        return d;
    }

    Int trace() const { return coxeter.trace(); }
};

namespace detail {

inline void check_form_args(const IntMatrix& c, const IntVec& x, const IntVec& y) {
    if (x.size() != c.rows() || y.size() != c.rows())
        throw DimensionMismatchError("Euler form arguments must have length " +
                                     std::to_string(c.rows()));
}

// x C^{-t} y^t given C^{-1}; row i of C^{-t} is column i of C^{-1}.
inline Int euler_form_inv(const IntMatrix& cartan_inv, const IntVec& x, const IntVec& y) {
    const std::size_t n = cartan_inv.rows();
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) s += x[i] * cartan_inv.at(j, i);
        acc += s * y[j];
    }
    return acc;
}

}  // namespace detail

// Euler form <x, y> = x C^{-t} y^t on dimension vectors.
inline Int euler_form(const IntMatrix& cartan, const IntVec& x, const IntVec& y) {
    cartan.require_square("euler_form");
    detail::check_form_args(cartan, x, y);
    return detail::euler_form_inv(inverse_unimodular(cartan), x, y);
}

inline Int euler_form(const CoxeterData& d, const IntVec& x, const IntVec& y) {
    detail::check_form_args(d.cartan, x, y);
    return detail::euler_form_inv(d.cartan_inv, x, y);
}

// The sequence <m phi^i, m> for i = 0..length, evaluated exactly.
inline IntVec twisted_euler_sequence(const IntMatrix& c_b, const IntVec& m, std::size_t length) {
    c_b.require_square("twisted_euler_sequence");
    detail::check_form_args(c_b, m, m);
    const IntMatrix inv = inverse_unimodular(c_b);
    const IntMatrix phi = -(inv.transpose() * c_b);
    IntVec out;
    out.reserve(length + 1);
    IntVec v = m;
    for (std::size_t i = 0; i <= length; ++i) {
        out.push_back(detail::euler_form_inv(inv, v, m));
        if (i < length) v = v * phi;
    }
    return out;
}

// Coxeter matrix of the one-point extension, extension vertex first:
//
//   ( <m,m> - 1      -m phi_B )
//   ( -C_B^{-t} m^t   phi_B   )
inline IntMatrix ope_coxeter_matrix(const IntMatrix& c_b, const IntVec& m) {
    c_b.require_square("ope_coxeter_matrix");
    detail::check_form_args(c_b, m, m);
    const std::size_t n = c_b.rows();
    const IntMatrix inv = inverse_unimodular(c_b);
    const IntMatrix inv_t = inv.transpose();
    const IntMatrix phi = -(inv_t * c_b);
    const IntVec m_phi = m * phi;
    const IntVec inv_t_m = inv_t * m;

    IntMatrix out(n + 1, n + 1);
    out.at(0, 0) = detail::euler_form_inv(inv, m, m) - 1;
    for (std::size_t j = 0; j < n; ++j) out.at(0, j + 1) = -m_phi[j];
    for (std::size_t i = 0; i < n; ++i) out.at(i + 1, 0) = -inv_t_m[i];
    out.paste(1, 1, phi);
    return out;
}

// Coxeter polynomial of the one-point extension assembled coefficient by
// coefficient: with chi_B = sum lambda_i^B x^i of degree n,
//
//   lambda_{n+1-l}^A = lambda_{n-l}^B - (<m,m> - 1) lambda_{n-l+1}^B
//                      - sum_{i=1}^{l-1} lambda_{n-l+i+1}^B <m phi^i, m>
//
// for l = 0..n; lambda^B indices outside 0..n contribute nothing, and the
// constant coefficient is 1 (forced by chi(0) = det(-phi) = 1).
inline Poly ope_coefficients(const IntMatrix& c_b, const IntVec& m) {
    c_b.require_square("ope_coefficients");
    detail::check_form_args(c_b, m, m);
    const std::size_t n = c_b.rows();
    const Poly chi_b = coxeter_polynomial(c_b);
    const IntVec twisted = twisted_euler_sequence(c_b, m, n > 0 ? n - 1 : 0);
    const Int self = twisted[0];  // <m, m>

    const long ln = static_cast<long>(n);
    IntVec coeffs(n + 2);
    for (long l = 0; l <= ln; ++l) {
        Int v = chi_b.coeff(ln - l) - (self - 1) * chi_b.coeff(ln - l + 1);
        for (long i = 1; i <= l - 1; ++i)
            v -= chi_b.coeff(ln - l + i + 1) * twisted[static_cast<std::size_t>(i)];
        coeffs[static_cast<std::size_t>(ln + 1 - l)] = std::move(v);
    }
    coeffs[0] = 1;
    return Poly(std::move(coeffs));
}

}  // namespace coxpoly
