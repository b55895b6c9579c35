#pragma once

#include <utility>
#include <vector>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/errors.hpp"
#include "coxpoly/exact_linalg.hpp"
#include "coxpoly/int_matrix.hpp"
#include "coxpoly/numeric.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

// Integer partition, parts non-increasing.
using Partition = std::vector<int>;

namespace detail {

inline void partitions_rec(int remaining, int max_part, Partition& current,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace detail

// All partitions of l in descending lexicographic order: (l), (l-1,1), ...,
// (1,...,1).
inline std::vector<Partition> partitions_of(int l) {
    if (l < 1) throw EmptyInputError("partitions_of requires l >= 1");
    std::vector<Partition> out;
    Partition current;
    detail::partitions_rec(l, l, current, out);
    return out;
}

// Waring weight alpha_p = 1/(p_1 ... p_r) * prod_a 1/(multiplicity of a)!.
inline Rat waring_alpha(const Partition& p) {
    Int denom = 1;
    int run = 0;  // multiplying by the running count builds each multiplicity factorial
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw InvalidWeightsError("partition parts must be >= 1");
        run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
        denom *= p[i];
        denom *= run;
    }
    return Rat(Int(1), denom);
}

// Reconstructs the monic characteristic polynomial of an N x N matrix from
// its power traces S_k = tr(M^k), k = 1..N, via Waring's formula
//
//   lambda_{N-l} = sum over partitions p of l of (-1)^{#parts} alpha_p
//                  S_{p_1} ... S_{p_r}.
//
// Every coefficient must come out integral; a fractional result means the
// input sequence is not the trace sequence of an integer matrix.
inline Poly waring_coefficients(const std::vector<Int>& power_traces) {
    const int n = static_cast<int>(power_traces.size());
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    coeffs[static_cast<std::size_t>(n)] = 1;
    for (int l = 1; l <= n; ++l) {
        Rat lambda = 0;
        for (const Partition& p : partitions_of(l)) {
            Rat term = waring_alpha(p);
            for (int part : p) term *= Rat(power_traces[static_cast<std::size_t>(part - 1)]);
            if (p.size() % 2 == 1) term = -term;
            lambda += term;
        }
        if (boost::multiprecision::denominator(lambda) != 1)
            throw NonIntegerResultError("coefficient lambda_" + std::to_string(n - l) +
                                        " is not integral");
        coeffs[static_cast<std::size_t>(n - l)] = boost::multiprecision::numerator(lambda);
    }
    return Poly(std::move(coeffs));
}

// Dimension vectors of A and DA as modules over the enveloping algebra, in
// the idempotent order e_{1,1},...,e_{n,1},e_{1,2},...,e_{n,n}: block j of
// dim_A is the j-th column of C (projective P(j)), block j of dim_DA is the
// j-th row (injective Q(j)).
inline std::pair<IntVec, IntVec> bimodule_dims(const IntMatrix& c) {
    c.require_square("bimodule_dims");
    const int n = c.rows();
    IntVec dim_a, dim_da;
    dim_a.reserve(static_cast<std::size_t>(n) * n);
    dim_da.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) dim_a.push_back(c.at(i, j));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) dim_da.push_back(c.at(j, i));
    return {std::move(dim_a), std::move(dim_da)};
}

// Euler-form data of the enveloping algebra A^e = A^op (x) A.
struct EnvelopingData {
    IntMatrix env_inv_trans;  // inverse-transpose Cartan of A^e = C^{-1} (x) C^{-t}
    IntVec dim_a;
    IntVec dim_da;

    static EnvelopingData from_cartan(const IntMatrix& c) {
        const IntMatrix cinv = inverse_unimodular(c);
        auto dims = bimodule_dims(c);
        return EnvelopingData{kronecker(cinv, cinv.transpose()), std::move(dims.first),
                              std::move(dims.second)};
    }

    Int euler(const IntVec& x, const IntVec& y) const {
        return dot(x * env_inv_trans, y);
    }
};

// <x, y> over the enveloping algebra: x * (C^{-1} (x) C^{-t}) * y^t.
inline Int env_euler_form(const IntMatrix& c, const IntVec& x, const IntVec& y) {
    return EnvelopingData::from_cartan(c).euler(x, y);
}

// tr(phi^k) computed purely from Euler forms, without forming phi:
//   k = 1:  -<dim A, dim A>
//   k = 2:   <dim DA, dim A>
//   k >= 3: (-1)^k  sum over v_1..v_{k-1} in [1,N] of
//             <q(v_1), p(v_{k-1})>
//             * prod_{i=2}^{k-2} <q(v_i), e(v_{i-1})>
//             * <dim DA, e_{A^e}(v_{k-2}, v_{k-1})>
// where p(v), q(v) are columns/rows of C, e(v) simple dimension vectors, and
// e_{A^e}(i,j) sits at position (j-1)N + i.
inline Int trace_identity_rhs(const IntMatrix& c, int k) {
    c.require_square("trace_identity_rhs");
    if (k < 1) throw EmptyInputError("trace_identity_rhs requires k >= 1");
    const EnvelopingData env = EnvelopingData::from_cartan(c);
    if (k == 1) return -env.euler(env.dim_a, env.dim_a);
    if (k == 2) return env.euler(env.dim_da, env.dim_a);

    const int n = c.rows();
    const IntMatrix cinv = inverse_unimodular(c);
    const IntMatrix cinv_t = cinv.transpose();

    // e1[u][v] = <q(u+1), p(v+1)> = (C C^{-t} C)[u][v]; e2[u][v] =
    // <q(u+1), e(v+1)> = (C C^{-t})[u][v]; e3[u][v] = <dim DA,
    // e_{A^e}(u+1, v+1)>, i.e. entry (v * n + u) of dim DA * env_inv_trans.
    const IntMatrix e2 = c * cinv_t;
    const IntMatrix e1 = e2 * c;
    const IntVec row = env.dim_da * env.env_inv_trans;
    auto e3 = [&](int u, int v) -> const Int& {
        return row[static_cast<std::size_t>(v) * n + u];
    };

    // Literal (k-1)-fold sum; fine for the small sizes this is meant for.
    std::vector<int> v(static_cast<std::size_t>(k - 1), 0);
    Int total = 0;
    while (true) {
        Int term = e1.at(v[0], v[static_cast<std::size_t>(k - 2)]);
        for (int i = 1; i <= k - 3; ++i)
            term *= e2.at(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i - 1)]);
        term *= e3(v[static_cast<std::size_t>(k - 3)], v[static_cast<std::size_t>(k - 2)]);
        total += term;

        int pos = 0;
        while (pos < k - 1 && ++v[static_cast<std::size_t>(pos)] == n) {
            v[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k - 1) break;
    }
    if (k % 2 == 1) total = -total;
    return total;
}

}  // namespace coxpoly
