#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/numeric.hpp"

namespace coxpoly {

// Polynomial with exact integer coefficients, stored ascending by degree.
// Normalized: the highest stored coefficient is nonzero; the zero polynomial
// stores nothing and has degree -1.
class Poly {
public:
    Poly() = default;

    explicit Poly(IntVec coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }

    static Poly constant(Int v) { return Poly(IntVec{std::move(v)}); }

    // c * x^d
    static Poly monomial(Int c, std::size_t d) {
        IntVec v(d + 1);
        v[d] = std::move(c);
        return Poly(std::move(v));
    }

    // 1 + x + ... + x^d
    static Poly ones(std::size_t d) {
        IntVec v(d + 1, Int(1));
        return Poly(std::move(v));
    }

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    // Coefficient of x^i; zero outside the stored range (including negative i).
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    const IntVec& coeffs() const noexcept { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool is_palindromic() const {
        for (std::size_t i = 0, j = c_.size(); i < j; ++i)
            if (c_[i] != c_[j - 1 - i]) return false;
        return true;
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        IntVec v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] += a.c_[i];
            if (i < b.c_.size()) v[i] += b.c_[i];
        }
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        IntVec v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] += a.c_[i];
            if (i < b.c_.size()) v[i] -= b.c_[i];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        IntVec v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Int& s, const Poly& p) {
        IntVec v = p.c_;
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.c_ < b.c_; }

    // Ascending coefficient list, e.g. "[1, 1, 1]" for x^2 + x + 1.
    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            os << c_[i];
        }
        os << "]";
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    IntVec c_;
};

}  // namespace coxpoly
