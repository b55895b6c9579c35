#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/errors.hpp"
#include "coxpoly/numeric.hpp"

namespace coxpoly {

// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw DimensionMismatchError("ragged row in matrix literal");
            std::size_t j = 0;
            for (const auto& v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void require_square(const char* what) const {
        if (!is_square())
            throw NonSquareError(std::string(what) + " requires a square matrix, got " +
                                 std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Int trace() const {
        require_square("trace");
        Int s = 0;
        for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix r = *this;
        for (auto& v : r.e_) v = -v;
        return r;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        check_same_shape(a, b, "+");
        IntMatrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        check_same_shape(a, b, "-");
        IntMatrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatchError("matrix product " + std::to_string(a.rows_) + "x" +
                                         std::to_string(a.cols_) + " * " +
                                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend IntMatrix operator*(const Int& s, const IntMatrix& m) {
        IntMatrix r = m;
        for (auto& v : r.e_) v *= s;
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Copies a block of src into this matrix with its top-left corner at (i0, j0).
    void paste(std::size_t i0, std::size_t j0, const IntMatrix& src) {
        if (i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_)
            throw DimensionMismatchError("paste target out of range");
        for (std::size_t i = 0; i < src.rows_; ++i)
            for (std::size_t j = 0; j < src.cols_; ++j) at(i0 + i, j0 + j) = src.at(i, j);
    }

    IntVec row(std::size_t i) const {
        IntVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    IntVec col(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << ", ";
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << at(i, j);
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    static void check_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatchError(std::string("shape mismatch in matrix ") + op);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

// row vector * matrix
inline IntVec operator*(const IntVec& x, const IntMatrix& m) {
    if (x.size() != m.rows())
        throw DimensionMismatchError("row vector length " + std::to_string(x.size()) +
                                     " vs matrix with " + std::to_string(m.rows()) + " rows");
    IntVec r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m.at(i, j);
    }
    return r;
}

// matrix * column vector
inline IntVec operator*(const IntMatrix& m, const IntVec& y) {
    if (y.size() != m.cols())
        throw DimensionMismatchError("column vector length " + std::to_string(y.size()) +
                                     " vs matrix with " + std::to_string(m.cols()) + " cols");
    IntVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (y[j] != 0) r[i] += m.at(i, j) * y[j];
    return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot of unequal lengths");
    Int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace coxpoly
