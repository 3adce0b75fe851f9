#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cqs/field.hpp"

namespace cqs {

enum class Exec { Serial, Parallel };

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = K(1);
        return I;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::span<K> row(std::size_t i) { return {a_.data() + i * c_, c_}; }
    std::span<const K> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }
    Vec<K> row_vec(std::size_t i) const { return Vec<K>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<K> col_vec(std::size_t j) const {
        Vec<K> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const;
    bool is_zero() const;
    K trace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

template <class K>
Matrix<K> matmul(const Matrix<K>& A, const Matrix<K>& B, Exec ex = Exec::Serial);
template <class K>
Matrix<K> matadd(const Matrix<K>& A, const Matrix<K>& B, const K& s = K(1));
template <class K>
Matrix<K> matscale(const Matrix<K>& A, const K& s);

// row vector times matrix / matrix times column vector
template <class K>
Vec<K> vecmat(std::span<const K> v, const Matrix<K>& A);
template <class K>
Vec<K> matvec(const Matrix<K>& A, std::span<const K> v);

template <class K>
bool is_zero_vec(std::span<const K> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// In-place reduced row echelon form; pivot rows are chosen with the smallest
// row index. Returns the pivot column of each nonzero row.
template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& A, Exec ex = Exec::Serial);

template <class K>
Matrix<K> rref(Matrix<K> A, Exec ex = Exec::Serial) {
    rref_inplace(A, ex);
    return A;
}

template <class K>
std::size_t rank(Matrix<K> A, Exec ex = Exec::Serial) {
    return rref_inplace(A, ex).size();
}

// Basis of {x : A x = 0}, one basis vector per row of the result.
template <class K>
Matrix<K> nullspace(const Matrix<K>& A);

// Basis of {x : x A = 0} (row vectors).
template <class K>
Matrix<K> left_nullspace(const Matrix<K>& A) {
    return nullspace(A.transpose());
}

template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& A, std::span<const K> b);

// Factor A once and solve A x = b for many right-hand sides. Free
// variables are set to zero, so the solution is deterministic.
template <class K>
class Solver {
public:
    Solver() = default;
    explicit Solver(const Matrix<K>& A);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::optional<Vec<K>> solve(std::span<const K> b) const;

private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<std::size_t> pivots_;
    Matrix<K> E_;  // row operations: E A = rref(A)
};

// Row space kept in reduced echelon form, for spinning and quotients.
template <class K>
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<Vec<K>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    // reduce v modulo the span; returns the remainder
    Vec<K> reduce(Vec<K> v) const;
    bool contains(const Vec<K>& v) const { return is_zero_vec<K>(reduce(v)); }
    // add v; returns false when v was already in the span
    bool add(const Vec<K>& v);
    // coordinates of v (assumed in the span) in terms of the stored rows
    Vec<K> coords(const Vec<K>& v) const;
    Matrix<K> basis() const { return Matrix<K>::from_rows(rows_, dim_); }

private:
    std::size_t dim_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> piv_;
};

#define CQS_LINALG_EXTERN(K)                                                      \
    extern template class Matrix<K>;                                              \
    extern template Matrix<K> matmul<K>(const Matrix<K>&, const Matrix<K>&, Exec); \
    extern template std::vector<std::size_t> rref_inplace<K>(Matrix<K>&, Exec);   \
    extern template Matrix<K> nullspace<K>(const Matrix<K>&);                     \
    extern template class Solver<K>;                                              \
    extern template class Echelon<K>;
CQS_LINALG_EXTERN(Fp)
CQS_LINALG_EXTERN(Rational)
#undef CQS_LINALG_EXTERN

}  // namespace cqs

#include "cqs/linalg_impl.hpp"
