#pragma once

// Template definitions for linalg.hpp.

namespace cqs {

template <class K>
Matrix<K> Matrix<K>::from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
    }
    return M;
}

template <class K>
Matrix<K> Matrix<K>::transpose() const {
    Matrix T(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

template <class K>
bool Matrix<K>::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
K Matrix<K>::trace() const {
    K t = 0;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

template <class K>
Matrix<K> matmul(const Matrix<K>& A, const Matrix<K>& B, Exec ex) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix<K> C(A.rows(), B.cols());
    const long long R = static_cast<long long>(A.rows());
    auto body = [&](long long i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const K& a = A(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
        }
    };
    if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < R; ++i) body(i);
    } else {
        for (long long i = 0; i < R; ++i) body(i);
    }
    return C;
}

template <class K>
Matrix<K> matadd(const Matrix<K>& A, const Matrix<K>& B, const K& s) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("matadd: shape mismatch");
    Matrix<K> C = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) += s * B(i, j);
    return C;
}

template <class K>
Matrix<K> matscale(const Matrix<K>& A, const K& s) {
    Matrix<K> C = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) *= s;
    return C;
}

template <class K>
Vec<K> vecmat(std::span<const K> v, const Matrix<K>& A) {
    Vec<K> out(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (v[i].is_zero()) continue;
        auto row = A.row(i);
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!row[j].is_zero()) out[j] += v[i] * row[j];
    }
    return out;
}

template <class K>
Vec<K> matvec(const Matrix<K>& A, std::span<const K> v) {
    Vec<K> out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto row = A.row(i);
        K s = 0;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!v[j].is_zero() && !row[j].is_zero()) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

template <class K>
std::vector<std::size_t> rref_inplace(Matrix<K>& A, Exec ex) {
    std::vector<std::size_t> piv;
    const std::size_t R = A.rows(), C = A.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t p = rank;
        while (p < R && A(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != rank)
            for (std::size_t j = c; j < C; ++j) std::swap(A(p, j), A(rank, j));
        K inv = A(rank, c).inv();
        for (std::size_t j = c; j < C; ++j) A(rank, j) *= inv;
        const std::size_t pr = rank;
        auto eliminate = [&](long long i) {
            if (static_cast<std::size_t>(i) == pr || A(i, c).is_zero()) return;
            K f = A(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!A(pr, j).is_zero()) A(i, j) -= f * A(pr, j);
        };
        if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(static) if (R * (C - c) > 4096)
            for (long long i = 0; i < static_cast<long long>(R); ++i) eliminate(i);
        } else {
            for (long long i = 0; i < static_cast<long long>(R); ++i) eliminate(i);
        }
        piv.push_back(c);
        ++rank;
    }
    return piv;
}

template <class K>
Matrix<K> nullspace(const Matrix<K>& A) {
    Matrix<K> R = A;
    auto piv = rref_inplace(R);
    std::vector<char> is_piv(A.cols(), 0);
    for (auto c : piv) is_piv[c] = 1;
    std::vector<Vec<K>> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec<K> x(A.cols());
        x[f] = K(1);
        for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -R(k, f);
        basis.push_back(std::move(x));
    }
    return Matrix<K>::from_rows(basis, A.cols());
}

template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& A, std::span<const K> b) {
    return Solver<K>(A).solve(b);
}

template <class K>
Solver<K>::Solver(const Matrix<K>& A) : m_(A.rows()), n_(A.cols()) {
    Matrix<K> aug(m_, n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) aug(i, j) = A(i, j);
        aug(i, n_ + i) = K(1);
    }
    auto piv = rref_inplace(aug);
    for (auto c : piv)
        if (c < n_) pivots_.push_back(c);
    E_ = Matrix<K>(m_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) E_(i, j) = aug(i, n_ + j);
}

template <class K>
std::optional<Vec<K>> Solver<K>::solve(std::span<const K> b) const {
    if (b.size() != m_) throw std::invalid_argument("Solver: rhs size mismatch");
    Vec<K> y = matvec(E_, b);
    for (std::size_t i = pivots_.size(); i < m_; ++i)
        if (!y[i].is_zero()) return std::nullopt;
    Vec<K> x(n_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = y[k];
    return x;
}

template <class K>
Vec<K> Echelon<K>::reduce(Vec<K> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const K f = v[piv_[k]];
        if (f.is_zero()) continue;
        const auto& row = rows_[k];
        for (std::size_t j = piv_[k]; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

template <class K>
bool Echelon<K>::add(const Vec<K>& v) {
    Vec<K> w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && w[p].is_zero()) ++p;
    if (p == dim_) return false;
    K inv = w[p].inv();
    for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
    // keep stored rows fully reduced at the new pivot
    for (auto& row : rows_) {
        const K f = row[p];
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < dim_; ++j)
            if (!w[j].is_zero()) row[j] -= f * w[j];
    }
    // insert sorted by pivot column
    std::size_t at = 0;
    while (at < piv_.size() && piv_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(w));
    piv_.insert(piv_.begin() + at, p);
    return true;
}

template <class K>
Vec<K> Echelon<K>::coords(const Vec<K>& v) const {
    Vec<K> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
    return c;
}

}  // namespace cqs
