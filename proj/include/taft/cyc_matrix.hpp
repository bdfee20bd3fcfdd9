#pragma once

// Dense matrices over Q(w) and the exact row-reduction helpers the module
// decomposition needs. Products skip structural zeros, so the sparse
// matrices that arise from tensoring basis modules stay cheap.

#include "cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace taft {

using CycVector = std::vector<CycNum>;

class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int order, std::size_t rows, std::size_t cols)
        : order_(order), rows_(rows), cols_(cols), data_(rows * cols, CycNum(order)) {}

    static CycMatrix identity(int order, std::size_t size) {
        CycMatrix out(order, size, size);
        for (std::size_t k = 0; k < size; ++k) out(k, k) = CycNum::one(order);
        return out;
    }

    int order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    CycNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CycVector column(std::size_t c) const {
        CycVector out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    static CycMatrix from_columns(int order, std::size_t rows, const std::vector<CycVector>& columns) {
        CycMatrix out(order, rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("CycMatrix::from_columns: length mismatch");
            for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
        }
        return out;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.cols_ != b.rows_ || a.order_ != b.order_) throw std::invalid_argument("CycMatrix: shape mismatch in product");
        CycMatrix out(a.order_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycNum& aik = a(i, k);
                if (aik.is_structural_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycNum& bkj = b(k, j);
                    if (bkj.is_structural_zero()) continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend CycVector operator*(const CycMatrix& a, const CycVector& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("CycMatrix: shape mismatch in matrix-vector product");
        CycVector out(a.rows_, CycNum(a.order_));
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (v[k].is_structural_zero()) continue;
            for (std::size_t i = 0; i < a.rows_; ++i) {
                const CycNum& aik = a(i, k);
                if (!aik.is_structural_zero()) out[i] += aik * v[k];
            }
        }
        return out;
    }

    friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) {
        a.check_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!b.data_[k].is_structural_zero()) a.data_[k] += b.data_[k];
        return a;
    }

    friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) {
        a.check_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!b.data_[k].is_structural_zero()) a.data_[k] -= b.data_[k];
        return a;
    }

    friend CycMatrix operator*(const CycNum& s, CycMatrix a) {
        for (auto& x : a.data_)
            if (!x.is_structural_zero()) x = s * x;
        return a;
    }

    CycMatrix transpose() const {
        CycMatrix out(order_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    CycMatrix pow(unsigned e) const {
        if (!square()) throw std::invalid_argument("CycMatrix::pow: matrix not square");
        CycMatrix result = identity(order_, rows_);
        CycMatrix base = *this;
        while (e > 0) {
            if (e & 1u) result = (result * base).canonical();
            e >>= 1u;
            if (e > 0) base = (base * base).canonical();
        }
        return result;
    }

    CycMatrix canonical() const {
        CycMatrix out(*this);
        for (auto& x : out.data_)
            if (!x.is_structural_zero()) x.canonicalize();
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const CycNum& x = (*this)(r, c);
                if (r == c ? !(x == CycNum::one(order_)) : !x.is_zero()) return false;
            }
        return true;
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.order_ != b.order_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }

    /// Kronecker product, left factor indexing the outer blocks.
    static CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("CycMatrix::kron: order mismatch");
        CycMatrix out(a.order_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const CycNum& aij = a(i, j);
                if (aij.is_structural_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) {
                        const CycNum& bkl = b(k, l);
                        if (!bkl.is_structural_zero()) out(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return out;
    }

    /// Block-diagonal sum.
    static CycMatrix direct_sum(const CycMatrix& a, const CycMatrix& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("CycMatrix::direct_sum: order mismatch");
        CycMatrix out(a.order_, a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, a.cols_ + c) = b(r, c);
        return out;
    }

private:
    void check_shape(const CycMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_ || order_ != b.order_)
            throw std::invalid_argument("CycMatrix: shape mismatch");
    }

    int order_ = 1;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycNum> data_;
};

/// Incrementally maintained reduced row-echelon basis of a subspace of
/// Q(w)^dim. Rows have pivot 1 and zeros in every other row's pivot column.
class EchelonBasis {
public:
    EchelonBasis(int order, std::size_t dim) : order_(order), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Residue of v after elimination against the stored rows (canonical entries).
    CycVector reduce(CycVector v) const {
        if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
        for (auto& x : v)
            if (!x.is_structural_zero()) x.canonicalize();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_structural_zero()) continue;
            const CycNum factor = v[p];
            for (std::size_t c = 0; c < dim_; ++c) {
                if (rows_[r][c].is_structural_zero()) continue;
                v[c] -= factor * rows_[r][c];
                v[c].canonicalize();
            }
        }
        return v;
    }

    bool contains(const CycVector& v) const {
        for (const auto& x : reduce(v))
            if (!x.is_structural_zero()) return false;
        return true;
    }

    /// Adds v to the span; returns false if it was already contained.
    bool insert(const CycVector& v) {
        CycVector res = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && res[p].is_structural_zero()) ++p;
        if (p == dim_) return false;
        const CycNum inv = res[p].inverse();
        for (auto& x : res)
            if (!x.is_structural_zero()) x = (x * inv).canonical();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r][p].is_structural_zero()) continue;
            const CycNum factor = rows_[r][p];
            for (std::size_t c = 0; c < dim_; ++c) {
                if (res[c].is_structural_zero()) continue;
                rows_[r][c] -= factor * res[c];
                rows_[r][c].canonicalize();
            }
        }
        rows_.push_back(std::move(res));
        pivots_.push_back(p);
        return true;
    }

private:
    int order_;
    std::size_t dim_;
    std::vector<CycVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Columns of m forming a basis of its column space (original columns, not reduced).
inline std::vector<CycVector> column_space_basis(const CycMatrix& m) {
    EchelonBasis span(m.order(), m.rows());
    std::vector<CycVector> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        CycVector col = m.column(c);
        if (span.insert(col)) out.push_back(std::move(col));
    }
    return out;
}

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
inline std::optional<CycMatrix> inverse(const CycMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    const int order = m.order();
    CycMatrix a = m.canonical();
    CycMatrix inv = CycMatrix::identity(order, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_structural_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const CycNum p = a(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            if (!a(col, c).is_structural_zero()) a(col, c) = (a(col, c) * p).canonical();
            if (!inv(col, c).is_structural_zero()) inv(col, c) = (inv(col, c) * p).canonical();
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_structural_zero()) continue;
            const CycNum f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!a(col, c).is_structural_zero()) {
                    a(r, c) -= f * a(col, c);
                    a(r, c).canonicalize();
                }
                if (!inv(col, c).is_structural_zero()) {
                    inv(r, c) -= f * inv(col, c);
                    inv(r, c).canonicalize();
                }
            }
        }
    }
    return inv;
}

}  // namespace taft
