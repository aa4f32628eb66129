#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/errors.hpp"
#include "exactcat/prime_field.hpp"

namespace exactcat {

struct RrefResult;

/// Dense matrix over F_p.  Zero-by-n and n-by-zero shapes are first-class
/// citizens: most categorical constructions bottom out in them.
///
/// Canonical forms produced here (and relied on everywhere above):
///  - rref():                reduced row echelon form, deterministic pivoting
///  - kernel_basis():        one column per free column of the rref
///  - cokernel_projection(): kernel_basis of the transpose, transposed
///  - column_space_basis():  transposed nonzero rows of rref(transpose)
///  - solve():               the solution with all free variables set to zero
class Matrix {
public:
    Matrix(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          data_(static_cast<size_t>(check_shape(rows, cols)) * cols, 0) {}

    Matrix(PrimeField field, int rows, int cols, const std::vector<int>& entries)
        : Matrix(field, rows, cols) {
        if (entries.size() != data_.size())
            throw invalid_input("Matrix: expected " + std::to_string(data_.size()) +
                                " entries, got " + std::to_string(entries.size()));
        for (size_t i = 0; i < entries.size(); ++i) data_[i] = field_.reduce(entries[i]);
    }

    static Matrix identity(PrimeField field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    /// Row-of-rows convenience constructor (tests, serialization).
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(field, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw invalid_input("Matrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, int v) { data_[static_cast<size_t>(i) * cols_ + j] = field_.reduce(v); }

    bool is_zero() const {
        for (int v : data_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        require_same_field(o);
        if (cols_ != o.rows_)
            throw invalid_input("Matrix multiply: " + shape() + " * " + o.shape());
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                int a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.set(i, j, field_.add(r.at(i, j), field_.mul(a, o.at(k, j))));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "add");
        Matrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "subtract");
        Matrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
        return r;
    }

    Matrix negate() const {
        Matrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.neg(data_[i]);
        return r;
    }

    Matrix scale(int c) const {
        c = field_.reduce(c);
        Matrix r(field_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(c, data_[i]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    /// [this | o], row counts must agree.
    Matrix hstack(const Matrix& o) const {
        require_same_field(o);
        if (rows_ != o.rows_)
            throw invalid_input("Matrix hstack: " + shape() + " | " + o.shape());
        Matrix r(field_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
            for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
        }
        return r;
    }

    /// [this ; o], column counts must agree.
    Matrix vstack(const Matrix& o) const {
        require_same_field(o);
        if (cols_ != o.cols_)
            throw invalid_input("Matrix vstack: " + shape() + " ; " + o.shape());
        Matrix r(field_, rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
        return r;
    }

    RrefResult rref() const;

    int rank() const;

    /// Columns form the canonical basis of {x : Ax = 0}: one basis vector per
    /// free column f of the rref, with x[f] = 1 and pivot coordinates filled
    /// by back-substitution.  Shape cols x nullity.
    Matrix kernel_basis() const;

    /// Canonical projection q with ker q = column space; q has full row rank.
    /// Shape (rows - rank) x rows.  Computed as kernel_basis(A^T)^T, so it
    /// depends only on the column space of A.
    Matrix cokernel_projection() const;

    /// Canonical basis of the column space: transpose of the nonzero rows of
    /// rref(A^T).  Two column sets span the same subspace iff this agrees.
    /// Shape rows x rank.
    Matrix column_space_basis() const;

    /// One solution of Ax = rhs per rhs column (free variables zero), or
    /// nullopt if any column is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        return solve(identity(field_, rows_));
    }

    std::vector<int> column(int j) const {
        std::vector<int> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    static int check_shape(int rows, int cols) {
        if (rows < 0 || cols < 0) throw invalid_input("Matrix: negative dimension");
        return rows;
    }

    void require_same_field(const Matrix& o) const {
        if (!(field_ == o.field_)) throw invalid_input("Matrix: mixed fields");
    }

    void require_same_shape(const Matrix& o, const char* op) const {
        require_same_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw invalid_input(std::string("Matrix ") + op + ": " + shape() + " vs " + o.shape());
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) {
            int t = at(a, j);
            set(a, j, at(b, j));
            set(b, j, t);
        }
    }

    void scale_row(int i, int c) {
        for (int j = 0; j < cols_; ++j) set(i, j, field_.mul(at(i, j), c));
    }

    // row[i] += c * row[src]
    void add_scaled_row(int i, int src, int c) {
        for (int j = 0; j < cols_; ++j)
            set(i, j, field_.add(at(i, j), field_.mul(c, at(src, j))));
    }

    PrimeField field_;
    int rows_, cols_;
    std::vector<int> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<int> pivots;  // pivot column indices, strictly increasing
};

inline RrefResult Matrix::rref() const {
    Matrix r = *this;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot_row = -1;
        for (int i = lead; i < rows_; ++i)
            if (r.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        r.swap_rows(lead, pivot_row);
        r.scale_row(lead, field_.inv(r.at(lead, col)));
        for (int i = 0; i < rows_; ++i) {
            if (i == lead) continue;
            int f = r.at(i, col);
            if (f != 0) r.add_scaled_row(i, lead, field_.neg(f));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

inline int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

inline Matrix Matrix::kernel_basis() const {
    RrefResult rr = rref();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k.set(fc, j, 1);
        for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i)
            k.set(rr.pivots[i], j, field_.neg(rr.matrix.at(i, fc)));
    }
    return k;
}

inline Matrix Matrix::cokernel_projection() const {
    return transpose().kernel_basis().transpose();
}

inline Matrix Matrix::column_space_basis() const {
    RrefResult rr = transpose().rref();
    int r = static_cast<int>(rr.pivots.size());
    Matrix b(field_, rows_, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows_; ++j) b.set(j, i, rr.matrix.at(i, j));
    return b;
}

inline std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    require_same_field(rhs);
    if (rhs.rows() != rows_)
        throw invalid_input("Matrix solve: lhs " + shape() + " vs rhs " + rhs.shape());
    RrefResult rr = hstack(rhs).rref();
    for (int c : rr.pivots)
        if (c >= cols_) return std::nullopt;  // a pivot escaped into the rhs block
    Matrix x(field_, cols_, rhs.cols());
    for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i)
        for (int j = 0; j < rhs.cols(); ++j) x.set(rr.pivots[i], j, rr.matrix.at(i, cols_ + j));
    return x;
}

/// Solve x * a = b for x (i.e. factor b through the rows of a).
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto xt = a.transpose().solve(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

/// Canonical-form equality of the subspaces spanned by the columns.
inline bool same_column_space(const Matrix& a, const Matrix& b) {
    return a.column_space_basis() == b.column_space_basis();
}

/// Columns of a all lie in the column space of b.
inline bool column_space_contained(const Matrix& a, const Matrix& b) {
    return b.solve(a).has_value();
}

}  // namespace exactcat
