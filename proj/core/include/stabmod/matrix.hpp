#pragma once

#include <vector>

#include "stabmod/ring.hpp"

namespace stabmod::exactla {

/// Dense matrix over one coefficient mode. Entries are kept in canonical form
/// (see RingSpec::normalize). Immutable in spirit: operations return fresh
/// matrices; set() exists for construction code.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingSpec ring, long rows, long cols);

    static Matrix identity(RingSpec ring, long n);
    static Matrix zero(RingSpec ring, long rows, long cols) { return Matrix(ring, rows, cols); }
    static Matrix from_rows(RingSpec ring, const std::vector<std::vector<mpq_class>>& rows);
    static Matrix scalar(RingSpec ring, long n, const mpq_class& value);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const RingSpec& ring() const { return ring_; }

    const mpq_class& at(long i, long j) const { return a_[idx(i, j)]; }
    void set(long i, long j, const mpq_class& v) { a_[idx(i, j)] = ring_.normalize(v); }
    /// Construction-time write without normalization (caller guarantees canonical form).
    void set_raw(long i, long j, mpq_class v) { a_[idx(i, j)] = std::move(v); }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const mpq_class& c) const;
    Matrix transpose() const;
    Matrix kron(const Matrix& rhs) const;

    Matrix block(long i0, long j0, long nrows, long ncols) const;
    Matrix select_columns(const std::vector<long>& cols) const;
    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    /// Same entries reinterpreted in another mode (entries must be valid there).
    Matrix with_ring(RingSpec ring) const;

    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;
    bool is_identity() const;

    /// True if every row and every column has at most one nonzero entry.
    bool is_monomial() const;

    std::vector<mpq_class> column_vector(long j) const;

private:
    long idx(long i, long j) const;
    void check_same_shape(const Matrix& rhs) const;

    RingSpec ring_;
    long rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;

    friend struct MatrixOps;
};

/// Internal mutable access for the elimination kernels.
struct MatrixOps {
    static std::vector<mpq_class>& data(Matrix& m) { return m.a_; }
    static const std::vector<mpq_class>& data(const Matrix& m) { return m.a_; }
};

void require_same_ring(const Matrix& a, const Matrix& b, const char* where);

}  // namespace stabmod::exactla
