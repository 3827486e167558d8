#include "stabmod/matrix.hpp"

namespace stabmod::exactla {

Matrix::Matrix(RingSpec ring, long rows, long cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

long Matrix::idx(long i, long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("Matrix: index out of range");
    return i * cols_ + j;
}

Matrix Matrix::identity(RingSpec ring, long n) {
    Matrix m(ring, n, n);
    for (long i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

Matrix Matrix::scalar(RingSpec ring, long n, const mpq_class& value) {
    Matrix m(ring, n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, value);
    return m;
}

Matrix Matrix::from_rows(RingSpec ring, const std::vector<std::vector<mpq_class>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    Matrix m(ring, r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[i].size()) != c)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (long j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void require_same_ring(const Matrix& a, const Matrix& b, const char* where) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument(std::string(where) + ": ring mode mismatch (" +
                                    a.ring().describe() + " vs " + b.ring().describe() + ")");
}

void Matrix::check_same_shape(const Matrix& rhs) const {
    require_same_ring(*this, rhs, "Matrix");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Matrix: shape mismatch");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_ring(*this, rhs, "Matrix::operator*");
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix out(ring_, rows_, rhs.cols_);
    if (ring_.is_modular() && ring_.modulus() < (1L << 31)) {
        const long mod = ring_.modulus().get_si();
        std::vector<long> x(a_.size()), y(rhs.a_.size());
        for (size_t t = 0; t < a_.size(); ++t) x[t] = a_[t].get_num().get_si();
        for (size_t t = 0; t < rhs.a_.size(); ++t) y[t] = rhs.a_[t].get_num().get_si();
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < rhs.cols_; ++j) {
                long acc = 0;
                for (long k = 0; k < cols_; ++k) {
                    long v = x[i * cols_ + k];
                    if (v == 0) continue;
                    acc = (acc + v * y[k * rhs.cols_ + j]) % mod;
                }
                if (acc != 0) out.set_raw(i, j, mpq_class(acc));
            }
        return out;
    }
    mpq_class acc, term;
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < rhs.cols_; ++j) {
            acc = 0;
            for (long k = 0; k < cols_; ++k) {
                const mpq_class& x = a_[i * cols_ + k];
                if (x == 0) continue;
                const mpq_class& y = rhs.a_[k * rhs.cols_ + j];
                if (y == 0) continue;
                term = x * y;
                acc += term;
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out(ring_, rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ring_.normalize(a_[t] + rhs.a_[t]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    check_same_shape(rhs);
    Matrix out(ring_, rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ring_.normalize(a_[t] - rhs.a_[t]);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(ring_, rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ring_.normalize(-a_[t]);
    return out;
}

Matrix Matrix::scaled(const mpq_class& c) const {
    Matrix out(ring_, rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ring_.normalize(a_[t] * c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
    return out;
}

Matrix Matrix::kron(const Matrix& rhs) const {
    require_same_ring(*this, rhs, "Matrix::kron");
    Matrix out(ring_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const mpq_class& x = a_[i * cols_ + j];
            if (x == 0) continue;
            for (long k = 0; k < rhs.rows_; ++k)
                for (long l = 0; l < rhs.cols_; ++l) {
                    const mpq_class& y = rhs.a_[k * rhs.cols_ + l];
                    if (y == 0) continue;
                    out.set(i * rhs.rows_ + k, j * rhs.cols_ + l, x * y);
                }
        }
    return out;
}

Matrix Matrix::block(long i0, long j0, long nrows, long ncols) const {
    if (i0 < 0 || j0 < 0 || i0 + nrows > rows_ || j0 + ncols > cols_)
        throw std::out_of_range("Matrix::block: out of range");
    Matrix out(ring_, nrows, ncols);
    for (long i = 0; i < nrows; ++i)
        for (long j = 0; j < ncols; ++j) out.a_[i * ncols + j] = a_[(i0 + i) * cols_ + (j0 + j)];
    return out;
}

Matrix Matrix::select_columns(const std::vector<long>& cols) const {
    Matrix out(ring_, rows_, static_cast<long>(cols.size()));
    for (long i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.a_[i * out.cols_ + j] = at(i, cols[j]);
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    require_same_ring(left, right, "Matrix::hstack");
    if (left.rows() != right.rows()) throw std::invalid_argument("Matrix::hstack: row mismatch");
    Matrix out(left.ring(), left.rows(), left.cols() + right.cols());
    for (long i = 0; i < out.rows(); ++i) {
        for (long j = 0; j < left.cols(); ++j) out.a_[i * out.cols_ + j] = left.at(i, j);
        for (long j = 0; j < right.cols(); ++j)
            out.a_[i * out.cols_ + left.cols() + j] = right.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    require_same_ring(top, bottom, "Matrix::vstack");
    if (top.cols() != bottom.cols()) throw std::invalid_argument("Matrix::vstack: col mismatch");
    Matrix out(top.ring(), top.rows() + bottom.rows(), top.cols());
    for (long i = 0; i < top.rows(); ++i)
        for (long j = 0; j < top.cols(); ++j) out.a_[i * out.cols_ + j] = top.at(i, j);
    for (long i = 0; i < bottom.rows(); ++i)
        for (long j = 0; j < top.cols(); ++j)
            out.a_[(top.rows() + i) * out.cols_ + j] = bottom.at(i, j);
    return out;
}

Matrix Matrix::with_ring(RingSpec ring) const {
    Matrix out(ring, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (!(ring_ == rhs.ring_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    return a_ == rhs.a_;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_monomial() const {
    std::vector<int> row_used(rows_, 0), col_used(cols_, 0);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) {
                if (row_used[i]++ || col_used[j]++) return false;
            }
    return true;
}

std::vector<mpq_class> Matrix::column_vector(long j) const {
    std::vector<mpq_class> out(rows_);
    for (long i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

}  // namespace stabmod::exactla
