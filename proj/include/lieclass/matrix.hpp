#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "lieclass/rational.hpp"

namespace lieclass {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;

    BasicMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw ValidationError("ragged initializer for matrix");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const BasicMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BasicMatrix& o) const { return !(*this == o); }

    BasicMatrix operator+(const BasicMatrix& o) const {
        require_same_shape(o);
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    BasicMatrix operator-(const BasicMatrix& o) const {
        require_same_shape(o);
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    BasicMatrix operator-() const {
        BasicMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    BasicMatrix operator*(const BasicMatrix& o) const {
        if (cols_ != o.rows_)
            throw ValidationError("matrix product shape mismatch");
        BasicMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    friend BasicMatrix operator*(const T& s, const BasicMatrix& m) {
        BasicMatrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size())
            throw ValidationError("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    BasicMatrix transpose() const {
        BasicMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_) if (v != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_skew() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    /// Row-major flattening; index (i,j) -> i*cols + j.
    std::vector<T> vec() const { return data_; }

    static BasicMatrix from_vec(const std::vector<T>& v, std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols)
            throw ValidationError("from_vec size mismatch");
        BasicMatrix m(rows, cols);
        m.data_ = v;
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << rational_to_string((*this)(i, j));
            }
            os << "]\n";
        }
        return os.str();
    }

private:
    void require_same_shape(const BasicMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<Rational>;
using Vector = std::vector<Rational>;

inline Matrix symmetric_part(const Matrix& m) {
    return Rational(1, 2) * (m + m.transpose());
}

inline Matrix skew_part(const Matrix& m) {
    return Rational(1, 2) * (m - m.transpose());
}

inline Matrix bracket(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

inline bool is_zero_vector(const Vector& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

} // namespace lieclass
