#pragma once
#include <vector>
#include <cstddef>
#include <stdexcept>
#include "sbl/field.hpp"

namespace sbl {

// Dense exact matrix over a field K.  Intended for the symbolic layer
// (zigzag oracle, trace model, small chain complexes); the cubical grid
// backend has its own sparse F2 path (see cubical.hpp).
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, field_zero<K>()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field_one<K>();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }

    bool is_zero_matrix() const {
        for (const K& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    K trace() const {
        K t = field_zero<K>();
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    // Reduce in place to reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            std::size_t sel = pr;
            while (sel < rows_ && is_zero((*this)(sel, pc))) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, pr);
            K inv = field_inv((*this)(pr, pc));
            for (std::size_t c = pc; c < cols_; ++c) (*this)(pr, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == pr) continue;
                K f = (*this)(r, pc);
                if (is_zero(f)) continue;
                for (std::size_t c = pc; c < cols_; ++c)
                    (*this)(r, c) -= f * (*this)(pr, c);
            }
            pivots.push_back(pc);
            ++pr;
        }
        return pivots;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <class K>
std::size_t rank(const Matrix<K>& m) {
    Matrix<K> copy = m;
    return copy.rref().size();
}

using MatrixF2 = Matrix<F2>;
using MatrixQ = Matrix<Rat>;

} // namespace sbl
