#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ei/bigint.hpp"

namespace ei {

// Dense integer matrix, row-major, exact arithmetic at any magnitude.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    IntMatrix mul(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in mul");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    // Row-vector times matrix.
    std::vector<Int> apply_left(const std::vector<Int>& v) const {
        if (v.size() != rows_) throw std::invalid_argument("dimension mismatch in apply_left");
        std::vector<Int> out(cols_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
        }
        return out;
    }

    // Exact determinant by fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

}  // namespace ei
