#include "vortsym/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace vortsym {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("matrix: ragged rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    return from_rows(cols).transposed();
}

Vec Matrix::row(std::size_t i) const {
    Vec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        out[j] = at(i, j);
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m.at(j, i) = at(i, j);
        }
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix: product dimension mismatch");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix: apply dimension mismatch");
    }
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("matrix: trace of non-square matrix");
    }
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += at(i, i);
    }
    return t;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows_ && m.at(sel, col) == 0) {
            ++sel;
        }
        if (sel == m.rows_) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols_; ++j) {
            std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        const Rational inv_pivot = Rational(1) / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols_; ++j) {
            m.at(pivot_row, j) *= inv_pivot;
        }
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i == pivot_row || m.at(i, col) == 0) {
                continue;
            }
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols_; ++j) {
                m.at(i, j) -= factor * m.at(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    const Matrix r = rref();
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) {
            ++n;
        }
    }
    return n;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
    if (rhs.size() != rows_) {
        throw std::invalid_argument("matrix: solve dimension mismatch");
    }
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            aug.at(i, j) = at(i, j);
        }
        aug.at(i, cols_) = rhs[i];
    }
    const Matrix r = aug.rref();
    Vec solution(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t pivot = cols_ + 1;
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (r.at(i, j) != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == cols_) {
            return std::nullopt;  // row (0 ... 0 | 1): inconsistent
        }
        if (pivot > cols_) {
            continue;  // zero row
        }
        solution[pivot] = r.at(i, cols_);
        // free variables stay 0; subtract their (zero) contribution
    }
    // The assignment above is only valid because free variables are zero:
    // pivot variable = rhs entry minus free-variable terms, which vanish.
    return solution;
}

std::vector<Vec> Matrix::nullspace() const {
    const Matrix r = rref();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (r.at(i, j) != 0) {
                pivot_col_of_row.push_back(j);
                is_pivot[j] = true;
                break;
            }
        }
    }
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(cols_);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            v[pivot_col_of_row[i]] = -r.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace vortsym
