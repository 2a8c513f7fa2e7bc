#ifndef VORTSYM_MATRIX_HPP
#define VORTSYM_MATRIX_HPP

#include "vortsym/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vortsym {

using Vec = std::vector<Rational>;

// Dense rational matrix. Values are immutable in practice: every operation
// returns a new matrix, so sharing across threads is safe.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Vec apply(const Vec& v) const;
    Rational trace() const;

    // Reduced row echelon form: pivots 1, pivot columns cleared, zero rows
    // last. Row space is preserved.
    Matrix rref() const;
    std::size_t rank() const;

    // A particular solution of this * x = rhs (free variables set to 0), or
    // nullopt when the system is inconsistent.
    std::optional<Vec> solve(const Vec& rhs) const;

    // Canonical basis of {x : this * x = 0}, one vector per free column.
    std::vector<Vec> nullspace() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

}  // namespace vortsym

#endif
