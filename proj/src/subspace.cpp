#include "vortsym/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace vortsym {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors) {
        if (v.size() != ambient_dim) {
            throw std::invalid_argument("subspace: vector does not match ambient dimension");
        }
    }
    Subspace s(ambient_dim);
    if (vectors.empty()) {
        return s;
    }
    const Matrix r = Matrix::from_rows(vectors).rref();
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row = r.row(i);
        bool nonzero = false;
        for (const Rational& e : row) {
            if (e != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) {
            s.basis_.push_back(std::move(row));
        }
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(ambient_dim, rows);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) {
        throw std::invalid_argument("subspace: vector does not match ambient dimension");
    }
    for (const Vec& row : basis_) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && row[pivot] == 0) {
            ++pivot;
        }
        if (pivot == ambient_ || v[pivot] == 0) {
            continue;
        }
        const Rational factor = v[pivot];  // pivot entries are 1
        for (std::size_t j = pivot; j < ambient_; ++j) {
            v[j] -= factor * row[j];
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    for (const Rational& e : reduce(v)) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    }
    for (const Vec& v : other.basis_) {
        if (!contains(v)) {
            return false;
        }
    }
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) {
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    }
    std::vector<Vec> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.ambient_, all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) {
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    }
    const std::size_t p = a.dim();
    const std::size_t q = b.dim();
    if (p == 0 || q == 0) {
        return Subspace(a.ambient_);
    }
    // Columns: coefficients (x, y) with x^T A = y^T B; rows: ambient coords.
    Matrix stacked(a.ambient_, p + q);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < a.ambient_; ++i) {
            stacked.at(i, j) = a.basis_[j][i];
        }
    }
    for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t i = 0; i < a.ambient_; ++i) {
            stacked.at(i, p + j) = -b.basis_[j][i];
        }
    }
    std::vector<Vec> members;
    for (const Vec& k : stacked.nullspace()) {
        Vec v(a.ambient_);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < a.ambient_; ++i) {
                v[i] += k[j] * a.basis_[j][i];
            }
        }
        members.push_back(std::move(v));
    }
    return Subspace::span(a.ambient_, members);
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
    if (ambient_ != other.ambient_) {
        return ambient_ <=> other.ambient_;
    }
    if (basis_.size() != other.basis_.size()) {
        return basis_.size() <=> other.basis_.size();
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (basis_[i][j] != other.basis_[i][j]) {
                return basis_[i][j] < other.basis_[i][j] ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
            }
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace vortsym
