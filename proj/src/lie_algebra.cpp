#include "vortsym/lie_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace vortsym {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table)
    : dim_(labels.size()), labels_(std::move(labels)) {
    if (table.size() != dim_) {
        throw std::invalid_argument("lie algebra: table size does not match basis");
    }
    c_.assign(dim_ * dim_ * dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (table[i].size() != dim_) {
            throw std::invalid_argument("lie algebra: table row size mismatch");
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (table[i][j].size() != dim_) {
                throw std::invalid_argument("lie algebra: bracket vector size mismatch");
            }
            for (std::size_t k = 0; k < dim_; ++k) {
                c_[(i * dim_ + j) * dim_ + k] = table[i][j][k];
            }
        }
    }
    validate();
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<BracketEntry>& entries) {
    const std::size_t n = labels.size();
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n)));
    for (const BracketEntry& e : entries) {
        if (e.i >= n || e.j >= n) {
            throw std::invalid_argument("lie algebra: bracket index out of range");
        }
        if (e.i >= e.j) {
            throw std::invalid_argument("lie algebra: bracket entries must have i < j");
        }
        if (e.c.size() != n) {
            throw std::invalid_argument("lie algebra: bracket coefficient vector size mismatch");
        }
        for (std::size_t k = 0; k < n; ++k) {
            table[e.i][e.j][k] = e.c[k];
            table[e.j][e.i][k] = -e.c[k];
        }
    }
    return LieAlgebra(std::move(labels), std::move(table));
}

void LieAlgebra::validate() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                if (c(i, j, k) != -c(j, i, k)) {
                    throw std::invalid_argument(
                        "lie algebra: antisymmetry violated at pair (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
                }
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Vec acc(dim_);
                const auto accumulate = [&](std::size_t a, std::size_t b, std::size_t cc) {
                    // [e_a, [e_b, e_cc]]
                    for (std::size_t l = 0; l < dim_; ++l) {
                        const Rational& w = c(b, cc, l);
                        if (w == 0) {
                            continue;
                        }
                        for (std::size_t m = 0; m < dim_; ++m) {
                            acc[m] += w * c(a, l, m);
                        }
                    }
                };
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                for (std::size_t m = 0; m < dim_; ++m) {
                    if (acc[m] != 0) {
                        throw std::invalid_argument(
                            "lie algebra: Jacobi identity violated at triple (" +
                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
                    }
                }
            }
        }
    }
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        out[k] = c(i, j, k);
    }
    return out;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) {
        throw std::invalid_argument("lie algebra: bracket vector length mismatch");
    }
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) {
                continue;
            }
            const Rational w = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& s = c(i, j, k);
                if (s != 0) {
                    out[k] += w * s;
                }
            }
        }
    }
    return out;
}

Subspace LieAlgebra::bracket(const Subspace& a, const Subspace& b) const {
    if (a.ambient_dim() != dim_ || b.ambient_dim() != dim_) {
        throw std::invalid_argument("lie algebra: subspace ambient dimension mismatch");
    }
    std::vector<Vec> products;
    for (const Vec& u : a.basis()) {
        for (const Vec& v : b.basis()) {
            products.push_back(bracket(u, v));
        }
    }
    return Subspace::span(dim_, products);
}

Matrix LieAlgebra::ad(const Vec& v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("lie algebra: ad vector length mismatch");
    }
    // Column j = [v, e_j].
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& s = c(i, j, k);
                if (s != 0) {
                    m.at(k, j) += v[i] * s;
                }
            }
        }
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    Vec v(dim_);
    v[i] = 1;
    return ad(v);
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
    return s.contains(bracket(full_space(), s));
}

std::string LieAlgebra::describe(const Vec& v) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] == 0) {
            continue;
        }
        Rational mag = v[i];
        if (v[i] < 0) {
            mag = -v[i];
            out += out.empty() ? "-" : " - ";
        } else if (!out.empty()) {
            out += " + ";
        }
        if (mag != 1) {
            out += to_string(mag) + "*";
        }
        out += labels_[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace vortsym
