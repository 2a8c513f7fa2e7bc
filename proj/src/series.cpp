#include "vortsym/series.hpp"

#include <stdexcept>
#include <utility>

namespace vortsym {

const char* series_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::derived: return "derived";
        case SeriesKind::lower_central: return "lower_central";
        case SeriesKind::upper_central: return "upper_central";
    }
    return "?";
}

namespace {

SeriesReport descending_series(const LieAlgebra& g, SeriesKind kind) {
    SeriesReport report{kind, {g.full_space()}, false};
    while (true) {
        const Subspace& last = report.terms.back();
        const Subspace next = kind == SeriesKind::derived
                                  ? g.bracket(last, last)
                                  : g.bracket(g.full_space(), last);
        if (next == last) {
            break;
        }
        report.terms.push_back(next);
    }
    report.stabilized = true;
    return report;
}

// {x : [x, e_j] in s for all j}; with s = 0 this is the center.
Subspace bracket_preimage(const LieAlgebra& g, const Subspace& s) {
    const std::size_t n = g.dim();
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        // Row block: coordinates of reduce([e_i, e_j]) modulo s.
        std::vector<Vec> reduced;
        reduced.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            reduced.push_back(s.reduce(g.bracket(i, j)));
        }
        for (std::size_t coord = 0; coord < n; ++coord) {
            Vec row(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = reduced[i][coord];
                if (row[i] != 0) {
                    nonzero = true;
                }
            }
            if (nonzero) {
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) {
        return g.full_space();
    }
    return Subspace::span(n, Matrix::from_rows(rows).nullspace());
}

}  // namespace

SeriesReport derived_series(const LieAlgebra& g) {
    return descending_series(g, SeriesKind::derived);
}

SeriesReport lower_central_series(const LieAlgebra& g) {
    return descending_series(g, SeriesKind::lower_central);
}

SeriesReport upper_central_series(const LieAlgebra& g) {
    SeriesReport report{SeriesKind::upper_central, {g.zero_space()}, false};
    while (true) {
        const Subspace next = bracket_preimage(g, report.terms.back());
        if (next == report.terms.back()) {
            break;
        }
        report.terms.push_back(next);
    }
    report.stabilized = true;
    return report;
}

Subspace center(const LieAlgebra& g) {
    return bracket_preimage(g, g.zero_space());
}

bool is_solvable(const LieAlgebra& g) {
    return derived_series(g).terms.back().is_zero();
}

bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series(g).terms.back().is_zero();
}

IdealNilpotency ideal_nilpotency(const LieAlgebra& g, const Subspace& candidate) {
    if (!g.is_ideal(candidate)) {
        return IdealNilpotency::not_an_ideal;
    }
    // Lower central series of the ideal as an algebra, run in ambient
    // coordinates: i, [i, i], [i, [i, i]], ...
    Subspace term = candidate;
    while (true) {
        const Subspace next = g.bracket(candidate, term);
        if (next == term) {
            break;
        }
        term = next;
    }
    return term.is_zero() ? IdealNilpotency::nilpotent : IdealNilpotency::not_nilpotent;
}

Matrix killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ads.push_back(g.ad_basis(i));
    }
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational tr;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    tr += ads[i].at(a, b) * ads[j].at(b, a);
                }
            }
            k.at(i, j) = tr;
            k.at(j, i) = tr;
        }
    }
    return k;
}

Subspace radical(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Matrix k = killing_form(g);
    const Subspace derived = g.bracket(g.full_space(), g.full_space());
    // x solves K(x, w) = 0 for every w in the derived algebra.
    std::vector<Vec> rows;
    for (const Vec& w : derived.basis()) {
        Vec row(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                row[i] += k.at(i, j) * w[j];
            }
        }
        rows.push_back(std::move(row));
    }
    const Subspace r = rows.empty() ? g.full_space()
                                    : Subspace::span(n, Matrix::from_rows(rows).nullspace());
    if (!g.is_ideal(r)) {
        throw std::logic_error("radical: computed subspace is not an ideal");
    }
    if (!r.is_zero() && !is_solvable(restrict_to(g, r).algebra)) {
        throw std::logic_error("radical: computed ideal is not solvable");
    }
    return r;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            v.push_back(m.at(i, j));
        }
    }
    return v;
}

// Incrementally maintained reduced row echelon basis; cheaper than
// re-canonicalizing a Subspace on every insertion.
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width) {}

    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& lead = v[pivots_[r]];
            if (lead == 0) {
                continue;
            }
            const Rational factor = lead;  // pivot entries are 1
            for (std::size_t j = pivots_[r]; j < width_; ++j) {
                if (rows_[r][j] != 0) {
                    v[j] -= factor * rows_[r][j];
                }
            }
        }
        return v;
    }

    bool contains(const Vec& v) const {
        for (const Rational& e : reduce(v)) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }

    // Returns true when v enlarged the span.
    bool insert(const Vec& v) {
        Vec red = reduce(v);
        std::size_t pivot = width_;
        for (std::size_t j = 0; j < width_; ++j) {
            if (red[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == width_) {
            return false;
        }
        const Rational inv = Rational(1) / red[pivot];
        for (std::size_t j = pivot; j < width_; ++j) {
            red[j] *= inv;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational factor = rows_[r][pivot];
            if (factor == 0) {
                continue;
            }
            for (std::size_t j = pivot; j < width_; ++j) {
                rows_[r][j] -= factor * red[j];
            }
        }
        rows_.push_back(std::move(red));
        pivots_.push_back(pivot);
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Rational product_trace(const Matrix& a, const Matrix& b) {
    Rational tr;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            tr += a.at(i, j) * b.at(j, i);
        }
    }
    return tr;
}

}  // namespace

Subspace nilradical(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Subspace r = radical(g);
    if (r.is_zero()) {
        return g.zero_space();
    }

    // Associative algebra generated by {ad x : x in r}, as a subspace of the
    // n^2-dimensional matrix space. Closure under products stabilizes within
    // dimension n^2.
    std::vector<Matrix> generators;
    for (const Vec& v : r.basis()) {
        generators.push_back(g.ad(v));
    }
    std::vector<Matrix> assoc_basis;
    RowBasis assoc_span(n * n);
    const auto try_add = [&](const Matrix& m) {
        if (!assoc_span.insert(flatten(m))) {
            return false;
        }
        assoc_basis.push_back(m);
        return true;
    };
    for (const Matrix& m : generators) {
        try_add(m);
    }
    for (std::size_t next = 0; next < assoc_basis.size(); ++next) {
        const Matrix current = assoc_basis[next];
        for (const Matrix& gen : generators) {
            try_add(current * gen);
            try_add(gen * current);
        }
    }

    // Trace-form radical: combinations with trace(a * b) = 0 for all basis b.
    const std::size_t m = assoc_basis.size();
    Subspace trace_radical(n * n);
    if (m > 0) {
        Matrix gram(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                const Rational tr = product_trace(assoc_basis[i], assoc_basis[j]);
                gram.at(i, j) = tr;
                gram.at(j, i) = tr;
            }
        }
        std::vector<Vec> members;
        for (const Vec& k : gram.nullspace()) {
            Vec flat(n * n);
            for (std::size_t i = 0; i < m; ++i) {
                if (k[i] == 0) {
                    continue;
                }
                const Vec gi = flatten(assoc_basis[i]);
                for (std::size_t a = 0; a < n * n; ++a) {
                    flat[a] += k[i] * gi[a];
                }
            }
            members.push_back(std::move(flat));
        }
        trace_radical = Subspace::span(n * n, members);
    }

    // Pull back: x in r with ad x inside the trace radical.
    std::vector<Vec> rows;
    {
        std::vector<Vec> reduced;
        for (const Vec& v : r.basis()) {
            reduced.push_back(trace_radical.reduce(flatten(g.ad(v))));
        }
        for (std::size_t coord = 0; coord < n * n; ++coord) {
            Vec row(r.dim());
            bool nonzero = false;
            for (std::size_t i = 0; i < r.dim(); ++i) {
                row[i] = reduced[i][coord];
                if (row[i] != 0) {
                    nonzero = true;
                }
            }
            if (nonzero) {
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Vec> members;
    if (rows.empty()) {
        for (const Vec& v : r.basis()) {
            members.push_back(v);
        }
    } else {
        for (const Vec& k : Matrix::from_rows(rows).nullspace()) {
            Vec v(n);
            for (std::size_t i = 0; i < r.dim(); ++i) {
                for (std::size_t a = 0; a < n; ++a) {
                    v[a] += k[i] * r.basis()[i][a];
                }
            }
            members.push_back(std::move(v));
        }
    }
    const Subspace result = Subspace::span(n, members);

    switch (ideal_nilpotency(g, result)) {
        case IdealNilpotency::not_an_ideal:
            throw std::logic_error("nilradical: computed subspace is not an ideal");
        case IdealNilpotency::not_nilpotent:
            throw std::logic_error("nilradical: computed ideal is not nilpotent");
        case IdealNilpotency::nilpotent:
            break;
    }
    // Maximality probe along basis directions: extending by any basis vector
    // outside the result must break nilpotency.
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        if (result.contains(e)) {
            continue;
        }
        const Subspace extended =
            ideal_closure(g, sum(result, Subspace::span(n, {e})));
        if (ideal_nilpotency(g, extended) == IdealNilpotency::nilpotent) {
            throw std::logic_error("nilradical: extension by basis vector stays nilpotent");
        }
    }
    return result;
}

Subspace ideal_closure(const LieAlgebra& g, const Subspace& seed) {
    Subspace current = seed;
    while (true) {
        const Subspace next = sum(current, g.bracket(g.full_space(), current));
        if (next == current) {
            return current;
        }
        current = next;
    }
}

Vec SubalgebraView::to_ambient(const Vec& local) const {
    const std::size_t ambient = basis.empty() ? 0 : basis.front().size();
    Vec out(ambient);
    for (std::size_t i = 0; i < local.size(); ++i) {
        for (std::size_t a = 0; a < ambient; ++a) {
            out[a] += local[i] * basis[i][a];
        }
    }
    return out;
}

Subspace SubalgebraView::to_ambient(const Subspace& local) const {
    const std::size_t ambient = basis.empty() ? 0 : basis.front().size();
    std::vector<Vec> vecs;
    for (const Vec& v : local.basis()) {
        vecs.push_back(to_ambient(v));
    }
    return Subspace::span(ambient, vecs);
}

SubalgebraView restrict_to(const LieAlgebra& g, const Subspace& closed) {
    const std::size_t k = closed.dim();
    const Matrix coords = Matrix::from_rows(closed.basis()).transposed();
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, Vec(k)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Vec br = g.bracket(closed.basis()[i], closed.basis()[j]);
            const auto local = coords.solve(br);
            if (!local) {
                throw std::invalid_argument("restrict_to: subspace is not bracket-closed");
            }
            table[i][j] = *local;
        }
    }
    std::vector<std::string> labels;
    labels.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back("u" + std::to_string(i));
    }
    return SubalgebraView{LieAlgebra(std::move(labels), std::move(table)),
                          closed.basis()};
}

}  // namespace vortsym
