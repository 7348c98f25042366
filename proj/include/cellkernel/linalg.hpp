#pragma once

// Exact dense linear algebra over Z, Q and F_p.
//
// Over fields, row spaces are compared through their reduced row echelon
// form; over Z, row lattices are compared through their row-style Hermite
// normal form (positive pivots, entries above a pivot reduced into
// [0, pivot)).  Integer left kernels come from the unimodular transform of
// an HNF computation, so they are always saturated.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cellkernel/error.hpp"
#include "cellkernel/ring.hpp"

namespace cellkernel {

template <class Ring>
class Matrix {
public:
    using value_type = typename Ring::value_type;
    using row_type = std::vector<value_type>;

    explicit Matrix(Ring ring = Ring{}) : ring_(std::move(ring)) {}
    Matrix(std::size_t rows, std::size_t cols, Ring ring)
        : ring_(std::move(ring)), cols_(cols), rows_(rows, row_type(cols, ring_.zero())) {}

    static Matrix from_rows(std::vector<row_type> rows, std::size_t cols, Ring ring) {
        Matrix m(std::move(ring));
        m.cols_ = cols;
        for (const auto& row : rows)
            if (row.size() != cols) throw DomainError("ragged matrix rows");
        m.rows_ = std::move(rows);
        return m;
    }

    static Matrix from_ints(const std::vector<std::vector<long>>& rows, Ring ring) {
        Matrix m(std::move(ring));
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw DomainError("ragged matrix rows");
            row_type r;
            for (long v : row) r.push_back(m.ring_.from_int(v));
            m.rows_.push_back(std::move(r));
        }
        return m;
    }

    static Matrix identity(std::size_t n, Ring ring) {
        Matrix m(n, n, ring);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = m.ring_.one();
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    value_type& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const row_type& row(std::size_t i) const { return rows_[i]; }
    const std::vector<row_type>& row_data() const { return rows_; }
    std::vector<row_type>& row_data() { return rows_; }

    void append_row(row_type row) {
        if (row.size() != cols_) throw DomainError("appended row has wrong length");
        rows_.push_back(std::move(row));
    }

    bool row_is_zero(std::size_t i) const {
        for (const auto& v : rows_[i])
            if (!ring_.is_zero(v)) return false;
        return true;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < rows(); ++i)
            if (!row_is_zero(i)) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows(), ring_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.rows_[j][i] = rows_[i][j];
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows()) throw DomainError("matrix product: inner dimensions differ");
        Matrix c(a.rows(), b.cols_, a.ring_);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.ring_.is_zero(a.rows_[i][k])) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.rows_[i][j] += a.rows_[i][k] * b.rows_[k][j];
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

    /// Text form: "rows cols ring" then one row per line.
    void write(std::ostream& os) const {
        os << rows() << ' ' << cols_ << ' ' << ring_.name() << '\n';
        for (const auto& row : rows_) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << ring_.to_string(row[j]);
            os << '\n';
        }
    }

    std::string to_text() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    static Matrix read(std::istream& is, Ring ring) {
        std::size_t r = 0, c = 0;
        std::string tag;
        if (!(is >> r >> c >> tag)) throw ParseError("bad matrix header");
        if (tag != ring.name()) throw ParseError("matrix ring tag '" + tag + "' does not match " + ring.name());
        Matrix m(r, c, ring);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                std::string tok;
                if (!(is >> tok)) throw ParseError("truncated matrix");
                m.rows_[i][j] = ring.parse(tok);
            }
        return m;
    }

private:
    Ring ring_;
    std::size_t cols_ = 0;
    std::vector<row_type> rows_;
};

/// Row-sparse matrix; used for the very wide action matrices.
template <class Ring>
class SparseMatrix {
public:
    using value_type = typename Ring::value_type;
    using entry_type = std::pair<std::size_t, value_type>;

    SparseMatrix(std::size_t rows, std::size_t cols, Ring ring)
        : ring_(std::move(ring)), cols_(cols), rows_(rows) {}

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<entry_type>& row(std::size_t i) const { return rows_[i]; }

    void add(std::size_t i, std::size_t j, const value_type& v) {
        if (j >= cols_) throw DomainError("sparse entry out of range");
        if (!ring_.is_zero(v)) rows_[i].emplace_back(j, v);
    }

    void finalize() {
        for (auto& row : rows_) {
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<entry_type> merged;
            for (auto& e : row) {
                if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
                else merged.push_back(std::move(e));
            }
            std::erase_if(merged, [&](const auto& e) { return ring_.is_zero(e.second); });
            row = std::move(merged);
        }
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& row : rows_) n += row.size();
        return n;
    }

    Matrix<Ring> to_dense() const {
        Matrix<Ring> m(rows(), cols_, ring_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : rows_[i]) m(i, j) = v;
        return m;
    }

private:
    Ring ring_;
    std::size_t cols_;
    std::vector<std::vector<entry_type>> rows_;
};

// ---------------------------------------------------------------------------
// Fields: incremental reduced row echelon form

/// Maintains a basis in reduced row echelon form; rows are fed one at a time.
template <Field Ring>
class RowReducer {
public:
    using value_type = typename Ring::value_type;
    using row_type = std::vector<value_type>;

    RowReducer(std::size_t cols, Ring ring) : ring_(std::move(ring)), cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }
    bool full() const { return basis_.size() == cols_; }

    /// Reduces v against the basis in place; returns true if v became zero.
    bool reduce(row_type& v) const {
        for (const auto& [pivot, row] : basis_) {
            if (ring_.is_zero(v[pivot])) continue;
            const value_type f = v[pivot];
            for (std::size_t j = pivot; j < cols_; ++j)
                if (!ring_.is_zero(row[j])) v[j] -= f * row[j];
        }
        for (const auto& x : v)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    /// Inserts v if it is independent; returns whether the rank grew.
    bool insert(row_type v) {
        if (v.size() != cols_) throw DomainError("row length mismatch");
        if (reduce(v)) return false;
        std::size_t pivot = 0;
        while (ring_.is_zero(v[pivot])) ++pivot;
        const value_type inv = ring_.inverse(v[pivot]);
        for (std::size_t j = pivot; j < cols_; ++j)
            if (!ring_.is_zero(v[j])) v[j] *= inv;
        for (auto& [p, row] : basis_) {
            if (ring_.is_zero(row[pivot])) continue;
            const value_type f = row[pivot];
            for (std::size_t j = pivot; j < cols_; ++j)
                if (!ring_.is_zero(v[j])) row[j] -= f * v[j];
        }
        basis_.emplace(pivot, std::move(v));
        return true;
    }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (const auto& [pivot, row] : basis_) p.push_back(pivot);
        return p;
    }

    /// Basis rows ordered by pivot column.
    Matrix<Ring> basis() const {
        std::vector<row_type> rows;
        for (const auto& [pivot, row] : basis_) rows.push_back(row);
        return Matrix<Ring>::from_rows(std::move(rows), cols_, ring_);
    }

private:
    Ring ring_;
    std::size_t cols_;
    std::map<std::size_t, row_type> basis_;
};

template <class Ring>
struct RrefResult {
    Matrix<Ring> reduced;  // same shape as the input, zero rows last
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

template <Field Ring>
RrefResult<Ring> rref(const Matrix<Ring>& m) {
    RowReducer<Ring> reducer(m.cols(), m.ring());
    for (std::size_t i = 0; i < m.rows() && !reducer.full(); ++i) reducer.insert(m.row(i));
    auto reduced = reducer.basis();
    const std::size_t rank = reduced.rows();
    for (std::size_t i = rank; i < m.rows(); ++i) reduced.append_row(std::vector(m.cols(), m.ring().zero()));
    return {std::move(reduced), rank, reducer.pivots()};
}

// ---------------------------------------------------------------------------
// Integers: Hermite normal form

namespace detail {

/// row_i -= q * row_p, from column `from` on.
inline void integer_row_submul(std::vector<mpz_class>& target, const mpz_class& q, const std::vector<mpz_class>& src,
                               std::size_t from) {
    for (std::size_t j = from; j < target.size(); ++j)
        if (sgn(src[j]) != 0) mpz_submul(target[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace detail

struct HnfResult {
    Matrix<IntegerRing> form;       // U * input
    Matrix<IntegerRing> transform;  // unimodular U (empty unless requested)
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Row-style HNF of the first `active_cols` columns; the remaining columns
/// ride along (this is how the transform is tracked).  Rows below the rank
/// are then put in HNF with respect to the trailing columns.
inline HnfResult hnf_augmented(Matrix<IntegerRing> a, std::size_t active_cols) {
    auto& rows = a.row_data();
    const std::size_t nrows = rows.size();
    const std::size_t ncols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;

    auto eliminate = [&](std::size_t first_col, std::size_t last_col, std::size_t start_row) {
        std::size_t row = start_row;
        for (std::size_t col = first_col; col < last_col && row < nrows; ++col) {
            while (true) {
                std::size_t best = nrows;
                std::size_t others = 0;
                for (std::size_t i = row; i < nrows; ++i) {
                    if (sgn(rows[i][col]) == 0) continue;
                    ++others;
                    if (best == nrows || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
                }
                if (best == nrows) break;
                std::swap(rows[row], rows[best]);
                if (others == 1) break;
                const mpz_class& p = rows[row][col];
                for (std::size_t i = row + 1; i < nrows; ++i) {
                    if (sgn(rows[i][col]) == 0) continue;
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), p.get_mpz_t());
                    detail::integer_row_submul(rows[i], q, rows[row], col);
                }
            }
            if (row >= nrows || sgn(rows[row][col]) == 0) continue;
            if (sgn(rows[row][col]) < 0)
                for (std::size_t j = col; j < ncols; ++j) rows[row][j] = -rows[row][j];
            const mpz_class p = rows[row][col];
            for (std::size_t i = start_row; i < row; ++i) {
                if (sgn(rows[i][col]) == 0) continue;
                mpz_class q = detail::floor_div(rows[i][col], p);
                if (sgn(q) != 0) detail::integer_row_submul(rows[i], q, rows[row], col);
            }
            pivots.push_back(col);
            ++row;
        }
        return row;
    };

    r = eliminate(0, active_cols, 0);
    const std::size_t rank = r;
    const std::size_t active_pivots = pivots.size();
    if (active_cols < ncols) eliminate(active_cols, ncols, rank);
    pivots.resize(active_pivots);
    return {std::move(a), Matrix<IntegerRing>(IntegerRing{}), rank, std::move(pivots)};
}

/// Row-style Hermite normal form; same shape as the input, zero rows last.
inline Matrix<IntegerRing> hnf(const Matrix<IntegerRing>& m) { return hnf_augmented(m, m.cols()).form; }

/// U * M = H with U unimodular.
inline HnfResult hnf_with_transform(const Matrix<IntegerRing>& m) {
    const std::size_t k = m.rows(), c = m.cols();
    Matrix<IntegerRing> aug(k, c + k, IntegerRing{});
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c + i) = 1;
    }
    auto res = hnf_augmented(std::move(aug), c);
    Matrix<IntegerRing> h(k, c, IntegerRing{}), u(k, k, IntegerRing{});
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < c; ++j) h(i, j) = res.form(i, j);
        for (std::size_t j = 0; j < k; ++j) u(i, j) = res.form(i, c + j);
    }
    return {std::move(h), std::move(u), res.rank, std::move(res.pivots)};
}

// ---------------------------------------------------------------------------
// Row spaces and lattices

template <class Ring>
Matrix<Ring> canonical_basis(const Matrix<Ring>& m) {
    Matrix<Ring> form(m.ring());
    std::size_t rank = 0;
    if constexpr (Ring::is_field) {
        auto res = rref(m);
        form = std::move(res.reduced);
        rank = res.rank;
    } else {
        auto res = hnf_augmented(m, m.cols());
        form = std::move(res.form);
        rank = res.rank;
    }
    std::vector<typename Matrix<Ring>::row_type> rows(form.row_data().begin(), form.row_data().begin() + rank);
    return Matrix<Ring>::from_rows(std::move(rows), m.cols(), m.ring());
}

/// A row space (fields) or row lattice (Z), held in canonical form.
template <class Ring>
class RowSpace {
public:
    using value_type = typename Ring::value_type;

    explicit RowSpace(const Matrix<Ring>& generators) : basis_(canonical_basis(generators)) {}

    static RowSpace zero(std::size_t dim, Ring ring) { return RowSpace(Matrix<Ring>(0, dim, std::move(ring))); }

    std::size_t rank() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const Matrix<Ring>& basis() const { return basis_; }
    const Ring& ring() const { return basis_.ring(); }

    bool contains(const std::vector<value_type>& v) const {
        auto m = basis_;
        m.append_row(v);
        return canonical_basis(m) == basis_;
    }

    friend bool operator==(const RowSpace& a, const RowSpace& b) { return a.basis_ == b.basis_; }

private:
    Matrix<Ring> basis_;
};

template <class Ring>
bool row_space_equal(const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (a.cols() != b.cols()) throw DomainError("row_space_equal: column counts differ");
    if (!(a.ring() == b.ring())) throw DomainError("row_space_equal: rings differ");
    return canonical_basis(a) == canonical_basis(b);
}

template <class Ring>
std::size_t rank(const Matrix<Ring>& m) {
    if constexpr (Ring::is_field) return rref(m).rank;
    else return hnf_augmented(m, m.cols()).rank;
}

// ---------------------------------------------------------------------------
// Left null spaces

namespace detail {

/// Constraint columns: sparse (row index, value) lists.  Identical columns
/// impose identical constraints, so they are merged; zero columns dropped.
/// The survivors are sorted by support size so that short constraints are
/// processed first.
template <class Ring>
std::vector<std::vector<std::pair<std::size_t, typename Ring::value_type>>> distinct_columns(
    std::vector<std::vector<std::pair<std::size_t, typename Ring::value_type>>> columns) {
    using column_type = std::vector<std::pair<std::size_t, typename Ring::value_type>>;
    std::erase_if(columns, [](const column_type& c) { return c.empty(); });
    std::sort(columns.begin(), columns.end(), [](const column_type& a, const column_type& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    return columns;
}

template <class Ring>
RowSpace<Ring> left_nullspace_from_columns(
    std::size_t k, std::vector<std::vector<std::pair<std::size_t, typename Ring::value_type>>> columns,
    const Ring& ring) {
    using value_type = typename Ring::value_type;
    columns = distinct_columns<Ring>(std::move(columns));
    if constexpr (Ring::is_field) {
        // x M = 0  <=>  x is orthogonal to every column of M.
        RowReducer<Ring> reducer(k, ring);
        for (const auto& col : columns) {
            std::vector<value_type> v(k, ring.zero());
            for (const auto& [i, x] : col) v[i] = x;
            reducer.insert(std::move(v));
            if (reducer.full()) break;
        }
        auto r = reducer.basis();
        const auto pivots = reducer.pivots();
        std::vector<bool> is_pivot(k, false);
        for (auto p : pivots) is_pivot[p] = true;
        Matrix<Ring> kernel(0, k, ring);
        for (std::size_t f = 0; f < k; ++f) {
            if (is_pivot[f]) continue;
            std::vector<value_type> v(k, ring.zero());
            v[f] = ring.one();
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
            kernel.append_row(std::move(v));
        }
        return RowSpace<Ring>(kernel);
    } else {
        Matrix<Ring> m(k, columns.size(), ring);
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [i, x] : columns[j]) m(i, j) = x;
        const std::size_t c = columns.size();
        Matrix<Ring> aug(k, c + k, ring);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
            aug(i, c + i) = 1;
        }
        auto res = hnf_augmented(std::move(aug), c);
        Matrix<Ring> kernel(0, k, ring);
        for (std::size_t i = res.rank; i < k; ++i) {
            std::vector<value_type> v(res.form.row(i).begin() + static_cast<std::ptrdiff_t>(c), res.form.row(i).end());
            kernel.append_row(std::move(v));
        }
        return RowSpace<Ring>(kernel);
    }
}

}  // namespace detail

/// {x : x M = 0}; over Z the full saturated lattice.
template <class Ring>
RowSpace<Ring> left_nullspace(const Matrix<Ring>& m) {
    using value_type = typename Ring::value_type;
    std::vector<std::vector<std::pair<std::size_t, value_type>>> columns(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.ring().is_zero(m(i, j))) columns[j].emplace_back(i, m(i, j));
    return detail::left_nullspace_from_columns(m.rows(), std::move(columns), m.ring());
}

template <class Ring>
RowSpace<Ring> left_nullspace(const SparseMatrix<Ring>& m) {
    using value_type = typename Ring::value_type;
    std::map<std::size_t, std::vector<std::pair<std::size_t, value_type>>> by_col;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) by_col[j].emplace_back(i, v);
    std::vector<std::vector<std::pair<std::size_t, value_type>>> columns;
    columns.reserve(by_col.size());
    for (auto& [j, col] : by_col) columns.push_back(std::move(col));
    return detail::left_nullspace_from_columns(m.rows(), std::move(columns), m.ring());
}

/// Right null space {x : M x = 0} as rows.
template <class Ring>
RowSpace<Ring> right_nullspace(const Matrix<Ring>& m) {
    using value_type = typename Ring::value_type;
    std::vector<std::vector<std::pair<std::size_t, value_type>>> columns(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.ring().is_zero(m(i, j))) columns[i].emplace_back(j, m(i, j));
    return detail::left_nullspace_from_columns(m.cols(), std::move(columns), m.ring());
}

// ---------------------------------------------------------------------------
// Linear solves

/// Some x with x M = b, or nothing.  Over Z the solution is integral.
template <class Ring>
std::optional<std::vector<typename Ring::value_type>> solve_left(const Matrix<Ring>& m,
                                                                 std::vector<typename Ring::value_type> b) {
    using value_type = typename Ring::value_type;
    if (b.size() != m.cols()) throw DomainError("solve_left: right-hand side has wrong length");
    const auto& ring = m.ring();
    Matrix<Ring> h(ring), u(ring);
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    if constexpr (Ring::is_field) {
        // Track the transform by reducing [M | I].
        const std::size_t k = m.rows(), c = m.cols();
        Matrix<Ring> aug(k, c + k, ring);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
            aug(i, c + i) = ring.one();
        }
        auto res = rref(aug);
        h = Matrix<Ring>(k, c, ring);
        u = Matrix<Ring>(k, k, ring);
        for (std::size_t i = 0; i < res.rank; ++i) {
            for (std::size_t j = 0; j < c; ++j) h(i, j) = res.reduced(i, j);
            for (std::size_t j = 0; j < k; ++j) u(i, j) = res.reduced(i, c + j);
        }
        for (auto p : res.pivots)
            if (p < c) pivots.push_back(p);
        rank = pivots.size();
    } else {
        auto res = hnf_with_transform(m);
        h = std::move(res.form);
        u = std::move(res.transform);
        rank = res.rank;
        pivots = std::move(res.pivots);
    }
    // Solve coeffs * H = b by forward substitution over the pivots.
    std::vector<value_type> coeffs(m.rows(), ring.zero());
    for (std::size_t i = 0; i < rank; ++i) {
        const std::size_t p = pivots[i];
        if (ring.is_zero(b[p])) continue;
        value_type q;
        if constexpr (Ring::is_field) {
            q = b[p] * ring.inverse(h(i, p));
        } else {
            if (!mpz_divisible_p(b[p].get_mpz_t(), h(i, p).get_mpz_t())) return std::nullopt;
            q = b[p] / h(i, p);
        }
        for (std::size_t j = p; j < m.cols(); ++j)
            if (!ring.is_zero(h(i, j))) b[j] -= q * h(i, j);
        coeffs[i] = q;
    }
    for (const auto& x : b)
        if (!ring.is_zero(x)) return std::nullopt;
    std::vector<value_type> x(m.rows(), ring.zero());
    for (std::size_t i = 0; i < rank; ++i) {
        if (ring.is_zero(coeffs[i])) continue;
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (!ring.is_zero(u(i, j))) x[j] += coeffs[i] * u(i, j);
    }
    return x;
}

/// True iff the row lattice of `basis` (full row rank) is a direct summand of Z^cols.
inline bool is_saturated(const Matrix<IntegerRing>& basis) {
    if (basis.rows() == 0) return true;
    auto res = hnf_augmented(basis.transposed(), basis.rows());
    if (res.rank != basis.rows()) return false;
    for (std::size_t i = 0; i < res.rank; ++i)
        if (res.form(i, res.pivots[i]) != 1) return false;
    return true;
}

/// |det| of a square integer matrix through its HNF (0 when singular).
inline mpz_class abs_determinant(const Matrix<IntegerRing>& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    auto h = hnf(m);
    mpz_class det = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) det *= h(i, i);
    return abs(det);
}

/// Reduces an integer matrix modulo p.
inline Matrix<PrimeField> reduce_mod(const Matrix<IntegerRing>& m, const PrimeField& field) {
    Matrix<PrimeField> out(m.rows(), m.cols(), field);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_integer(m(i, j));
    return out;
}

// ---------------------------------------------------------------------------
// Commutants

/// Basis of {X : X M_i = M_i X for all i}, each X an m x m matrix.
template <Field Ring>
std::vector<Matrix<Ring>> commutant(const std::vector<Matrix<Ring>>& mats, const Ring& ring) {
    using value_type = typename Ring::value_type;
    if (mats.empty()) throw DomainError("commutant of an empty family");
    const std::size_t m = mats.front().rows();
    for (const auto& a : mats)
        if (a.rows() != m || a.cols() != m) throw DomainError("commutant: matrices must be square of equal size");

    // Unknown X_{ab} sits at index a*m + b.  Each equation is one constraint
    // column: (X A - A X)_{ab} = sum_c X_{ac} A_{cb} - sum_c A_{ac} X_{cb}.
    std::vector<std::vector<std::pair<std::size_t, value_type>>> equations;
    for (const auto& a : mats)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::map<std::size_t, value_type> eq;
                for (std::size_t c = 0; c < m; ++c) {
                    if (!ring.is_zero(a(c, j))) eq[i * m + c] += a(c, j);
                    if (!ring.is_zero(a(i, c))) eq[c * m + j] -= a(i, c);
                }
                std::vector<std::pair<std::size_t, value_type>> col;
                for (auto& [idx, v] : eq)
                    if (!ring.is_zero(v)) col.emplace_back(idx, v);
                equations.push_back(std::move(col));
            }
    const auto space = detail::left_nullspace_from_columns(m * m, std::move(equations), ring);
    std::vector<Matrix<Ring>> out;
    for (std::size_t k = 0; k < space.rank(); ++k) {
        Matrix<Ring> x(m, m, ring);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) x(a, b) = space.basis()(k, a * m + b);
        out.push_back(std::move(x));
    }
    return out;
}

/// Row-major flattening, used to compare spans of matrices.
template <class Ring>
std::vector<typename Ring::value_type> flatten(const Matrix<Ring>& a) {
    std::vector<typename Ring::value_type> v;
    v.reserve(a.rows() * a.cols());
    for (const auto& row : a.row_data()) v.insert(v.end(), row.begin(), row.end());
    return v;
}

}  // namespace cellkernel
