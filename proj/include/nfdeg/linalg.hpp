#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"

namespace nfdeg {

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Dense row-major matrix over an exact scalar type. Small sizes only
// (2g x 2g monodromies and the 2g x 2gm relation matrices), so no attempt
// at sparsity or blocking; correctness and exactness are the point.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IMat = Matrix<Int>;
using QMat = Matrix<Rat>;

// ---- vector arithmetic ----

template <class T>
std::vector<T> vec_add(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw dimension_error("vector size mismatch in add");
    std::vector<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

template <class T>
std::vector<T> vec_sub(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw dimension_error("vector size mismatch in sub");
    std::vector<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

template <class T, class S>
std::vector<T> vec_scale(const S& s, const std::vector<T>& x) {
    std::vector<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = T(s) * x[i];
    return z;
}

template <class T>
std::vector<T> vec_neg(const std::vector<T>& x) {
    std::vector<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
    return z;
}

template <class T>
bool vec_is_zero(const std::vector<T>& x) {
    for (const T& v : x)
        if (v != 0) return false;
    return true;
}

template <class T>
std::vector<T> zero_vec(int n) {
    return std::vector<T>(static_cast<std::size_t>(n));
}

// ---- matrix arithmetic ----

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix size mismatch in mul");
    Matrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw dimension_error("matrix size mismatch in mat_vec");
    std::vector<T> y(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix size mismatch in add");
    Matrix<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix size mismatch in sub");
    Matrix<T> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

// ---- conversions ----

inline QMat to_rational(const IMat& a) {
    QMat q(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
    return q;
}

inline QVec to_rational(const IVec& x) {
    QVec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return q;
}

inline bool is_integral(const QVec& x) {
    for (const Rat& v : x)
        if (!is_integral(v)) return false;
    return true;
}

inline IVec to_integral(const QVec& x) {
    IVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!is_integral(x[i])) throw domain_error("vector entry is not an integer");
        z[i] = x[i].get_num();
    }
    return z;
}

// ---- rational elimination ----

struct RowReduction {
    QMat reduced;                // reduced row echelon form
    std::vector<int> pivot_cols; // pivot column per pivot row
    int rank = 0;
};

inline RowReduction row_reduce(QMat a) {
    RowReduction out;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rat inv = 1 / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(a);
    return out;
}

inline int rational_rank(const QMat& a) { return row_reduce(a).rank; }

// One solution of A x = b over the rationals, or absent when inconsistent.
inline std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
    if (static_cast<std::size_t>(a.rows()) != b.size())
        throw dimension_error("solve_rational: size mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    RowReduction rr = row_reduce(std::move(aug));
    for (int k = 0; k < rr.rank; ++k)
        if (rr.pivot_cols[static_cast<std::size_t>(k)] == a.cols())
            return std::nullopt;
    QVec x(static_cast<std::size_t>(a.cols()));
    for (int k = 0; k < rr.rank; ++k) {
        int c = rr.pivot_cols[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(c)] = rr.reduced(k, a.cols());
    }
    return x;
}

// Basis of the rational nullspace of A.
inline std::vector<QVec> kernel_rational(const QMat& a) {
    RowReduction rr = row_reduce(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        QVec v(static_cast<std::size_t>(a.cols()));
        v[static_cast<std::size_t>(f)] = 1;
        for (int k = 0; k < rr.rank; ++k) {
            int c = rr.pivot_cols[static_cast<std::size_t>(k)];
            v[static_cast<std::size_t>(c)] = -rr.reduced(k, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---- integer column echelon (Hermite-style) ----

// Unimodular column reduction A * U = H with H in column echelon form:
// the first nonzero entry of column j sits in row pivot_rows[j], the pivot
// rows increase strictly, pivots are positive, and every column past the
// rank is identically zero. U is the accumulated unimodular transform, so
// its trailing columns are a lattice basis of the integer kernel of A.
struct ColumnEchelon {
    IMat h;
    IMat u;
    std::vector<int> pivot_rows;
    int rank = 0;
};

inline ColumnEchelon column_echelon(IMat a) {
    const int n = a.cols();
    ColumnEchelon out;
    out.u = IMat::identity(n);
    int col = 0;
    auto col_swap = [&](IMat& m, int j1, int j2) {
        for (int i = 0; i < m.rows(); ++i) std::swap(m(i, j1), m(i, j2));
    };
    auto col_negate = [&](IMat& m, int j) {
        for (int i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
    };
    // Replace columns (j1, j2) by (s*C1 + t*C2, -v*C1 + u*C2); the 2x2
    // coefficient matrix has determinant s*u + t*v = 1 by Bezout, so the
    // accumulated transform stays unimodular.
    auto col_combine = [&](IMat& m, int j1, int j2, const Int& s, const Int& t,
                           const Int& uu, const Int& vv) {
        for (int i = 0; i < m.rows(); ++i) {
            Int c1 = m(i, j1), c2 = m(i, j2);
            m(i, j1) = s * c1 + t * c2;
            m(i, j2) = uu * c2 - vv * c1;
        }
    };
    for (int row = 0; row < a.rows() && col < n; ++row) {
        int j = -1;
        for (int jj = col; jj < n; ++jj)
            if (a(row, jj) != 0) { j = jj; break; }
        if (j < 0) continue;
        if (j != col) {
            col_swap(a, j, col);
            col_swap(out.u, j, col);
        }
        for (int j2 = col + 1; j2 < n; ++j2) {
            if (a(row, j2) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       a(row, col).get_mpz_t(), a(row, j2).get_mpz_t());
            Int uu = a(row, col) / g;
            Int vv = a(row, j2) / g;
            col_combine(a, col, j2, s, t, uu, vv);
            col_combine(out.u, col, j2, s, t, uu, vv);
        }
        if (a(row, col) < 0) {
            col_negate(a, col);
            col_negate(out.u, col);
        }
        out.pivot_rows.push_back(row);
        ++col;
    }
    out.rank = col;
    out.h = std::move(a);
    return out;
}

// Lattice basis of { x integer : A x = 0 }.
inline std::vector<IVec> kernel_integer(const IMat& a) {
    ColumnEchelon ce = column_echelon(a);
    std::vector<IVec> basis;
    for (int j = ce.rank; j < ce.u.cols(); ++j) {
        IVec v(static_cast<std::size_t>(ce.u.rows()));
        for (int i = 0; i < ce.u.rows(); ++i) v[static_cast<std::size_t>(i)] = ce.u(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One integer solution of A x = b, or absent when none exists. Forward
// substitution along the echelon columns; each pivot forces its coefficient
// (divisibility check), and any residue left at the end means the rational
// solution set misses the integer lattice.
inline std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    if (static_cast<std::size_t>(a.rows()) != b.size())
        throw dimension_error("solve_integer: size mismatch");
    ColumnEchelon ce = column_echelon(a);
    IVec residual = b;
    IVec y(static_cast<std::size_t>(a.cols()));
    for (int j = 0; j < ce.rank; ++j) {
        int r = ce.pivot_rows[static_cast<std::size_t>(j)];
        const Int& p = ce.h(r, j);
        if (!mpz_divisible_p(residual[static_cast<std::size_t>(r)].get_mpz_t(),
                             p.get_mpz_t()))
            return std::nullopt;
        Int q = residual[static_cast<std::size_t>(r)] / p;
        if (q != 0)
            for (int i = r; i < a.rows(); ++i)
                residual[static_cast<std::size_t>(i)] -= q * ce.h(i, j);
        y[static_cast<std::size_t>(j)] = q;
    }
    for (const Int& v : residual)
        if (v != 0) return std::nullopt;
    return mat_vec(ce.u, y);
}

} // namespace nfdeg
