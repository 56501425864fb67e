#pragma once

#include <optional>
#include <vector>

#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/rng.hpp"

namespace nfdeg {

// The standard symplectic form: block matrix with +I in the upper right
// and -I in the lower left. Frozen convention; see CONVENTIONS.md.
inline IMat standard_form(int g) {
    if (g < 1) throw invalid_genus_error("genus must be >= 1");
    IMat j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

inline int genus_of(std::size_t dim) {
    if (dim == 0 || dim % 2 != 0)
        throw dimension_error("lattice vectors must have even positive length");
    return static_cast<int>(dim / 2);
}

// pair(x, y) = x^T J y, the intersection pairing in the standard basis.
// Expanded blockwise; a unit test checks this against the literal
// x^T * standard_form(g) * y product.
template <class T>
T pair_form(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw dimension_error("pair: genus mismatch");
    int g = genus_of(x.size());
    T acc{};
    for (int i = 0; i < g; ++i)
        acc += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(g + i)] -
               x[static_cast<std::size_t>(g + i)] * y[static_cast<std::size_t>(i)];
    return acc;
}

inline Int pair_int(const IVec& x, const IVec& y) { return pair_form<Int>(x, y); }
inline Rat pair_rat(const QVec& x, const QVec& y) { return pair_form<Rat>(x, y); }

inline bool is_symplectic(const IMat& m) {
    if (m.rows() != m.cols()) throw dimension_error("is_symplectic: matrix not square");
    if (m.rows() % 2 != 0 || m.rows() == 0)
        throw dimension_error("is_symplectic: dimension must be even and positive");
    IMat j = standard_form(m.rows() / 2);
    return mat_mul(mat_mul(mat_transpose(m), j), m) == j;
}

// Picard-Lefschetz transvection about delta: x |-> x + pair(x, delta) delta.
// The plus sign is the frozen convention. Always symplectic; fixes delta.
inline IMat transvection(const IVec& delta) {
    if (vec_is_zero(delta)) throw invalid_cycle_error("transvection about the zero vector");
    int n = static_cast<int>(delta.size());
    genus_of(delta.size());
    IMat t = IMat::identity(n);
    for (int j = 0; j < n; ++j) {
        IVec e = zero_vec<Int>(n);
        e[static_cast<std::size_t>(j)] = 1;
        Int c = pair_int(e, delta);
        if (c == 0) continue;
        for (int i = 0; i < n; ++i) t(i, j) += c * delta[static_cast<std::size_t>(i)];
    }
    return t;
}

// Inverse transvection x |-> x - pair(x, delta) delta; used by the
// word-inverse random models.
inline IMat inverse_transvection(const IVec& delta) {
    if (vec_is_zero(delta)) throw invalid_cycle_error("transvection about the zero vector");
    int n = static_cast<int>(delta.size());
    genus_of(delta.size());
    IMat t = IMat::identity(n);
    for (int j = 0; j < n; ++j) {
        IVec e = zero_vec<Int>(n);
        e[static_cast<std::size_t>(j)] = 1;
        Int c = pair_int(e, delta);
        if (c == 0) continue;
        for (int i = 0; i < n; ++i) t(i, j) -= c * delta[static_cast<std::size_t>(i)];
    }
    return t;
}

// Exact inverse of a symplectic matrix: M^{-1} = J^{-1} M^T J with
// J^{-1} = -J. Stays in integer arithmetic; no elimination needed.
inline IMat symplectic_inverse(const IMat& m) {
    if (!is_symplectic(m)) throw domain_error("symplectic_inverse: matrix is not symplectic");
    IMat j = standard_form(m.rows() / 2);
    IMat minusj(j.rows(), j.cols());
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c) minusj(r, c) = -j(r, c);
    return mat_mul(mat_mul(minusj, mat_transpose(m)), j);
}

// Lattice basis of the invariant sublattice ker(T - I) over the integers.
// For a transvection about a primitive cycle the corank is exactly 1.
inline std::vector<IVec> invariant_sublattice(const IMat& t) {
    if (!is_symplectic(t)) throw domain_error("invariant_sublattice: matrix is not symplectic");
    IMat a = mat_sub(t, IMat::identity(t.rows()));
    return kernel_integer(a);
}

// Some solution a of (T - I) a = c over the requested ring, or absent when
// the system is inconsistent there. Any two solutions differ by an element
// of the invariant sublattice (tensored with the ring).
inline std::optional<QVec> solve_potential(const IMat& t, const QVec& c, Ring ring) {
    if (static_cast<std::size_t>(t.rows()) != c.size())
        throw dimension_error("solve_potential: size mismatch");
    IMat a = mat_sub(t, IMat::identity(t.rows()));
    if (ring == Ring::integers) {
        if (!is_integral(c)) return std::nullopt;
        std::optional<IVec> s = solve_integer(a, to_integral(c));
        if (!s) return std::nullopt;
        return to_rational(*s);
    }
    return solve_rational(to_rational(a), c);
}

// Primitive random vector with coordinates in [-bound, bound], gcd 1.
// The small bound keeps exact-arithmetic entry growth tame across the
// randomized suites.
inline IVec random_primitive_vector(int g, Rng& rng, int bound = 3) {
    if (g < 1) throw invalid_genus_error("genus must be >= 1");
    const int n = 2 * g;
    for (;;) {
        IVec v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = Int(rng.range(-bound, bound));
        if (vec_is_zero(v)) continue;
        Int g_all = 0;
        for (const Int& x : v) {
            Int ax = abs(x);
            mpz_gcd(g_all.get_mpz_t(), g_all.get_mpz_t(), ax.get_mpz_t());
        }
        if (g_all != 1) {
            for (Int& x : v) x /= g_all;
        }
        return v;
    }
}

} // namespace nfdeg
