#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/symplectic.hpp"

namespace nfdeg {

// A 1-cocycle with local coefficients: one value c_i per puncture loop,
// subject to the relation sum_{i=1..m} P_{i-1} c_i = 0 coming from the
// boundary word of the fundamental polygon. Values are stored as exact
// rationals; ring == integers additionally asserts integrality.
struct TwistedCocycle {
    PencilRef pencil;
    Ring ring = Ring::integers;
    std::vector<QVec> values; // c_1..c_m

    const QVec& value(int i) const { // 1-based
        if (i < 1 || i > static_cast<int>(values.size()))
            throw index_error("cocycle value index out of range");
        return values[static_cast<std::size_t>(i - 1)];
    }
};

// Per-puncture potentials a_i with (T_i - I) a_i = c_i. Slots may be
// individually absent so that partially parabolic cocycles can be probed
// puncture by puncture; complete() distinguishes genuinely parabolic data.
struct ParabolicData {
    Ring ring = Ring::integers;
    std::vector<std::optional<QVec>> potentials; // a_1..a_m

    bool complete() const {
        for (const auto& p : potentials)
            if (!p) return false;
        return true;
    }
    const std::optional<QVec>& slot(int i) const { // 1-based
        if (i < 1 || i > static_cast<int>(potentials.size()))
            throw index_error("potential index out of range");
        return potentials[static_cast<std::size_t>(i - 1)];
    }
};

inline bool is_cocycle(const PencilModel& p, const std::vector<QVec>& values) {
    if (values.size() != static_cast<std::size_t>(p.m))
        throw dimension_error("value count does not match puncture count");
    QVec acc = zero_vec<Rat>(2 * p.g);
    for (int i = 1; i <= p.m; ++i) {
        const QVec& c = values[static_cast<std::size_t>(i - 1)];
        if (c.size() != static_cast<std::size_t>(2 * p.g))
            throw dimension_error("cocycle value has wrong length");
        acc = vec_add(acc, mat_vec(to_rational(p.prefix_product(i - 1)), c));
    }
    return vec_is_zero(acc);
}

// Validating constructor for cocycles.
inline TwistedCocycle make_cocycle(PencilRef p, std::vector<QVec> values, Ring ring) {
    if (!p) throw domain_error("make_cocycle: null model");
    if (!is_cocycle(*p, values))
        throw closure_error("twisted relation sum does not vanish");
    if (ring == Ring::integers)
        for (const QVec& c : values)
            if (!is_integral(c)) throw domain_error("integer-ring cocycle has rational entries");
    return TwistedCocycle{std::move(p), ring, std::move(values)};
}

inline TwistedCocycle zero_cocycle(PencilRef p, Ring ring) {
    if (!p) throw domain_error("zero_cocycle: null model");
    std::vector<QVec> values(static_cast<std::size_t>(p->m), zero_vec<Rat>(2 * p->g));
    return TwistedCocycle{std::move(p), ring, std::move(values)};
}

// c_i = (T_i - I) v: the coboundary of the 0-cochain v. Always a cocycle,
// always parabolic with constant potential v.
inline TwistedCocycle coboundary(PencilRef p, const QVec& v, Ring ring) {
    if (!p) throw domain_error("coboundary: null model");
    if (v.size() != static_cast<std::size_t>(2 * p->g))
        throw dimension_error("coboundary: vector has wrong length");
    if (ring == Ring::integers && !is_integral(v))
        throw domain_error("integer-ring coboundary of a rational vector");
    std::vector<QVec> values;
    values.reserve(static_cast<std::size_t>(p->m));
    for (int i = 1; i <= p->m; ++i) {
        QVec tv = mat_vec(to_rational(p->monodromy(i)), v);
        values.push_back(vec_sub(tv, v));
    }
    return TwistedCocycle{std::move(p), ring, std::move(values)};
}

inline ParabolicData constant_potentials(const PencilModel& p, const QVec& v, Ring ring) {
    ParabolicData pd;
    pd.ring = ring;
    pd.potentials.assign(static_cast<std::size_t>(p.m), v);
    return pd;
}

// Lattice basis of the cocycle space. The relation determines c_1 from the
// free values c_2..c_m (P_0 = I is invertible), so the basis vectors set
// one free slot to a unit vector and solve c_1 = -P_{i-1} e. This is a
// basis over either ring; the dimension is 2g(m-1) for m >= 1.
inline std::vector<TwistedCocycle> cocycle_basis(const PencilRef& p, Ring ring) {
    if (!p) throw domain_error("cocycle_basis: null model");
    std::vector<TwistedCocycle> basis;
    const int n = 2 * p->g;
    for (int i = 2; i <= p->m; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<QVec> values(static_cast<std::size_t>(p->m), zero_vec<Rat>(n));
            QVec e = zero_vec<Rat>(n);
            e[static_cast<std::size_t>(j)] = 1;
            values[static_cast<std::size_t>(i - 1)] = e;
            QVec lead = mat_vec(to_rational(p->prefix_product(i - 1)), e);
            values[0] = vec_neg(lead);
            basis.push_back(TwistedCocycle{p, ring, std::move(values)});
        }
    }
    return basis;
}

// Some v with coboundary(v) = c, over the cocycle's ring, or absent. The
// stacked system ((T_1 - I); ...; (T_m - I)) v = (c_1; ...; c_m) is solved
// exactly; over the integers the lattice solver handles divisibility.
inline std::optional<QVec> is_coboundary(const TwistedCocycle& c) {
    const PencilModel& p = *c.pencil;
    const int n = 2 * p.g;
    if (p.m == 0) return zero_vec<Rat>(n);
    IMat stacked(n * p.m, n);
    for (int i = 1; i <= p.m; ++i) {
        IMat a = mat_sub(p.monodromy(i), IMat::identity(n));
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                stacked((i - 1) * n + r, col) = a(r, col);
    }
    if (c.ring == Ring::integers) {
        IVec rhs;
        rhs.reserve(static_cast<std::size_t>(n * p.m));
        for (const QVec& v : c.values) {
            if (!is_integral(v)) return std::nullopt;
            IVec iv = to_integral(v);
            rhs.insert(rhs.end(), iv.begin(), iv.end());
        }
        std::optional<IVec> s = solve_integer(stacked, rhs);
        if (!s) return std::nullopt;
        return to_rational(*s);
    }
    QVec rhs;
    rhs.reserve(static_cast<std::size_t>(n * p.m));
    for (const QVec& v : c.values) rhs.insert(rhs.end(), v.begin(), v.end());
    return solve_rational(to_rational(stacked), rhs);
}

// Per-puncture potential solves; absent slots mark punctures where the
// local system has no potential over the ring.
inline ParabolicData partial_parabolic_potentials(const TwistedCocycle& c, Ring ring) {
    const PencilModel& p = *c.pencil;
    ParabolicData pd;
    pd.ring = ring;
    pd.potentials.reserve(static_cast<std::size_t>(p.m));
    for (int i = 1; i <= p.m; ++i)
        pd.potentials.push_back(solve_potential(p.monodromy(i), c.value(i), ring));
    return pd;
}

// Full parabolic data, or absent if any puncture fails.
inline std::optional<ParabolicData> parabolic_potentials(const TwistedCocycle& c, Ring ring) {
    ParabolicData pd = partial_parabolic_potentials(c, ring);
    if (!pd.complete()) return std::nullopt;
    return pd;
}

// Exact check of the defining equations (T_i - I) a_i = c_i for every
// puncture; requires complete data.
inline bool validate_potentials(const TwistedCocycle& c, const ParabolicData& pd) {
    const PencilModel& p = *c.pencil;
    if (pd.potentials.size() != static_cast<std::size_t>(p.m)) return false;
    for (int i = 1; i <= p.m; ++i) {
        const std::optional<QVec>& a = pd.slot(i);
        if (!a || a->size() != static_cast<std::size_t>(2 * p.g)) return false;
        QVec ta = mat_vec(to_rational(p.monodromy(i)), *a);
        if (vec_sub(ta, *a) != c.value(i)) return false;
    }
    return true;
}

// ---- cochain model of the punctured sphere and its compact support ----
//
// The quotient CW structure of the fundamental polygon has one vertex, one
// loop per puncture, and one 2-cell attached along the boundary word
// gamma_1 ... gamma_m. With local coefficients the cochain groups are
//   C^0 = L,   C^1 = L^m,   C^2 = L,
// and the differentials below are the twisted cellular ones. Compact
// support is modeled by the mapping cone over the puncture link circles
// (one extra L-valued 0-cochain slot per puncture); a cone 1-cochain is
// closed exactly when its polygon part is a cocycle and its link parts are
// potentials. The cup product is the simplicial front-face/back-face
// product evaluated along the boundary word, and the pairing of coefficient
// values is pair(.,.). This path never constructs a section; it is the
// independent cochain-algebra side of the main identity.

struct CellCochain1 {
    std::vector<QVec> edge; // value on gamma_i, 1-based externally
};

struct ConeCochain1 {
    CellCochain1 polygon;
    std::vector<QVec> link; // 0-cochain on the i-th puncture link
};

// Scalar-valued 2-cochain of the cone: one value on the polygon 2-cell and
// one on each puncture link circle.
struct ConeScalar2 {
    Rat cell;
    std::vector<Rat> link;
};

inline CellCochain1 cochain_d0(const PencilModel& p, const QVec& v) {
    CellCochain1 out;
    out.edge.reserve(static_cast<std::size_t>(p.m));
    for (int i = 1; i <= p.m; ++i) {
        QVec tv = mat_vec(to_rational(p.monodromy(i)), v);
        out.edge.push_back(vec_sub(tv, v));
    }
    return out;
}

// d1(u) = sum_i P_{i-1} u(gamma_i): the coefficient of the 2-cell, read off
// the attaching word with flat transport along the traversed prefix.
inline QVec cochain_d1(const PencilModel& p, const CellCochain1& u) {
    QVec acc = zero_vec<Rat>(2 * p.g);
    for (int i = 1; i <= p.m; ++i)
        acc = vec_add(acc, mat_vec(to_rational(p.prefix_product(i - 1)),
                                   u.edge[static_cast<std::size_t>(i - 1)]));
    return acc;
}

// Cone closedness: the polygon part is closed and each link 0-cochain is a
// potential for the restriction of the polygon part to that link.
inline bool cone_closed(const PencilModel& p, const ConeCochain1& x) {
    if (x.polygon.edge.size() != static_cast<std::size_t>(p.m) ||
        x.link.size() != static_cast<std::size_t>(p.m))
        return false;
    if (!vec_is_zero(cochain_d1(p, x.polygon))) return false;
    for (int i = 1; i <= p.m; ++i) {
        const QVec& a = x.link[static_cast<std::size_t>(i - 1)];
        QVec ta = mat_vec(to_rational(p.monodromy(i)), a);
        if (vec_sub(ta, a) != x.polygon.edge[static_cast<std::size_t>(i - 1)]) return false;
    }
    return true;
}

// Front-face/back-face cup product of two cone 1-cochains. On the 2-cell
// the Alexander-Whitney diagonal of the attaching word gives
//   sum_i pair( x(prefix w_{i-1}), P_{i-1} * y(gamma_i) ),
// where x(prefix) accumulates the twisted partial evaluation of x along the
// word. On the i-th link circle the product of the 0-cochain part of x with
// the 1-cochain restriction of y is pair(a_i, y(gamma_i)).
inline ConeScalar2 cone_cup(const PencilModel& p, const ConeCochain1& x,
                            const ConeCochain1& y) {
    ConeScalar2 out;
    out.cell = 0;
    QVec front = zero_vec<Rat>(2 * p.g);
    for (int i = 1; i <= p.m; ++i) {
        QMat pref = to_rational(p.prefix_product(i - 1));
        QVec back = mat_vec(pref, y.polygon.edge[static_cast<std::size_t>(i - 1)]);
        out.cell += pair_rat(front, back);
        front = vec_add(front, mat_vec(pref, x.polygon.edge[static_cast<std::size_t>(i - 1)]));
    }
    out.link.reserve(static_cast<std::size_t>(p.m));
    for (int i = 1; i <= p.m; ++i)
        out.link.push_back(pair_rat(x.link[static_cast<std::size_t>(i - 1)],
                                    y.polygon.edge[static_cast<std::size_t>(i - 1)]));
    return out;
}

// Evaluation against the relative fundamental cycle: the 2-cell with its
// positive orientation minus the puncture link circles.
inline Rat evaluate_fundamental(const ConeScalar2& z) {
    Rat acc = z.cell;
    for (const Rat& l : z.link) acc -= l;
    return acc;
}

// The cup-product pairing of two parabolic classes, evaluated on the
// fundamental class by pure cochain algebra. Bilinear; symmetric (see
// CONVENTIONS.md); invariant when either argument moves by a coboundary
// with potentials shifted accordingly; integer-valued on integral input.
inline Rat cup_pairing_oracle(const TwistedCocycle& c1, const ParabolicData& a1,
                              const TwistedCocycle& c2, const ParabolicData& a2) {
    if (!c1.pencil || !c2.pencil || !same_pencil(*c1.pencil, *c2.pencil))
        throw domain_error("cup_pairing_oracle: cocycles live on different models");
    const PencilModel& p = *c1.pencil;
    if (!is_cocycle(p, c1.values) || !is_cocycle(p, c2.values))
        throw closure_error("cup_pairing_oracle: input is not a cocycle");
    if (!a1.complete() || !validate_potentials(c1, a1) ||
        !a2.complete() || !validate_potentials(c2, a2))
        throw parabolicity_error("cup_pairing_oracle: input is not parabolic");
    auto cone = [&p](const TwistedCocycle& c, const ParabolicData& a) {
        ConeCochain1 x;
        x.polygon.edge = c.values;
        x.link.reserve(static_cast<std::size_t>(p.m));
        for (int i = 1; i <= p.m; ++i) x.link.push_back(*a.slot(i));
        return x;
    };
    ConeCochain1 x = cone(c1, a1);
    ConeCochain1 y = cone(c2, a2);
    return evaluate_fundamental(cone_cup(p, x, y));
}

// Transport to the rotated marking: values and potentials shift
// cyclically, matching the rotated monodromy tuple.
inline TwistedCocycle transport_cocycle(const TwistedCocycle& c, const MarkingRotation& rot) {
    if (!c.pencil || !rot.source || !same_pencil(*c.pencil, *rot.source))
        throw domain_error("transport_cocycle: cocycle does not live on the rotation source");
    if (c.pencil->m <= 1) return TwistedCocycle{rot.rotated, c.ring, c.values};
    std::vector<QVec> moved(c.values.begin() + 1, c.values.end());
    moved.push_back(c.values.front());
    return make_cocycle(rot.rotated, std::move(moved), c.ring);
}

inline ParabolicData transport_potentials(const ParabolicData& pd, const MarkingRotation& rot) {
    if (!rot.source) throw domain_error("transport_potentials: null rotation");
    if (pd.potentials.size() != static_cast<std::size_t>(rot.source->m))
        throw dimension_error("transport_potentials: slot count mismatch");
    ParabolicData out;
    out.ring = pd.ring;
    if (rot.source->m <= 1) {
        out.potentials = pd.potentials;
        return out;
    }
    out.potentials.assign(pd.potentials.begin() + 1, pd.potentials.end());
    out.potentials.push_back(pd.potentials.front());
    return out;
}

// ---- cocycle arithmetic (bilinearity probes) ----

inline TwistedCocycle add(const TwistedCocycle& a, const TwistedCocycle& b) {
    if (!a.pencil || !b.pencil || !same_pencil(*a.pencil, *b.pencil))
        throw domain_error("cocycle add: different models");
    if (a.ring != b.ring) throw domain_error("cocycle add: different rings");
    std::vector<QVec> values;
    values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        values.push_back(vec_add(a.values[i], b.values[i]));
    return TwistedCocycle{a.pencil, a.ring, std::move(values)};
}

inline TwistedCocycle scale(const Rat& s, const TwistedCocycle& c) {
    std::vector<QVec> values;
    values.reserve(c.values.size());
    for (const QVec& v : c.values) values.push_back(vec_scale(s, v));
    Ring ring = c.ring;
    if (ring == Ring::integers && !is_integral(s)) ring = Ring::rationals;
    return TwistedCocycle{c.pencil, ring, std::move(values)};
}

inline ParabolicData add(const ParabolicData& a, const ParabolicData& b) {
    if (a.potentials.size() != b.potentials.size())
        throw dimension_error("potential add: slot count mismatch");
    ParabolicData out;
    out.ring = a.ring == b.ring ? a.ring : Ring::rationals;
    out.potentials.reserve(a.potentials.size());
    for (std::size_t i = 0; i < a.potentials.size(); ++i) {
        if (a.potentials[i] && b.potentials[i])
            out.potentials.push_back(vec_add(*a.potentials[i], *b.potentials[i]));
        else
            out.potentials.push_back(std::nullopt);
    }
    return out;
}

inline ParabolicData scale(const Rat& s, const ParabolicData& pd) {
    ParabolicData out;
    out.ring = pd.ring;
    if (out.ring == Ring::integers && !is_integral(s)) out.ring = Ring::rationals;
    out.potentials.reserve(pd.potentials.size());
    for (const auto& a : pd.potentials) {
        if (a)
            out.potentials.push_back(vec_scale(s, *a));
        else
            out.potentials.push_back(std::nullopt);
    }
    return out;
}

// Shift by a coboundary: c + d(v) with potentials a_i + v. The primary
// invariance probe of the pairing.
inline std::pair<TwistedCocycle, ParabolicData>
shift_by_coboundary(const TwistedCocycle& c, const ParabolicData& pd, const QVec& v) {
    TwistedCocycle shifted = add(c, coboundary(c.pencil, v, c.ring));
    ParabolicData out = pd;
    for (auto& a : out.potentials)
        if (a) *a = vec_add(*a, v);
    return {std::move(shifted), std::move(out)};
}

// Random integral parabolic cocycles with potentials. The potentials-space
// is the integer kernel of F = [P_1 - P_0 | ... | P_m - P_{m-1}] acting on
// the stacked vector (a_1; ...; a_m): setting c_i = (T_i - I) a_i makes the
// relation sum telescope to F a. Random small combinations of a lattice
// basis of ker F therefore enumerate exactly the integral parabolic
// cocycles together with their certificates.
inline std::vector<std::pair<TwistedCocycle, ParabolicData>>
random_parabolic_cocycles(const PencilRef& p, int count, Rng& rng, int coeff_bound = 2) {
    if (!p) throw domain_error("random_parabolic_cocycles: null model");
    const int n = 2 * p->g;
    IMat f(n, n * p->m);
    for (int i = 1; i <= p->m; ++i) {
        IMat d = mat_sub(p->prefix_product(i), p->prefix_product(i - 1));
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                f(r, (i - 1) * n + col) = d(r, col);
    }
    std::vector<IVec> basis = kernel_integer(f);
    std::vector<std::pair<TwistedCocycle, ParabolicData>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        IVec stacked = zero_vec<Int>(n * p->m);
        for (const IVec& b : basis) {
            long coeff = rng.range(-coeff_bound, coeff_bound);
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < stacked.size(); ++i)
                stacked[i] += Int(coeff) * b[i];
        }
        ParabolicData pd;
        pd.ring = Ring::integers;
        std::vector<QVec> values;
        values.reserve(static_cast<std::size_t>(p->m));
        for (int i = 1; i <= p->m; ++i) {
            QVec a(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(j)] =
                    Rat(stacked[static_cast<std::size_t>((i - 1) * n + j)]);
            QVec ta = mat_vec(to_rational(p->monodromy(i)), a);
            values.push_back(vec_sub(ta, a));
            pd.potentials.push_back(std::move(a));
        }
        out.emplace_back(make_cocycle(p, std::move(values), Ring::integers), std::move(pd));
    }
    return out;
}

// The reference cocycle pair on the builtin twelve-puncture model. Each
// value is a multiple t_i of the vanishing cycle, with the canonical
// potential t_i * w for w = (0,-1) against (1,0) and w = (1,0) against
// (0,1). Golden documents and the fixture tests all derive from this pair.
inline std::vector<std::pair<TwistedCocycle, ParabolicData>>
builtin_elliptic12_pair(const PencilRef& p) {
    if (!p || p->g != 1 || p->m != 12 || !p->vanishing_cycles)
        throw domain_error("builtin_elliptic12_pair: expected the builtin twelve-puncture model");
    const std::vector<std::vector<long>> weights = {
        {-1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {-1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    };
    std::vector<std::pair<TwistedCocycle, ParabolicData>> out;
    for (const auto& t : weights) {
        std::vector<QVec> values;
        ParabolicData pd;
        pd.ring = Ring::integers;
        for (int i = 1; i <= 12; ++i) {
            const IVec& delta = p->cycle(i);
            const Rat ti(t[static_cast<std::size_t>(i - 1)]);
            QVec c = {ti * Rat(delta[0]), ti * Rat(delta[1])};
            QVec w = delta[0] != 0 ? QVec{Rat(0), Rat(-1)} : QVec{Rat(1), Rat(0)};
            values.push_back(std::move(c));
            pd.potentials.push_back(QVec{ti * w[0], ti * w[1]});
        }
        out.emplace_back(make_cocycle(p, std::move(values), Ring::integers), std::move(pd));
    }
    return out;
}

} // namespace nfdeg
