#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "nfdeg/cohomology.hpp"
#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/symplectic.hpp"

namespace nfdeg {

// Combinatorial fundamental polygon of the cut sphere: boundary word
// gamma_1 ... gamma_m, center basepoint, and the oriented fan triangulation
// joining the center to consecutive boundary vertices. When the boundary is
// punctured, each boundary edge carries an extra midpoint vertex (the
// puncture trace), so the fan has 2m base triangles instead of m.
// Refinement subdivides every base triangle into 4^level children without
// touching the boundary word.
struct FundamentalPolygon {
    int m = 0;
    int refinement_level = 0;
    bool punctured_boundary = false;
    int orientation = +1; // counterclockwise, frozen

    int base_triangles() const { return punctured_boundary ? 2 * m : m; }
};

// Piecewise-linear section over the fundamental polygon. Corner values are
// the twisted partial sums S_0..S_m with S_0 = S_m = 0; the center value is
// 0; in punctured mode every boundary edge midpoint carries the extension
// value of the section across that puncture, transported to the center
// frame. Values are affine on every triangle, so evaluation is independent
// of the refinement level.
struct NormalFunctionSection {
    PencilRef pencil;
    TwistedCocycle cocycle;
    FundamentalPolygon polygon;
    std::vector<QVec> corners;                      // S_0..S_m
    std::optional<std::vector<QVec>> puncture_values; // one per boundary edge
    bool dual = false;
};

namespace detail {

inline std::vector<QVec> partial_sums(const PencilModel& p, const TwistedCocycle& c) {
    std::vector<QVec> s;
    s.reserve(static_cast<std::size_t>(p.m + 1));
    s.push_back(zero_vec<Rat>(2 * p.g));
    for (int i = 1; i <= p.m; ++i) {
        QVec step = mat_vec(to_rational(p.prefix_product(i - 1)), c.value(i));
        s.push_back(vec_add(s.back(), step));
    }
    return s;
}

} // namespace detail

// Section from a cocycle alone: corner values only, boundary edges run
// straight between consecutive corners. Fine for exploration, but the
// section does not close up over the punctures, so its degree pairing is
// representative-dependent; theorem-grade work uses the overload below.
inline NormalFunctionSection build_section(const PencilRef& p, const TwistedCocycle& c) {
    if (!p) throw domain_error("build_section: null model");
    if (!c.pencil || !same_pencil(*p, *c.pencil))
        throw domain_error("build_section: cocycle lives on a different model");
    if (!is_cocycle(*p, c.values))
        throw closure_error("build_section: twisted partial sums do not close up");
    NormalFunctionSection s;
    s.pencil = p;
    s.cocycle = c;
    s.polygon.m = p->m;
    s.corners = detail::partial_sums(*p, c);
    return s;
}

// Section extended across the punctures: each boundary edge midpoint takes
// the value S_{i-1} - P_{i-1} a_i, the fixed point of the i-th boundary
// jump written in the center frame. This is the PL realization of the
// extended section; with it the degree pairing becomes representative-
// independent and integral.
inline NormalFunctionSection build_section(const PencilRef& p, const TwistedCocycle& c,
                                           const ParabolicData& pd) {
    NormalFunctionSection s = build_section(p, c);
    if (!pd.complete() || !validate_potentials(c, pd))
        throw parabolicity_error("build_section: potentials missing or invalid");
    std::vector<QVec> hats;
    hats.reserve(static_cast<std::size_t>(p->m));
    for (int i = 1; i <= p->m; ++i) {
        QVec transported = mat_vec(to_rational(p->prefix_product(i - 1)), *pd.slot(i));
        hats.push_back(vec_sub(s.corners[static_cast<std::size_t>(i - 1)], transported));
    }
    s.puncture_values = std::move(hats);
    s.polygon.punctured_boundary = true;
    return s;
}

inline NormalFunctionSection refine(NormalFunctionSection s, int levels = 1) {
    if (levels < 0) throw domain_error("refine: negative level");
    s.polygon.refinement_level += levels;
    return s;
}

// Affine self-map of the fiber, v |-> linear v + translation.
struct AffineMap {
    QMat linear;
    QVec translation;

    QVec operator()(const QVec& v) const { return vec_add(mat_vec(linear, v), translation); }
};

inline AffineMap compose(const AffineMap& f, const AffineMap& g) { // f after g
    return AffineMap{mat_mul(f.linear, g.linear),
                     vec_add(mat_vec(f.linear, g.translation), f.translation)};
}

inline bool is_identity(const AffineMap& f) {
    return f.linear == QMat::identity(f.linear.rows()) && vec_is_zero(f.translation);
}

// The transition identifying the two sides of cut i: v |-> T_i v + c_i.
// Composing all m jumps in word order gives the identity map.
inline AffineMap boundary_jump(const NormalFunctionSection& s, int i) {
    const PencilModel& p = *s.pencil;
    if (i < 1 || i > p.m) throw index_error("boundary_jump: puncture index out of range");
    return AffineMap{to_rational(p.monodromy(i)), s.cocycle.value(i)};
}

// ---- fibers and values ----

// Smooth fiber: values modulo the full lattice.
struct TorusValue {
    QVec rep;

    // Representative normalized into [0,1) componentwise.
    QVec normalized() const {
        QVec out(rep.size());
        for (std::size_t i = 0; i < rep.size(); ++i) out[i] = rep[i] - Rat(floor_of(rep[i]));
        return out;
    }
    bool congruent(const TorusValue& other) const {
        if (rep.size() != other.rep.size()) return false;
        return is_integral(vec_sub(rep, other.rep));
    }
};

// Nodal fiber: values modulo the invariant partial lattice of the local
// monodromy (corank 1 in Lefschetz mode).
struct PartialLatticeValue {
    QVec rep;
    std::vector<IVec> lattice; // basis of the partial lattice

    bool congruent(const PartialLatticeValue& other) const {
        if (rep.size() != other.rep.size()) return false;
        QVec diff = vec_sub(rep, other.rep);
        if (!is_integral(diff)) return false;
        const int n = static_cast<int>(rep.size());
        const int k = static_cast<int>(lattice.size());
        IMat b(n, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i)
                b(i, j) = lattice[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return solve_integer(b, to_integral(diff)).has_value();
    }
};

// A point of the polygon: one base triangle of the level-0 fan (center
// first) and exact barycentric coordinates over (center, first boundary
// vertex, second boundary vertex) in counterclockwise order.
struct PolygonPoint {
    int sector = 0;
    std::array<Rat, 3> bary{Rat(1), Rat(0), Rat(0)};
};

namespace detail {

// Corner values (center, first, second) of a base triangle, respecting the
// section's boundary mode.
inline std::array<const QVec*, 3> sector_corners(const NormalFunctionSection& s, int sector) {
    const int base = s.polygon.base_triangles();
    if (sector < 0 || sector >= base) throw domain_error("sector index out of range");
    if (!s.polygon.punctured_boundary) {
        const QVec& a = s.corners[static_cast<std::size_t>(sector)];
        const QVec& b = s.corners[static_cast<std::size_t>(sector + 1)];
        return {&s.corners.front(), &a, &b};
    }
    int i = sector / 2;
    const QVec& hat = (*s.puncture_values)[static_cast<std::size_t>(i)];
    if (sector % 2 == 0) {
        const QVec& a = s.corners[static_cast<std::size_t>(i)];
        return {&s.corners.front(), &a, &hat};
    }
    const QVec& b = s.corners[static_cast<std::size_t>(i + 1)];
    return {&s.corners.front(), &hat, &b};
}

} // namespace detail

// PL evaluation, reduced into the smooth torus fiber. The center corner of
// sector triangles is the basepoint, value 0 (the first corner value S_0 is
// the zero vector, reused as the center value).
inline TorusValue evaluate(const NormalFunctionSection& s, const PolygonPoint& pt) {
    Rat total = pt.bary[0] + pt.bary[1] + pt.bary[2];
    if (total != 1 || pt.bary[0] < 0 || pt.bary[1] < 0 || pt.bary[2] < 0)
        throw domain_error("evaluate: point outside the polygon");
    std::array<const QVec*, 3> corner = detail::sector_corners(s, pt.sector);
    QVec acc = zero_vec<Rat>(2 * s.pencil->g);
    for (int k = 0; k < 3; ++k)
        if (pt.bary[static_cast<std::size_t>(k)] != 0)
            acc = vec_add(acc, vec_scale(pt.bary[static_cast<std::size_t>(k)],
                                         *corner[static_cast<std::size_t>(k)]));
    return TorusValue{std::move(acc)};
}

// The extension value of the section at puncture i: the fixed point -a_i of
// the branch-frame jump, taken in the quotient by the invariant partial
// lattice. Changing a_i by an invariant lattice vector moves the
// representative inside its class, so the fiber value is well defined.
inline PartialLatticeValue extend_at_puncture(const NormalFunctionSection& s, int i,
                                              const ParabolicData& pd) {
    const PencilModel& p = *s.pencil;
    if (i < 1 || i > p.m) throw index_error("extend_at_puncture: index out of range");
    if (static_cast<int>(pd.potentials.size()) != p.m)
        throw not_extendable_error("extend_at_puncture: potential table has wrong size");
    const std::optional<QVec>& a = pd.slot(i);
    if (!a)
        throw not_extendable_error("extend_at_puncture: no potential at puncture " +
                                   std::to_string(i));
    QVec ta = mat_vec(to_rational(p.monodromy(i)), *a);
    if (vec_sub(ta, *a) != s.cocycle.value(i))
        throw not_extendable_error("extend_at_puncture: potential fails its equation at puncture " +
                                   std::to_string(i));
    return PartialLatticeValue{vec_neg(*a), invariant_sublattice(p.monodromy(i))};
}

// Apply the standard form J to every stored value (corner, puncture, and
// cocycle data): the passage to the dual-bundle-valued section. Applying it
// twice negates the section, since J^2 = -I.
inline NormalFunctionSection dualize(const NormalFunctionSection& s) {
    const QMat j = to_rational(standard_form(s.pencil->g));
    NormalFunctionSection out = s;
    for (QVec& v : out.corners) v = mat_vec(j, v);
    if (out.puncture_values)
        for (QVec& v : *out.puncture_values) v = mat_vec(j, v);
    for (QVec& v : out.cocycle.values) v = mat_vec(j, v);
    out.dual = !s.dual;
    return out;
}

} // namespace nfdeg
