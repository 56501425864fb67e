#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfdeg/cohomology.hpp"
#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/normal_function.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/symplectic.hpp"
#include "nfdeg/version.hpp"

namespace nfdeg {

// Global sign relating the cochain pairing to the PL degree. Determined
// once on the builtin fixture after freezing every local convention, then
// never adjusted per instance; see CONVENTIONS.md.
inline constexpr int theorem_sigma = +1;

namespace detail {

// Oriented integral of the degree 2-form over one affine triangle, read off
// the corner values of both sections: with edge differences D1 = B - A and
// D2 = C - A taken in orientation order,
//   (pair(D1', D2'') - pair(D2', D1'')) / 2.
// The pairing of the second section's differentials through pair(.,.) is
// the one application of the dual-bundle identification.
inline Rat triangle_term(const QVec& a1, const QVec& b1, const QVec& c1,
                         const QVec& a2, const QVec& b2, const QVec& c2) {
    QVec d11 = vec_sub(b1, a1);
    QVec d21 = vec_sub(c1, a1);
    QVec d12 = vec_sub(b2, a2);
    QVec d22 = vec_sub(c2, a2);
    Rat term = pair_rat(d11, d22) - pair_rat(d21, d12);
    term /= 2;
    return term;
}

template <class F>
void for_each_subtriangle(const std::array<QVec, 3>& t1, const std::array<QVec, 3>& t2,
                          int depth, const F& f) {
    if (depth == 0) {
        f(t1, t2);
        return;
    }
    auto mid = [](const QVec& x, const QVec& y) {
        QVec m = vec_add(x, y);
        for (Rat& v : m) v /= 2;
        return m;
    };
    std::array<QVec, 3> m1{mid(t1[0], t1[1]), mid(t1[1], t1[2]), mid(t1[2], t1[0])};
    std::array<QVec, 3> m2{mid(t2[0], t2[1]), mid(t2[1], t2[2]), mid(t2[2], t2[0])};
    for_each_subtriangle({t1[0], m1[0], m1[2]}, {t2[0], m2[0], m2[2]}, depth - 1, f);
    for_each_subtriangle({m1[0], t1[1], m1[1]}, {m2[0], t2[1], m2[1]}, depth - 1, f);
    for_each_subtriangle({m1[2], m1[1], t1[2]}, {m2[2], m2[1], t2[2]}, depth - 1, f);
    for_each_subtriangle({m1[0], m1[1], m1[2]}, {m2[0], m2[1], m2[2]}, depth - 1, f);
}

inline void check_compatible(const NormalFunctionSection& s1, const NormalFunctionSection& s2) {
    if (!s1.pencil || !s2.pencil || !same_pencil(*s1.pencil, *s2.pencil))
        throw domain_error("degree: sections live on different models");
    if (s1.polygon.punctured_boundary != s2.polygon.punctured_boundary)
        throw domain_error("degree: sections use incompatible boundary modes");
    if (s2.dual)
        throw domain_error("degree: supply the second section pre-dualization");
}

inline std::array<QVec, 3> sector_triple(const NormalFunctionSection& s, int sector) {
    std::array<const QVec*, 3> c = sector_corners(s, sector);
    return {*c[0], *c[1], *c[2]};
}

} // namespace detail

// Exact degree of the pulled-back pairing bundle along the pair of
// sections: the sum of the oriented triangle integrals over the common
// refinement of the two fans. Refinement-invariant because the integrand of
// an affine triangle splits exactly over its children.
inline Rat degree_pl(const NormalFunctionSection& s1, const NormalFunctionSection& s2) {
    detail::check_compatible(s1, s2);
    int depth = s1.polygon.refinement_level;
    if (s2.polygon.refinement_level > depth) depth = s2.polygon.refinement_level;
    Rat total = 0;
    const int base = s1.polygon.base_triangles();
    for (int sector = 0; sector < base; ++sector) {
        std::array<QVec, 3> t1 = detail::sector_triple(s1, sector);
        std::array<QVec, 3> t2 = detail::sector_triple(s2, sector);
        detail::for_each_subtriangle(t1, t2, depth,
                                     [&total](const std::array<QVec, 3>& u1,
                                              const std::array<QVec, 3>& u2) {
                                         total += detail::triangle_term(u1[0], u1[1], u1[2],
                                                                        u2[0], u2[1], u2[2]);
                                     });
    }
    return total;
}

// Midpoint-rule sampling of the same 2-form over mesh^2 congruent
// subtriangles per base triangle. The samples land on rational barycentric
// points, so the sampled values, their differences, and the pairings are
// all exact; only the accumulated integral is converted to double at the
// end. The cross-check therefore probes the discretization, not rounding
// noise: for PL sections the 2-form is constant per base triangle and any
// mesh reproduces degree_pl exactly, while naive double accumulation would
// drown small degrees in cancellation once section values grow large.
inline double degree_quadrature(const NormalFunctionSection& s1,
                                const NormalFunctionSection& s2, int mesh) {
    detail::check_compatible(s1, s2);
    if (mesh < 1) throw domain_error("degree_quadrature: mesh must be >= 1");
    const int base = s1.polygon.base_triangles();
    Rat total = 0;
    for (int sector = 0; sector < base; ++sector) {
        std::array<QVec, 3> t1 = detail::sector_triple(s1, sector);
        std::array<QVec, 3> t2 = detail::sector_triple(s2, sector);
        const std::size_t n = t1[0].size();
        // PL evaluation in the barycentric chart (u, v) over the base
        // triangle: value = A + u (B - A) + v (C - A).
        auto eval = [n](const std::array<QVec, 3>& t, const Rat& u, const Rat& v) {
            QVec out(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = t[0][i] + u * (t[1][i] - t[0][i]) + v * (t[2][i] - t[0][i]);
            return out;
        };
        auto term = [n](const QVec& pa1, const QVec& pb1, const QVec& pc1, const QVec& pa2,
                        const QVec& pb2, const QVec& pc2) -> Rat {
            QVec d11(n), d21(n), d12(n), d22(n);
            for (std::size_t i = 0; i < n; ++i) {
                d11[i] = pb1[i] - pa1[i];
                d21[i] = pc1[i] - pa1[i];
                d12[i] = pb2[i] - pa2[i];
                d22[i] = pc2[i] - pa2[i];
            }
            return (pair_rat(d11, d22) - pair_rat(d21, d12)) / Rat(2);
        };
        // The chart triangle {u,v >= 0, u+v <= 1} splits into mesh^2
        // children: per grid cell one upward triangle and, away from the
        // hypotenuse row end, one downward triangle. Each contributes its
        // corner-difference form; the 1/2 area factor is in the formula.
        for (int r = 0; r < mesh; ++r) {
            for (int q = 0; q + r < mesh; ++q) {
                Rat u0 = Rat(q) / Rat(mesh);
                Rat v0 = Rat(r) / Rat(mesh);
                Rat u1 = Rat(q + 1) / Rat(mesh);
                Rat v1 = Rat(r + 1) / Rat(mesh);
                total += term(eval(t1, u0, v0), eval(t1, u1, v0), eval(t1, u0, v1),
                              eval(t2, u0, v0), eval(t2, u1, v0), eval(t2, u0, v1));
                if (q + r + 1 < mesh)
                    total += term(eval(t1, u1, v1), eval(t1, u0, v1), eval(t1, u1, v0),
                                  eval(t2, u1, v1), eval(t2, u0, v1), eval(t2, u1, v0));
            }
        }
    }
    return to_double(total);
}

// Outcome of one theorem verification: both sides, exact equality verdict,
// quadrature diagnostics, and wall-clock timings (not serialized; see
// CONVENTIONS.md on report determinism).
struct TheoremReport {
    std::string conventions = conventions_tag;
    Rat lhs;
    Rat rhs;
    int sigma = theorem_sigma;
    bool equal = false;
    double quadrature_value = 0.0;
    double quadrature_abs_error = 0.0;
    int mesh = 1;
    std::int64_t lhs_microseconds = 0;
    std::int64_t rhs_microseconds = 0;
};

// Both sides of the main identity on one parabolic pair: the cochain-level
// cup pairing against sigma times the PL degree of the extended sections.
// Refuses non-parabolic input, for which the degree side would depend on
// the representative.
inline TheoremReport verify_theorem(const PencilRef& p, const TwistedCocycle& c1,
                                    const ParabolicData& a1, const TwistedCocycle& c2,
                                    const ParabolicData& a2, int mesh = 1) {
    if (!p) throw domain_error("verify_theorem: null model");
    if (!c1.pencil || !c2.pencil || !same_pencil(*p, *c1.pencil) || !same_pencil(*p, *c2.pencil))
        throw domain_error("verify_theorem: cocycles live on a different model");
    if (!a1.complete() || !validate_potentials(c1, a1))
        throw parabolicity_error("verify_theorem: first cocycle is not parabolic");
    if (!a2.complete() || !validate_potentials(c2, a2))
        throw parabolicity_error("verify_theorem: second cocycle is not parabolic");
    TheoremReport report;
    report.mesh = mesh;
    auto t0 = std::chrono::steady_clock::now();
    report.lhs = cup_pairing_oracle(c1, a1, c2, a2);
    auto t1 = std::chrono::steady_clock::now();
    NormalFunctionSection s1 = build_section(p, c1, a1);
    NormalFunctionSection s2 = build_section(p, c2, a2);
    Rat deg = degree_pl(s1, s2);
    report.rhs = Rat(theorem_sigma) * deg;
    auto t2 = std::chrono::steady_clock::now();
    report.equal = (report.lhs == report.rhs);
    report.quadrature_value = degree_quadrature(s1, s2, mesh);
    double rhs_d = to_double(deg);
    report.quadrature_abs_error = std::fabs(report.quadrature_value - rhs_d);
    report.lhs_microseconds =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    report.rhs_microseconds =
        std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();
    return report;
}

} // namespace nfdeg
