#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/rng.hpp"
#include "nfdeg/symplectic.hpp"

namespace nfdeg {

// A rank-2g local system on the m-punctured sphere: ordered monodromies
// T_1..T_m around the punctures whose product (in boundary-word order,
// left to right) is the identity. Loops compose left to right and matrices
// act on column vectors from the left; see CONVENTIONS.md.
struct PencilModel {
    int g = 1;
    int m = 0;
    std::vector<IMat> monodromies;
    std::optional<std::vector<IVec>> vanishing_cycles;
    bool lefschetz = false;

    // Prefix products P_i = T_1 ... T_i with P_0 = I, cached because the
    // cohomology and degree paths both consume them heavily.
    std::vector<IMat> prefix;

    const IMat& monodromy(int i) const { // 1-based
        if (i < 1 || i > m) throw index_error("puncture index out of range");
        return monodromies[static_cast<std::size_t>(i - 1)];
    }
    const IMat& prefix_product(int i) const { // P_i, 0 <= i <= m
        if (i < 0 || i > m) throw index_error("prefix index out of range");
        return prefix[static_cast<std::size_t>(i)];
    }
    const IVec& cycle(int i) const { // 1-based
        if (!vanishing_cycles) throw domain_error("model carries no vanishing cycles");
        if (i < 1 || i > m) throw index_error("puncture index out of range");
        return (*vanishing_cycles)[static_cast<std::size_t>(i - 1)];
    }
};

using PencilRef = std::shared_ptr<const PencilModel>;

inline bool same_pencil(const PencilModel& a, const PencilModel& b) {
    return a.g == b.g && a.m == b.m && a.monodromies == b.monodromies;
}

namespace detail {

inline std::string matrix_brief(const IMat& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.rows(); ++i) {
        os << '[';
        for (int j = 0; j < m.cols(); ++j) {
            os << m(i, j).get_str();
            if (j + 1 < m.cols()) os << ',';
        }
        os << ']';
        if (i + 1 < m.rows()) os << ',';
    }
    os << ']';
    return os.str();
}

} // namespace detail

// Validating constructor. Checks shapes, symplecticity (reporting the
// 1-based index of a violation), and the closing relation (reporting the
// actual product). When cycles are supplied, the lefschetz flag records
// whether every T_i literally equals the transvection of its cycle.
inline PencilRef new_pencil(int g, std::vector<IMat> monodromies,
                            std::optional<std::vector<IVec>> cycles = std::nullopt) {
    if (g < 1) throw invalid_genus_error("genus must be >= 1");
    const int n = 2 * g;
    auto model = std::make_shared<PencilModel>();
    model->g = g;
    model->m = static_cast<int>(monodromies.size());
    for (std::size_t i = 0; i < monodromies.size(); ++i) {
        const IMat& t = monodromies[i];
        if (t.rows() != n || t.cols() != n)
            throw dimension_error("monodromy " + std::to_string(i + 1) + " is not 2g x 2g");
        if (!is_symplectic(t))
            throw symplectic_violation_error(
                "monodromy " + std::to_string(i + 1) + " is not symplectic",
                static_cast<int>(i + 1));
    }
    model->prefix.reserve(monodromies.size() + 1);
    model->prefix.push_back(IMat::identity(n));
    for (const IMat& t : monodromies)
        model->prefix.push_back(mat_mul(model->prefix.back(), t));
    if (model->prefix.back() != IMat::identity(n))
        throw relation_violation_error(
            "monodromy product is not the identity: " +
            detail::matrix_brief(model->prefix.back()));
    if (cycles) {
        if (cycles->size() != monodromies.size())
            throw dimension_error("cycle count does not match puncture count");
        bool all = true;
        for (std::size_t i = 0; i < cycles->size(); ++i) {
            const IVec& d = (*cycles)[i];
            if (d.size() != static_cast<std::size_t>(n))
                throw dimension_error("cycle " + std::to_string(i + 1) + " has wrong length");
            if (vec_is_zero(d))
                throw invalid_cycle_error("cycle " + std::to_string(i + 1) + " is zero");
            if (monodromies[i] != transvection(d)) all = false;
        }
        model->lefschetz = all;
        model->vanishing_cycles = std::move(cycles);
    }
    model->monodromies = std::move(monodromies);
    return model;
}

inline PencilRef lefschetz_from_cycles(int g, const std::vector<IVec>& cycles) {
    std::vector<IMat> mats;
    mats.reserve(cycles.size());
    for (const IVec& d : cycles) mats.push_back(transvection(d));
    return new_pencil(g, std::move(mats), cycles);
}

// Golden fixture: genus 1, twelve punctures, cycles alternating (1,0) and
// (0,1). The two transvections A = [[1,-1],[0,1]] and B = [[1,0],[1,1]]
// satisfy (A B)^6 = I, so the relation closes after twelve factors.
inline PencilRef builtin_elliptic12() {
    std::vector<IVec> cycles;
    for (int i = 0; i < 6; ++i) {
        cycles.push_back(IVec{1, 0});
        cycles.push_back(IVec{0, 1});
    }
    return lefschetz_from_cycles(1, cycles);
}

// Word-inverse random model: k transvections about random primitive cycles
// followed by their inverse transvections in reverse order, so the relation
// holds by construction with m = 2k. The inverse transvections are not
// transvections (sign-reversed), so the model is deliberately not flagged
// as Lefschetz; use random_lefschetz_instance for that mode.
inline PencilRef random_instance(int g, int k, std::uint64_t seed) {
    if (g < 1) throw invalid_genus_error("genus must be >= 1");
    if (k < 1) throw domain_error("half-length must be >= 1");
    Rng rng(seed);
    std::vector<IVec> deltas;
    deltas.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) deltas.push_back(random_primitive_vector(g, rng));
    std::vector<IMat> mats;
    mats.reserve(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) mats.push_back(transvection(deltas[static_cast<std::size_t>(i)]));
    for (int i = k - 1; i >= 0; --i)
        mats.push_back(inverse_transvection(deltas[static_cast<std::size_t>(i)]));
    return new_pencil(g, std::move(mats));
}

// Genuine Lefschetz randomization: start from the builtin cycle list
// embedded into genus g (coordinates 1 and g+1 form a hyperbolic pair, so
// the embedded transvections still close up), then scramble with Hurwitz
// moves, which replace (d_i, d_{i+1}) by (t_{d_i} d_{i+1}, d_i) and
// preserve both the transvection shape and the product, and finally
// conjugate every cycle by a random symplectic matrix (the transvection of
// M d equals M t_d M^{-1}). All twelve entries stay honest transvections.
inline PencilRef random_lefschetz_instance(int g, std::uint64_t seed, int moves = 24) {
    if (g < 1) throw invalid_genus_error("genus must be >= 1");
    Rng rng(seed);
    const int n = 2 * g;
    std::vector<IVec> cycles;
    for (int i = 0; i < 6; ++i) {
        IVec a = zero_vec<Int>(n);
        IVec b = zero_vec<Int>(n);
        a[0] = 1;
        b[static_cast<std::size_t>(g)] = 1;
        cycles.push_back(a);
        cycles.push_back(b);
    }
    const int m = static_cast<int>(cycles.size());
    for (int step = 0; step < moves; ++step) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
        std::size_t si = static_cast<std::size_t>(i);
        if (rng.flip()) {
            IVec moved = mat_vec(transvection(cycles[si]), cycles[si + 1]);
            cycles[si + 1] = cycles[si];
            cycles[si] = std::move(moved);
        } else {
            IVec moved = mat_vec(inverse_transvection(cycles[si + 1]), cycles[si]);
            cycles[si] = cycles[si + 1];
            cycles[si + 1] = std::move(moved);
        }
    }
    int conj_factors = static_cast<int>(2 + rng.below(4));
    IMat conj = IMat::identity(n);
    for (int i = 0; i < conj_factors; ++i)
        conj = mat_mul(conj, transvection(random_primitive_vector(g, rng, 2)));
    for (IVec& d : cycles) d = mat_vec(conj, d);
    return lefschetz_from_cycles(g, cycles);
}

// Ordered product of T_i^{+-1} over a word of signed 1-based indices.
inline IMat monodromy_of_word(const PencilModel& p, const std::vector<int>& word) {
    IMat acc = IMat::identity(2 * p.g);
    for (int w : word) {
        int i = w >= 0 ? w : -w;
        if (w == 0 || i > p.m) throw index_error("word index out of range");
        if (w > 0)
            acc = mat_mul(acc, p.monodromy(i));
        else
            acc = mat_mul(acc, symplectic_inverse(p.monodromy(i)));
    }
    return acc;
}

// One rotation of the marking: the cut to the first puncture is moved past
// the others. Monodromies become (T_2, ..., T_m, W^{-1} T_1 W) with
// W = T_2 ... T_m; the closing relation makes W = T_1^{-1}, so the
// conjugate equals T_1 again, but the conjugation is carried out literally
// so the relation hypothesis is exercised, not assumed. The returned
// object keeps both models; cocycles move along via transport_cocycle.
struct MarkingRotation {
    PencilRef source;
    PencilRef rotated;
};

inline MarkingRotation rotate_marking(const PencilRef& p) {
    if (!p) throw domain_error("rotate_marking: null model");
    if (p->m <= 1) return MarkingRotation{p, p};
    IMat w = IMat::identity(2 * p->g);
    for (int i = 2; i <= p->m; ++i) w = mat_mul(w, p->monodromy(i));
    IMat t1 = mat_mul(mat_mul(symplectic_inverse(w), p->monodromy(1)), w);
    std::vector<IMat> mats;
    mats.reserve(static_cast<std::size_t>(p->m));
    for (int i = 2; i <= p->m; ++i) mats.push_back(p->monodromy(i));
    mats.push_back(std::move(t1));
    std::optional<std::vector<IVec>> cycles;
    if (p->vanishing_cycles) {
        std::vector<IVec> moved;
        moved.reserve(static_cast<std::size_t>(p->m));
        for (int i = 2; i <= p->m; ++i) moved.push_back(p->cycle(i));
        moved.push_back(mat_vec(symplectic_inverse(w), p->cycle(1)));
        cycles = std::move(moved);
    }
    return MarkingRotation{p, new_pencil(p->g, std::move(mats), std::move(cycles))};
}

} // namespace nfdeg
