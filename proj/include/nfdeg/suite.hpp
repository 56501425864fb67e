#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "nfdeg/cohomology.hpp"
#include "nfdeg/degree.hpp"
#include "nfdeg/normal_function.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/rng.hpp"

namespace nfdeg {

// One randomized trial: a fresh model, three parabolic cocycles, and the
// full property battery on them. Every field a check needs to be replayed
// is recorded.
struct TrialResult {
    int index = 0;
    std::uint64_t seed = 0;
    int genus = 0;
    int punctures = 0;
    bool lefschetz = false;
    bool theorem_ok = false;
    bool symmetry_ok = false;
    bool bilinearity_ok = false;
    bool coboundary_ok = false;
    bool refinement_ok = false;
    bool rotation_ok = false;
    bool integrality_ok = false;
    Rat lhs;
    Rat rhs;
    std::int64_t microseconds = 0;

    bool passed() const {
        return theorem_ok && symmetry_ok && bilinearity_ok && coboundary_ok && refinement_ok &&
               rotation_ok && integrality_ok;
    }

    std::string failed_checks() const {
        std::string out;
        auto note = [&out](bool ok, const char* name) {
            if (ok) return;
            if (!out.empty()) out += ",";
            out += name;
        };
        note(theorem_ok, "theorem");
        note(symmetry_ok, "symmetry");
        note(bilinearity_ok, "bilinearity");
        note(coboundary_ok, "coboundary");
        note(refinement_ok, "refinement");
        note(rotation_ok, "rotation");
        note(integrality_ok, "integrality");
        return out;
    }
};

struct SuiteSummary {
    int trials = 0;
    int passed = 0;
    std::uint64_t base_seed = 0;
    std::int64_t p50_microseconds = 0;
    std::int64_t p90_microseconds = 0;
    std::int64_t max_microseconds = 0;
    std::vector<TrialResult> results;

    bool all_passed() const { return passed == trials; }
};

namespace detail {

inline std::int64_t percentile(std::vector<std::int64_t> sorted, int pct) {
    if (sorted.empty()) return 0;
    std::size_t idx = (sorted.size() - 1) * static_cast<std::size_t>(pct) / 100;
    return sorted[idx];
}

} // namespace detail

// Run the full battery on one derived seed. Model shape, cocycles, and the
// coboundary shift all come from the trial's own generator, so trial i is
// reproducible in isolation.
inline TrialResult run_trial(int index, std::uint64_t base_seed) {
    TrialResult r;
    r.index = index;
    r.seed = derive_seed(base_seed, index);
    Rng rng(r.seed);

    auto started = std::chrono::steady_clock::now();

    const int g = 1 + static_cast<int>(rng.below(2));
    PencilRef p;
    if (rng.flip()) {
        p = random_lefschetz_instance(g, rng.raw());
    } else {
        const int k = 2 + static_cast<int>(rng.below(3));
        p = random_instance(g, k, rng.raw());
    }
    r.genus = p->g;
    r.punctures = p->m;
    r.lefschetz = p->lefschetz;

    auto drawn = random_parabolic_cocycles(p, 3, rng);
    const TwistedCocycle& c1 = drawn[0].first;
    const TwistedCocycle& c2 = drawn[1].first;
    const TwistedCocycle& c3 = drawn[2].first;
    const ParabolicData& a1 = drawn[0].second;
    const ParabolicData& a2 = drawn[1].second;
    const ParabolicData& a3 = drawn[2].second;

    TheoremReport report = verify_theorem(p, c1, a1, c2, a2);
    r.lhs = report.lhs;
    r.rhs = report.rhs;
    r.theorem_ok = report.equal;

    r.symmetry_ok = (cup_pairing_oracle(c2, a2, c1, a1) == report.lhs);

    const Rat q13 = cup_pairing_oracle(c1, a1, c3, a3);
    const Rat q23 = cup_pairing_oracle(c2, a2, c3, a3);
    const Rat q_sum = cup_pairing_oracle(add(c1, c2), add(a1, a2), c3, a3);
    r.bilinearity_ok = (q_sum == q13 + q23);

    QVec v(static_cast<std::size_t>(2 * g));
    for (auto& x : v) x = Rat(static_cast<long>(rng.range(-2, 2)));
    auto [c1s, a1s] = shift_by_coboundary(c1, a1, v);
    TheoremReport shifted = verify_theorem(p, c1s, a1s, c2, a2);
    r.coboundary_ok = shifted.equal && shifted.lhs == report.lhs && shifted.rhs == report.rhs;

    NormalFunctionSection s1 = build_section(p, c1, a1);
    NormalFunctionSection s2 = build_section(p, c2, a2);
    const Rat base_degree = degree_pl(s1, s2);
    r.refinement_ok = (degree_pl(refine(s1, 1), s2) == base_degree) &&
                      (degree_pl(refine(s1, 1), refine(s2, 2)) == base_degree);

    MarkingRotation rot = rotate_marking(p);
    TwistedCocycle c1r = transport_cocycle(c1, rot);
    TwistedCocycle c2r = transport_cocycle(c2, rot);
    ParabolicData a1r = transport_potentials(a1, rot);
    ParabolicData a2r = transport_potentials(a2, rot);
    r.rotation_ok = (cup_pairing_oracle(c1r, a1r, c2r, a2r) == report.lhs);

    r.integrality_ok = is_integral(report.lhs) && is_integral(report.rhs);

    auto finished = std::chrono::steady_clock::now();
    r.microseconds =
        std::chrono::duration_cast<std::chrono::microseconds>(finished - started).count();
    return r;
}

inline SuiteSummary run_suite(int trials, std::uint64_t base_seed, int jobs = 0) {
    if (trials < 0) throw domain_error("run_suite: negative trial count");
    SuiteSummary summary;
    summary.trials = trials;
    summary.base_seed = base_seed;
    summary.results.resize(static_cast<std::size_t>(trials));
    if (trials == 0) return summary;

    if (jobs <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }
    jobs = std::min(jobs, trials);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= trials) return;
            summary.results[static_cast<std::size_t>(i)] = run_trial(i, base_seed);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<std::int64_t> times;
    times.reserve(summary.results.size());
    for (const TrialResult& r : summary.results) {
        if (r.passed()) ++summary.passed;
        times.push_back(r.microseconds);
    }
    std::sort(times.begin(), times.end());
    summary.p50_microseconds = detail::percentile(times, 50);
    summary.p90_microseconds = detail::percentile(times, 90);
    summary.max_microseconds = times.empty() ? 0 : times.back();
    return summary;
}

} // namespace nfdeg
