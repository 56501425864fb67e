#include <catch2/catch_amalgamated.hpp>

#include <nfdeg/cohomology.hpp>
#include <nfdeg/pencil.hpp>
#include <nfdeg/rng.hpp>

using namespace nfdeg;

namespace {

// The reference pair on the builtin model, unpacked.
struct Fixture {
    PencilRef p = builtin_elliptic12();
    TwistedCocycle x;
    TwistedCocycle y;
    ParabolicData ax;
    ParabolicData ay;

    Fixture() : x(zero_cocycle(p, Ring::integers)), y(zero_cocycle(p, Ring::integers)) {
        auto pairres = builtin_elliptic12_pair(p);
        x = pairres[0].first;
        ax = pairres[0].second;
        y = pairres[1].first;
        ay = pairres[1].second;
    }
};

QVec qv(long a, long b) { return QVec{Rat(a), Rat(b)}; }

} // namespace

TEST_CASE("cocycle validation: closure, dimensions, integrality") {
    PencilRef p = builtin_elliptic12();
    std::vector<QVec> values(12, qv(0, 0));
    CHECK(is_cocycle(*p, values));
    values[0] = qv(1, 0);
    CHECK_FALSE(is_cocycle(*p, values));
    CHECK_THROWS_AS(make_cocycle(p, values, Ring::integers), closure_error);
    std::vector<QVec> short_list(11, qv(0, 0));
    CHECK_THROWS_AS(is_cocycle(*p, short_list), dimension_error);

    Fixture f;
    TwistedCocycle xr = scale(Rat(1, 2), f.x);
    CHECK(xr.ring == Ring::rationals);
    CHECK(is_cocycle(*p, xr.values));
    CHECK_THROWS_AS(make_cocycle(p, xr.values, Ring::integers), domain_error);
}

TEST_CASE("coboundary values on the builtin model alternate as computed by hand") {
    PencilRef p = builtin_elliptic12();
    TwistedCocycle d = coboundary(p, qv(1, 0), Ring::integers);
    for (int i = 1; i <= 12; ++i) {
        if (i % 2 == 1)
            CHECK(d.value(i) == qv(0, 0));
        else
            CHECK(d.value(i) == qv(0, 1));
    }
    CHECK(is_cocycle(*p, d.values));
    auto back = is_coboundary(d);
    REQUIRE(back.has_value());
    CHECK(coboundary(p, *back, Ring::rationals).values == d.values);
}

TEST_CASE("cocycle space has dimension 2g(m-1) and the basis is independent") {
    PencilRef p = builtin_elliptic12();
    std::vector<TwistedCocycle> basis = cocycle_basis(p, Ring::integers);
    REQUIRE(basis.size() == 22);
    QMat stacked(24, 22);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        CHECK(is_cocycle(*p, basis[k].values));
        int r = 0;
        for (const QVec& v : basis[k].values)
            for (const Rat& entry : v) stacked(r++, static_cast<int>(k)) = entry;
    }
    CHECK(rational_rank(stacked) == 22);
}

TEST_CASE("fixture pair: parabolic certificates validate and pairing values are pinned") {
    Fixture f;
    CHECK(is_cocycle(*f.p, f.x.values));
    CHECK(is_cocycle(*f.p, f.y.values));
    CHECK(validate_potentials(f.x, f.ax));
    CHECK(validate_potentials(f.y, f.ay));
    CHECK(cup_pairing_oracle(f.x, f.ax, f.y, f.ay) == Rat(-2));
    CHECK(cup_pairing_oracle(f.y, f.ay, f.x, f.ax) == Rat(-2));
    CHECK(cup_pairing_oracle(f.x, f.ax, f.x, f.ax) == Rat(-2));
    CHECK(cup_pairing_oracle(f.y, f.ay, f.y, f.ay) == Rat(-4));
    CHECK_FALSE(is_coboundary(f.x).has_value());
    CHECK_FALSE(is_coboundary(f.y).has_value());
}

TEST_CASE("solver-found potentials work as well as the canonical ones") {
    Fixture f;
    auto pd = parabolic_potentials(f.x, Ring::integers);
    REQUIRE(pd.has_value());
    CHECK(validate_potentials(f.x, *pd));
    CHECK(cup_pairing_oracle(f.x, *pd, f.y, f.ay) == Rat(-2));
}

TEST_CASE("a cocycle whose first value leaves the cycle line is not parabolic") {
    PencilRef p = builtin_elliptic12();
    std::vector<QVec> values(12, qv(0, 0));
    values[0] = qv(0, 1);
    // Compensate at slot 2: P_1 c_2 = -c_1 with P_1 = [[1,-1],[0,1]].
    values[1] = qv(-1, -1);
    TwistedCocycle c = make_cocycle(p, values, Ring::integers);
    ParabolicData partial = partial_parabolic_potentials(c, Ring::rationals);
    CHECK_FALSE(partial.complete());
    CHECK_FALSE(partial.slot(1).has_value());
    CHECK_FALSE(parabolic_potentials(c, Ring::rationals).has_value());
    ParabolicData fake = constant_potentials(*p, qv(0, 0), Ring::integers);
    Fixture f;
    CHECK_THROWS_AS(cup_pairing_oracle(c, fake, f.y, f.ay), parabolicity_error);
}

TEST_CASE("pairing rejects cocycles from different models") {
    Fixture f;
    PencilRef other = random_instance(1, 6, 31337);
    Rng rng(5);
    auto drawn = random_parabolic_cocycles(other, 1, rng);
    CHECK_THROWS_AS(cup_pairing_oracle(f.x, f.ax, drawn[0].first, drawn[0].second),
                    domain_error);
}

TEST_CASE("pairing is invariant under coboundary shifts on the fixture") {
    Fixture f;
    const Rat base = cup_pairing_oracle(f.x, f.ax, f.y, f.ay);
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            auto [xs, axs] = shift_by_coboundary(f.x, f.ax, qv(a, b));
            CHECK(validate_potentials(xs, axs));
            CHECK(cup_pairing_oracle(xs, axs, f.y, f.ay) == base);
            auto [ys, ays] = shift_by_coboundary(f.y, f.ay, qv(b, -a));
            CHECK(cup_pairing_oracle(f.x, f.ax, ys, ays) == base);
        }
    }
}

TEST_CASE("pairing is symmetric bilinear and shift invariant on random models") {
    Rng rng(404);
    int instances = 0;
    while (instances < 100) {
        std::uint64_t seed = derive_seed(808, static_cast<std::uint64_t>(instances));
        int g = 1 + static_cast<int>(rng.below(2));
        PencilRef p = rng.flip() ? random_lefschetz_instance(g, seed)
                                 : random_instance(g, 2 + static_cast<int>(rng.below(3)), seed);
        auto drawn = random_parabolic_cocycles(p, 3, rng);
        const auto& [c1, a1] = drawn[0];
        const auto& [c2, a2] = drawn[1];
        const auto& [c3, a3] = drawn[2];
        const Rat q12 = cup_pairing_oracle(c1, a1, c2, a2);
        CHECK(cup_pairing_oracle(c2, a2, c1, a1) == q12);
        const Rat q13 = cup_pairing_oracle(c1, a1, c3, a3);
        CHECK(cup_pairing_oracle(add(c1, c2), add(a1, a2), c3, a3) ==
              q13 + cup_pairing_oracle(c2, a2, c3, a3));
        QVec v;
        for (int j = 0; j < 2 * g; ++j) v.push_back(Rat(rng.range(-2, 2)));
        auto [c1s, a1s] = shift_by_coboundary(c1, a1, v);
        CHECK(cup_pairing_oracle(c1s, a1s, c2, a2) == q12);
        CHECK(is_integral(q12));
        ++instances;
    }
}

TEST_CASE("scaling by a non-integer degrades the ring, by an integer keeps it") {
    Fixture f;
    TwistedCocycle doubled = scale(Rat(2), f.x);
    CHECK(doubled.ring == Ring::integers);
    CHECK(doubled.value(1) == qv(-2, 0));
    TwistedCocycle halved = scale(Rat(1, 2), f.x);
    CHECK(halved.ring == Ring::rationals);
    ParabolicData axh = scale(Rat(1, 2), f.ax);
    CHECK(validate_potentials(halved, axh));
    CHECK(cup_pairing_oracle(halved, axh, f.y, f.ay) == Rat(-1));
}

TEST_CASE("transport along a marking rotation preserves the pairing") {
    Fixture f;
    MarkingRotation rot = rotate_marking(f.p);
    TwistedCocycle xr = transport_cocycle(f.x, rot);
    TwistedCocycle yr = transport_cocycle(f.y, rot);
    ParabolicData axr = transport_potentials(f.ax, rot);
    ParabolicData ayr = transport_potentials(f.ay, rot);
    CHECK(validate_potentials(xr, axr));
    CHECK(validate_potentials(yr, ayr));
    CHECK(cup_pairing_oracle(xr, axr, yr, ayr) == Rat(-2));

    // Twelve rotations return the original data.
    TwistedCocycle cx = f.x;
    ParabolicData cax = f.ax;
    PencilRef cur = f.p;
    for (int step = 0; step < 12; ++step) {
        MarkingRotation r = rotate_marking(cur);
        cx = transport_cocycle(cx, r);
        cax = transport_potentials(cax, r);
        cur = r.rotated;
    }
    CHECK(cx.values == f.x.values);

    PencilRef other = random_instance(1, 2, 99);
    MarkingRotation foreign = rotate_marking(other);
    CHECK_THROWS_AS(transport_cocycle(f.x, foreign), domain_error);
}

TEST_CASE("random parabolic draws come with valid certificates") {
    Rng rng(515);
    PencilRef p = builtin_elliptic12();
    auto drawn = random_parabolic_cocycles(p, 8, rng);
    REQUIRE(drawn.size() == 8);
    for (const auto& [c, pd] : drawn) {
        CHECK(c.ring == Ring::integers);
        CHECK(is_cocycle(*p, c.values));
        CHECK(validate_potentials(c, pd));
    }
}

TEST_CASE("zero cocycle pairs to zero against everything") {
    Fixture f;
    TwistedCocycle z = zero_cocycle(f.p, Ring::integers);
    ParabolicData az = constant_potentials(*f.p, qv(0, 0), Ring::integers);
    CHECK(cup_pairing_oracle(z, az, f.y, f.ay) == Rat(0));
    CHECK(cup_pairing_oracle(f.x, f.ax, z, az) == Rat(0));
}
