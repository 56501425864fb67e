#include <catch2/catch_amalgamated.hpp>

#include <nfdeg/pencil.hpp>
#include <nfdeg/rng.hpp>

using namespace nfdeg;

TEST_CASE("builtin model: twelve alternating transvections closing to identity") {
    PencilRef p = builtin_elliptic12();
    CHECK(p->g == 1);
    CHECK(p->m == 12);
    CHECK(p->lefschetz);
    REQUIRE(p->vanishing_cycles.has_value());
    IMat a = transvection(IVec{1, 0});
    IMat b = transvection(IVec{0, 1});
    CHECK(a(0, 1) == -1);
    CHECK(b(1, 0) == 1);
    for (int i = 1; i <= 12; ++i) CHECK(p->monodromy(i) == (i % 2 == 1 ? a : b));
    CHECK(p->prefix_product(12) == IMat::identity(2));

    IMat ab = mat_mul(a, b);
    CHECK(ab(0, 0) == 0);
    CHECK(ab(0, 1) == -1);
    CHECK(ab(1, 0) == 1);
    CHECK(ab(1, 1) == 1);
    IMat pow = ab;
    for (int k = 1; k < 6; ++k) {
        CHECK(pow != IMat::identity(2));
        pow = mat_mul(pow, ab);
    }
    CHECK(pow == IMat::identity(2));
}

TEST_CASE("model construction rejects malformed input with typed errors") {
    IMat a = transvection(IVec{1, 0});
    IMat b = transvection(IVec{0, 1});

    SECTION("wrong matrix size") {
        CHECK_THROWS_AS(new_pencil(2, {a, symplectic_inverse(a)}), dimension_error);
    }
    SECTION("non-symplectic entry reports its index") {
        IMat bad = IMat::identity(2);
        bad(0, 0) = 2;
        try {
            new_pencil(1, {a, bad, symplectic_inverse(a)});
            FAIL("expected symplectic_violation_error");
        } catch (const symplectic_violation_error& e) {
            CHECK(e.index == 2);
        }
    }
    SECTION("relation violation embeds the offending product") {
        try {
            new_pencil(1, {a, b});
            FAIL("expected relation_violation_error");
        } catch (const relation_violation_error& e) {
            CHECK(std::string(e.what()).find("[[0,-1],[1,1]]") != std::string::npos);
        }
    }
    SECTION("cycle count must match") {
        CHECK_THROWS_AS(
            new_pencil(1, {a, symplectic_inverse(a)}, std::vector<IVec>{IVec{1, 0}}),
            dimension_error);
    }
    SECTION("genus must be positive") {
        CHECK_THROWS_AS(new_pencil(0, {}), invalid_genus_error);
    }
}

TEST_CASE("lefschetz flag reflects whether entries are transvections of the cycles") {
    PencilRef p = builtin_elliptic12();
    std::vector<IMat> mats = p->monodromies;
    std::vector<IVec> cycles = *p->vanishing_cycles;
    PencilRef q = new_pencil(1, mats, cycles);
    CHECK(q->lefschetz);

    // Swap two cycles so the stored matrices are no longer their transvections.
    std::swap(cycles[0], cycles[1]);
    PencilRef r = new_pencil(1, mats, cycles);
    CHECK_FALSE(r->lefschetz);
}

TEST_CASE("five hundred random word-inverse instances validate") {
    int built = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int g = 1 + static_cast<int>(seed % 3);
        int k = 1 + static_cast<int>(seed % 4);
        PencilRef p = random_instance(g, k, derive_seed(99, seed));
        CHECK(p->g == g);
        CHECK(p->m == 2 * k);
        CHECK_FALSE(p->lefschetz);
        CHECK(p->prefix_product(p->m) == IMat::identity(2 * g));
        ++built;
    }
    CHECK(built == 500);
}

TEST_CASE("random instances are deterministic in the seed") {
    PencilRef a = random_instance(2, 3, 424242);
    PencilRef b = random_instance(2, 3, 424242);
    PencilRef c = random_instance(2, 3, 424243);
    CHECK(same_pencil(*a, *b));
    CHECK_FALSE(same_pencil(*a, *c));
}

TEST_CASE("randomized lefschetz instances stay honest transvection tuples") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int g = 1 + static_cast<int>(seed % 2);
        PencilRef p = random_lefschetz_instance(g, derive_seed(7, seed));
        CHECK(p->lefschetz);
        CHECK(p->m == 12);
        REQUIRE(p->vanishing_cycles.has_value());
        for (int i = 1; i <= p->m; ++i) CHECK(p->monodromy(i) == transvection(p->cycle(i)));
        CHECK(p->prefix_product(p->m) == IMat::identity(2 * g));
    }
}

TEST_CASE("words multiply monodromies in order with signed inverses") {
    PencilRef p = builtin_elliptic12();
    IMat a = p->monodromy(1);
    IMat b = p->monodromy(2);
    CHECK(monodromy_of_word(*p, {}) == IMat::identity(2));
    CHECK(monodromy_of_word(*p, {1, 2}) == mat_mul(a, b));
    CHECK(monodromy_of_word(*p, {2, 1}) == mat_mul(b, a));
    CHECK(monodromy_of_word(*p, {1, -1}) == IMat::identity(2));
    CHECK(monodromy_of_word(*p, {-2}) == symplectic_inverse(b));
    std::vector<int> all;
    for (int i = 1; i <= 12; ++i) all.push_back(i);
    CHECK(monodromy_of_word(*p, all) == IMat::identity(2));
    CHECK_THROWS_AS(monodromy_of_word(*p, {0}), index_error);
    CHECK_THROWS_AS(monodromy_of_word(*p, {13}), index_error);
    CHECK_THROWS_AS(monodromy_of_word(*p, {-13}), index_error);
}

TEST_CASE("marking rotation shifts the tuple and closes after m steps") {
    PencilRef p = random_lefschetz_instance(1, 5150);
    MarkingRotation rot = rotate_marking(p);
    REQUIRE(rot.rotated->m == p->m);
    for (int i = 1; i < p->m; ++i) CHECK(rot.rotated->monodromy(i) == p->monodromy(i + 1));
    // The closing relation makes the conjugated first entry literally T_1.
    CHECK(rot.rotated->monodromy(p->m) == p->monodromy(1));
    CHECK(rot.rotated->lefschetz);

    PencilRef cur = p;
    for (int step = 0; step < p->m; ++step) cur = rotate_marking(cur).rotated;
    CHECK(same_pencil(*cur, *p));
    CHECK(*cur->vanishing_cycles == *p->vanishing_cycles);
}
