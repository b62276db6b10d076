#include <doctest.h>

#include <mocktheta/quadforms.hpp>

#include <set>

using namespace mocktheta;

TEST_CASE("gauss reduction lands on the classical class representatives") {
    // D = -23 has class number 3: (1,1,6), (2,1,3), (2,-1,3)
    auto [r1, g1] = sl2_reduce({6, 1, 1});
    CHECK(r1 == BinaryQF{1, 1, 6});
    CHECK(BinaryQF{6, 1, 1}.apply(g1) == r1);
    CHECK(g1.det() == 1);

    auto [r2, g2] = sl2_reduce({2, -3, 4});
    CHECK(r2.disc() == -23);
    CHECK(BinaryQF{2, -3, 4}.apply(g2) == r2);

    // negative definite forms reduce to the negated reduced form
    auto [r3, g3] = sl2_reduce({-6, 1, -1});
    CHECK(r3 == BinaryQF{-1, -1, -6});
    CHECK(BinaryQF{-6, 1, -1}.apply(g3) == r3);

    // boundary normalizations: b = -a goes to b = a, a = c wants b >= 0
    auto [r4, g4] = sl2_reduce({2, -2, 3});
    CHECK(r4 == BinaryQF{2, 2, 3});
    auto [r5, g5] = sl2_reduce({5, -2, 5});
    CHECK(r5 == BinaryQF{5, 2, 5});
}

TEST_CASE("automorphs have the classical orders") {
    // generic form: only +-I
    CHECK(automorphs({1, 1, 6}).size() == 2);
    // square lattice x^2 + y^2: cyclic of order 4
    CHECK(automorphs({1, 0, 1}).size() == 4);
    CHECK(automorphs({3, 0, 3}).size() == 4);
    // hexagonal lattice x^2 + xy + y^2: cyclic of order 6
    CHECK(automorphs({1, 1, 1}).size() == 6);
    CHECK(automorphs({-2, -2, -2}).size() == 6);
    // automorphs fix the form
    for (const auto& g : automorphs({1, 0, 1})) {
        CHECK(BinaryQF{1, 0, 1}.apply(g) == BinaryQF{1, 0, 1});
        CHECK(g.det() == 1);
    }
}

TEST_CASE("stabilizer weights inside Gamma_0(N)") {
    CHECK(stabilizer_weight({1, 1, 6}, 1) == 1);
    CHECK(stabilizer_weight({1, 0, 1}, 1) == 2);
    CHECK(stabilizer_weight({1, 1, 1}, 1) == 3);
    // the extra automorphs of x^2 + y^2 have lower-left entry +-1,
    // so they drop out at any level N > 1
    CHECK(stabilizer_weight({1, 0, 1}, 2) == 1);
}

TEST_CASE("square roots of D mod 4N") {
    // D = -4, N = 6: r^2 = -4 = 20 (mod 24) -> no solutions with r^2=20;
    // check against brute force for a few cases
    for (long N : {4L, 6L, 12L}) {
        for (long D : {-3L, -4L, -8L, -20L, -23L}) {
            auto roots = square_roots_mod(D, N);
            for (long r = 0; r < 2 * N; ++r) {
                const long m = 4 * N;
                const bool is_root = ((r * r - D) % m + m) % m == 0;
                const bool listed = std::find(roots.begin(), roots.end(), r) != roots.end();
                CHECK(is_root == listed);
            }
        }
    }
}

TEST_CASE("heegner enumeration: class number checks at level 1") {
    // h(-23) = 3, h(-4) = 1, h(-3) = 1
    CHECK(enumerate_heegner(1, -23, 1, +1).size() == 3);
    CHECK(enumerate_heegner(1, -4, 0, +1).size() == 1);
    CHECK(enumerate_heegner(1, -3, 1, +1).size() == 1);

    // weights: D = -4 orbit has omega = 2, D = -3 has omega = 3
    CHECK(enumerate_heegner(1, -4, 0, +1)[0].omega == 2);
    CHECK(enumerate_heegner(1, -3, 1, +1)[0].omega == 3);
}

TEST_CASE("heegner enumeration respects the congruence and level") {
    const long N = 12;
    const long disc = 4 - 48 * 2;  // D = -92, a square of r = 2 mod 48
    auto orbits = enumerate_heegner(N, disc, 2, +1);
    CHECK(!orbits.empty());
    std::set<std::tuple<long, long, long>> seen;
    for (const auto& orb : orbits) {
        CHECK(orb.rep.a % N == 0);
        CHECK(orb.rep.a > 0);
        CHECK(orb.rep.disc() == disc);
        CHECK(((orb.rep.b - 2) % (2 * N) + 2 * N) % (2 * N) == 0);
        seen.insert({orb.rep.a, orb.rep.b, orb.rep.c});
    }
    CHECK(seen.size() == orbits.size());
    // pairwise inequivalent
    for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t j = i + 1; j < orbits.size(); ++j)
            CHECK(!gamma0_equivalent(orbits[i].rep, orbits[j].rep, N));

    // count is stable under doubling the scan range
    auto doubled = enumerate_heegner(N, disc, 2, +1, 2);
    CHECK(doubled.size() == orbits.size());

    // negative side mirrors the positive side through Q -> -Q
    auto neg = enumerate_heegner(N, disc, 2, -1);
    auto pos_mirror = enumerate_heegner(N, disc, ((-2) % (2 * N) + 2 * N) % (2 * N), +1);
    CHECK(neg.size() == pos_mirror.size());
    for (const auto& orb : neg) {
        CHECK(orb.rep.a < 0);
        CHECK(orb.rep.disc() == disc);
        bool found = false;
        for (const auto& mirror : pos_mirror)
            if (gamma0_equivalent(orb.rep.negated(), mirror.rep, N)) found = true;
        CHECK(found);
    }
}

TEST_CASE("cm points solve the form equation") {
    PrecisionContext ctx(50, 10);
    PrecisionContext::Scope guard(ctx);
    const Real tol = ctx.tolerance();
    for (const BinaryQF f : {BinaryQF{12, 2, 2}, BinaryQF{24, 10, 2}, BinaryQF{-12, 2, -2}}) {
        const Complex z = cm_point(ctx, f);
        CHECK(z.im > 0);
        const Complex val = Real(f.a) * z * z + Real(f.b) * z + Complex{Real(f.c), Real(0)};
        CHECK(abs_c(val) < tol);
    }
}

TEST_CASE("gamma0 equivalence finds witnesses inside the group") {
    const BinaryQF base{12, 2, 2};  // D = -92, level 12
    const Mat2 t{1, 1, 0, 1};
    const Mat2 gamma = t * Mat2{1, 0, 12, 1} * t;  // element of Gamma_0(12)
    const BinaryQF moved = base.apply(gamma);
    auto g = gamma0_equivalent(base, moved, 12);
    REQUIRE(g.has_value());
    CHECK(g->r % 12 == 0);
    CHECK(base.apply(*g) == moved);

    // SL2-equivalent but not Gamma_0(12)-equivalent: T-translate by half period
    // (12, 26, 15) = (12, 2, 2) shifted by T: b -> b + 24; use an S-conjugate instead
    const BinaryQF other = base.apply(Mat2{0, -1, 1, 0});
    if (other.a % 12 != 0) {
        // not even in the Heegner family; equivalence may still fail or succeed,
        // but the witness must satisfy the congruence when it exists
        auto w = gamma0_equivalent(base, other, 12);
        if (w) CHECK(w->r % 12 == 0);
    }
}
