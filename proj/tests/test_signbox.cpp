#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadstab/signbox.hpp"
#include "support/testutil.hpp"

using namespace quadstab;
using quadstab::testing::Rng;

namespace {
const Box kUnit{Rat(0), Rat(1), Rat(0), Rat(1)};

BiPoly sq_splus_tsq() {
    return BiPoly::monomial(Rat(1), 2, 0) + BiPoly::monomial(Rat(1), 0, 2);
}
}  // namespace

TEST_CASE("spec examples") {
    // s^2 + t^2 with (0,0) excluded: positive
    auto v = sign_on_box(sq_splus_tsq(), kUnit, {{Rat(0), Rat(0)}});
    CHECK(v.tag == SignTag::AllPositive);

    // without the exclusion: zero at the origin
    auto w = sign_on_box(sq_splus_tsq(), kUnit, {});
    CHECK(w.tag == SignTag::HasZero);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->first == Rat(0));
    CHECK(w.witness->second == Rat(0));

    // st - 1/2 is negative at the origin
    auto n = sign_on_box(BiPoly::monomial(Rat(1), 1, 1) - BiPoly::constant(Rat(1, 2)),
                         kUnit, {});
    CHECK(n.tag == SignTag::HasNegative);
    REQUIRE(n.witness.has_value());

    auto z = sign_on_box(BiPoly(), kUnit, {});
    CHECK(z.tag == SignTag::IdenticallyZero);
}

TEST_CASE("interior touching zero at a rational point") {
    // (s - 1/2)^2 + (t - 1/3)^2: min 0 at (1/2, 1/3)
    BiPoly ds = BiPoly::var_s() - BiPoly::constant(Rat(1, 2));
    BiPoly dt = BiPoly::var_t() - BiPoly::constant(Rat(1, 3));
    auto v = sign_on_box(ds * ds + dt * dt, kUnit, {});
    CHECK(v.tag == SignTag::HasZero);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first == Rat(1, 2));
    CHECK(v.witness->second == Rat(1, 3));
}

TEST_CASE("interior touching zero along a curve") {
    // (s - t)^2 vanishes on the diagonal, positive elsewhere
    BiPoly d = BiPoly::var_s() - BiPoly::var_t();
    auto v = sign_on_box(d * d, kUnit, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
    CHECK(v.tag == SignTag::HasZero);
}

TEST_CASE("strictly positive with zero at excluded corner only") {
    // s + t vanishes at the origin, positive elsewhere on the box
    BiPoly f = BiPoly::var_s() + BiPoly::var_t();
    auto v = sign_on_box(f, kUnit, {{Rat(0), Rat(0)}});
    CHECK(v.tag == SignTag::AllPositive);
    // the same corner unexcluded reports the zero
    auto w = sign_on_box(f, kUnit, {});
    CHECK(w.tag == SignTag::HasZero);
}

TEST_CASE("corner zero with vanishing gradient, positive definite hessian") {
    // s^2 + t^2 behaves like the zero-weight-corner case
    auto v = sign_on_box(sq_splus_tsq(), kUnit, {{Rat(0), Rat(0)}});
    CHECK(v.tag == SignTag::AllPositive);

    // s^2 - t^2: indefinite corner, negative along the t-axis side
    BiPoly f = BiPoly::monomial(Rat(1), 2, 0) - BiPoly::monomial(Rat(1), 0, 2);
    auto w = sign_on_box(f, kUnit, {{Rat(0), Rat(0)}});
    CHECK(w.tag == SignTag::HasNegative);
}

TEST_CASE("negative only deep in the interior") {
    // (s-1/2)^2 + (t-1/2)^2 - 1/100
    BiPoly ds = BiPoly::var_s() - BiPoly::constant(Rat(1, 2));
    BiPoly dt = BiPoly::var_t() - BiPoly::constant(Rat(1, 2));
    auto v = sign_on_box(ds * ds + dt * dt - BiPoly::constant(Rat(1, 100)), kUnit, {});
    CHECK(v.tag == SignTag::HasNegative);
    REQUIRE(v.witness.has_value());
}

TEST_CASE("irrational interior zero is still detected") {
    // (s^2 - 1/2)^2 + (t - 1/3)^2 vanishes at (sqrt(1/2), 1/3): the t-side
    // projection root is rational, so the symmetric sweep resolves it.
    BiPoly u = BiPoly::monomial(Rat(1), 2, 0) - BiPoly::constant(Rat(1, 2));
    BiPoly w = BiPoly::var_t() - BiPoly::constant(Rat(1, 3));
    auto v = sign_on_box(u * u + w * w, kUnit, {});
    CHECK(v.tag == SignTag::HasZero);
}

TEST_CASE("verdicts stable under positive scaling") {
    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
        BiPoly f;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) f = f + BiPoly::monomial(rng.rat(4, 3), i, j);
        if (f.is_zero()) continue;
        Rat c = rng.pos_rat(7, 3);
        auto a = sign_on_box(f, kUnit, {});
        auto b = sign_on_box(f * c, kUnit, {});
        CHECK(a.tag == b.tag);
        if (a.witness && a.tag == SignTag::HasZero) {
            REQUIRE(b.witness);
            CHECK(sign(f.eval(b.witness->first, b.witness->second)) == 0);
        }
    }
}

TEST_CASE("witness soundness on random polynomials") {
    Rng rng(17);
    for (int it = 0; it < 60; ++it) {
        BiPoly f;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) f = f + BiPoly::monomial(rng.rat(5, 3), i, j);
        if (f.is_zero()) continue;
        auto v = sign_on_box(f, kUnit, {});
        if (v.witness) {
            int sg = sign(f.eval(v.witness->first, v.witness->second));
            if (v.tag == SignTag::HasNegative) CHECK(sg < 0);
            if (v.tag == SignTag::HasZero) CHECK(sg == 0);
            CHECK(v.witness->first >= Rat(0));
            CHECK(v.witness->first <= Rat(1));
            CHECK(v.witness->second >= Rat(0));
            CHECK(v.witness->second <= Rat(1));
        }
        // cross-check AllPositive against dense sampling
        if (v.tag == SignTag::AllPositive) {
            for (int k = 0; k < 100; ++k) {
                Rat s(rng.range(0, 16), 16), t(rng.range(0, 16), 16);
                s.canonicalize();
                t.canonicalize();
                CHECK(sign(f.eval(s, t)) > 0);
            }
        }
    }
}
