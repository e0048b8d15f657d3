#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadstab/bipoly.hpp"
#include "quadstab/rational.hpp"
#include "quadstab/sym2.hpp"
#include "quadstab/unipoly.hpp"
#include "support/testutil.hpp"

using namespace quadstab;
using quadstab::testing::Rng;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-6/8") == Rat(-3, 4));
    CHECK(rat_from_string("5") == Rat(5));
    CHECK(rat_from_string(" -1.25 ") == Rat(-5, 4));
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("simplest rational between") {
    Rat r = simplest_rational_between(Rat(1, 3), Rat(1, 2));
    CHECK(r >= Rat(1, 3));
    CHECK(r <= Rat(1, 2));
    CHECK(r == Rat(1, 2));
    CHECK(simplest_rational_between(Rat(7, 10), Rat(8, 10)) == Rat(3, 4));
}

TEST_CASE("interval multiplication covers products") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        RatInterval a(rng.rat(10, 5), rng.rat(10, 5));
        if (a.lo > a.hi) std::swap(a.lo, a.hi);
        RatInterval b(rng.rat(10, 5), rng.rat(10, 5));
        if (b.lo > b.hi) std::swap(b.lo, b.hi);
        RatInterval p = a * b;
        for (const Rat& x : {a.lo, a.hi, a.mid()})
            for (const Rat& y : {b.lo, b.hi, b.mid()}) {
                CHECK(x * y >= p.lo);
                CHECK(x * y <= p.hi);
            }
    }
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly p({Rat(-2), Rat(0), Rat(1)});  // z^2 - 2
    UniPoly q({Rat(1), Rat(1)});           // z + 1
    CHECK((p * q).degree() == 3);
    auto [quo, rem] = p.divmod(q);
    CHECK(quo * q + rem == p);
    CHECK(p.eval(Rat(3)) == Rat(7));
    CHECK(p.derivative() == UniPoly({Rat(0), Rat(2)}));
    CHECK(p.integrate(Rat(0), Rat(1)) == Rat(-5, 3));
}

TEST_CASE("unipoly gcd and squarefree decomposition") {
    UniPoly a = UniPoly::linear_root(Rat(1)) * UniPoly::linear_root(Rat(1)) *
                UniPoly::linear_root(Rat(2));
    UniPoly b = UniPoly::linear_root(Rat(1)) * UniPoly::linear_root(Rat(3));
    UniPoly g = UniPoly::gcd(a, b);
    CHECK(g == UniPoly::linear_root(Rat(1)));

    auto parts = a.squarefree_decomposition();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == UniPoly::linear_root(Rat(2)));
    CHECK(parts[1] == UniPoly::linear_root(Rat(1)));
}

TEST_CASE("compose affine") {
    UniPoly p({Rat(0), Rat(0), Rat(1)});  // z^2
    UniPoly q = p.compose_affine(Rat(1), Rat(2));
    CHECK(q == UniPoly({Rat(1), Rat(4), Rat(4)}));
}

TEST_CASE("definiteness classification") {
    CHECK(definiteness({Rat(2), Rat(0), Rat(3)}) == Definiteness::PositiveDefinite);
    CHECK(definiteness({Rat(1), Rat(1), Rat(1)}) == Definiteness::PositiveSemidefinite);
    CHECK(definiteness({Rat(1), Rat(2), Rat(1)}) == Definiteness::Indefinite);
    CHECK(definiteness({Rat(-1), Rat(0), Rat(-2)}) == Definiteness::NegativeDefinite);
    CHECK(definiteness({Rat(-1), Rat(1), Rat(-1)}) == Definiteness::NegativeSemidefinite);
    CHECK(definiteness({Rat(0), Rat(1), Rat(0)}) == Definiteness::Indefinite);
    CHECK(definiteness({Rat(0), Rat(0), Rat(0)}) == Definiteness::PositiveSemidefinite);
}

TEST_CASE("definiteness sign class is congruence invariant") {
    Rng rng(5);
    auto sign_class = [](Definiteness d) {
        switch (d) {
            case Definiteness::PositiveDefinite:
            case Definiteness::NegativeDefinite: return 2;
            case Definiteness::PositiveSemidefinite:
            case Definiteness::NegativeSemidefinite: return 1;
            default: return 0;
        }
    };
    for (int it = 0; it < 100; ++it) {
        Sym2 m{rng.rat(5, 3), rng.rat(5, 3), rng.rat(5, 3)};
        // random invertible congruence P^T M P
        Rat a = rng.rat(4, 2), b = rng.rat(4, 2), c = rng.rat(4, 2), d = rng.rat(4, 2);
        if (sign(a * d - b * c) == 0) continue;
        Sym2 n{
            a * (m.h11 * a + m.h12 * c) + c * (m.h12 * a + m.h22 * c),
            a * (m.h11 * b + m.h12 * d) + c * (m.h12 * b + m.h22 * d),
            b * (m.h11 * b + m.h12 * d) + d * (m.h12 * b + m.h22 * d),
        };
        CHECK(sign_class(definiteness(m)) == sign_class(definiteness(n)));
    }
}

TEST_CASE("bipoly basics") {
    BiPoly f = BiPoly::monomial(Rat(1), 2, 0) + BiPoly::monomial(Rat(1), 0, 2);  // s^2+t^2
    CHECK(f.eval(Rat(1), Rat(2)) == Rat(5));
    CHECK(f.deg_s() == 2);
    CHECK(f.deg_t() == 2);
    CHECK(f.total_degree() == 2);
    CHECK(f.partial_s() == BiPoly::monomial(Rat(2), 1, 0));
    CHECK(f.swap_vars() == f);

    BiPoly g = BiPoly::monomial(Rat(1), 1, 1);  // s t
    CHECK(g.total_degree() == 2);
    CHECK((f * g).total_degree() == 4);
    UniPoly r = f.eval_s(Rat(3));
    CHECK(r == UniPoly({Rat(9), Rat(0), Rat(1)}));
}

TEST_CASE("bipoly compose affine matches pointwise") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        BiPoly f;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) f = f + BiPoly::monomial(rng.rat(4, 2), i, j);
        std::array<Rat, 3> sx{rng.rat(3, 2), rng.rat(3, 2), rng.rat(3, 2)};
        std::array<Rat, 3> tx{rng.rat(3, 2), rng.rat(3, 2), rng.rat(3, 2)};
        BiPoly g = f.compose_affine(sx, tx);
        Rat u = rng.rat(3, 2), v = rng.rat(3, 2);
        CHECK(g.eval(u, v) ==
              f.eval(sx[0] + sx[1] * u + sx[2] * v, tx[0] + tx[1] * u + tx[2] * v));
    }
}

TEST_CASE("bipoly gcd and exact division") {
    BiPoly st = BiPoly::monomial(Rat(1), 1, 1);
    BiPoly f = (st + BiPoly::constant(Rat(1))) * (BiPoly::var_s() - BiPoly::var_t());
    BiPoly g = (st + BiPoly::constant(Rat(1))) * (BiPoly::var_s() + BiPoly::var_t());
    BiPoly d = BiPoly::gcd(f, g);
    // gcd should be st + 1 up to a scalar
    CHECK(d.deg_s() == 1);
    CHECK(d.deg_t() == 1);
    BiPoly q = f.exact_div(d);
    CHECK(q * d == f);
    CHECK_THROWS_AS(f.exact_div(BiPoly::var_s() + BiPoly::constant(Rat(7))),
                    std::logic_error);
}

TEST_CASE("bivariate resultant detects common roots") {
    // f = s - t, g = s + t - 2 share the point (1,1): Res_t vanishes at s=1.
    BiPoly f = BiPoly::var_s() - BiPoly::var_t();
    BiPoly g = BiPoly::var_s() + BiPoly::var_t() - BiPoly::constant(Rat(2));
    UniPoly r = BiPoly::resultant_t(f, g);
    CHECK(r.degree() == 1);
    CHECK(sign(r.eval(Rat(1))) == 0);
    CHECK(sign(r.eval(Rat(2))) != 0);

    // coprime polynomials: nonzero constant-free resultant away from roots
    BiPoly h = BiPoly::var_t() * BiPoly::var_t() + BiPoly::constant(Rat(1));
    UniPoly r2 = BiPoly::resultant_t(f, h);
    CHECK(sign(r2.eval(Rat(0))) != 0);

    // common factor: identically zero resultant
    BiPoly c = f * h, d = f * g;
    CHECK(BiPoly::resultant_t(c, d).is_zero());
}

TEST_CASE("resultant agrees with evaluation specialization") {
    Rng rng(13);
    for (int it = 0; it < 25; ++it) {
        BiPoly f, g;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                f = f + BiPoly::monomial(rng.rat(3, 2), i, j);
                g = g + BiPoly::monomial(rng.rat(3, 2), i, j);
            }
        if (f.deg_t() < 1 || g.deg_t() < 1) continue;
        UniPoly R = BiPoly::resultant_t(f, g);
        // at a rational point where f and g share a t-root, R vanishes;
        // spot-check the converse direction numerically: pick s0, compute
        // gcd of the specializations, compare vanishing
        Rat s0 = rng.rat(3, 2);
        UniPoly fs = f.eval_s(s0), gs = g.eval_s(s0);
        if (fs.degree() == f.deg_t() && gs.degree() == g.deg_t()) {
            UniPoly h = UniPoly::gcd(fs, gs);
            bool share = h.degree() > 0;
            bool rz = R.is_zero() || sign(R.eval(s0)) == 0;
            if (share) CHECK(rz);
            if (!rz) CHECK(!share);
        }
    }
}
