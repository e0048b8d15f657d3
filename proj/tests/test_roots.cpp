#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadstab/roots.hpp"
#include "support/testutil.hpp"

using namespace quadstab;
using quadstab::testing::Rng;

namespace {
UniPoly from_roots(const std::vector<Rat>& rs) {
    UniPoly p = UniPoly::constant(Rat(1));
    for (const auto& r : rs) p = p * UniPoly::linear_root(r);
    return p;
}
}  // namespace

TEST_CASE("positivity on open intervals") {
    // z(1-z) on (0,1): roots only at the endpoints, positive inside
    UniPoly p = UniPoly({Rat(0), Rat(1)}) * UniPoly({Rat(1), Rat(-1)});
    CHECK(positive_on_open_interval(p, Rat(0), Rat(1)));

    // (z - 1/2)^2 - 1 dips to -3/4 at 1/2
    UniPoly q = UniPoly::linear_root(Rat(1, 2)) * UniPoly::linear_root(Rat(1, 2)) -
                UniPoly::constant(Rat(1));
    CHECK(!positive_on_open_interval(q, Rat(0), Rat(1)));

    // -(z+1)(z+2) on (-2,-1): positive (value 1/4 at -3/2)
    UniPoly r = -(UniPoly::linear_root(Rat(-1)) * UniPoly::linear_root(Rat(-2)));
    CHECK(r.eval(Rat(-3, 2)) == Rat(1, 4));
    CHECK(positive_on_open_interval(r, Rat(-2), Rat(-1)));

    bool idz = false;
    CHECK(!positive_on_open_interval(UniPoly(), Rat(0), Rat(1), &idz));
    CHECK(idz);

    // interior double root: nonnegative but not positive
    UniPoly d = UniPoly::linear_root(Rat(1, 3)) * UniPoly::linear_root(Rat(1, 3));
    CHECK(!positive_on_open_interval(d, Rat(0), Rat(1)));
}

TEST_CASE("root isolation with multiplicities") {
    // z^2 (1-z)^2 on [0,1]
    UniPoly p = from_roots({Rat(0), Rat(0), Rat(1), Rat(1)});
    auto roots = isolate_roots(p, Rat(0), Rat(1));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root.rational);
    CHECK(roots[0].root.value() == Rat(0));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].root.value() == Rat(1));
    CHECK(roots[1].multiplicity == 2);

    // (z-1/2)(z-1/3): two simple roots
    auto roots2 = isolate_roots(from_roots({Rat(1, 2), Rat(1, 3)}), Rat(0), Rat(1));
    REQUIRE(roots2.size() == 2);
    CHECK(roots2[0].root.value() == Rat(1, 3));
    CHECK(roots2[1].root.value() == Rat(1, 2));
    CHECK(roots2[0].multiplicity == 1);

    // -(z+1)(z+2) on [-3,0]
    auto roots3 = isolate_roots(-from_roots({Rat(-1), Rat(-2)}), Rat(-3), Rat(0));
    REQUIRE(roots3.size() == 2);
    CHECK(roots3[0].root.value() == Rat(-2));
    CHECK(roots3[1].root.value() == Rat(-1));
}

TEST_CASE("irrational roots isolate and compare") {
    UniPoly p({Rat(-2), Rat(0), Rat(1)});  // z^2 - 2
    auto roots = isolate_roots(p, Rat(-3), Rat(3));
    REQUIRE(roots.size() == 2);
    CHECK(!roots[0].root.rational);
    CHECK(roots[0].root.compare(Rat(0)) < 0);
    CHECK(roots[1].root.compare(Rat(1)) > 0);
    CHECK(roots[1].root.compare(Rat(3, 2)) < 0);
    // sign of z^2 - 2 at sqrt(2) is 0; of z at sqrt(2) is +
    CHECK(roots[1].root.sign_of(p) == 0);
    CHECK(roots[1].root.sign_of(UniPoly::x()) == 1);
    // sqrt(2) equals itself from a different isolating interval
    AlgNum again = AlgNum::from_interval(p, Rat(5, 4), Rat(2));
    CHECK(roots[1].root.compare(again) == 0);
    // and differs from sqrt(3)
    UniPoly q({Rat(-3), Rat(0), Rat(1)});
    AlgNum sqrt3 = AlgNum::from_interval(q, Rat(1), Rat(2));
    CHECK(roots[1].root.compare(sqrt3) < 0);
}

TEST_CASE("sum of multiplicities bounded by degree; isolating intervals isolate") {
    Rng rng(42);
    for (int it = 0; it < 60; ++it) {
        std::vector<Rat> rs;
        int n = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < n; ++i) rs.push_back(rng.rat(3, 2));
        int extra = static_cast<int>(rng.range(0, 1));
        for (int i = 0; i < extra && !rs.empty(); ++i) rs.push_back(rs[0]);  // force a multiple root
        UniPoly p = from_roots(rs);
        auto roots = isolate_roots(p, Rat(-5), Rat(5));
        int total = 0;
        for (auto& r : roots) total += r.multiplicity;
        CHECK(total <= p.degree());
        // each isolating interval contains exactly one root of the squarefree part
        UniPoly sf = p.squarefree();
        auto chain = sturm_chain(sf);
        for (auto& r : roots) {
            if (r.root.rational) {
                CHECK(sign(sf.eval(r.root.value())) == 0);
            } else {
                CHECK(sturm_count(chain, r.root.lo, r.root.hi) == 1);
            }
        }
    }
}

TEST_CASE("positivity agrees with dense sampling oracle") {
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        std::vector<Rat> cs;
        int deg = static_cast<int>(rng.range(0, 5));
        for (int i = 0; i <= deg; ++i) cs.push_back(rng.rat(6, 4));
        UniPoly p(cs);
        Rat a = rng.rat(3, 2), b = a + rng.pos_rat(3, 2);
        bool pos = false;
        if (!p.is_zero())
            pos = positive_on_open_interval(p, a, b);
        // oracle: 10^3 sample points; can only refute positivity
        bool refuted = false;
        for (int k = 1; k < 1000 && !refuted; ++k) {
            Rat x = a + (b - a) * Rat(k, 1000);
            if (sign(p.eval(x)) <= 0) refuted = true;
        }
        if (refuted) CHECK(!pos);
    }
}
