#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quadstab/bipoly.hpp"
#include "quadstab/polytope.hpp"
#include "quadstab/signbox.hpp"

namespace quadstab {

// Exact integral of f(x,y) over a convex polygon (fan triangulation and
// closed-form monomial integrals over the standard simplex).
Rat integrate_bipoly(const ConvexPolygon& P, const BiPoly& f);

inline BiPoly to_bipoly(const AffineFn& f) {
    return BiPoly::monomial(f.a, 1, 0) + BiPoly::monomial(f.b, 0, 1) +
           BiPoly::constant(f.c);
}

// Weighted boundary integral of f, optionally restricted to {restr >= 0}.
Rat integrate_boundary(const WeightedPolygon& wp, const BiPoly& f,
                       const AffineFn* restr = nullptr);

inline Rat integrate_affine_boundary(const WeightedPolygon& wp, const AffineFn& f,
                                     const AffineFn* restr = nullptr) {
    return integrate_boundary(wp, to_bipoly(f), restr);
}

// The unique affine zeta with L_zeta(f) = 0 for f in {1, x, y}.
AffineFn associated_affine(const WeightedPolygon& wp);

// max{0, h} for a nonzero affine h.
struct SimplePL {
    AffineFn h;

    explicit SimplePL(AffineFn f) : h(std::move(f)) {
        if (h.is_zero()) throw std::invalid_argument("SimplePL: zero affine function");
    }
};

// Donaldson-Futaki functional on a simple piecewise-linear function:
// L(f) = int_{dP & {h>=0}} h dsigma - int_{P & {h>=0}} zeta h dlambda.
Rat L_simple(const WeightedPolygon& wp, const AffineFn& zeta, const SimplePL& f);
Rat L_simple(const WeightedPolygon& wp, const SimplePL& f);

// Two-parameter crease family over an ordered pair of edges of a
// quadrilateral. Edges are 0-based: edge e joins vertex e and vertex e+1.
struct CreaseFamily {
    int edge_i, edge_j;
    bool opposite;
    Vec2 p0, p1;  // p(s) = (1-s) p0 + s p1 on edge_i
    Vec2 q0, q1;  // q(t) = (1-t) q0 + t q1 on edge_j
    // Corners of [0,1]^2 where the crease degenerates to an affine function
    // (or to the zero function, for the shared vertex of an adjacent pair).
    // opposite: (0,0) -> edge corner_edge00, (1,1) -> edge corner_edge11.
    int corner_edge00 = -1, corner_edge11 = -1;

    AffineFn crease(const Rat& s, const Rat& t) const;
    std::vector<BoxPoint> excluded_corners() const;
    // corner of [0,1]^2 whose crease is the given edge (opposite pairs only)
    BoxPoint corner_for_edge(int edge) const;
};

// Deterministic family for an edge pair of a 4-gon: opposite pairs get the
// convention that (0,0) and (1,1) are the edge creases; adjacent pairs put
// the shared vertex at (0,0).
CreaseFamily crease_family(const ConvexPolygon& quad, int ei, int ej);

// All six families: opposite pairs (0,2), (1,3) then adjacent pairs
// (0,1), (1,2), (2,3), (3,0).
std::vector<CreaseFamily> all_crease_families(const ConvexPolygon& quad);

struct FamilyPoly {
    BiPoly phi;
    CreaseFamily family;
};

// Exact bidegree-(3,3) polynomial with phi(s,t) = L(SPL(l_{s,t})): built by
// interpolation on the 4x4 grid {0,1/3,2/3,1}^2 and verified at 3 off-grid
// points. Throws std::logic_error on a verification mismatch.
FamilyPoly family_polynomial(const WeightedPolygon& wp, const CreaseFamily& fam);

// phi for the four unit weight vectors; phi of any weight is the linear
// combination (L is linear in the boundary measure).
std::array<BiPoly, 4> family_weight_basis(const WeightedPolygon& wp,
                                          const CreaseFamily& fam);

}  // namespace quadstab
