#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadstab/rational.hpp"

namespace quadstab {

struct Vec2 {
    Rat x, y;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(const Rat& k) const { return {x * k, y * k}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// a x + b y + c
struct AffineFn {
    Rat a, b, c;

    Rat eval(const Vec2& v) const { return a * v.x + b * v.y + c; }
    Vec2 gradient() const { return {a, b}; }
    AffineFn operator-() const { return {-a, -b, -c}; }
    bool is_zero() const { return sign(a) == 0 && sign(b) == 0 && sign(c) == 0; }
    // through two distinct points, vanishing on both
    static AffineFn through(const Vec2& p, const Vec2& q);
};

// Strictly convex polygon, vertices in counterclockwise order.
class ConvexPolygon {
  public:
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    size_t size() const { return v_.size(); }
    const Vec2& vertex(size_t i) const { return v_[i % v_.size()]; }
    const std::vector<Vec2>& vertices() const { return v_; }
    Rat area() const;
    Vec2 centroid() const;

  private:
    std::vector<Vec2> v_;
};

// The two closed pieces P ∩ {h >= 0}, P ∩ {h <= 0}; errors when the line
// h = 0 misses the interior of P.
std::pair<ConvexPolygon, ConvexPolygon> split_by_line(const ConvexPolygon& P,
                                                      const AffineFn& h);

struct AffineMap {
    // x -> M x + t
    Rat m00, m01, m10, m11;
    Vec2 t;

    Vec2 apply(const Vec2& v) const {
        return {m00 * v.x + m01 * v.y + t.x, m10 * v.x + m11 * v.y + t.y};
    }
    Rat det() const { return m00 * m11 - m01 * m10; }
    AffineMap inverse() const;
    static AffineMap identity();
};

// Canonical quadrilateral with vertices (0,0), (1,0), (1+p,q), (0,k).
class Quadrilateral {
  public:
    // Canonical position from parameters; validates q,k > 0 and
    // p > max(-q/k, -1).
    static Quadrilateral from_pqk(const Rat& p, const Rat& q, const Rat& k);

    // Normalizes four vertices (any order) to canonical position. Tries the
    // four rotations and both orientations of the convex cyclic order and
    // keeps the lexicographically smallest (p,q,k); the unit-determinant
    // normalization pins the remaining scale.
    static Quadrilateral canonicalize(const std::array<Vec2, 4>& vertices);

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    const Rat& k() const { return k_; }

    // v1=(0,0), v2=(1,0), v3=(1+p,q), v4=(0,k)
    std::array<Vec2, 4> vertices() const;
    ConvexPolygon polygon() const;

    const std::array<Vec2, 4>& input_vertices() const { return input_; }
    const AffineMap& to_canonical() const { return map_; }
    // canonical edge index (0-based) carrying input edge j -> j+1; identity
    // for from_pqk. Only meaningful when the input order was a convex cycle.
    const std::array<int, 4>& edge_permutation() const { return edge_perm_; }

    // {E2,E4} parallel iff p == 0; {E1,E3} parallel iff q == k.
    bool e2_parallel_e4() const { return sign(p_) == 0; }
    bool e1_parallel_e3() const { return q_ == k_; }

  private:
    Quadrilateral() = default;
    Rat p_, q_, k_;
    std::array<Vec2, 4> input_;
    AffineMap map_ = AffineMap::identity();
    std::array<int, 4> edge_perm_ = {0, 1, 2, 3};
};

// Edge of the canonical quadrilateral: defining function, endpoints in
// boundary orientation, and the canonical measure as a density against the
// unit-speed parameter tau in [0,1] from a to b.
struct Edge {
    int index;  // 1..4
    Vec2 a, b;
    AffineFn l;
    Rat tau_density;           // d(sigma)|_E = tau_density * d(tau)
    std::string density_desc;  // e.g. "(1/q) dy"
};

std::vector<Edge> edge_data(const Quadrilateral& Q);

struct BoundaryWeights {
    std::array<Rat, 4> r;

    bool all_zero() const {
        return sign(r[0]) == 0 && sign(r[1]) == 0 && sign(r[2]) == 0 && sign(r[3]) == 0;
    }
    bool nonnegative() const {
        return sign(r[0]) >= 0 && sign(r[1]) >= 0 && sign(r[2]) >= 0 && sign(r[3]) >= 0;
    }
};

struct WeightedQuadrilateral {
    Quadrilateral Q;
    BoundaryWeights weights;

    WeightedQuadrilateral(Quadrilateral q, BoundaryWeights w);
};

// General weighted convex polygon: the working representation used by the
// functional layer (canonical quadrilaterals and split pieces alike).
// Edge i runs from vertex i to vertex i+1 and carries measure
// weight[i] * density[i] * d(tau).
struct WeightedPolygon {
    ConvexPolygon poly;
    std::vector<Rat> weights;
    std::vector<Rat> densities;

    WeightedPolygon(ConvexPolygon p, std::vector<Rat> w, std::vector<Rat> d);
    size_t edges() const { return poly.size(); }
};

WeightedPolygon to_weighted_polygon(const WeightedQuadrilateral& wq);

}  // namespace quadstab
