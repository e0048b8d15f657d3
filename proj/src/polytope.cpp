#include "quadstab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadstab {

AffineFn AffineFn::through(const Vec2& p, const Vec2& q) {
    if (p == q) throw std::invalid_argument("AffineFn::through: coincident points");
    Rat a = q.y - p.y;
    Rat b = p.x - q.x;
    Rat c = -a * p.x - b * p.y;
    return {a, b, c};
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (size_t i = 0; i < v_.size(); ++i) {
        const Vec2& a = v_[i];
        const Vec2& b = v_[(i + 1) % v_.size()];
        const Vec2& c = v_[(i + 2) % v_.size()];
        if (sign(cross(b - a, c - b)) <= 0)
            throw std::invalid_argument(
                "polygon vertices not in strictly convex counterclockwise order");
    }
}

Rat ConvexPolygon::area() const {
    Rat s = 0;
    for (size_t i = 0; i < v_.size(); ++i) s += cross(v_[i], v_[(i + 1) % v_.size()]);
    return s / 2;
}

Vec2 ConvexPolygon::centroid() const {
    Rat n(static_cast<long>(v_.size()));
    Vec2 c{Rat(0), Rat(0)};
    for (const auto& v : v_) c = c + v;
    return {c.x / n, c.y / n};
}

std::pair<ConvexPolygon, ConvexPolygon> split_by_line(const ConvexPolygon& P,
                                                      const AffineFn& h) {
    size_t n = P.size();
    std::vector<int> sgn(n);
    bool has_pos = false, has_neg = false;
    for (size_t i = 0; i < n; ++i) {
        sgn[i] = sign(h.eval(P.vertex(i)));
        has_pos |= sgn[i] > 0;
        has_neg |= sgn[i] < 0;
    }
    if (!has_pos || !has_neg)
        throw std::invalid_argument("split_by_line: line does not meet the interior");

    std::vector<Vec2> pos, neg;
    auto push = [](std::vector<Vec2>& out, const Vec2& v) {
        if (out.empty() || !(out.back() == v)) out.push_back(v);
    };
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = P.vertex(i);
        const Vec2& b = P.vertex(i + 1);
        if (sgn[i] >= 0) push(pos, a);
        if (sgn[i] <= 0) push(neg, a);
        int sb = sgn[(i + 1) % n];
        if (sgn[i] * sb < 0) {
            Rat ha = h.eval(a);
            Rat t = ha / (ha - h.eval(b));
            Vec2 cut = a + (b - a) * t;
            push(pos, cut);
            push(neg, cut);
        }
    }
    if (!pos.empty() && pos.front() == pos.back()) pos.pop_back();
    if (!neg.empty() && neg.front() == neg.back()) neg.pop_back();
    return {ConvexPolygon(std::move(pos)), ConvexPolygon(std::move(neg))};
}

AffineMap AffineMap::identity() { return {Rat(1), Rat(0), Rat(0), Rat(1), {Rat(0), Rat(0)}}; }

AffineMap AffineMap::inverse() const {
    Rat d = det();
    if (sign(d) == 0) throw std::logic_error("AffineMap: singular");
    AffineMap inv{m11 / d, -m01 / d, -m10 / d, m00 / d, {Rat(0), Rat(0)}};
    Vec2 it = inv.apply(t);
    inv.t = {-it.x, -it.y};
    return inv;
}

Quadrilateral Quadrilateral::from_pqk(const Rat& p, const Rat& q, const Rat& k) {
    if (sign(q) <= 0) throw std::invalid_argument("quadrilateral requires q > 0");
    if (sign(k) <= 0) throw std::invalid_argument("quadrilateral requires k > 0");
    Rat bound = std::max(Rat(-q / k), Rat(-1));
    if (p <= bound)
        throw std::invalid_argument("quadrilateral requires p > max(-q/k, -1)");
    Quadrilateral Q;
    Q.p_ = p;
    Q.q_ = q;
    Q.k_ = k;
    Q.input_ = Q.vertices();
    return Q;
}

std::array<Vec2, 4> Quadrilateral::vertices() const {
    return {Vec2{Rat(0), Rat(0)}, Vec2{Rat(1), Rat(0)}, Vec2{Rat(1) + p_, q_},
            Vec2{Rat(0), k_}};
}

ConvexPolygon Quadrilateral::polygon() const {
    auto v = vertices();
    return ConvexPolygon({v[0], v[1], v[2], v[3]});
}

namespace {

// CCW ordering of 4 points around their centroid, exact angular comparator.
std::array<int, 4> ccw_order(const std::array<Vec2, 4>& pts) {
    Rat cx = (pts[0].x + pts[1].x + pts[2].x + pts[3].x) / 4;
    Rat cy = (pts[0].y + pts[1].y + pts[2].y + pts[3].y) / 4;
    auto half = [&](int i) {
        Vec2 d = pts[i] - Vec2{cx, cy};
        // upper half-plane first (y > 0, or y == 0 and x > 0)
        if (sign(d.y) > 0 || (sign(d.y) == 0 && sign(d.x) > 0)) return 0;
        return 1;
    };
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        int hi = half(i), hj = half(j);
        if (hi != hj) return hi < hj;
        Vec2 di = pts[i] - Vec2{cx, cy}, dj = pts[j] - Vec2{cx, cy};
        return sign(cross(di, dj)) > 0;
    });
    return idx;
}

}  // namespace

Quadrilateral Quadrilateral::canonicalize(const std::array<Vec2, 4>& vertices) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vertices[i] == vertices[j])
                throw std::invalid_argument("canonicalize: repeated vertex");

    auto order = ccw_order(vertices);
    std::array<Vec2, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = vertices[order[i]];
    for (int i = 0; i < 4; ++i) {
        Vec2 a = w[i], b = w[(i + 1) % 4], c = w[(i + 2) % 4];
        if (sign(cross(b - a, c - b)) <= 0)
            throw std::invalid_argument(
                "canonicalize: vertices are not strictly convex (collinear or reflex "
                "corner)");
    }

    std::optional<Quadrilateral> best;
    for (int rot = 0; rot < 4; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
            // candidate labeling v1..v4 around the convex cycle
            std::array<int, 4> lab;
            for (int i = 0; i < 4; ++i)
                lab[i] = refl ? (rot + 4 - i) % 4 : (rot + i) % 4;
            Vec2 v1 = w[lab[0]], v2 = w[lab[1]], v3 = w[lab[2]], v4 = w[lab[3]];
            Vec2 e21 = v2 - v1, e41 = v4 - v1;
            Rat D = cross(e21, e41);
            if (sign(D) == 0) continue;
            Rat k = rat_abs(D);
            // M = [[1,0],[0,k]] * [e21 e41]^{-1}, so |det M| = 1
            Rat inv00 = e41.y / D, inv01 = -e41.x / D;
            Rat inv10 = -e21.y / D, inv11 = e21.x / D;
            AffineMap M{inv00, inv01, k * inv10, k * inv11, {Rat(0), Rat(0)}};
            Vec2 mt = M.apply(v1);
            M.t = {-mt.x, -mt.y};
            Vec2 img3 = M.apply(v3);
            Rat p = img3.x - 1, q = img3.y;
            if (sign(q) <= 0) continue;
            Rat bound = std::max(Rat(-q / k), Rat(-1));
            if (p <= bound) continue;
            Quadrilateral cand = Quadrilateral::from_pqk(p, q, k);
            cand.input_ = vertices;
            cand.map_ = M;
            std::array<int, 4> perm{};
            for (int i = 0; i < 4; ++i) {
                // sorted-cycle edge i runs w[i] -> w[i+1]; locate it among
                // the canonical edges v_{j} -> v_{j+1}
                int a = -1, b = -1;
                for (int j = 0; j < 4; ++j) {
                    if (lab[j] == i) a = j;
                    if (lab[j] == (i + 1) % 4) b = j;
                }
                int lo = std::min(a, b), hi = std::max(a, b);
                perm[i] = (lo == 0 && hi == 3) ? 3 : lo;
            }
            cand.edge_perm_ = perm;
            bool better = !best;
            if (!better) {
                auto key = [](const Quadrilateral& Q) {
                    return std::array<Rat, 3>{Q.p_, Q.q_, Q.k_};
                };
                better = key(cand) < key(*best);
            }
            if (better) best = std::move(cand);
        }
    }
    if (!best) throw std::invalid_argument("canonicalize: no valid labeling found");
    return *best;
}

std::vector<Edge> edge_data(const Quadrilateral& Q) {
    const Rat& p = Q.p();
    const Rat& q = Q.q();
    const Rat& k = Q.k();
    auto v = Q.vertices();
    std::vector<Edge> out;
    // l1 = y, dsigma = dx
    out.push_back({1, v[0], v[1], AffineFn{Rat(0), Rat(1), Rat(0)}, Rat(1), "dx"});
    // l2 = -q x + p y + q, dsigma = (1/q) dy
    out.push_back({2, v[1], v[2], AffineFn{-q, p, q}, Rat(1), "(1/q) dy"});
    // l3 = (q-k) x - (1+p) y + k(1+p), dsigma = (1+p) dx
    out.push_back({3, v[2], v[3], AffineFn{q - k, -(Rat(1) + p), k * (Rat(1) + p)},
                   (Rat(1) + p) * (Rat(1) + p), "(1+p) dx"});
    // l4 = x, dsigma = dy
    out.push_back({4, v[3], v[0], AffineFn{Rat(1), Rat(0), Rat(0)}, k, "dy"});
    return out;
}

WeightedQuadrilateral::WeightedQuadrilateral(Quadrilateral q, BoundaryWeights w)
    : Q(std::move(q)), weights(std::move(w)) {
    if (!weights.nonnegative())
        throw std::invalid_argument("boundary weights must be nonnegative");
    if (weights.all_zero())
        throw std::invalid_argument("weights must not all vanish");
}

WeightedPolygon::WeightedPolygon(ConvexPolygon p, std::vector<Rat> w, std::vector<Rat> d)
    : poly(std::move(p)), weights(std::move(w)), densities(std::move(d)) {
    if (weights.size() != poly.size() || densities.size() != poly.size())
        throw std::invalid_argument("WeightedPolygon: size mismatch");
}

WeightedPolygon to_weighted_polygon(const WeightedQuadrilateral& wq) {
    auto edges = edge_data(wq.Q);
    std::vector<Rat> w, d;
    for (int i = 0; i < 4; ++i) {
        w.push_back(wq.weights.r[i]);
        d.push_back(edges[i].tau_density);
    }
    return WeightedPolygon(wq.Q.polygon(), std::move(w), std::move(d));
}

}  // namespace quadstab
