#include "quadstab/signbox.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "quadstab/roots.hpp"
#include "quadstab/sym2.hpp"

namespace quadstab {

Definiteness definiteness(const Sym2& m) {
    int sd = sign(m.det());
    if (sd > 0) return sign(m.h11) > 0 ? Definiteness::PositiveDefinite
                                       : Definiteness::NegativeDefinite;
    if (sd < 0) return Definiteness::Indefinite;
    int s11 = sign(m.h11), s22 = sign(m.h22);
    if (s11 > 0 || s22 > 0) return Definiteness::PositiveSemidefinite;
    if (s11 < 0 || s22 < 0) return Definiteness::NegativeSemidefinite;
    return Definiteness::PositiveSemidefinite;  // zero matrix
}

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "PositiveDefinite";
        case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
        case Definiteness::Indefinite: return "Indefinite";
        case Definiteness::NegativeSemidefinite: return "NegativeSemidefinite";
        case Definiteness::NegativeDefinite: return "NegativeDefinite";
    }
    return "?";
}

namespace {

SignVerdict verdict_negative(const Rat& s, const Rat& t) {
    SignVerdict v;
    v.tag = SignTag::HasNegative;
    v.witness = BoxPoint{s, t};
    return v;
}

SignVerdict verdict_zero(const Rat& s, const Rat& t) {
    SignVerdict v;
    v.tag = SignTag::HasZero;
    v.witness = BoxPoint{s, t};
    return v;
}

SignVerdict verdict_zero_irrational(const std::string& note) {
    SignVerdict v;
    v.tag = SignTag::HasZero;
    v.note = note;
    return v;
}

// f is known to be negative at (alpha, tau); produce a rational point of the
// open box where f < 0 by refining the isolating data.
SignVerdict hunt_negative(const BiPoly& f, const Box& B, AlgNum alpha, AlgNum tau) {
    for (int k = 0; k < 4096; ++k) {
        Rat s = alpha.approx(), t = tau.approx();
        if (s > B.s0 && s < B.s1 && t > B.t0 && t < B.t1 && sign(f.eval(s, t)) < 0)
            return verdict_negative(s, t);
        alpha.refine();
        tau.refine();
    }
    throw std::runtime_error("sign_on_box: failed to rationalize a negative witness");
}

// Exact sign handling of a fiber root: f restricted to a rational s-line.
std::optional<SignVerdict> fiber_root_sign(const BiPoly& f, const Box& B, const Rat& s_star,
                                           AlgNum tau) {
    UniPoly fline = f.eval_s(s_star);
    int sg = tau.sign_of(fline);
    if (sg > 0) return std::nullopt;
    if (sg < 0) return hunt_negative(f, B, AlgNum::from_rational(s_star), tau);
    if (tau.rational) return verdict_zero(s_star, tau.value());
    return verdict_zero_irrational("zero at (" + rat_to_string(s_star) + ", " +
                                   tau.to_string() + ")");
}

std::optional<SignVerdict> fiber_root_sign_t(const BiPoly& f, const Box& B, AlgNum alpha,
                                             const Rat& t_star) {
    UniPoly fline = f.eval_t(t_star);
    int sg = alpha.sign_of(fline);
    if (sg > 0) return std::nullopt;
    if (sg < 0) return hunt_negative(f, B, alpha, AlgNum::from_rational(t_star));
    if (alpha.rational) return verdict_zero(alpha.value(), t_star);
    return verdict_zero_irrational("zero at (" + alpha.to_string() + ", " +
                                   rat_to_string(t_star) + ")");
}

std::vector<AlgNum> roots_in_open(const UniPoly& p, const Rat& a, const Rat& b) {
    std::vector<AlgNum> out;
    if (p.is_zero() || p.degree() <= 0) return out;
    for (auto& r : isolate_roots(p.squarefree(), a, b)) {
        if (r.root.compare(a) > 0 && r.root.compare(b) < 0) out.push_back(r.root);
    }
    return out;
}

// Rational sample points between consecutive algebraic breakpoints in (a,b).
std::vector<Rat> cell_samples(std::vector<AlgNum> pts, const Rat& a, const Rat& b) {
    std::vector<Rat> cuts{a, b};
    for (auto& p : pts) {
        while (!p.rational && (p.lo <= a || p.hi >= b)) p.refine();
        if (p.rational) {
            cuts.push_back(p.lo);
        } else {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rat> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i] < cuts[i + 1]) out.push_back((cuts[i] + cuts[i + 1]) / 2);
    return out;
}

// Values of f along the vertical line s = alpha where grad f vanishes
// identically (f is constant on the segment).
std::optional<SignVerdict> vertical_line_value(const BiPoly& f, const Box& B, AlgNum alpha) {
    Rat tm = (B.t0 + B.t1) / 2;
    UniPoly c = f.eval_t(tm);
    int sg = alpha.sign_of(c);
    if (sg > 0) return std::nullopt;
    if (sg < 0) return hunt_negative(f, B, alpha, AlgNum::from_rational(tm));
    if (alpha.rational) return verdict_zero(alpha.value(), tm);
    return verdict_zero_irrational("zero along line s = " + alpha.to_string());
}

// Critical-point analysis over the open box. Returns a verdict when a
// nonpositive interior critical value exists, nullopt when all interior
// critical values are positive (or there are none).
std::optional<SignVerdict> critical_analysis(const BiPoly& f, const Box& B,
                                             const SignBoxOptions& opts) {
    BiPoly fs = f.partial_s(), ft = f.partial_t();
    if (fs.is_zero() || ft.is_zero()) return std::nullopt;  // univariate: edges cover

    BiPoly g = BiPoly::gcd(fs, ft);
    bool g_nonconst = g.deg_s() > 0 || g.deg_t() > 0;
    if (g_nonconst) {
        // Factors independent of t: whole vertical lines of critical points.
        UniPoly us = g.content_t();
        for (auto& alpha : roots_in_open(us, B.s0, B.s1))
            if (auto v = vertical_line_value(f, B, alpha)) return v;
        // Genuine curve part: f is locally constant along each component, so
        // one sample per component decides its value.
        BiPoly gp = g.primitive_part_t();
        if (gp.deg_t() > 0) {
            std::vector<AlgNum> breaks;
            auto add_roots = [&](const UniPoly& p) {
                for (auto& r : roots_in_open(p, B.s0, B.s1)) breaks.push_back(r);
            };
            BiPoly gpt = gp.partial_t();
            if (!gpt.is_zero()) add_roots(BiPoly::resultant_t(gp, gpt));
            add_roots(gp.t_coeffs().back());
            add_roots(gp.eval_t(B.t0));
            add_roots(gp.eval_t(B.t1));
            for (const Rat& sbar : cell_samples(std::move(breaks), B.s0, B.s1)) {
                UniPoly fiber = gp.eval_s(sbar);
                if (fiber.is_zero()) {
                    // the whole line s = sbar lies on the curve
                    if (auto v = vertical_line_value(f, B, AlgNum::from_rational(sbar)))
                        return v;
                    continue;
                }
                for (auto& tau : roots_in_open(fiber, B.t0, B.t1))
                    if (auto v = fiber_root_sign(f, B, sbar, tau)) return v;
            }
        }
        fs = fs.exact_div(g);
        ft = ft.exact_div(g);
    }

    // Isolated common zeros of the reduced system.
    if (fs.deg_t() == 0 && ft.deg_t() == 0) return std::nullopt;  // coprime in Q[s]

    UniPoly R = BiPoly::resultant_t(fs, ft);
    UniPoly P = R;
    if (fs.deg_t() > 0) P = P * fs.t_coeffs().back();
    if (ft.deg_t() > 0) P = P * ft.t_coeffs().back();
    if (P.is_zero())
        throw std::logic_error("sign_on_box: vanishing resultant after gcd reduction");

    std::vector<AlgNum> s_irrational;
    for (auto& alpha : roots_in_open(P, B.s0, B.s1)) {
        if (!alpha.rational) {
            s_irrational.push_back(alpha);
            continue;
        }
        const Rat s_star = alpha.value();
        UniPoly a = fs.eval_s(s_star), b = ft.eval_s(s_star);
        UniPoly h;
        if (a.is_zero() && b.is_zero()) {
            // full critical line (possible when leading coefficients vanish)
            if (auto v = vertical_line_value(f, B, AlgNum::from_rational(s_star))) return v;
            continue;
        } else if (a.is_zero())
            h = b;
        else if (b.is_zero())
            h = a;
        else
            h = UniPoly::gcd(a, b);
        if (h.degree() <= 0) continue;
        for (auto& tau : roots_in_open(h, B.t0, B.t1))
            if (auto v = fiber_root_sign(f, B, s_star, tau)) return v;
    }

    // Symmetric sweep catches (irrational s, rational t) pairs.
    BiPoly fss = fs.swap_vars(), fts = ft.swap_vars();
    UniPoly Q = BiPoly::resultant_t(fss, fts);
    if (fss.deg_t() > 0) Q = Q * fss.t_coeffs().back();
    if (fts.deg_t() > 0) Q = Q * fts.t_coeffs().back();
    std::vector<AlgNum> t_irrational;
    for (auto& tau : roots_in_open(Q, B.t0, B.t1)) {
        if (!tau.rational) {
            t_irrational.push_back(tau);
            continue;
        }
        const Rat t_star = tau.value();
        UniPoly a = fs.eval_t(t_star), b = ft.eval_t(t_star);
        UniPoly h;
        if (a.is_zero() && b.is_zero())
            continue;  // horizontal critical line: values covered by s-sweep cells
        else if (a.is_zero())
            h = b;
        else if (b.is_zero())
            h = a;
        else
            h = UniPoly::gcd(a, b);
        if (h.degree() <= 0) continue;
        for (auto& alpha : roots_in_open(h, B.s0, B.s1))
            if (auto v = fiber_root_sign_t(f, B, alpha, t_star)) return v;
    }

    if (s_irrational.empty() || t_irrational.empty()) return std::nullopt;

    // Doubly irrational candidates: pair the projections and decide by
    // interval refinement with an algebraic zero certificate.
    UniPoly W1 = BiPoly::resultant_t(f, ft);
    UniPoly W2 = BiPoly::resultant_t(f, fs);
    for (auto alpha : s_irrational) {
        for (auto tau : t_irrational) {
            bool resolved = false;
            for (int depth = 0; depth < opts.refine_depth && !resolved; ++depth) {
                RatInterval I(alpha.lo, alpha.hi), J(tau.lo, tau.hi);
                if (!fs.eval_interval(I, J).contains_zero() ||
                    !ft.eval_interval(I, J).contains_zero()) {
                    resolved = true;  // not a common zero
                    break;
                }
                RatInterval fI = f.eval_interval(I, J);
                if (fI.positive()) {
                    resolved = true;
                    break;
                }
                if (fI.negative()) return hunt_negative(f, B, alpha, tau);
                if (depth > 24 && depth % 16 == 0) {
                    bool w1z = !W1.is_zero() && alpha.sign_of(W1) == 0;
                    bool w2z = !W2.is_zero() && alpha.sign_of(W2) == 0;
                    if (w1z && w2z)
                        return verdict_zero_irrational(
                            "zero at algebraic critical point near (" + alpha.to_string() +
                            ", " + tau.to_string() + ")");
                }
                alpha.refine();
                tau.refine();
            }
            if (!resolved && !(alpha.rational || tau.rational))
                throw std::runtime_error(
                    "sign_on_box: unresolved algebraic critical point; refine_depth "
                    "exhausted");
        }
    }
    return std::nullopt;
}

struct CornerInfo {
    Rat s, t;       // the corner
    int ds, dt;     // inward direction signs (+1 or -1)
    bool zero = false;
    bool certified = false;
};

// Strictly inward gradient at a vanishing corner yields a certified
// positive neighbourhood of radius delta (corner itself excluded).
std::optional<Rat> corner_certificate(const BiPoly& f, const CornerInfo& c, const Rat& smax,
                                      const Rat& tmax) {
    BiPoly local = f.compose_affine({c.s, Rat(c.ds), Rat(0)}, {c.t, Rat(0), Rat(c.dt)});
    Rat a = local.coeff(1, 0), b = local.coeff(0, 1);
    if (sign(a) <= 0 || sign(b) <= 0) return std::nullopt;
    Rat m0 = 0;
    for (int j = 0; j <= local.deg_t(); ++j)
        for (int i = 0; i <= local.deg_s(); ++i)
            if (i + j >= 2) m0 += rat_abs(local.coeff(i, j));
    Rat lead = a < b ? a : b;
    Rat delta = sign(m0) == 0 ? Rat(1, 2) : lead / (4 * m0);
    if (delta > Rat(1, 2)) delta = Rat(1, 2);
    if (delta > smax) delta = smax;
    if (delta > tmax) delta = tmax;
    return delta;
}

}  // namespace

SignVerdict sign_on_box(const BiPoly& f, const Box& box,
                        const std::vector<BoxPoint>& excluded_corners,
                        const SignBoxOptions& opts) {
    if (!box.nondegenerate()) throw std::invalid_argument("sign_on_box: degenerate box");
    if (f.is_zero()) {
        SignVerdict v;
        v.tag = SignTag::IdenticallyZero;
        v.note = "identically zero";
        return v;
    }

    auto is_excluded = [&](const Rat& s, const Rat& t) {
        for (const auto& c : excluded_corners)
            if (c.first == s && c.second == t) return true;
        return false;
    };

    // Corners.
    std::vector<CornerInfo> corners = {
        {box.s0, box.t0, +1, +1},
        {box.s1, box.t0, -1, +1},
        {box.s0, box.t1, +1, -1},
        {box.s1, box.t1, -1, -1},
    };
    for (auto& c : corners) {
        int sg = sign(f.eval(c.s, c.t));
        if (sg < 0) return verdict_negative(c.s, c.t);
        if (sg == 0) {
            if (!is_excluded(c.s, c.t)) return verdict_zero(c.s, c.t);
            c.zero = true;
        }
    }

    // Edges: exact univariate sign profiles.
    struct EdgeCase {
        UniPoly g;
        Rat a, b;
        bool horizontal;  // parameter is s when true
        Rat fixed;
    };
    std::vector<EdgeCase> edges = {
        {f.eval_t(box.t0), box.s0, box.s1, true, box.t0},
        {f.eval_t(box.t1), box.s0, box.s1, true, box.t1},
        {f.eval_s(box.s0), box.t0, box.t1, false, box.s0},
        {f.eval_s(box.s1), box.t0, box.t1, false, box.s1},
    };
    for (auto& e : edges) {
        auto pt = [&](const Rat& u) {
            return e.horizontal ? BoxPoint{u, e.fixed} : BoxPoint{e.fixed, u};
        };
        if (e.g.is_zero()) {
            auto [ws, wt] = pt((e.a + e.b) / 2);
            return verdict_zero(ws, wt);
        }
        std::optional<Rat> where;
        std::optional<AlgNum> zero_at;
        int prof = sign_profile_on_interval(e.g, e.a, e.b, &where, &zero_at);
        if (prof < 0) {
            auto [ws, wt] = pt(*where);
            return verdict_negative(ws, wt);
        }
        if (prof == 0) {
            if (zero_at && zero_at->rational) {
                auto [ws, wt] = pt(zero_at->value());
                return verdict_zero(ws, wt);
            }
            return verdict_zero_irrational("zero on box edge");
        }
    }

    // Interior. Excise certified neighbourhoods of vanishing (excluded)
    // corners, branch-and-bound the rest, fall back to the exact analysis.
    Rat width = box.s1 - box.s0, height = box.t1 - box.t0;
    Rat delta = 0;
    bool has_zero_corner = false, hard_corner = false;
    for (auto& c : corners) {
        if (!c.zero) continue;
        has_zero_corner = true;
        auto d = corner_certificate(f, c, width / 4, height / 4);
        if (d) {
            c.certified = true;
            delta = (sign(delta) == 0 || *d < delta) ? *d : delta;
        } else {
            hard_corner = true;
            Rat d0 = std::min(width, height) / 256;
            delta = (sign(delta) == 0 || d0 < delta) ? d0 : delta;
        }
    }

    // Cell grid avoiding the excised squares.
    std::vector<Box> cells;
    if (!has_zero_corner) {
        cells.push_back(box);
    } else {
        std::vector<Rat> scuts{box.s0, box.s0 + delta, box.s1 - delta, box.s1};
        std::vector<Rat> tcuts{box.t0, box.t0 + delta, box.t1 - delta, box.t1};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Box cell{scuts[i], scuts[i + 1], tcuts[j], tcuts[j + 1]};
                bool skip = false;
                for (auto& c : corners)
                    if (c.zero && ((c.s == cell.s0 && c.t == cell.t0) ||
                                   (c.s == cell.s1 && c.t == cell.t0) ||
                                   (c.s == cell.s0 && c.t == cell.t1) ||
                                   (c.s == cell.s1 && c.t == cell.t1)))
                        skip = true;
                if (!skip && cell.nondegenerate()) cells.push_back(cell);
            }
        }
    }

    bool unresolved = hard_corner;
    std::deque<Box> queue(cells.begin(), cells.end());
    int budget = opts.bnb_budget;
    while (!queue.empty() && budget > 0) {
        Box b = queue.front();
        queue.pop_front();
        --budget;
        RatInterval iv = f.eval_interval(RatInterval(b.s0, b.s1), RatInterval(b.t0, b.t1));
        if (iv.positive()) continue;
        Rat ms = (b.s0 + b.s1) / 2, mt = (b.t0 + b.t1) / 2;
        int sg = sign(f.eval(ms, mt));
        if (sg < 0) return verdict_negative(ms, mt);
        if (sg == 0) return verdict_zero(ms, mt);
        if (iv.negative()) return verdict_negative(ms, mt);  // unreachable, midpoint caught it
        if (b.s1 - b.s0 >= b.t1 - b.t0) {
            queue.push_back({b.s0, ms, b.t0, b.t1});
            queue.push_back({ms, b.s1, b.t0, b.t1});
        } else {
            queue.push_back({b.s0, b.s1, b.t0, mt});
            queue.push_back({b.s0, b.s1, mt, b.t1});
        }
    }
    if (!queue.empty()) unresolved = true;

    if (unresolved) {
        if (auto v = critical_analysis(f, box, opts)) return *v;
    }
    SignVerdict ok;
    ok.tag = SignTag::AllPositive;
    return ok;
}

}  // namespace quadstab
