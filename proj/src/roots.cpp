#include "quadstab/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadstab {

namespace {

// Sturm chains tolerate scaling by positive constants only; primitive()
// would flip signs to normalize the leading coefficient.
UniPoly positive_scale(const UniPoly& p) {
    if (p.is_zero()) return p;
    UniPoly q = p.primitive();
    if (sign(q.leading()) != sign(p.leading())) q = -q;
    return q;
}

}  // namespace

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(positive_scale(p));
    UniPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_scale(d));
    while (true) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(positive_scale(-r));
    }
    return chain;
}

namespace {

int sign_variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

AlgNum AlgNum::from_interval(UniPoly sqfree, Rat lo, Rat hi) {
    AlgNum a;
    a.p = std::move(sqfree);
    a.lo = std::move(lo);
    a.hi = std::move(hi);
    a.rational = false;
    if (sign(a.p.eval(a.lo)) * sign(a.p.eval(a.hi)) >= 0)
        throw std::logic_error("AlgNum: interval does not isolate a sign change");
    return a;
}

Rat AlgNum::value() const {
    if (!rational) throw std::logic_error("AlgNum: irrational value");
    return lo;
}

Rat AlgNum::approx() const { return rational ? lo : (lo + hi) / 2; }

double AlgNum::to_double() const { return rat_to_double(approx()); }

void AlgNum::refine() {
    if (rational) return;
    Rat m = (lo + hi) / 2;
    int sm = sign(p.eval(m));
    if (sm == 0) {
        lo = hi = m;
        rational = true;
        p = UniPoly();
        return;
    }
    if (sm == sign(p.eval(lo)))
        lo = m;
    else
        hi = m;
}

void AlgNum::refine_below(const Rat& width) {
    while (!rational && hi - lo >= width) refine();
}

int AlgNum::sign_of(const UniPoly& q) const {
    if (q.is_zero()) return 0;
    if (rational) return sign(q.eval(lo));
    // q(alpha) == 0 iff alpha is a root of gcd(p, q); p squarefree, so a
    // sign change of the gcd across (lo, hi) decides it.
    UniPoly g = UniPoly::gcd(p, q);
    if (g.degree() > 0 && sign(g.eval(lo)) * sign(g.eval(hi)) < 0) return 0;
    AlgNum tmp = *this;
    while (true) {
        RatInterval iv = q.eval_interval(RatInterval(tmp.lo, tmp.hi));
        if (iv.positive()) return 1;
        if (iv.negative()) return -1;
        tmp.refine();
        if (tmp.rational) return sign(q.eval(tmp.lo));
    }
}

int AlgNum::compare(const Rat& r) const {
    if (rational) return lo < r ? -1 : (lo > r ? 1 : 0);
    // alpha - r has the sign of p-placement; test via sign of (x - r) at alpha
    return sign_of(UniPoly::linear_root(r));
}

int AlgNum::compare(const AlgNum& o) const {
    if (o.rational) return compare(o.lo);
    if (rational) return -o.compare(lo);
    // Equal only at a common root of both defining polynomials.
    UniPoly g = UniPoly::gcd(p, o.p);
    AlgNum a = *this, b = o;
    while (true) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        // Overlap; if the overlap contains a sign change of g, the two
        // numbers could be the same algebraic number.
        Rat L = std::max(a.lo, b.lo), H = std::min(a.hi, b.hi);
        if (g.degree() > 0 && sign(g.eval(L)) * sign(g.eval(H)) < 0) {
            // Both isolating intervals contain the unique root of their own
            // polynomial; if the shared root of g lies in both, shrinking
            // keeps the overlap. Decide equality: alpha == beta iff both
            // polynomials vanish at a common point of the overlap, which
            // holds iff a's root is a root of g and so is b's.
            bool a_on_g = a.sign_of(g) == 0;
            bool b_on_g = b.sign_of(g) == 0;
            if (a_on_g && b_on_g) return 0;
        }
        a.refine();
        b.refine();
        if (a.rational) return -o.compare(a.lo);
        if (b.rational) return compare(b.lo);
    }
}

std::string AlgNum::to_string() const {
    if (rational) return rat_to_string(lo);
    std::ostringstream os;
    AlgNum t = *this;
    t.refine_below(Rat(1, 1000000000));
    os << "root(" << t.p.to_string("r") << ") in (" << rat_to_string(t.lo) << ", "
       << rat_to_string(t.hi) << ")";
    return os.str();
}

namespace {

// Cauchy-style bound: all real roots of q lie in (-B, B).
Rat root_bound(const UniPoly& q) {
    Rat m = 0;
    const Rat& lc = q.leading();
    for (int i = 0; i < q.degree(); ++i) {
        Rat v = rat_abs(q.coeff(i) / lc);
        if (v > m) m = v;
    }
    return m + 1;
}

// Bisection midpoints rarely hit non-dyadic rational roots, so probe the
// simplest rational in the isolating interval a few times. Roots that stay
// unidentified remain valid isolating intervals (flagged irrational).
void try_identify_rational(AlgNum& a, int rounds = 5) {
    if (a.rational) return;
    for (int r = 0; r < rounds && !a.rational; ++r) {
        Rat cand = simplest_rational_between(a.lo, a.hi);
        if (sign(a.p.eval(cand)) == 0) {
            a = AlgNum::from_rational(cand);
            return;
        }
        for (int i = 0; i < 8; ++i) a.refine();
    }
}

// Isolating intervals for the distinct roots of squarefree q in [a, b],
// returned in increasing order. Rational roots are returned exactly.
// Rational roots discovered along the way are deflated out, so segment
// endpoints are never roots of the working polynomial.
std::vector<AlgNum> isolate_squarefree(const UniPoly& q, const Rat& a, const Rat& b) {
    std::vector<AlgNum> out;
    if (q.degree() <= 0) return out;
    UniPoly w = q;
    if (sign(w.eval(a)) == 0) {
        out.push_back(AlgNum::from_rational(a));
        w = w.exact_div(UniPoly::linear_root(a));
    }
    if (b != a && sign(w.eval(b)) == 0) {
        out.push_back(AlgNum::from_rational(b));
        w = w.exact_div(UniPoly::linear_root(b));
    }
    if (w.degree() >= 1) {
        auto chain = sturm_chain(w);
        std::vector<std::pair<Rat, Rat>> stack{{a, b}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            // endpoints are non-roots of w, so (lo, hi] counts the open interval
            int cnt = sturm_count(chain, lo, hi);
            if (cnt == 0) continue;
            if (cnt == 1) {
                // a simple root of squarefree w forces a sign change
                AlgNum r = AlgNum::from_interval(w, lo, hi);
                try_identify_rational(r);
                out.push_back(std::move(r));
                continue;
            }
            Rat m = (lo + hi) / 2;
            if (sign(w.eval(m)) == 0) {
                out.push_back(AlgNum::from_rational(m));
                w = w.exact_div(UniPoly::linear_root(m));
                if (w.degree() < 1) break;
                chain = sturm_chain(w);
            }
            stack.push_back({lo, m});
            stack.push_back({m, hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgNum& x, const AlgNum& y) {
        return x.compare(y) < 0;
    });
    return out;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    auto parts = p.squarefree_decomposition();
    // Collect roots of each squarefree factor with its multiplicity, then merge.
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].degree() <= 0) continue;
        for (auto& r : isolate_squarefree(parts[k], a, b))
            out.push_back({std::move(r), static_cast<int>(k + 1)});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) {
        return x.root.compare(y.root) < 0;
    });
    // Disjoint factors cannot share roots, but isolating intervals of
    // different factors may overlap; shrink until pairwise disjoint.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].root.rational && out[i + 1].root.rational) &&
               out[i].root.hi > out[i + 1].root.lo) {
            out[i].root.refine();
            out[i + 1].root.refine();
        }
    }
    return out;
}

bool positive_on_open_interval(const UniPoly& p, const Rat& a, const Rat& b,
                               bool* identically_zero) {
    if (identically_zero) *identically_zero = false;
    if (a >= b) throw std::invalid_argument("positive_on_open_interval: need a < b");
    if (p.is_zero()) {
        if (identically_zero) *identically_zero = true;
        return false;
    }
    return sign_profile_on_interval(p, a, b) > 0;
}

int sign_profile_on_interval(const UniPoly& p, const Rat& a, const Rat& b,
                             std::optional<Rat>* where, std::optional<AlgNum>* zero_at) {
    if (p.is_zero()) {
        if (where) *where = (a + b) / 2;
        return 0;
    }
    UniPoly sf = p.squarefree();
    auto roots = isolate_squarefree(sf, a, b);
    // Sample strictly inside every maximal root-free open subinterval.
    std::vector<Rat> cuts;
    cuts.push_back(a);
    for (auto& r : roots) {
        AlgNum t = r;
        // make the isolating interval lie within (a, b) for clean cuts
        while (!t.rational && (t.lo < a || t.hi > b)) t.refine();
        if (t.rational) {
            if (t.lo > a && t.lo < b) cuts.push_back(t.lo);
        } else {
            cuts.push_back(t.lo);
            cuts.push_back(t.hi);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    bool negative_found = false;
    std::optional<Rat> neg_at;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        Rat m = (cuts[i] + cuts[i + 1]) / 2;
        int s = sign(p.eval(m));
        if (s < 0) {
            negative_found = true;
            neg_at = m;
            break;
        }
        // s == 0 cannot happen: m avoids all roots of the squarefree part
    }
    if (negative_found) {
        if (where) *where = neg_at;
        return -1;
    }
    // No negative values; an interior root means the minimum is exactly 0.
    for (auto& r : roots) {
        int cl = r.compare(a), cr = r.compare(b);
        if (cl > 0 && cr < 0) {
            if (zero_at) *zero_at = r;
            if (where && r.rational) *where = r.lo;
            return 0;
        }
    }
    return 1;
}

}  // namespace quadstab
