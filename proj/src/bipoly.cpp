#include "quadstab/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quadstab {

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rat& a) {
    if (sign(a) == 0) return BiPoly();
    return BiPoly({UniPoly::constant(a)});
}

BiPoly BiPoly::var_s() { return BiPoly({UniPoly::x()}); }

BiPoly BiPoly::var_t() { return BiPoly({UniPoly(), UniPoly::constant(Rat(1))}); }

BiPoly BiPoly::from_unipoly_s(const UniPoly& p) {
    if (p.is_zero()) return BiPoly();
    return BiPoly({p});
}

BiPoly BiPoly::from_unipoly_t(const UniPoly& p) {
    std::vector<UniPoly> c;
    for (int j = 0; j <= p.degree(); ++j) c.push_back(UniPoly::constant(p.coeff(j)));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
    if (sign(c) == 0) return BiPoly();
    std::vector<Rat> sc(i + 1, Rat(0));
    sc[i] = c;
    std::vector<UniPoly> tc(j + 1);
    tc[j] = UniPoly(std::move(sc));
    return BiPoly(std::move(tc));
}

int BiPoly::deg_s() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (size_t j = 0; j < c_.size(); ++j)
        for (int i = 0; i <= c_[j].degree(); ++i)
            if (sign(c_[j].coeff(i)) != 0) d = std::max(d, static_cast<int>(i + j));
    return d;
}

Rat BiPoly::coeff(int i, int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return Rat(0);
    return c_[j].coeff(i);
}

Rat BiPoly::eval(const Rat& s, const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->eval(s);
    return r;
}

double BiPoly::eval_double(double s, double t) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->eval_double(s);
    return r;
}

RatInterval BiPoly::eval_interval(const RatInterval& s, const RatInterval& t) const {
    RatInterval r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->eval_interval(s);
    return r;
}

UniPoly BiPoly::eval_s(const Rat& s) const {
    std::vector<Rat> out(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) out[j] = c_[j].eval(s);
    return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_t(const Rat& t) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * UniPoly::constant(t) + *it;
    return r;
}

BiPoly BiPoly::compose_affine(const std::array<Rat, 3>& sx, const std::array<Rat, 3>& tx) const {
    BiPoly S = BiPoly::constant(sx[0]) + BiPoly::var_s() * sx[1] + BiPoly::var_t() * sx[2];
    BiPoly T = BiPoly::constant(tx[0]) + BiPoly::var_s() * tx[1] + BiPoly::var_t() * tx[2];
    // Horner in t with inner Horner in s.
    BiPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        BiPoly cj;  // c_j(S)
        for (int i = it->degree(); i >= 0; --i)
            cj = cj * S + BiPoly::constant(it->coeff(i));
        r = r * T + cj;
    }
    return r;
}

UniPoly BiPoly::restrict_line(const Rat& ps, const Rat& pt, const Rat& ds, const Rat& dt) const {
    UniPoly S({ps, ds}), T({pt, dt});
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        UniPoly cj;
        for (int i = it->degree(); i >= 0; --i)
            cj = cj * S + UniPoly::constant(it->coeff(i));
        r = r * T + cj;
    }
    return r;
}

BiPoly BiPoly::partial_s() const {
    std::vector<UniPoly> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.derivative());
    return BiPoly(std::move(out));
}

BiPoly BiPoly::partial_t() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<UniPoly> out(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) out[j - 1] = c_[j] * Rat(static_cast<long>(j));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::swap_vars() const {
    std::vector<UniPoly> out(static_cast<size_t>(deg_s() + 1));
    for (int i = 0; i <= deg_s(); ++i) {
        std::vector<Rat> row(c_.size());
        for (size_t j = 0; j < c_.size(); ++j) row[j] = c_[j].coeff(i);
        out[i] = UniPoly(std::move(row));
    }
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(c_.size(), o.c_.size()));
    for (size_t j = 0; j < r.size(); ++j) {
        if (j < c_.size()) r[j] = r[j] + c_[j];
        if (j < o.c_.size()) r[j] = r[j] + o.c_[j];
    }
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> r(c_);
    for (auto& p : r) p = -p;
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const Rat& k) const {
    std::vector<UniPoly> r(c_);
    for (auto& p : r) p = p * k;
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator/(const Rat& k) const {
    if (sign(k) == 0) throw std::invalid_argument("division by zero scalar");
    return *this * Rat(1 / k);
}

BiPoly operator*(const Rat& k, const BiPoly& p) { return p * k; }

UniPoly BiPoly::content_t() const {
    UniPoly g;
    for (const auto& p : c_) {
        g = UniPoly::gcd(g, p);
        if (g.degree() == 0) return UniPoly::constant(Rat(1));
    }
    return g;
}

BiPoly BiPoly::primitive_part_t() const {
    if (is_zero()) return *this;
    UniPoly ct = content_t();
    std::vector<UniPoly> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.exact_div(ct));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("exact_div by zero");
    // Long division in (Q(s))[t]; when the division is exact every leading
    // coefficient quotient stays in Q[s] and the t-degree drops each step.
    BiPoly rem = *this, quo;
    const UniPoly& dl = d.c_.back();
    int dt = d.deg_t();
    while (!rem.is_zero()) {
        int rt = rem.deg_t();
        if (rt < dt) throw std::logic_error("BiPoly exact_div: not divisible");
        auto [q, r] = rem.c_.back().divmod(dl);
        if (!r.is_zero()) throw std::logic_error("BiPoly exact_div: not divisible");
        std::vector<UniPoly> term(static_cast<size_t>(rt - dt + 1));
        term.back() = q;
        BiPoly tq(std::move(term));
        quo = quo + tq;
        rem = rem - tq * d;
        if (!rem.is_zero() && rem.deg_t() >= rt)
            throw std::logic_error("BiPoly exact_div: not divisible");
    }
    return quo;
}

namespace {

// Pseudo-remainder of a by b in (Q[s])[t]: lc(b)^(da-db+1) * a mod b.
BiPoly pseudo_rem(const BiPoly& a, const BiPoly& b) {
    int da = a.deg_t(), db = b.deg_t();
    if (da < db) return a;
    const UniPoly lb = b.t_coeffs().back();
    BiPoly r = a;
    int steps = da - db + 1;
    BiPoly lbp = BiPoly::from_unipoly_s(lb);
    while (!r.is_zero() && r.deg_t() >= db && steps > 0) {
        int rt = r.deg_t();
        UniPoly lr = r.t_coeffs().back();
        std::vector<UniPoly> term(static_cast<size_t>(rt - db + 1));
        term.back() = lr;
        BiPoly shift(std::move(term));
        r = r * lbp - shift * b;
        --steps;
        if (!r.is_zero() && r.deg_t() == rt)
            throw std::logic_error("pseudo_rem: degree did not drop");
    }
    // account for remaining multiplications so callers get the standard prem
    while (steps-- > 0) r = r * lbp;
    return r;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Contents split off; gcd of contents times gcd of primitive parts.
    UniPoly ca = a.content_t(), cb = b.content_t();
    UniPoly cg = UniPoly::gcd(ca, cb);
    BiPoly f = a.primitive_part_t(), g = b.primitive_part_t();
    if (f.deg_t() < g.deg_t()) std::swap(f, g);
    while (g.deg_t() > 0) {
        BiPoly r = pseudo_rem(f, g);
        if (r.is_zero()) {
            BiPoly res = g.primitive_part_t() * BiPoly::from_unipoly_s(cg);
            return res;
        }
        f = std::move(g);
        g = r.primitive_part_t();
    }
    // g nonzero of t-degree 0: primitive parts are coprime in t, so the gcd
    // reduces to the content gcd. g zero: f is the last nonzero remainder.
    if (!g.is_zero()) return BiPoly::from_unipoly_s(cg);
    return f.primitive_part_t() * BiPoly::from_unipoly_s(cg);
}

UniPoly BiPoly::resultant_t(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    int m = a.deg_t(), n = b.deg_t();
    if (m == 0 && n == 0) return UniPoly::constant(Rat(1));
    if (m == 0) {
        // res(c(s), b) = c(s)^deg_t(b)
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r = r * a.t_coeffs()[0];
        return r;
    }
    if (n == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r = r * b.t_coeffs()[0];
        return r;
    }
    // Sylvester matrix with UniPoly entries, fraction-free Bareiss.
    int N = m + n;
    std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = a.t_coeffs()[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = b.t_coeffs()[n - k];

    UniPoly prev = UniPoly::constant(Rat(1));
    int sgn = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return UniPoly();  // singular: resultant 0
            std::swap(M[k], M[piv]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                UniPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.exact_div(prev);
            }
            M[i][k] = UniPoly();
        }
        prev = M[k][k];
    }
    UniPoly det = M[N - 1][N - 1];
    return sgn < 0 ? -det : det;
}

std::string BiPoly::to_string(const std::string& sv, const std::string& tv) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = deg_t(); j >= 0; --j) {
        for (int i = (j < static_cast<int>(c_.size()) ? c_[j].degree() : -1); i >= 0; --i) {
            Rat a = coeff(i, j);
            if (sign(a) == 0) continue;
            if (!first) os << (sign(a) > 0 ? " + " : " - ");
            else if (sign(a) < 0) os << "-";
            Rat mag = rat_abs(a);
            bool unit = (mag == 1) && (i > 0 || j > 0);
            if (!unit) os << rat_to_string(mag);
            if (i > 0) {
                if (!unit || j > 0) {
                }
                os << (unit && i >= 0 ? "" : "*") << sv;
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << (i > 0 ? "*" : (unit ? "" : "*")) << tv;
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
    }
    return os.str();
}

}  // namespace quadstab
