#include "quadstab/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quadstab {

namespace {
const Rat kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UniPoly::eval_double(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

RatInterval UniPoly::eval_interval(const RatInterval& x) const {
    RatInterval r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::integral() const {
    if (c_.empty()) return UniPoly();
    std::vector<Rat> d(c_.size() + 1);
    d[0] = 0;
    for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return UniPoly(std::move(d));
}

Rat UniPoly::integrate(const Rat& a, const Rat& b) const {
    UniPoly F = integral();
    return F.eval(b) - F.eval(a);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator/(const Rat& s) const {
    if (sign(s) == 0) throw std::invalid_argument("division by zero scalar");
    std::vector<Rat> r(c_);
    for (auto& v : r) v /= s;
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd < dd) return {UniPoly(), *this};
    std::vector<Rat> quo(rd - dd + 1, Rat(0));
    const Rat& lc = d.leading();
    for (int k = rd; k >= dd; --k) {
        if (sign(rem[k]) == 0) continue;
        Rat f = rem[k] / lc;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

UniPoly UniPoly::compose_affine(const Rat& a, const Rat& b) const {
    // Horner in (a + b x)
    UniPoly arg({a, b});
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + UniPoly::constant(*it);
    return r;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = r.primitive();
    }
    if (f.is_zero()) return f;
    return f / f.leading();
}

UniPoly UniPoly::primitive() const {
    if (c_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& v : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    UniPoly r = *this * scale;
    if (sign(r.leading()) < 0) r = -r;
    return r;
}

UniPoly UniPoly::squarefree() const {
    if (degree() <= 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return exact_div(g);
}

std::vector<UniPoly> UniPoly::squarefree_decomposition() const {
    std::vector<UniPoly> out;
    if (degree() <= 0) return out;
    // Yun's algorithm over Q.
    UniPoly f = *this / leading();
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f.exact_div(a);
    UniPoly c = fp.exact_div(a);
    UniPoly d = c - b.derivative();
    while (true) {
        UniPoly g = gcd(b, d);
        out.push_back(g);
        if (b.degree() == g.degree()) break;  // b / g constant next round
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        if (b.degree() == 0) break;
    }
    return out;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (sign(a) == 0) continue;
        if (!first) os << (sign(a) > 0 ? " + " : " - ");
        else if (sign(a) < 0) os << "-";
        Rat m = rat_abs(a);
        if (i == 0 || m != 1) os << rat_to_string(m);
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace quadstab
