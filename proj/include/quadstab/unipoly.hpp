#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quadstab/rational.hpp"

namespace quadstab {

// Dense univariate polynomial over Q. Coefficients are stored low-to-high
// with trailing zeros trimmed; the zero polynomial has an empty coefficient
// vector and degree() == -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    static UniPoly constant(const Rat& a) { return UniPoly({a}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }
    // (x - r)
    static UniPoly linear_root(const Rat& r) { return UniPoly({-r, Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;
    RatInterval eval_interval(const RatInterval& x) const;

    UniPoly derivative() const;
    // Antiderivative with zero constant term.
    UniPoly integral() const;
    // Exact integral over [a, b].
    Rat integrate(const Rat& a, const Rat& b) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator/(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Division known to be exact; throws std::logic_error on nonzero remainder.
    UniPoly exact_div(const UniPoly& d) const;

    // p(a + b x): affine substitution.
    UniPoly compose_affine(const Rat& a, const Rat& b) const;

    // Monic gcd (1 for coprime inputs, 0 only if both are 0).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    // Primitive integer-coefficient multiple with positive leading coefficient.
    UniPoly primitive() const;

    // Squarefree part p / gcd(p, p').
    UniPoly squarefree() const;

    // Yun decomposition: returns g_1, g_2, ... with p = lc * prod g_i^i and
    // the g_i squarefree and pairwise coprime.
    std::vector<UniPoly> squarefree_decomposition() const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly operator*(const Rat& s, const UniPoly& p);

}  // namespace quadstab
