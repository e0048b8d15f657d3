#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadstab/unipoly.hpp"

namespace quadstab {

// Dense bivariate polynomial over Q in variables (s, t), stored as a
// polynomial in t whose coefficients are UniPoly in s. Exposes the
// coefficient grid via coeff(i, j) for s^i t^j.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> t_coeffs) : c_(std::move(t_coeffs)) { trim(); }
    static BiPoly constant(const Rat& a);
    static BiPoly var_s();
    static BiPoly var_t();
    static BiPoly from_unipoly_s(const UniPoly& p);
    static BiPoly from_unipoly_t(const UniPoly& p);
    // c * s^i * t^j
    static BiPoly monomial(const Rat& c, int i, int j);

    bool is_zero() const { return c_.empty(); }
    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    int deg_s() const;
    int total_degree() const;
    Rat coeff(int i, int j) const;
    const std::vector<UniPoly>& t_coeffs() const { return c_; }

    Rat eval(const Rat& s, const Rat& t) const;
    double eval_double(double s, double t) const;
    RatInterval eval_interval(const RatInterval& s, const RatInterval& t) const;

    // Substitutions.
    UniPoly eval_s(const Rat& s) const;  // polynomial in t
    UniPoly eval_t(const Rat& t) const;  // polynomial in s
    // f(a0 + a1 u + a2 v, b0 + b1 u + b2 v) as a BiPoly in (u, v).
    BiPoly compose_affine(const std::array<Rat, 3>& sx, const std::array<Rat, 3>& tx) const;
    // f restricted to the segment (s,t) = P + u * D, u in R, as a UniPoly in u.
    UniPoly restrict_line(const Rat& ps, const Rat& pt, const Rat& ds, const Rat& dt) const;

    BiPoly partial_s() const;
    BiPoly partial_t() const;
    BiPoly swap_vars() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& k) const;
    BiPoly operator/(const Rat& k) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    // Content w.r.t. t: monic gcd in Q[s] of the t-coefficients.
    UniPoly content_t() const;
    BiPoly primitive_part_t() const;

    // Exact division (throws std::logic_error if not divisible).
    BiPoly exact_div(const BiPoly& d) const;

    // Gcd in Q[s,t] (primitive PRS; result primitive with monic-ish scaling).
    static BiPoly gcd(const BiPoly& a, const BiPoly& b);

    // Resultant with respect to t: element of Q[s].
    static UniPoly resultant_t(const BiPoly& a, const BiPoly& b);

    std::string to_string(const std::string& sv = "s", const std::string& tv = "t") const;

  private:
    void trim();
    std::vector<UniPoly> c_;  // c_[j] = coefficient of t^j, a UniPoly in s
};

BiPoly operator*(const Rat& k, const BiPoly& p);

}  // namespace quadstab
