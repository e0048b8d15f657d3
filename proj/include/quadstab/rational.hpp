#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadstab {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (positive denominator, reduced) through arithmetic; raw assignments from
// strings must canonicalize explicitly, which rat_from_string does.
using Rat = mpq_class;

inline int sign(const Rat& x) { return sgn(x); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Parses "num", "num/den" or a plain decimal like "-1.25". Throws
// std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical "num/den" (or "num" when den == 1).
std::string rat_to_string(const Rat& x);

inline double rat_to_double(const Rat& x) { return x.get_d(); }

// Largest integer <= x and smallest integer >= x.
mpz_class rat_floor(const Rat& x);
mpz_class rat_ceil(const Rat& x);

Rat rat_pow(const Rat& base, unsigned long e);

// A rational q with lo <= q <= hi and small denominator (Stern-Brocot).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Closed rational interval, used by the branch-and-bound positivity search.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static RatInterval point(const Rat& a) { return RatInterval(a, a); }

    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool positive() const { return sign(lo) > 0; }
    bool negative() const { return sign(hi) < 0; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator+(const Rat& c) const { return {lo + c, hi + c}; }
    RatInterval operator*(const Rat& c) const {
        return sign(c) >= 0 ? RatInterval(lo * c, hi * c) : RatInterval(hi * c, lo * c);
    }
};

}  // namespace quadstab
