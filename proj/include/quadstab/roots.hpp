#pragma once

#include <optional>
#include <vector>

#include "quadstab/unipoly.hpp"

namespace quadstab {

// Sturm chain of p (squarefree not required).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

// Real root of a polynomial, exact when rational, otherwise an isolating
// open interval (lo, hi) for a simple root of `p` (squarefree) with
// sign(p(lo)) != sign(p(hi)) and neither endpoint a root.
struct AlgNum {
    UniPoly p;      // squarefree defining polynomial; empty when rational
    Rat lo, hi;     // isolating interval, or lo == hi == value when rational
    bool rational = true;

    static AlgNum from_rational(const Rat& v) {
        AlgNum a;
        a.lo = a.hi = v;
        return a;
    }
    static AlgNum from_interval(UniPoly sqfree, Rat lo, Rat hi);

    Rat value() const;           // rational value; throws if irrational
    Rat approx() const;          // midpoint of the current interval
    double to_double() const;
    void refine();               // halve the isolating interval
    void refine_below(const Rat& width);

    // Exact sign of q at this number (decides q(alpha) == 0 via gcd).
    int sign_of(const UniPoly& q) const;

    // Exact comparison against a rational.
    int compare(const Rat& r) const;
    // Exact comparison against another AlgNum.
    int compare(const AlgNum& o) const;

    std::string to_string() const;
};

struct RootInterval {
    AlgNum root;
    int multiplicity = 1;
};

// Real roots of p in [a, b] with multiplicities, in increasing order.
// Precondition: p not identically zero.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& a, const Rat& b);

// True iff p(z) > 0 for every z in the open interval (a, b); exact.
// Identically-zero p yields false and sets *identically_zero when provided.
bool positive_on_open_interval(const UniPoly& p, const Rat& a, const Rat& b,
                               bool* identically_zero = nullptr);

// Sign pattern of p on [a,b]: -1 if p takes a negative value, 0 if p >= 0
// with a zero strictly inside (a,b) or p == 0, +1 if p > 0 on the open
// interval (endpoint zeros allowed). `where` (optional) receives a rational
// witness for the negative case and for interior rational zeros.
int sign_profile_on_interval(const UniPoly& p, const Rat& a, const Rat& b,
                             std::optional<Rat>* where = nullptr,
                             std::optional<AlgNum>* zero_at = nullptr);

}  // namespace quadstab
