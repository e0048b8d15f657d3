#include "quadstab/rational.hpp"

#include <cctype>

namespace quadstab {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal: digits before/after the point, optional sign
        std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational '" + s + "'");
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head = head.substr(1);
        }
        if (head.empty()) head = "0";
        if (head.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational '" + s + "'");
        mpz_class num(head + tail, 10);
        mpz_class den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        if (neg) r = -r;
        return r;
    }

    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(t, 10));
            return r;
        }
        mpz_class num(t.substr(0, slash), 10);
        mpz_class den(t.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpz_class rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

mpz_class rat_ceil(const Rat& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo == hi) return lo;
    // Stern-Brocot walk. Any integer in [lo,hi] wins immediately.
    mpz_class fl = rat_ceil(lo);
    if (Rat(fl) <= hi) return Rat(fl);
    // No integer inside: lo and hi share the same floor n.
    mpz_class n = rat_floor(lo);
    Rat flo = lo - Rat(n), fhi = hi - Rat(n);  // both in (0,1)
    // recurse on reciprocals: simplest in [1/fhi, 1/flo]
    Rat inner = simplest_rational_between(1 / fhi, 1 / flo);
    return Rat(n) + 1 / inner;
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

}  // namespace quadstab
