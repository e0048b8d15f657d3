#pragma once

#include "quadstab/rational.hpp"

namespace quadstab {

// Symmetric 2x2 matrix over Q.
struct Sym2 {
    Rat h11, h12, h22;

    Rat det() const { return h11 * h22 - h12 * h12; }
    Rat trace() const { return h11 + h22; }
};

enum class Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
    NegativeSemidefinite,
    NegativeDefinite,
};

// Exact classification from the signs of h11, h22 and the determinant.
// The zero matrix reports PositiveSemidefinite.
Definiteness definiteness(const Sym2& m);

inline bool is_positive_semidefinite(const Sym2& m) {
    auto d = definiteness(m);
    return d == Definiteness::PositiveDefinite || d == Definiteness::PositiveSemidefinite;
}

const char* to_string(Definiteness d);

}  // namespace quadstab
