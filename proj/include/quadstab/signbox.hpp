#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadstab/bipoly.hpp"

namespace quadstab {

struct Box {
    Rat s0, s1, t0, t1;
    bool nondegenerate() const { return s0 < s1 && t0 < t1; }
};

using BoxPoint = std::pair<Rat, Rat>;

enum class SignTag { AllPositive, HasZero, HasNegative, IdenticallyZero };

struct SignVerdict {
    SignTag tag = SignTag::AllPositive;
    // Rational witness where one exists (always for HasNegative; for HasZero
    // whenever the zero has rational coordinates).
    std::optional<BoxPoint> witness;
    std::string note;

    bool all_positive() const { return tag == SignTag::AllPositive; }
};

struct SignBoxOptions {
    // Branch-and-bound box budget before switching to the exact analysis.
    int bnb_budget = 4000;
    // Refinement depth for the algebraic fallback before giving up.
    int refine_depth = 256;
};

// Decides the sign behaviour of f on the closed box: AllPositive means
// f > 0 everywhere except possibly at the listed excluded corners (where f
// may vanish). HasZero / HasNegative report a point with f = 0 / f < 0.
// Exact: interval branch-and-bound accelerates the common cases and a
// resultant-based critical point analysis settles touching zeros.
SignVerdict sign_on_box(const BiPoly& f, const Box& box,
                        const std::vector<BoxPoint>& excluded_corners = {},
                        const SignBoxOptions& opts = {});

}  // namespace quadstab
