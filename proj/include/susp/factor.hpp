#pragma once

#include "susp/poly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace susp {

// unit * prod(factor_i ^ multiplicity_i) reconstructs the input exactly. Every
// factor is irreducible over Q, primitive with integer coefficients and a
// positive leading coefficient; factors are pairwise non-associated and sorted
// by canonical_less.
struct Factorization {
    Rational unit{1};
    std::vector<std::pair<MultiPoly, unsigned>> factors;

    MultiPoly expand(const RingPtr& ring) const;
    std::size_t total_multiplicity() const;
    std::string to_string() const;
};

struct FactorOptions {
    // Kronecker substitution is refused when (D+1)^n exceeds this cap, with D
    // the total degree and n the number of variables involved.
    std::uint64_t kronecker_cap = 1'000'000;
};

Factorization factor_univariate(const MultiPoly& p);
Factorization factor_multivariate(const MultiPoly& p, const FactorOptions& options = {});

// Throws ZeroInput / UnitInput for zero and nonzero constants.
bool is_irreducible(const MultiPoly& p, const FactorOptions& options = {});

enum class AbsoluteVerdict { AbsolutelyIrreducible, Unknown };

std::string to_string(AbsoluteVerdict v);

// Gao's sufficient criterion: a polynomial in at most two variables, not
// divisible by a variable, whose Newton polygon is integrally indecomposable
// is irreducible over every extension of Q. Never claims reducibility.
AbsoluteVerdict newton_indecomposable(const MultiPoly& p);

}  // namespace susp
