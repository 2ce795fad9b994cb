#pragma once

#include "susp/poly.hpp"

#include <random>

namespace susp::testing {

// Deterministic generator of small sparse polynomials for property tests.
class PolyGen {
public:
    explicit PolyGen(RingPtr ring, std::uint64_t seed = 12345) : ring_(std::move(ring)), rng_(seed) {}

    MultiPoly poly(int max_terms = 4, int max_deg = 2, int coeff_range = 3) {
        std::uniform_int_distribution<int> nterms(0, max_terms);
        std::uniform_int_distribution<int> expo(0, max_deg);
        std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
        std::vector<Term> terms;
        int n = nterms(rng_);
        for (int i = 0; i < n; ++i) {
            Exponents e(ring_->size());
            for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng_));
            terms.push_back(Term{e, Rational(coeff(rng_))});
        }
        return MultiPoly(ring_, std::move(terms));
    }

    MultiPoly nonzero(int max_terms = 4, int max_deg = 2, int coeff_range = 3) {
        while (true) {
            MultiPoly p = poly(max_terms, max_deg, coeff_range);
            if (!p.is_zero()) return p;
        }
    }

    MultiPoly nonconstant(int max_terms = 4, int max_deg = 2, int coeff_range = 3) {
        while (true) {
            MultiPoly p = poly(max_terms, max_deg, coeff_range);
            if (!p.is_constant()) return p;
        }
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937_64& engine() { return rng_; }

private:
    RingPtr ring_;
    std::mt19937_64 rng_;
};

}  // namespace susp::testing
