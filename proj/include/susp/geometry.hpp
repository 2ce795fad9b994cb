#pragma once

#include "susp/classgroup.hpp"
#include "susp/poly.hpp"
#include "susp/tower.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace susp {

struct GroebnerOptions {
    // S-pairs examined before giving up with ResourceLimit.
    std::uint64_t pair_budget = 100'000;
};

// Reduced Groebner basis under graded reverse lexicographic order, variables
// ordered as in the ring. Generators are monic and sorted by decreasing
// leading monomial; the zero ideal has no generators.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<MultiPoly> generators;
    std::string order = "grevlex";

    bool is_unit_ideal() const { return generators.size() == 1 && generators[0].is_constant(); }
    std::vector<std::string> to_strings() const;
};

// True when a strictly greater than b in grevlex.
bool grevlex_greater(const Exponents& a, const Exponents& b);

GroebnerBasis groebner(const std::vector<MultiPoly>& gens, const GroebnerOptions& options = {});

// Remainder of p on division by gens (grevlex, full reduction).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& gens);

// Buchberger's criterion checked over every pair, without pruning.
bool certify_groebner(const GroebnerBasis& gb);

bool ideal_contains_one(const std::vector<MultiPoly>& gens, const GroebnerOptions& options = {});

// Membership of p in the ideal with Groebner basis gb.
bool ideal_member(const MultiPoly& p, const GroebnerBasis& gb);

struct SmoothnessResult {
    bool smooth = false;
    // Basis of (f, df/dx_1, ..., df/dx_n); {1} when smooth.
    GroebnerBasis witness;
    // A rational singular point found in a small search box, if any.
    std::optional<std::map<std::string, Rational>> singular_point;
};

// {f = 0} in A^n is smooth iff 1 is in (f, df/dx_1, ..., df/dx_n). A basis
// over Q is also one over C, so the verdict holds over C.
SmoothnessResult hypersurface_smooth(const MultiPoly& f, const GroebnerOptions& options = {});

struct SuspensionReport {
    std::string f;
    bool f_prime = false;
    std::vector<AbsoluteVerdict> absolute_irreducibility;
    bool hypersurface_smooth = false;
    // 1 in (uv - f, v, u, df/dx_i) in the ambient ring.
    bool suspension_smooth = false;
    bool routes_agree = false;
    bool factorial = false;
    ClassGroupResult class_group;
    std::optional<std::map<std::string, Rational>> singular_point;
    std::string verdict;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

SuspensionReport suspension_report(const SuspTower& t, const GroebnerOptions& options = {},
                                   const FactorOptions& factor_options = {});

}  // namespace susp
