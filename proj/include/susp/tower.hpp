#pragma once

#include "susp/factor.hpp"
#include "susp/poly.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace susp {

class SuspTower;
using TowerPtr = std::shared_ptr<const SuspTower>;

// S_0 = R = Q[x_1..x_n], S_k = S_{k-1}[u_k, v_k] / (u_k v_k - f_k).
//
// Every element of every level lives in one ambient polynomial ring
// Q[x_1..x_n, u_1, v_1, ..., u_h, v_h] in normal form: no monomial contains
// both u_k and v_k. A normal-form element of S_k is then exactly the graded
// sum of c_i u_k^i (i > 0), c_0 and c_i v_k^{-i} (i < 0) with c_i in S_{k-1}.
class SuspTower {
public:
    struct Level {
        MultiPoly f;  // normal form, over the ambient ring, involving levels < k only
        std::string u_name;
        std::string v_name;
        std::size_t u_index;
        std::size_t v_index;
    };

    const RingPtr& base_ring() const noexcept { return base_; }
    const RingPtr& ambient_ring() const noexcept { return ambient_; }
    std::size_t height() const noexcept { return levels_.size(); }
    // 1-based.
    const Level& level(std::size_t k) const { return levels_.at(k - 1); }
    // Number of ambient variables available at level k.
    std::size_t vars_at(std::size_t k) const { return base_->size() + 2 * k; }

    // Rewrites u_k^a v_k^b -> u_k^{a-m} v_k^{b-m} f_k^m (m = min(a,b)) from the
    // top level down.
    MultiPoly normal_form(const MultiPoly& p) const;

    // Smallest level whose variables cover p.
    std::size_t level_of(const MultiPoly& p) const;

    std::string to_string() const;

private:
    friend TowerPtr tower_new(const RingPtr&, const std::vector<std::string>&,
                              const std::vector<std::pair<std::string, std::string>>&);
    SuspTower() = default;

    RingPtr base_;
    RingPtr ambient_;
    std::vector<Level> levels_;
};

// Variable names default to u,v for a single level and u1,v1,u2,v2,... for
// more. f_k is parsed over the base ring extended by the names of the levels
// below it. Throws ZeroF / UnitF.
TowerPtr tower_new(const RingPtr& base, const std::vector<std::string>& fs,
                   const std::vector<std::pair<std::string, std::string>>& names = {});

class SuspElem {
public:
    // p is any polynomial over the ambient ring (or a ring whose variables are
    // ambient names) using only variables of levels <= level; it is reduced.
    SuspElem(TowerPtr tower, std::size_t level, const MultiPoly& p);

    static SuspElem parse(const TowerPtr& tower, std::size_t level, const std::string& text);
    static SuspElem constant(const TowerPtr& tower, std::size_t level, const Rational& c);
    static SuspElem u(const TowerPtr& tower, std::size_t level);
    static SuspElem v(const TowerPtr& tower, std::size_t level);
    // f_level viewed as an element of S_level.
    static SuspElem f(const TowerPtr& tower, std::size_t level);

    const TowerPtr& tower() const noexcept { return tower_; }
    std::size_t level() const noexcept { return level_; }
    const MultiPoly& poly() const noexcept { return poly_; }

    bool is_zero() const noexcept { return poly_.is_zero(); }
    // Concentrated in degree 0 at every level, i.e. an element of R.
    bool in_base() const;

    // Graded degrees w.r.t. the top level; precondition: nonzero, level >= 1.
    int min_degree() const;
    int max_degree() const;
    // c_i in S_{level-1}, as an element of level-1.
    SuspElem coefficient(int degree) const;
    // degree -> homogeneous component c_i u^i or c_i v^{-i}.
    std::map<int, SuspElem> components() const;

    // Same element one or more levels up.
    SuspElem lift(std::size_t level) const;

    SuspElem operator-() const;
    friend SuspElem operator+(const SuspElem& a, const SuspElem& b);
    friend SuspElem operator-(const SuspElem& a, const SuspElem& b);
    friend SuspElem operator*(const SuspElem& a, const SuspElem& b);
    friend SuspElem operator*(const SuspElem& a, const Rational& c);
    friend bool operator==(const SuspElem& a, const SuspElem& b);
    friend bool operator!=(const SuspElem& a, const SuspElem& b) { return !(a == b); }
    SuspElem pow(unsigned k) const;

    std::string to_string() const { return poly_.to_string(); }

private:
    TowerPtr tower_;
    std::size_t level_;
    MultiPoly poly_;
};

SuspElem susp_mul(const SuspElem& g, const SuspElem& h);
std::map<int, SuspElem> susp_components(const SuspElem& g);

// Units of S_k are the units of R, i.e. nonzero rationals.
bool is_unit(const SuspElem& g);

// Always true for a constructed tower: R is a domain and every f_k is nonzero.
bool validate_domain(const SuspTower& t);

struct UDivision {
    std::optional<SuspElem> quotient;
    // When not divisible: first j >= 0 (power of the opposite variable, 0 for
    // the degree-0 part) whose coefficient b_j is not divisible by f.
    int offending_index = 0;
    std::optional<SuspElem> offending_coeff;

    bool divisible() const { return quotient.has_value(); }
};

// g = sum_{i>=1} a_i u^i + sum_{j>=0} b_j v^j is divisible by u iff f | b_j for
// all j; then g/u = sum a_i u^{i-1} + sum (b_j/f) v^{j+1}. Level 1 only.
UDivision divides_u(const SuspElem& g);
UDivision divides_v(const SuspElem& g);

struct SuspFactorization {
    SuspElem unit;
    std::vector<std::pair<SuspElem, unsigned>> factors;

    SuspElem expand() const;
    std::size_t total_multiplicity() const;
    std::string to_string() const;
};

struct NotUfd {
    // The factorization of f showing it is not prime in R.
    Factorization witness;
};

using SuspFactorResult = std::variant<SuspFactorization, NotUfd>;

// Prime factorization in S_1. Factors are scaled so that the coefficient of
// their highest graded component is primitive with positive leading
// coefficient, and sorted canonically.
SuspFactorResult factor_susp(const SuspElem& g, const FactorOptions& options = {});

// Primality of a level-1 element, assuming f_1 prime in R: q ~ u, q ~ v, or
// u does not divide q and u^l q is irreducible in R[u] for l its v-depth.
bool certify_prime(const SuspElem& q, const FactorOptions& options = {});

struct PrimeReport {
    bool u_prime = false;
    bool v_prime = false;
    bool f_prime = false;
    // Nontrivial factorization of f_k when it is not prime; the base
    // factorization at level 1, the S_1 factorization at level 2.
    std::optional<Factorization> base_witness;
    std::optional<SuspFactorization> susp_witness;

    std::string witness_string() const;
};

// u_k prime <=> v_k prime <=> f_k prime in S_{k-1}. Levels 1 and 2.
PrimeReport is_prime_uvf(const TowerPtr& t, std::size_t level, const FactorOptions& options = {});

// a is an element of S_{k-1} (k = the tower height unless given). Irreducible
// in S_k iff irreducible in S_{k-1} and not associated to f_k.
bool is_irreducible_base_elem(const SuspElem& a, std::size_t top_level = 0,
                              const FactorOptions& options = {});

// phi with phi = g / u^d = h / v^d, where g has only degrees >= 0 and h only
// degrees <= 0. Throws ConsistencyError unless v^d g = u^d h.
SuspElem reconstruct_from_fractions(const SuspElem& g, const SuspElem& h, unsigned d);

}  // namespace susp
