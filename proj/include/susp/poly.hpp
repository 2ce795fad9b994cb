#pragma once

#include "susp/numeric.hpp"
#include "susp/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace susp {

using Exponents = std::vector<std::uint32_t>;

struct Term {
    Exponents exponents;
    Rational coeff;
};

std::uint64_t total_degree(const Exponents& e);

// Graded lexicographic comparison; true when a is strictly greater than b.
bool grlex_greater(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial with rational coefficients. Terms are kept in
// strictly descending graded-lex order with no zero coefficients, so two
// polynomials over the same ring are equal iff their term vectors are equal.
class MultiPoly {
public:
    explicit MultiPoly(RingPtr ring);
    MultiPoly(RingPtr ring, std::vector<Term> terms);

    static MultiPoly constant(RingPtr ring, const Rational& c);
    static MultiPoly variable(RingPtr ring, std::size_t index);
    static MultiPoly variable(RingPtr ring, const std::string& name);
    static MultiPoly monomial(RingPtr ring, Exponents e, const Rational& c);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t num_vars() const noexcept { return ring_->size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const;
    std::size_t size() const noexcept { return terms_.size(); }

    // Constant value; precondition is_constant().
    Rational constant_value() const;

    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    std::uint32_t min_degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;
    std::vector<std::size_t> variables_used() const;

    // Coefficients w.r.t. one variable: entry k is the coefficient of var^k.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;
    static MultiPoly from_coefficients(RingPtr ring, std::size_t var,
                                       const std::vector<MultiPoly>& coeffs);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned k) const;
    MultiPoly mul_monomial(const Exponents& e, const Rational& c) const;

    // Re-express over a ring whose variable list extends (or contains) ours.
    MultiPoly embed(const RingPtr& target) const;

    std::string to_string() const;

private:
    void canonicalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Total order used for sorting factor lists and presenting results:
// lower total degree first, then graded-lex comparison of term sequences.
bool canonical_less(const MultiPoly& a, const MultiPoly& b);

enum class ArithOp { Add, Sub, Mul };

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op);

// q * r == p, or nullopt. Throws DivisionByZero for q == 0.
std::optional<MultiPoly> poly_exact_divide(const MultiPoly& p, const MultiPoly& q);

// Greatest common divisor normalized by normalize_primitive(); gcd(0,0) throws.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

MultiPoly poly_derivative(const MultiPoly& p, const std::string& var);
MultiPoly poly_derivative(const MultiPoly& p, std::size_t var);

Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational>& point);

// Substitute var := value (a polynomial over the same ring).
MultiPoly poly_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value);

// Integer coefficients with gcd 1 and positive leading coefficient.
MultiPoly normalize_primitive(const MultiPoly& p);

// The rational c with p == c * normalize_primitive(p); p != 0.
Rational unit_part(const MultiPoly& p);

bool associated(const MultiPoly& a, const MultiPoly& b);

// gcd of all coefficients w.r.t. var (a polynomial free of var), normalized.
MultiPoly content_in(const MultiPoly& p, std::size_t var);

}  // namespace susp
