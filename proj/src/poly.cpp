#include "susp/poly.hpp"

#include "susp/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace susp {

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_ring(const MultiPoly& p, const MultiPoly& q) {
    if (!same_ring(p.ring(), q.ring())) {
        throw Error(ErrorCode::RingMismatch,
                    "ring mismatch: " + p.ring()->to_string() + " vs " + q.ring()->to_string());
    }
}

bool divides_monomial(const Exponents& d, const Exponents& e) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > e[i]) return false;
    }
    return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Merge two sorted term lists; sign = +1 or -1 applied to the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exponents, b[j].exponents))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exponents, a[i].exponents)) {
            out.push_back(b[j]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (c != 0) out.push_back(Term{a[i].exponents, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back(Term{Exponents(p.num_vars(), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
    Exponents e(ring->size(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e), Rational(1));
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "' in " + ring->to_string());
    return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents e, const Rational& c) {
    MultiPoly p(std::move(ring));
    if (e.size() != p.num_vars()) throw Error(ErrorCode::InvalidArgument, "exponent vector length mismatch");
    if (c != 0) p.terms_.push_back(Term{std::move(e), c});
    return p;
}

void MultiPoly::canonicalize() {
    for (const auto& t : terms_) {
        if (t.exponents.size() != ring_->size()) {
            throw Error(ErrorCode::InvalidArgument, "exponent vector length mismatch");
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exponents == t.exponents) {
            merged.back().coeff += t.coeff;
        } else {
            if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    terms_ = std::move(merged);
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && susp::total_degree(terms_[0].exponents) == 0);
}

bool MultiPoly::is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::Precondition, "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

std::uint64_t MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : susp::total_degree(terms_.front().exponents);
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
    return d;
}

std::uint32_t MultiPoly::min_degree_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    std::uint32_t d = terms_[0].exponents[var];
    for (const auto& t : terms_) d = std::min(d, t.exponents[var]);
    return d;
}

bool MultiPoly::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exponents[var] > 0; });
}

std::vector<std::size_t> MultiPoly::variables_used() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < num_vars(); ++v) {
        if (involves(v)) out.push_back(v);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (const auto& t : terms_) {
        Term s = t;
        s.exponents[var] = 0;
        buckets[t.exponents[var]].push_back(std::move(s));
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(ring_, std::move(b));
    if (terms_.empty()) out.clear();
    return out;
}

MultiPoly MultiPoly::from_coefficients(RingPtr ring, std::size_t var, const std::vector<MultiPoly>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            Term s = t;
            s.exponents[var] += static_cast<std::uint32_t>(k);
            terms.push_back(std::move(s));
        }
    }
    return MultiPoly(std::move(ring), std::move(terms));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    require_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    require_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, -1);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            prod.push_back(Term{exp_add(s.exponents, t.exponents), s.coeff * t.coeff});
        }
    }
    return MultiPoly(a.ring_, std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(ring_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::mul_monomial(const Exponents& e, const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves graded-lex order.
    for (const auto& t : terms_) r.terms_.push_back(Term{exp_add(t.exponents, e), t.coeff * c});
    return r;
}

MultiPoly MultiPoly::embed(const RingPtr& target) const {
    if (same_ring(ring_, target)) return MultiPoly(target, terms_);
    std::vector<std::size_t> map(num_vars());
    for (std::size_t v = 0; v < num_vars(); ++v) {
        auto idx = target->index_of(ring_->name(v));
        if (!idx) {
            if (involves(v)) {
                throw Error(ErrorCode::RingMismatch,
                            "variable '" + ring_->name(v) + "' does not exist in " + target->to_string());
            }
            map[v] = target->size();
        } else {
            map[v] = *idx;
        }
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(target->size(), 0);
        for (std::size_t v = 0; v < num_vars(); ++v) {
            if (t.exponents[v]) e[map[v]] = t.exponents[v];
        }
        terms.push_back(Term{std::move(e), t.coeff});
    }
    return MultiPoly(target, std::move(terms));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool has_monomial = susp::total_degree(t.exponents) > 0;
        bool wrote = false;
        if (!has_monomial || c != 1) {
            out << c.get_str();
            wrote = true;
        }
        for (std::size_t v = 0; v < t.exponents.size(); ++v) {
            if (!t.exponents[v]) continue;
            if (wrote) out << "*";
            out << ring_->name(v);
            if (t.exponents[v] > 1) out << "^" << t.exponents[v];
            wrote = true;
        }
    }
    return out.str();
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].exponents != tb[i].exponents) return grlex_greater(ta[i].exponents, tb[i].exponents);
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

std::optional<MultiPoly> poly_exact_divide(const MultiPoly& p, const MultiPoly& q) {
    require_same_ring(p, q);
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by the zero polynomial");
    if (p.is_zero()) return MultiPoly(p.ring());
    for (std::size_t v = 0; v < p.num_vars(); ++v) {
        if (q.degree_in(v) > p.degree_in(v)) return std::nullopt;
        if (q.min_degree_in(v) > p.min_degree_in(v)) return std::nullopt;
    }
    const Term& lead = q.leading_term();
    std::vector<Term> quotient;
    MultiPoly rem = p;
    // With a single divisor {q} is a Groebner basis of (q), so the remainder
    // is zero exactly when q divides p.
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!divides_monomial(lead.exponents, lt.exponents)) return std::nullopt;
        Exponents e = exp_sub(lt.exponents, lead.exponents);
        Rational c = lt.coeff / lead.coeff;
        rem -= q.mul_monomial(e, c);
        quotient.push_back(Term{std::move(e), std::move(c)});
    }
    return MultiPoly(p.ring(), std::move(quotient));
}

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (1 / unit_part(p));
}

Rational unit_part(const MultiPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "unit part of zero");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational u = make_rational(num_gcd, den_lcm);
    if (p.leading_coeff() < 0) u = -u;
    return u;
}

bool associated(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_primitive(a) == normalize_primitive(b);
}

namespace {

using Coeffs = std::vector<MultiPoly>;  // dense in the main variable, entry k ~ var^k

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

void trim(Coeffs& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
    auto r = poly_exact_divide(a, b);
    if (!r) throw Error(ErrorCode::ConsistencyError, "internal: inexact division in gcd");
    return *r;
}

// Pseudo-remainder lc(B)^(degA-degB+1) * A mod B.
Coeffs prem(Coeffs a, const Coeffs& b) {
    const MultiPoly& lb = b.back();
    int delta = deg(a) - deg(b) + 1;
    while (!a.empty() && deg(a) >= deg(b)) {
        MultiPoly la = a.back();
        int shift = deg(a) - deg(b);
        for (auto& c : a) c = c * lb;
        for (int k = 0; k <= deg(b); ++k) a[k + shift] -= la * b[k];
        trim(a);
        --delta;
    }
    if (delta > 0) {
        MultiPoly f = lb.pow(static_cast<unsigned>(delta));
        for (auto& c : a) c = c * f;
    }
    return a;
}

MultiPoly content_of(const Coeffs& a) {
    MultiPoly g(a.front().ring());
    for (const auto& c : a) {
        g = gcd_rec(g, c);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

// gcd of two polynomials that are primitive w.r.t. var, via the subresultant
// remainder sequence.
MultiPoly subresultant_gcd(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    Coeffs a = p.coefficients_in(var);
    Coeffs b = q.coefficients_in(var);
    if (deg(a) < deg(b)) std::swap(a, b);
    const RingPtr& ring = p.ring();
    MultiPoly g = MultiPoly::constant(ring, 1);
    MultiPoly h = MultiPoly::constant(ring, 1);
    while (true) {
        int d = deg(a) - deg(b);
        Coeffs r = prem(a, b);
        if (r.empty()) break;
        if (deg(r) == 0) return MultiPoly::constant(ring, 1);
        a = std::move(b);
        MultiPoly divisor = g * h.pow(static_cast<unsigned>(d));
        for (auto& c : r) c = exact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (d > 0) h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
    MultiPoly cont = content_of(b);
    for (auto& c : b) c = exact(c, cont);
    return MultiPoly::from_coefficients(ring, var, b);
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);
    const RingPtr& ring = p.ring();
    if (p.is_constant() || q.is_constant()) return MultiPoly::constant(ring, 1);
    std::size_t main = 0;
    bool found = false;
    for (std::size_t v = p.num_vars(); v-- > 0;) {
        if (p.involves(v) || q.involves(v)) {
            main = v;
            found = true;
            break;
        }
    }
    if (!found) return MultiPoly::constant(ring, 1);
    if (!p.involves(main)) return gcd_rec(p, content_in(q, main));
    if (!q.involves(main)) return gcd_rec(content_in(p, main), q);
    MultiPoly cp = content_in(p, main);
    MultiPoly cq = content_in(q, main);
    MultiPoly c = gcd_rec(cp, cq);
    MultiPoly g = subresultant_gcd(exact(p, cp), exact(q, cq), main);
    return normalize_primitive(c * g);
}

}  // namespace

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return normalize_primitive(content_of(p.coefficients_in(var)));
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    require_same_ring(p, q);
    if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::ZeroInput, "gcd(0, 0) is undefined");
    return gcd_rec(p, q);
}

MultiPoly poly_derivative(const MultiPoly& p, std::size_t var) {
    if (var >= p.num_vars()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        if (t.exponents[var] == 0) continue;
        Term s = t;
        s.coeff *= t.exponents[var];
        s.exponents[var] -= 1;
        terms.push_back(std::move(s));
    }
    return MultiPoly(p.ring(), std::move(terms));
}

MultiPoly poly_derivative(const MultiPoly& p, const std::string& var) {
    auto idx = p.ring()->index_of(var);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + var + "'");
    return poly_derivative(p, *idx);
}

Rational poly_eval(const MultiPoly& p, const std::map<std::string, Rational>& point) {
    std::vector<Rational> values(p.num_vars());
    for (std::size_t v = 0; v < p.num_vars(); ++v) {
        auto it = point.find(p.ring()->name(v));
        if (it == point.end()) {
            throw Error(ErrorCode::MissingAssignment, "no value assigned to '" + p.ring()->name(v) + "'");
        }
        values[v] = it->second;
    }
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational term = t.coeff;
        for (std::size_t v = 0; v < values.size(); ++v) {
            for (std::uint32_t k = 0; k < t.exponents[v]; ++k) term *= values[v];
        }
        sum += term;
    }
    return sum;
}

MultiPoly poly_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value) {
    require_same_ring(p, value);
    auto coeffs = p.coefficients_in(var);
    MultiPoly result(p.ring());
    // Horner in the substituted variable.
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        result = result * value + coeffs[k];
    }
    return result;
}

}  // namespace susp
