#include "susp/error.hpp"
#include "susp/tower.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace susp {

SuspElem SuspFactorization::expand() const {
    SuspElem r = unit;
    for (const auto& [q, m] : factors) r = r * q.pow(m);
    return r;
}

std::size_t SuspFactorization::total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
}

std::string SuspFactorization::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (!unit.poly().is_one() || factors.empty()) {
        out << unit.to_string();
        first = false;
    }
    for (const auto& [q, m] : factors) {
        if (!first) out << " * ";
        first = false;
        out << "(" << q.to_string() << ")";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

std::string PrimeReport::witness_string() const {
    if (base_witness) return base_witness->to_string();
    if (susp_witness) return susp_witness->to_string();
    return "";
}

namespace {

void require_level_one(const SuspElem& g, const char* op) {
    if (g.level() != 1) {
        throw Error(ErrorCode::Unsupported, std::string(op) + " is implemented for level-1 elements only");
    }
}

Factorization factor_f1(const TowerPtr& t, const FactorOptions& options) {
    return factor_multivariate(t->level(1).f, options);
}

// Scale so the top graded coefficient is primitive with positive leading
// coefficient. Returns the removed scalar.
Rational orient(SuspElem& q) {
    Rational s = unit_part(q.coefficient(q.max_degree()).poly());
    q = q * (1 / s);
    return s;
}

// l >= 0 minimal with u^l q in R[u].
unsigned v_depth(const SuspElem& q) {
    int d = q.min_degree();
    return d < 0 ? static_cast<unsigned>(-d) : 0;
}

}  // namespace

bool certify_prime(const SuspElem& q, const FactorOptions& options) {
    require_level_one(q, "certify_prime");
    if (q.is_zero()) throw Error(ErrorCode::ZeroInput, "zero is not prime");
    if (is_unit(q)) throw Error(ErrorCode::UnitInput, "units are not prime");
    const TowerPtr& t = q.tower();
    if (factor_f1(t, options).total_multiplicity() != 1) {
        throw Error(ErrorCode::Precondition, "certify_prime requires f prime in R");
    }
    if (associated(q.poly(), SuspElem::u(t, 1).poly())) return true;
    if (associated(q.poly(), SuspElem::v(t, 1).poly())) return true;
    if (divides_u(q).divisible()) return false;
    SuspElem H = SuspElem::u(t, 1).pow(v_depth(q)) * q;
    return is_irreducible(H.poly(), options);
}

SuspFactorResult factor_susp(const SuspElem& g, const FactorOptions& options) {
    require_level_one(g, "factor_susp");
    if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    if (is_unit(g)) throw Error(ErrorCode::UnitInput, "cannot factor a unit");
    const TowerPtr& t = g.tower();
    Factorization ff = factor_f1(t, options);
    if (ff.total_multiplicity() != 1) return NotUfd{ff};

    const MultiPoly& f = t->level(1).f;
    const SuspElem u = SuspElem::u(t, 1), v = SuspElem::v(t, 1);

    std::vector<std::pair<SuspElem, unsigned>> primes;
    // Copies of u introduced by the shifts u^l q; cancelled at the end, which
    // is legitimate since u is prime.
    std::uint64_t u_debt = 0;
    std::deque<std::pair<SuspElem, unsigned>> work{{g, 1}};
    std::size_t steps = 0;

    while (!work.empty()) {
        if (++steps > 100000) throw Error(ErrorCode::ResourceLimit, "factor_susp worklist did not terminate");
        auto [q, m] = work.front();
        work.pop_front();
        if (q.poly().is_constant()) continue;

        unsigned a = 0;
        for (auto d = divides_u(q); d.divisible(); d = divides_u(q)) {
            q = *d.quotient;
            ++a;
        }
        if (a) primes.emplace_back(u, a * m);
        unsigned b = 0;
        for (auto d = divides_v(q); d.divisible(); d = divides_v(q)) {
            q = *d.quotient;
            ++b;
        }
        if (b) primes.emplace_back(v, b * m);
        if (q.poly().is_constant()) continue;

        if (q.in_base()) {
            // Not divisible by u, so no factor is associated to f.
            for (const auto& [p, e] : factor_multivariate(q.poly(), options).factors) {
                if (associated(p, f)) {
                    throw Error(ErrorCode::ConsistencyError, "internal: f-factor survived u extraction");
                }
                primes.emplace_back(SuspElem(t, 1, p), e * m);
            }
            continue;
        }

        unsigned l = v_depth(q);
        SuspElem H = u.pow(l) * q;
        Factorization hf = factor_multivariate(H.poly(), options);
        if (hf.total_multiplicity() == 1) {
            primes.emplace_back(q, m);
            continue;
        }
        u_debt += static_cast<std::uint64_t>(l) * m;
        for (const auto& [p, e] : hf.factors) {
            SuspElem piece(t, 1, p);
            if (piece == u) primes.emplace_back(u, e * m);
            else work.emplace_back(piece, e * m);
        }
    }

    SuspFactorization result{SuspElem::constant(t, 1, 1), {}};
    for (auto& [q, m] : primes) {
        orient(q);
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const auto& e) { return e.first == q; });
        if (it != result.factors.end()) it->second += m;
        else result.factors.emplace_back(q, m);
    }
    if (u_debt) {
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const auto& e) { return e.first == u; });
        if (it == result.factors.end() || it->second < u_debt) {
            throw Error(ErrorCode::ConsistencyError, "internal: u-valuation bookkeeping went negative");
        }
        it->second -= static_cast<unsigned>(u_debt);
        if (it->second == 0) result.factors.erase(it);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first.poly(), y.first.poly()); });

    SuspElem prod = result.expand();
    Rational c = g.poly().leading_coeff() / prod.poly().leading_coeff();
    result.unit = SuspElem::constant(t, 1, c);
    if (prod * c != g) throw Error(ErrorCode::ConsistencyError, "internal: S-factorization does not multiply back");
    return result;
}

PrimeReport is_prime_uvf(const TowerPtr& t, std::size_t level, const FactorOptions& options) {
    if (level == 0 || level > t->height()) {
        throw Error(ErrorCode::InvalidArgument, "level must be between 1 and the tower height");
    }
    PrimeReport r;
    if (level == 1) {
        Factorization fac = factor_f1(t, options);
        r.f_prime = fac.total_multiplicity() == 1;
        if (!r.f_prime) r.base_witness = fac;
    } else if (level == 2) {
        if (factor_f1(t, options).total_multiplicity() != 1) {
            throw Error(ErrorCode::Unsupported, "primality of f_2 needs S_1 factorial (f_1 prime)");
        }
        SuspElem f2(t, 1, t->level(2).f);
        r.f_prime = certify_prime(f2, options);
        if (!r.f_prime) r.susp_witness = std::get<SuspFactorization>(factor_susp(f2, options));
    } else {
        throw Error(ErrorCode::Unsupported, "primality at tower height >= 3 is not supported");
    }
    // u and v are prime exactly when f is.
    r.u_prime = r.v_prime = r.f_prime;
    return r;
}

namespace {

bool irreducible_in(const SuspElem& a, std::size_t k, const FactorOptions& options) {
    if (k == 0) return is_irreducible(a.poly(), options);
    if (k > a.level()) {
        return irreducible_in(a, k - 1, options) && !associated(a.poly(), a.tower()->level(k).f);
    }
    if (k == 1) {
        if (factor_f1(a.tower(), options).total_multiplicity() == 1) return certify_prime(a, options);
        throw Error(ErrorCode::Unsupported, "irreducibility in a non-factorial S_1 is not supported");
    }
    throw Error(ErrorCode::Unsupported, "irreducibility of elements above level 1 is not supported");
}

}  // namespace

bool is_irreducible_base_elem(const SuspElem& a, std::size_t top_level, const FactorOptions& options) {
    std::size_t k = top_level == 0 ? a.tower()->height() : top_level;
    if (k > a.tower()->height() || a.level() >= k) {
        throw Error(ErrorCode::InvalidArgument, "the element must come from a level below the target level");
    }
    if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "zero is not irreducible");
    if (is_unit(a)) throw Error(ErrorCode::UnitInput, "units are not irreducible");
    return irreducible_in(a, k, options);
}

}  // namespace susp
