#include "susp/factor.hpp"

#include "susp/detail/zpoly.hpp"
#include "susp/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace susp {

using detail::ZPoly;

MultiPoly Factorization::expand(const RingPtr& ring) const {
    MultiPoly r = MultiPoly::constant(ring, unit);
    for (const auto& [f, m] : factors) r *= f.embed(ring).pow(m);
    return r;
}

std::size_t Factorization::total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
}

std::string Factorization::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (unit != 1 || factors.empty()) {
        out << unit.get_str();
        first = false;
    }
    for (const auto& [f, m] : factors) {
        if (!first) out << " * ";
        first = false;
        out << "(" << f.to_string() << ")";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

std::string to_string(AbsoluteVerdict v) {
    return v == AbsoluteVerdict::AbsolutelyIrreducible ? "absolutely_irreducible" : "unknown";
}

namespace {

using FactorList = std::vector<std::pair<MultiPoly, unsigned>>;

ZPoly to_zpoly(const MultiPoly& p, std::size_t var) {
    ZPoly z(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        if (t.coeff.get_den() != 1) throw Error(ErrorCode::ConsistencyError, "internal: non-integer coefficient");
        z[t.exponents[var]] = t.coeff.get_num();
    }
    detail::ztrim(z);
    return z;
}

MultiPoly from_zpoly(const ZPoly& z, const RingPtr& ring, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] == 0) continue;
        Exponents e(ring->size(), 0);
        e[var] = static_cast<std::uint32_t>(k);
        terms.push_back(Term{std::move(e), Rational(z[k])});
    }
    return MultiPoly(ring, std::move(terms));
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
    auto q = poly_exact_divide(a, b);
    if (!q) throw Error(ErrorCode::ConsistencyError, "internal: expected exact division during factorization");
    return *q;
}

// Musser's squarefree decomposition w.r.t. var of q, which must be primitive
// w.r.t. var.
FactorList squarefree_in(const MultiPoly& q, std::size_t var) {
    FactorList out;
    MultiPoly c = poly_gcd(q, poly_derivative(q, var));
    MultiPoly w = exact_quotient(q, c);
    unsigned i = 1;
    while (!c.is_constant()) {
        MultiPoly y = poly_gcd(w, c);
        MultiPoly z = exact_quotient(w, y);
        if (!z.is_constant()) out.emplace_back(normalize_primitive(z), i);
        ++i;
        w = y;
        c = exact_quotient(c, y);
    }
    if (!w.is_constant()) out.emplace_back(normalize_primitive(w), i);
    return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

class MultiFactorizer {
public:
    explicit MultiFactorizer(const FactorOptions& options) : options_(options) {}

    // q: primitive with integer coefficients, positive leading coefficient.
    void run(MultiPoly q, unsigned mult, FactorList& out) {
        if (q.is_constant()) return;
        const RingPtr& ring = q.ring();
        for (std::size_t v = 0; v < q.num_vars(); ++v) {
            std::uint32_t e = q.min_degree_in(v);
            if (e == 0) continue;
            out.emplace_back(MultiPoly::variable(ring, v), e * mult);
            Exponents shift(q.num_vars(), 0);
            shift[v] = e;
            q = exact_quotient(q, MultiPoly::monomial(ring, shift, 1));
        }
        auto vars = q.variables_used();
        if (vars.empty()) return;
        if (vars.size() == 1) {
            for (auto& [z, m] : detail::zfactor(to_zpoly(q, vars[0]))) {
                out.emplace_back(from_zpoly(z, ring, vars[0]), m * mult);
            }
            return;
        }
        for (auto v : vars) {
            MultiPoly c = content_in(q, v);
            if (!c.is_constant()) {
                run(c, mult, out);
                run(normalize_primitive(exact_quotient(q, c)), mult, out);
                return;
            }
        }
        FactorList parts = squarefree_in(q, vars.back());
        if (parts.size() > 1 || (parts.size() == 1 && parts[0].second > 1)) {
            for (auto& [a, i] : parts) run(a, mult * i, out);
            return;
        }
        kronecker(q, vars, mult, out);
    }

private:
    void kronecker(const MultiPoly& q, const std::vector<std::size_t>& vars, unsigned mult, FactorList& out) {
        const RingPtr& ring = q.ring();
        std::uint64_t base = q.total_degree() + 1;
        std::uint64_t span = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (span > options_.kronecker_cap / base) {
                throw Error(ErrorCode::ResourceLimit,
                            "Kronecker substitution bound (D+1)^n exceeds the cap of " +
                                std::to_string(options_.kronecker_cap));
            }
            span *= base;
        }
        std::vector<std::uint64_t> weight(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) weight[i] = i == 0 ? 1 : weight[i - 1] * base;

        ZPoly image;
        for (const auto& t : q.terms()) {
            std::uint64_t k = 0;
            for (std::size_t i = 0; i < vars.size(); ++i) k += t.exponents[vars[i]] * weight[i];
            if (image.size() <= k) image.resize(k + 1);
            image[k] += t.coeff.get_num();
        }
        detail::ztrim(image);

        std::vector<ZPoly> pieces;
        for (auto& [z, m] : detail::zfactor(image)) {
            for (unsigned j = 0; j < m; ++j) pieces.push_back(z);
        }

        auto invert = [&](const ZPoly& z) -> std::optional<MultiPoly> {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < z.size(); ++k) {
                if (z[k] == 0) continue;
                if (k >= span) return std::nullopt;
                Exponents e(ring->size(), 0);
                std::uint64_t rest = k;
                for (std::size_t i = 0; i < vars.size(); ++i) {
                    e[vars[i]] = static_cast<std::uint32_t>(rest % base);
                    rest /= base;
                }
                terms.push_back(Term{std::move(e), Rational(z[k])});
            }
            return MultiPoly(ring, std::move(terms));
        };

        MultiPoly remaining = q;
        std::size_t s = 1;
        while (2 * s <= pieces.size()) {
            bool found = false;
            std::vector<std::size_t> idx(s);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            do {
                ZPoly prod{Integer(1)};
                for (auto i : idx) prod = detail::zmul(prod, pieces[i]);
                auto cand = invert(prod);
                if (!cand || cand->is_constant() || cand->total_degree() >= remaining.total_degree()) continue;
                auto quotient = poly_exact_divide(remaining, *cand);
                if (!quotient) continue;
                out.emplace_back(normalize_primitive(*cand), mult);
                remaining = *quotient;
                for (std::size_t k = idx.size(); k-- > 0;) {
                    pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(idx[k]));
                }
                found = true;
                break;
            } while (next_combination(idx, pieces.size()));
            if (!found) ++s;
        }
        if (!remaining.is_constant()) out.emplace_back(normalize_primitive(remaining), mult);
    }

    FactorOptions options_;
};

Factorization assemble(const MultiPoly& p, FactorList raw) {
    Factorization result;
    for (auto& [f, m] : raw) {
        MultiPoly g = normalize_primitive(f);
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const auto& e) { return e.first == g; });
        if (it != result.factors.end()) it->second += m;
        else result.factors.emplace_back(std::move(g), m);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    MultiPoly prod = MultiPoly::constant(p.ring(), 1);
    for (const auto& [f, m] : result.factors) prod *= f.pow(m);
    result.unit = p.leading_coeff() / prod.leading_coeff();
    if (prod * result.unit != p) {
        throw Error(ErrorCode::ConsistencyError, "internal: factorization does not multiply back");
    }
    return result;
}

}  // namespace

Factorization factor_univariate(const MultiPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
    auto vars = p.variables_used();
    if (vars.size() > 1) {
        throw Error(ErrorCode::InvalidArgument, "factor_univariate: '" + p.to_string() + "' involves several variables");
    }
    FactorList raw;
    if (!vars.empty()) {
        for (auto& [z, m] : detail::zfactor(to_zpoly(normalize_primitive(p), vars[0]))) {
            raw.emplace_back(from_zpoly(z, p.ring(), vars[0]), m);
        }
    }
    return assemble(p, std::move(raw));
}

Factorization factor_multivariate(const MultiPoly& p, const FactorOptions& options) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
    FactorList raw;
    MultiFactorizer(options).run(normalize_primitive(p), 1, raw);
    return assemble(p, std::move(raw));
}

bool is_irreducible(const MultiPoly& p, const FactorOptions& options) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "irreducibility of zero is undefined");
    if (p.is_constant()) throw Error(ErrorCode::UnitInput, "nonzero constants are units, not irreducibles");
    return factor_multivariate(p, options).total_multiplicity() == 1;
}

namespace {

using Point = std::pair<long long, long long>;

long long cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Counter-clockwise hull vertices without collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

AbsoluteVerdict newton_indecomposable(const MultiPoly& p) {
    if (p.is_zero()) return AbsoluteVerdict::Unknown;
    if (p.size() == 1) {
        return p.total_degree() == 1 ? AbsoluteVerdict::AbsolutelyIrreducible : AbsoluteVerdict::Unknown;
    }
    auto vars = p.variables_used();
    if (vars.empty() || vars.size() > 2) return AbsoluteVerdict::Unknown;
    // The criterion needs f not divisible by any variable.
    for (auto v : vars) {
        if (p.min_degree_in(v) > 0) return AbsoluteVerdict::Unknown;
    }
    std::vector<Point> pts;
    for (const auto& t : p.terms()) {
        long long a = t.exponents[vars[0]];
        long long b = vars.size() > 1 ? t.exponents[vars[1]] : 0;
        pts.emplace_back(a, b);
    }
    std::vector<Point> hull = convex_hull(pts);
    // Edge i runs from hull[i] to hull[i+1] as count * primitive direction.
    struct Edge {
        long long dx, dy, count;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % hull.size()];
        long long dx = b.first - a.first, dy = b.second - a.second;
        long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
        edges.push_back(Edge{dx / g, dy / g, g});
    }
    // P decomposes iff some choice 0 <= k_i <= count_i, neither all zero nor
    // all full, closes up: sum k_i * direction_i = 0.
    using State = std::tuple<long long, long long, bool, bool>;
    std::set<State> states{{0, 0, false, false}};
    for (const auto& e : edges) {
        std::set<State> next;
        for (const auto& [x, y, some, partial] : states) {
            for (long long k = 0; k <= e.count; ++k) {
                next.emplace(x + k * e.dx, y + k * e.dy, some || k > 0, partial || k < e.count);
            }
        }
        states = std::move(next);
    }
    bool decomposable = states.count(State{0, 0, true, true}) > 0;
    return decomposable ? AbsoluteVerdict::Unknown : AbsoluteVerdict::AbsolutelyIrreducible;
}

}  // namespace susp
