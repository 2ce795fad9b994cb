#include "susp/geometry.hpp"

#include "susp/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace susp {

bool grevlex_greater(const Exponents& a, const Exponents& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::vector<std::string> GroebnerBasis::to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.to_string());
    return out;
}

namespace {

// Terms sorted by decreasing grevlex order, no zero coefficients.
using GPoly = std::vector<Term>;

GPoly to_gpoly(const MultiPoly& p) {
    GPoly g = p.terms();
    std::sort(g.begin(), g.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.exponents, b.exponents); });
    return g;
}

MultiPoly from_gpoly(const RingPtr& ring, GPoly g) { return MultiPoly(ring, std::move(g)); }

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// p[from..] - c * x^e * q
GPoly sub_mul(const GPoly& p, std::size_t from, const GPoly& q, const Exponents& e, const Rational& c) {
    GPoly out;
    out.reserve(p.size() - from + q.size());
    std::size_t i = from, j = 0;
    auto shifted = [&](std::size_t k) {
        Exponents s = q[k].exponents;
        for (std::size_t v = 0; v < s.size(); ++v) s[v] += e[v];
        return s;
    };
    Exponents qe;
    if (j < q.size()) qe = shifted(j);
    while (i < p.size() || j < q.size()) {
        if (j >= q.size() || (i < p.size() && grevlex_greater(p[i].exponents, qe))) {
            out.push_back(p[i++]);
        } else if (i >= p.size() || grevlex_greater(qe, p[i].exponents)) {
            out.push_back(Term{qe, -c * q[j].coeff});
            if (++j < q.size()) qe = shifted(j);
        } else {
            Rational v = p[i].coeff - c * q[j].coeff;
            if (v != 0) out.push_back(Term{p[i].exponents, v});
            ++i;
            if (++j < q.size()) qe = shifted(j);
        }
    }
    return out;
}

GPoly full_reduce(GPoly p, const std::vector<GPoly>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
    GPoly rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
        const Term& lt = p[pos];
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].empty()) continue;
            const Term& g = basis[k].front();
            if (!divides(g.exponents, lt.exponents)) continue;
            p = sub_mul(p, pos, basis[k], quotient(lt.exponents, g.exponents), lt.coeff / g.coeff);
            pos = 0;
            reduced = true;
            break;
        }
        if (!reduced) rem.push_back(p[pos++]);
    }
    return rem;
}

GPoly s_poly(const GPoly& a, const GPoly& b) {
    Exponents l = lcm(a.front().exponents, b.front().exponents);
    GPoly left = sub_mul(GPoly{}, 0, a, quotient(l, a.front().exponents), Rational(-1) / a.front().coeff);
    return sub_mul(left, 0, b, quotient(l, b.front().exponents), Rational(1) / b.front().coeff);
}

void make_monic(GPoly& p) {
    if (p.empty()) return;
    Rational c = p.front().coeff;
    for (auto& t : p) t.coeff /= c;
}

const RingPtr& common_ring(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "an ideal needs at least one generator");
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), gens.front().ring())) {
            throw Error(ErrorCode::RingMismatch, "ideal generators live in different rings");
        }
    }
    return gens.front().ring();
}

}  // namespace

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
    std::vector<GPoly> basis;
    for (const auto& g : gens) basis.push_back(to_gpoly(g));
    return from_gpoly(p.ring(), full_reduce(to_gpoly(p), basis));
}

GroebnerBasis groebner(const std::vector<MultiPoly>& gens, const GroebnerOptions& options) {
    const RingPtr& ring = common_ring(gens);
    std::vector<GPoly> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        GPoly p = to_gpoly(g);
        make_monic(p);
        G.push_back(std::move(p));
    }
    GroebnerBasis out{ring, {}, "grevlex"};
    if (G.empty()) return out;

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    }
    std::uint64_t examined = 0;
    bool unit = std::any_of(G.begin(), G.end(), [](const GPoly& p) { return total_degree(p.front().exponents) == 0; });
    while (!pending.empty() && !unit) {
        if (++examined > options.pair_budget) {
            throw Error(ErrorCode::ResourceLimit,
                        "Groebner pair budget of " + std::to_string(options.pair_budget) + " exhausted");
        }
        // normal strategy: smallest lcm degree first
        auto best = pending.begin();
        std::uint64_t best_deg = UINT64_MAX;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            auto d = total_degree(lcm(G[it->first].front().exponents, G[it->second].front().exponents));
            if (d < best_deg) {
                best_deg = d;
                best = it;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        const Exponents& li = G[i].front().exponents;
        const Exponents& lj = G[j].front().exponents;
        Exponents l = lcm(li, lj);
        // coprime leading monomials
        if (total_degree(l) == total_degree(li) + total_degree(lj)) continue;
        // chain criterion
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !divides(G[k].front().exponents, l)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
        }
        if (chain) continue;
        GPoly h = full_reduce(s_poly(G[i], G[j]), G);
        if (h.empty()) continue;
        make_monic(h);
        if (total_degree(h.front().exponents) == 0) unit = true;
        std::size_t n = G.size();
        G.push_back(std::move(h));
        for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
    }
    if (unit) {
        out.generators.push_back(MultiPoly::constant(ring, 1));
        return out;
    }

    // minimize
    std::vector<GPoly> minimal;
    for (std::size_t k = 0; k < G.size(); ++k) {
        bool redundant = false;
        for (std::size_t m = 0; m < G.size() && !redundant; ++m) {
            if (m == k) continue;
            const Exponents& a = G[m].front().exponents;
            const Exponents& b = G[k].front().exponents;
            if (divides(a, b) && (a != b || m < k)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[k]);
    }
    // tail-reduce
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        GPoly head{minimal[k].front()};
        GPoly tail(minimal[k].begin() + 1, minimal[k].end());
        GPoly red = full_reduce(tail, minimal, k);
        head.insert(head.end(), red.begin(), red.end());
        minimal[k] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const GPoly& a, const GPoly& b) { return grevlex_greater(a.front().exponents, b.front().exponents); });
    for (auto& g : minimal) out.generators.push_back(from_gpoly(ring, std::move(g)));
    return out;
}

bool certify_groebner(const GroebnerBasis& gb) {
    std::vector<GPoly> G;
    for (const auto& g : gb.generators) G.push_back(to_gpoly(g));
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (!full_reduce(s_poly(G[i], G[j]), G).empty()) return false;
        }
    }
    return true;
}

bool ideal_contains_one(const std::vector<MultiPoly>& gens, const GroebnerOptions& options) {
    if (gens.empty()) return false;
    return groebner(gens, options).is_unit_ideal();
}

bool ideal_member(const MultiPoly& p, const GroebnerBasis& gb) {
    if (p.is_zero()) return true;
    if (gb.generators.empty()) return false;
    return reduce(p.embed(gb.ring), gb.generators).is_zero();
}

namespace {

// Rational points with coordinates in {-2..2} where every polynomial vanishes.
std::optional<std::map<std::string, Rational>> search_zero(const std::vector<MultiPoly>& polys, const RingPtr& ring) {
    std::size_t n = ring->size();
    if (n > 5) return std::nullopt;
    std::vector<int> coords(n, -2);
    while (true) {
        std::map<std::string, Rational> point;
        for (std::size_t i = 0; i < n; ++i) point[ring->name(i)] = coords[i];
        bool all = std::all_of(polys.begin(), polys.end(), [&](const MultiPoly& p) { return poly_eval(p, point) == 0; });
        if (all) return point;
        std::size_t k = 0;
        while (k < n && coords[k] == 2) coords[k++] = -2;
        if (k == n) return std::nullopt;
        ++coords[k];
    }
}

std::vector<MultiPoly> jacobian_system(const MultiPoly& f) {
    std::vector<MultiPoly> gens{f};
    for (std::size_t i = 0; i < f.num_vars(); ++i) gens.push_back(poly_derivative(f, i));
    return gens;
}

}  // namespace

SmoothnessResult hypersurface_smooth(const MultiPoly& f, const GroebnerOptions& options) {
    if (f.is_constant()) throw Error(ErrorCode::Precondition, "hypersurface_smooth needs a non-constant f");
    auto gens = jacobian_system(f);
    SmoothnessResult r;
    r.witness = groebner(gens, options);
    r.smooth = r.witness.is_unit_ideal();
    if (!r.smooth) r.singular_point = search_zero(gens, f.ring());
    return r;
}

SuspensionReport suspension_report(const SuspTower& t, const GroebnerOptions& options,
                                   const FactorOptions& factor_options) {
    SuspensionReport r;
    MultiPoly f = t.level(1).f.embed(t.base_ring());
    r.f = f.to_string();
    r.class_group = class_group(t, factor_options);
    r.f_prime = r.class_group.factorization.total_multiplicity() == 1;
    r.absolute_irreducibility = r.class_group.absolute_irreducibility;
    r.factorial = r.f_prime;

    auto hs = hypersurface_smooth(f, options);
    r.hypersurface_smooth = hs.smooth;
    r.singular_point = hs.singular_point;

    // Jacobian criterion for uv - f in A^{n+2}, over base + (u, v) only.
    std::vector<std::string> names = t.base_ring()->variables();
    names.push_back(t.level(1).u_name);
    names.push_back(t.level(1).v_name);
    RingPtr A = make_ring(names);
    MultiPoly u = MultiPoly::variable(A, t.level(1).u_name), v = MultiPoly::variable(A, t.level(1).v_name);
    MultiPoly F = u * v - f.embed(A);
    std::vector<MultiPoly> gens{F};
    for (std::size_t i = 0; i < A->size(); ++i) gens.push_back(poly_derivative(F, i));
    r.suspension_smooth = ideal_contains_one(gens, options);
    r.routes_agree = r.suspension_smooth == r.hypersurface_smooth;

    if (r.factorial && r.hypersurface_smooth && r.suspension_smooth) {
        r.verdict = "smooth factorial suspension (flexible per the paper, not checked computationally)";
    } else {
        std::vector<std::string> issues;
        if (!r.factorial) issues.push_back("not factorial (f is not prime)");
        if (!r.hypersurface_smooth) issues.push_back("{f=0} is singular");
        if (!r.suspension_smooth) issues.push_back("the suspension is singular");
        for (std::size_t i = 0; i < issues.size(); ++i) r.verdict += (i ? "; " : "") + issues[i];
    }
    return r;
}

nlohmann::json SuspensionReport::to_json() const {
    nlohmann::json j;
    j["f"] = f;
    j["f_prime"] = f_prime;
    j["absolute_irreducibility"] = nlohmann::json::array();
    for (auto v : absolute_irreducibility) j["absolute_irreducibility"].push_back(susp::to_string(v));
    j["hypersurface_smooth"] = hypersurface_smooth;
    j["suspension_smooth"] = suspension_smooth;
    j["routes_agree"] = routes_agree;
    j["factorial"] = factorial;
    j["class_group"] = class_group.to_json();
    if (singular_point) {
        nlohmann::json p;
        for (const auto& [name, value] : *singular_point) p[name] = value.get_str();
        j["singular_point"] = p;
    } else {
        j["singular_point"] = nullptr;
    }
    j["verdict"] = verdict;
    j["smoothness_field_note"] = "Groebner bases over Q stay Groebner bases over C; smoothness verdicts hold over C";
    return j;
}

std::string SuspensionReport::to_text() const {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "f = " << f << "\n";
    out << "f prime in R:            " << yn(f_prime) << "\n";
    out << "absolute irreducibility: ";
    for (std::size_t i = 0; i < absolute_irreducibility.size(); ++i) {
        out << (i ? ", " : "") << susp::to_string(absolute_irreducibility[i]);
    }
    out << "\n";
    out << "{f=0} smooth:            " << yn(hypersurface_smooth) << "\n";
    out << "suspension smooth:       " << yn(suspension_smooth) << (routes_agree ? "" : " (DISAGREES with {f=0})")
        << "\n";
    out << "factorial:               " << yn(factorial) << "\n";
    out << "Cl(X):                   " << class_group.group.to_string() << "\n";
    if (singular_point) {
        out << "singular point:          (";
        bool first = true;
        for (const auto& [name, value] : *singular_point) {
            out << (first ? "" : ", ") << name << "=" << value.get_str();
            first = false;
        }
        out << ")\n";
    }
    out << "verdict: " << verdict << "\n";
    out << "note: smoothness computed over Q also holds over C\n";
    return out.str();
}

}  // namespace susp
