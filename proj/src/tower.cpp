#include "susp/tower.hpp"

#include "susp/error.hpp"
#include "susp/parse.hpp"

#include <algorithm>
#include <sstream>

namespace susp {

MultiPoly SuspTower::normal_form(const MultiPoly& p) const {
    MultiPoly cur = p.embed(ambient_);
    for (std::size_t k = levels_.size(); k >= 1; --k) {
        const Level& lv = levels_[k - 1];
        bool mixed = std::any_of(cur.terms().begin(), cur.terms().end(), [&](const Term& t) {
            return t.exponents[lv.u_index] > 0 && t.exponents[lv.v_index] > 0;
        });
        if (!mixed) continue;
        std::vector<Term> keep;
        std::vector<MultiPoly> fpow{MultiPoly::constant(ambient_, 1)};
        MultiPoly rewritten(ambient_);
        for (const auto& t : cur.terms()) {
            std::uint32_t m = std::min(t.exponents[lv.u_index], t.exponents[lv.v_index]);
            if (m == 0) {
                keep.push_back(t);
                continue;
            }
            while (fpow.size() <= m) fpow.push_back(fpow.back() * lv.f);
            Exponents e = t.exponents;
            e[lv.u_index] -= m;
            e[lv.v_index] -= m;
            rewritten += fpow[m].mul_monomial(e, t.coeff);
        }
        cur = MultiPoly(ambient_, std::move(keep)) + rewritten;
    }
    return cur;
}

std::size_t SuspTower::level_of(const MultiPoly& p) const {
    MultiPoly q = p.embed(ambient_);
    for (std::size_t k = levels_.size(); k >= 1; --k) {
        if (q.involves(levels_[k - 1].u_index) || q.involves(levels_[k - 1].v_index)) return k;
    }
    return 0;
}

std::string SuspTower::to_string() const {
    std::ostringstream out;
    out << base_->to_string();
    for (const auto& lv : levels_) {
        out << "[" << lv.u_name << "," << lv.v_name << "]/(" << lv.u_name << "*" << lv.v_name << " - ("
            << lv.f.to_string() << "))";
    }
    return out.str();
}

TowerPtr tower_new(const RingPtr& base, const std::vector<std::string>& fs,
                   const std::vector<std::pair<std::string, std::string>>& names) {
    if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "a tower needs at least one level");
    if (!names.empty() && names.size() != fs.size()) {
        throw Error(ErrorCode::InvalidArgument, "one (u, v) name pair is required per level");
    }
    std::vector<std::pair<std::string, std::string>> uv = names;
    if (uv.empty()) {
        if (fs.size() == 1) {
            uv.emplace_back("u", "v");
        } else {
            for (std::size_t k = 1; k <= fs.size(); ++k) {
                uv.emplace_back("u" + std::to_string(k), "v" + std::to_string(k));
            }
        }
    }
    std::vector<std::string> vars = base->variables();
    for (const auto& [u, v] : uv) {
        for (const auto& name : {u, v}) {
            if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
                throw Error(ErrorCode::InvalidArgument, "tower variable '" + name + "' clashes with an existing name");
            }
            vars.push_back(name);
        }
    }

    auto tower = std::shared_ptr<SuspTower>(new SuspTower());
    tower->base_ = base;
    tower->ambient_ = make_ring(vars);
    for (std::size_t k = 1; k <= fs.size(); ++k) {
        std::vector<std::string> below(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(base->size() + 2 * (k - 1)));
        MultiPoly f = tower->normal_form(parse_polynomial(fs[k - 1], make_ring(below)));
        if (f.is_zero()) throw Error(ErrorCode::ZeroF, "f_" + std::to_string(k) + " is zero");
        if (f.is_constant()) {
            throw Error(ErrorCode::UnitF, "f_" + std::to_string(k) + " = " + f.to_string() +
                                              " is a unit; the quotient would be a Laurent polynomial ring");
        }
        std::size_t ui = base->size() + 2 * (k - 1);
        tower->levels_.push_back(SuspTower::Level{f, uv[k - 1].first, uv[k - 1].second, ui, ui + 1});
    }
    return tower;
}

bool validate_domain(const SuspTower& t) {
    for (std::size_t k = 1; k <= t.height(); ++k) {
        if (t.level(k).f.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const SuspElem& a, const SuspElem& b) {
    if (a.tower() != b.tower() || a.level() != b.level()) {
        throw Error(ErrorCode::TowerMismatch, "operands belong to different towers or levels");
    }
}

// Graded degree of a monomial at level k.
int degree_of(const Exponents& e, const SuspTower::Level& lv) {
    return static_cast<int>(e[lv.u_index]) - static_cast<int>(e[lv.v_index]);
}

}  // namespace

SuspElem::SuspElem(TowerPtr tower, std::size_t level, const MultiPoly& p)
    : tower_(std::move(tower)), level_(level), poly_(tower_->ambient_ring()) {
    if (level_ > tower_->height()) {
        throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(level_) + " exceeds the tower height");
    }
    MultiPoly q = p.embed(tower_->ambient_ring());
    for (auto v : q.variables_used()) {
        if (v >= tower_->vars_at(level_)) {
            throw Error(ErrorCode::InvalidArgument, "variable '" + tower_->ambient_ring()->name(v) +
                                                        "' is not available at level " + std::to_string(level_));
        }
    }
    poly_ = tower_->normal_form(q);
}

SuspElem SuspElem::parse(const TowerPtr& tower, std::size_t level, const std::string& text) {
    if (level > tower->height()) {
        throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(level) + " exceeds the tower height");
    }
    const auto& all = tower->ambient_ring()->variables();
    std::vector<std::string> visible(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(tower->vars_at(level)));
    return SuspElem(tower, level, parse_polynomial(text, make_ring(visible)));
}

SuspElem SuspElem::constant(const TowerPtr& tower, std::size_t level, const Rational& c) {
    return SuspElem(tower, level, MultiPoly::constant(tower->ambient_ring(), c));
}

SuspElem SuspElem::u(const TowerPtr& tower, std::size_t level) {
    return SuspElem(tower, level, MultiPoly::variable(tower->ambient_ring(), tower->level(level).u_index));
}

SuspElem SuspElem::v(const TowerPtr& tower, std::size_t level) {
    return SuspElem(tower, level, MultiPoly::variable(tower->ambient_ring(), tower->level(level).v_index));
}

SuspElem SuspElem::f(const TowerPtr& tower, std::size_t level) {
    return SuspElem(tower, level, tower->level(level).f);
}

bool SuspElem::in_base() const { return tower_->level_of(poly_) == 0; }

int SuspElem::min_degree() const {
    if (level_ == 0) return 0;
    const auto& lv = tower_->level(level_);
    int d = 0;
    bool first = true;
    for (const auto& t : poly_.terms()) {
        int g = degree_of(t.exponents, lv);
        d = first ? g : std::min(d, g);
        first = false;
    }
    return d;
}

int SuspElem::max_degree() const {
    if (level_ == 0) return 0;
    const auto& lv = tower_->level(level_);
    int d = 0;
    bool first = true;
    for (const auto& t : poly_.terms()) {
        int g = degree_of(t.exponents, lv);
        d = first ? g : std::max(d, g);
        first = false;
    }
    return d;
}

SuspElem SuspElem::coefficient(int degree) const {
    if (level_ == 0) throw Error(ErrorCode::InvalidArgument, "level-0 elements have no graded coefficients");
    const auto& lv = tower_->level(level_);
    std::vector<Term> terms;
    for (const auto& t : poly_.terms()) {
        if (degree_of(t.exponents, lv) != degree) continue;
        Term c = t;
        c.exponents[lv.u_index] = 0;
        c.exponents[lv.v_index] = 0;
        terms.push_back(std::move(c));
    }
    return SuspElem(tower_, level_ - 1, MultiPoly(tower_->ambient_ring(), std::move(terms)));
}

std::map<int, SuspElem> SuspElem::components() const {
    std::map<int, SuspElem> out;
    if (level_ == 0) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    const auto& lv = tower_->level(level_);
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : poly_.terms()) parts[degree_of(t.exponents, lv)].push_back(t);
    for (auto& [d, terms] : parts) {
        out.emplace(d, SuspElem(tower_, level_, MultiPoly(tower_->ambient_ring(), std::move(terms))));
    }
    return out;
}

SuspElem SuspElem::lift(std::size_t level) const {
    if (level < level_) throw Error(ErrorCode::InvalidArgument, "cannot lift to a lower level");
    return SuspElem(tower_, level, poly_);
}

SuspElem SuspElem::operator-() const { return SuspElem(tower_, level_, -poly_); }

SuspElem operator+(const SuspElem& a, const SuspElem& b) {
    require_same(a, b);
    return SuspElem(a.tower_, a.level_, a.poly_ + b.poly_);
}

SuspElem operator-(const SuspElem& a, const SuspElem& b) {
    require_same(a, b);
    return SuspElem(a.tower_, a.level_, a.poly_ - b.poly_);
}

SuspElem operator*(const SuspElem& a, const SuspElem& b) {
    require_same(a, b);
    return SuspElem(a.tower_, a.level_, a.poly_ * b.poly_);
}

SuspElem operator*(const SuspElem& a, const Rational& c) { return SuspElem(a.tower_, a.level_, a.poly_ * c); }

bool operator==(const SuspElem& a, const SuspElem& b) {
    return a.tower_ == b.tower_ && a.level_ == b.level_ && a.poly_ == b.poly_;
}

SuspElem SuspElem::pow(unsigned k) const {
    SuspElem r = constant(tower_, level_, 1);
    SuspElem base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

SuspElem susp_mul(const SuspElem& g, const SuspElem& h) { return g * h; }

std::map<int, SuspElem> susp_components(const SuspElem& g) { return g.components(); }

bool is_unit(const SuspElem& g) { return !g.is_zero() && g.poly().is_constant(); }

// ---------------------------------------------------------------------------

namespace {

// Shared by divides_u and divides_v: `self` is the variable being divided out,
// `other` its partner.
UDivision divide_by_generator(const SuspElem& g, bool by_u) {
    if (g.level() != 1) {
        throw Error(ErrorCode::Unsupported, "u/v divisibility is implemented for level-1 elements only");
    }
    const TowerPtr& t = g.tower();
    const auto& lv = t->level(1);
    std::size_t self = by_u ? lv.u_index : lv.v_index;
    std::size_t other = by_u ? lv.v_index : lv.u_index;
    const RingPtr& A = t->ambient_ring();

    std::vector<Term> shifted, rest;
    for (const auto& term : g.poly().terms()) {
        if (term.exponents[self] > 0) {
            Term s = term;
            --s.exponents[self];
            shifted.push_back(std::move(s));
        } else {
            rest.push_back(term);
        }
    }
    // rest = sum_j b_j other^j; f lies in R, so f | rest iff f | every b_j.
    MultiPoly B(A, std::move(rest));
    UDivision result;
    auto q = poly_exact_divide(B, lv.f);
    if (!q) {
        auto coeffs = B.coefficients_in(other);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (!poly_exact_divide(coeffs[j], lv.f)) {
                result.offending_index = static_cast<int>(j);
                result.offending_coeff = SuspElem(t, 0, coeffs[j]);
                break;
            }
        }
        return result;
    }
    Exponents e(A->size(), 0);
    e[other] = 1;
    result.quotient = SuspElem(t, 1, MultiPoly(A, std::move(shifted)) + q->mul_monomial(e, 1));
    return result;
}

}  // namespace

UDivision divides_u(const SuspElem& g) { return divide_by_generator(g, true); }
UDivision divides_v(const SuspElem& g) { return divide_by_generator(g, false); }

// ---------------------------------------------------------------------------

namespace {

SuspElem strip_one(const SuspElem& g, std::size_t var) {
    // Every monomial of g contains var.
    std::vector<Term> terms;
    for (auto t : g.poly().terms()) {
        --t.exponents[var];
        terms.push_back(std::move(t));
    }
    return SuspElem(g.tower(), g.level(), MultiPoly(g.tower()->ambient_ring(), std::move(terms)));
}

SuspElem reconstruct_rec(const SuspElem& g, const SuspElem& h, unsigned d) {
    if (d == 0) return g;
    const TowerPtr& t = g.tower();
    std::size_t k = g.level();
    const auto& lv = t->level(k);
    SuspElem u = SuspElem::u(t, k), v = SuspElem::v(t, k);
    int top = static_cast<int>(2 * d);
    // g = a + u g', h = b + v h'; a_{2d-1}, b_{2d-1} are the u^{2d}, v^{2d}
    // coefficients of g and h.
    SuspElem a_top = g.coefficient(top).lift(k);
    SuspElem b_top = h.coefficient(-top).lift(k);
    SuspElem a = g.coefficient(0).lift(k);
    SuspElem b = h.coefficient(0).lift(k);
    SuspElem fd = SuspElem(t, k, lv.f).pow(d);
    if (a != b_top * fd || b != a_top * fd) {
        throw Error(ErrorCode::ConsistencyError, "fraction coefficients violate a = b_{2d-1} f^d");
    }
    SuspElem g_next = g - a - a_top * u.pow(2 * d);
    SuspElem h_next = h - b - b_top * v.pow(2 * d);
    g_next = g_next.is_zero() ? g_next : strip_one(g_next, lv.u_index);
    h_next = h_next.is_zero() ? h_next : strip_one(h_next, lv.v_index);
    return b_top * v.pow(d) + a_top * u.pow(d) + reconstruct_rec(g_next, h_next, d - 1);
}

}  // namespace

SuspElem reconstruct_from_fractions(const SuspElem& g, const SuspElem& h, unsigned d) {
    require_same(g, h);
    if (g.level() == 0) throw Error(ErrorCode::InvalidArgument, "reconstruction needs a level >= 1");
    if (!g.is_zero() && g.min_degree() < 0) {
        throw Error(ErrorCode::Precondition, "g must lie in R[u] (no negative degrees)");
    }
    if (!h.is_zero() && h.max_degree() > 0) {
        throw Error(ErrorCode::Precondition, "h must lie in R[v] (no positive degrees)");
    }
    const TowerPtr& t = g.tower();
    SuspElem u = SuspElem::u(t, g.level()), v = SuspElem::v(t, g.level());
    if (v.pow(d) * g != u.pow(d) * h) {
        throw Error(ErrorCode::ConsistencyError, "v^d g != u^d h; the fractions do not define one element");
    }
    return reconstruct_rec(g, h, d);
}

}  // namespace susp
