#include <doctest.h>

#include "support/random_poly.hpp"
#include "susp/error.hpp"
#include "susp/geometry.hpp"
#include "susp/parse.hpp"

using namespace susp;

namespace {

std::vector<MultiPoly> Ps(std::initializer_list<const char*> exprs, const RingPtr& R) {
    std::vector<MultiPoly> out;
    for (auto e : exprs) out.push_back(parse_polynomial(e, R));
    return out;
}

RingPtr Qxy() { return make_ring({"x", "y"}); }

// Coefficient of the grevlex-largest term is 1.
bool to_gpoly_lc_is_one(const MultiPoly& g) {
    const Term* best = &g.terms().front();
    for (const auto& t : g.terms()) {
        if (grevlex_greater(t.exponents, best->exponents)) best = &t;
    }
    return best->coeff == 1;
}

}  // namespace

TEST_CASE("groebner examples") {
    auto R = Qxy();
    auto gb = groebner(Ps({"x", "y"}, R));
    CHECK(gb.to_strings() == std::vector<std::string>{"x", "y"});
    CHECK(gb.order == "grevlex");

    gb = groebner(Ps({"x^2-1", "x-1"}, R));
    CHECK(gb.to_strings() == std::vector<std::string>{"x - 1"});

    gb = groebner(Ps({"x*y-1", "x"}, R));
    CHECK(gb.is_unit_ideal());

    gb = groebner(Ps({"0"}, R));
    CHECK(gb.generators.empty());

    // A classic: the twisted-cubic-like ideal (x^2 - y, x^3 - x) has basis
    // containing y^2 - y after elimination.
    gb = groebner(Ps({"x^2-y", "x^3-x"}, R));
    CHECK(certify_groebner(gb));
    CHECK(ideal_member(parse_polynomial("y^2-y", R), gb));
    CHECK_FALSE(ideal_member(parse_polynomial("y", R), gb));
}

TEST_CASE("grevlex order") {
    // x > y > z; degree first, then smaller exponent in the last variable wins.
    CHECK(grevlex_greater({1, 0, 0}, {0, 1, 0}));
    CHECK(grevlex_greater({1, 1, 0}, {2, 0, 1}) == false);  // different degrees
    CHECK(grevlex_greater({1, 1, 0}, {2, 0, 0}) == false);
    CHECK(grevlex_greater({2, 0, 0}, {1, 1, 0}));
    CHECK(grevlex_greater({0, 2, 0}, {1, 0, 1}));
}

TEST_CASE("ideal_contains_one examples") {
    auto R = Qxy();
    CHECK(ideal_contains_one(Ps({"x", "x+1"}, R)));
    CHECK_FALSE(ideal_contains_one(Ps({"x", "y"}, R)));
    CHECK(ideal_contains_one(Ps({"(x-1)*x*y+1", "(2*x-1)*y", "(x-1)*x"}, R)));
    CHECK_FALSE(ideal_contains_one({}));
}

TEST_CASE("pair budget raises ResourceLimit") {
    auto R = make_ring({"x", "y", "z"});
    GroebnerOptions tiny;
    tiny.pair_budget = 1;
    try {
        groebner(Ps({"x^2*y - z", "y^2*z - x", "z^2*x - y"}, R), tiny);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResourceLimit);
    }
}

TEST_CASE("hypersurface_smooth examples") {
    auto r = hypersurface_smooth(parse_polynomial("x", make_ring({"x"})));
    CHECK(r.smooth);
    CHECK(r.witness.is_unit_ideal());

    auto R = Qxy();
    r = hypersurface_smooth(parse_polynomial("x*y", R));
    CHECK_FALSE(r.smooth);
    CHECK_FALSE(r.witness.is_unit_ideal());
    REQUIRE(r.singular_point.has_value());
    CHECK(r.singular_point->at("x") == 0);
    CHECK(r.singular_point->at("y") == 0);

    CHECK(hypersurface_smooth(parse_polynomial("(x-1)*x*y+1", R)).smooth);
    // The cusp y^2 = x^3 is singular at the origin.
    CHECK_FALSE(hypersurface_smooth(parse_polynomial("y^2-x^3", R)).smooth);
    CHECK_THROWS_AS(hypersurface_smooth(parse_polynomial("3", R)), Error);
}

TEST_CASE("suspension_report examples") {
    auto rep = suspension_report(*tower_new(Qxy(), {"(x-1)*x*y+1"}));
    CHECK(rep.f_prime);
    CHECK(rep.hypersurface_smooth);
    CHECK(rep.suspension_smooth);
    CHECK(rep.factorial);
    CHECK(rep.class_group.group.is_trivial());
    CHECK(rep.verdict == "smooth factorial suspension (flexible per the paper, not checked computationally)");

    rep = suspension_report(*tower_new(Qxy(), {"x*y"}));
    CHECK_FALSE(rep.factorial);
    CHECK_FALSE(rep.hypersurface_smooth);
    CHECK_FALSE(rep.suspension_smooth);
    CHECK(rep.class_group.group.to_string() == "Z");

    rep = suspension_report(*tower_new(make_ring({"x"}), {"x"}));
    CHECK(rep.factorial);
    CHECK(rep.suspension_smooth);
    auto j = rep.to_json();
    CHECK(j["f_prime"] == true);
    CHECK(j["class_group"]["free_rank"] == 0);
}

TEST_CASE("property: Buchberger certification on random ideals") {
    auto R = make_ring({"x", "y", "z"});
    testing::PolyGen gen(R, 31);
    for (int i = 0; i < 60; ++i) {
        std::vector<MultiPoly> gens;
        int n = gen.uniform(1, 3);
        for (int k = 0; k < n; ++k) gens.push_back(gen.poly(3, 2, 3));
        auto gb = groebner(gens);
        CHECK(certify_groebner(gb));
        // every input reduces to zero, every output is monic
        for (const auto& g : gens) CHECK(ideal_member(g, gb));
        for (const auto& g : gb.generators) CHECK(to_gpoly_lc_is_one(g));
    }
}

TEST_CASE("property: rational common zeros block the unit ideal") {
    auto R = make_ring({"x", "y", "z"});
    testing::PolyGen gen(R, 32);
    for (int i = 0; i < 60; ++i) {
        // Generators of the form sum_k h_k (x_k - a_k) vanish at a.
        std::vector<Rational> a{gen.uniform(-3, 3), gen.uniform(-3, 3), gen.uniform(-3, 3)};
        std::vector<MultiPoly> gens;
        int n = gen.uniform(1, 4);
        for (int k = 0; k < n; ++k) {
            MultiPoly g(R);
            for (std::size_t v = 0; v < 3; ++v) {
                g += gen.poly(2, 1, 3) * (MultiPoly::variable(R, v) - MultiPoly::constant(R, a[v]));
            }
            gens.push_back(g);
        }
        CHECK_FALSE(ideal_contains_one(gens));
    }
    // and a singular report never carries a unit witness
    testing::PolyGen g2(Qxy(), 33);
    for (int i = 0; i < 60; ++i) {
        MultiPoly f = g2.nonconstant(4, 3, 3);
        auto r = hypersurface_smooth(f);
        if (!r.smooth) CHECK_FALSE(r.witness.is_unit_ideal());
        if (r.singular_point) {
            for (const auto& p : std::vector<MultiPoly>{f, poly_derivative(f, 0), poly_derivative(f, 1)}) {
                CHECK(poly_eval(p, *r.singular_point) == 0);
            }
            CHECK_FALSE(r.smooth);
        }
    }
}

TEST_CASE("property: adding a generator keeps the unit ideal") {
    auto R = Qxy();
    testing::PolyGen gen(R, 34);
    int units = 0;
    for (int i = 0; i < 80; ++i) {
        std::vector<MultiPoly> gens{gen.poly(3, 2, 3), gen.poly(3, 2, 3)};
        bool before = ideal_contains_one(gens);
        gens.push_back(gen.poly(3, 2, 3));
        bool after = ideal_contains_one(gens);
        if (before) {
            ++units;
            CHECK(after);
        }
    }
    CHECK(units > 5);
}

TEST_CASE("property: both smoothness routes agree on the pool") {
    std::vector<std::pair<const char*, const char*>> pool{
        {"QQ[x]", "x"},      {"QQ[x]", "x^2"},           {"QQ[x]", "x+1"},         {"QQ[x,y]", "x*y"},
        {"QQ[x,y]", "x+1"},  {"QQ[x,y]", "(x-1)*x*y+1"}, {"QQ[x,y]", "x^2*y^3"},   {"QQ[x,y]", "y^2-x^3"},
        {"QQ[x,y]", "x^2+y^2-1"}};
    for (auto [ring, f] : pool) {
        auto rep = suspension_report(*tower_new(parse_ring_spec(ring), {f}));
        CHECK_MESSAGE(rep.routes_agree, f);
    }
}
