#include "susp/classgroup.hpp"
#include "susp/cli.hpp"
#include "susp/error.hpp"
#include "susp/geometry.hpp"
#include "susp/modulecheck.hpp"
#include "susp/parse.hpp"
#include "susp/tower.hpp"

#include <functional>
#include <sstream>

namespace susp {

namespace {

struct Check {
    std::string name;
    // Returns the detail line; throwing or returning an empty optional fails.
    std::function<std::pair<bool, std::string>()> run;
};

TowerPtr T(const std::string& ring, const std::string& f) { return tower_new(parse_ring_spec(ring), {f}); }

std::vector<Check> checks() {
    std::vector<Check> out;
    out.push_back({"threefold-equation", [] {
                       auto R = parse_ring_spec("QQ[x,y]");
                       MultiPoly f = parse_polynomial("(x-1)*x*y + 1", R);
                       return std::pair{f == parse_polynomial("x^2*y - x*y + 1", R), "f = " + f.to_string()};
                   }});
    out.push_back({"uv-equals-f", [] {
                       auto t = T("QQ[x]", "x");
                       SuspElem g = SuspElem::parse(t, 1, "u*v");
                       return std::pair{g.to_string() == "x", "u*v -> " + g.to_string()};
                   }});
    out.push_back({"u-not-invertible", [] {
                       auto t = T("QQ[x,y]", "(x-1)*x*y+1");
                       bool ok = !is_unit(SuspElem::u(t, 1)) && !is_unit(SuspElem::v(t, 1));
                       return std::pair{ok, "u, v non-units"};
                   }});
    out.push_back({"threefold-report", [] {
                       auto rep = suspension_report(*T("QQ[x,y]", "(x-1)*x*y+1"));
                       bool ok = rep.f_prime && rep.hypersurface_smooth && rep.suspension_smooth && rep.factorial &&
                                 rep.class_group.group.is_trivial();
                       return std::pair{ok, "f prime, {f=0} smooth, X smooth, Cl(X) = " +
                                                rep.class_group.group.to_string()};
                   }});
    out.push_back({"threefold-uvf-prime", [] {
                       auto r = is_prime_uvf(T("QQ[x,y]", "(x-1)*x*y+1"), 1);
                       return std::pair{r.u_prime && r.v_prime && r.f_prime, "u, v, f prime"};
                   }});
    for (auto [f, want] : std::vector<std::pair<const char*, const char*>>{
             {"x", "0"}, {"x^2", "Z/2"}, {"x*y", "Z"}, {"x^2*y^3", "Z"}, {"x^2*y^2", "Z ⊕ Z/2"}}) {
        out.push_back({std::string("class-group ") + f, [f = std::string(f), want = std::string(want)] {
                           std::string ring = f.find('y') == std::string::npos ? "QQ[x]" : "QQ[x,y]";
                           auto cg = class_group(*T(ring, f));
                           return std::pair{cg.group.to_string() == want, "Cl(X) = " + cg.group.to_string()};
                       }});
    }
    out.push_back({"torsion-free-iff-not-power", [] {
                       bool a = class_group(*T("QQ[x,y]", "x^2*y^3")).torsion_free;
                       bool b = class_group(*T("QQ[x]", "x^2")).torsion_free;
                       return std::pair{a && !b, "x^2*y^3 torsion-free, x^2 not"};
                   }});
    out.push_back({"factorial-iff-prime", [] {
                       int agree = 0, total = 0;
                       for (auto [ring, f] : std::vector<std::pair<const char*, const char*>>{
                                {"QQ[x]", "x"},
                                {"QQ[x]", "x+1"},
                                {"QQ[x]", "x^2"},
                                {"QQ[x,y]", "x*y"},
                                {"QQ[x,y]", "(x-1)*x*y+1"},
                                {"QQ[x,y]", "x^2*y^3"}}) {
                           auto t = T(ring, f);
                           bool prime = is_prime_uvf(t, 1).f_prime;
                           bool trivial = class_group(*t).group.is_trivial();
                           bool not_ufd = std::holds_alternative<NotUfd>(factor_susp(SuspElem::u(t, 1)));
                           ++total;
                           if (prime == trivial && not_ufd == !prime) ++agree;
                       }
                       return std::pair{agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
                   }});
    out.push_back({"x-is-uv", [] {
                       auto t = T("QQ[x]", "x");
                       auto r = std::get<SuspFactorization>(factor_susp(SuspElem::parse(t, 1, "x")));
                       bool irreducible = is_irreducible_base_elem(SuspElem::parse(t, 0, "x"));
                       return std::pair{r.to_string() == "(u) * (v)" && !irreducible, "x = " + r.to_string()};
                   }});
    out.push_back({"divisibility-lemma", [] {
                       auto t = T("QQ[x,y]", "(x-1)*x*y+1");
                       bool a = divides_u(SuspElem::parse(t, 1, "v*((x-1)*x*y+1) + u")).divisible();
                       bool b = divides_u(SuspElem::parse(t, 1, "v + u")).divisible();
                       return std::pair{a && !b, "u | v*f + u, u does not divide v + u"};
                   }});
    out.push_back({"xy-singular", [] {
                       auto r = hypersurface_smooth(parse_polynomial("x*y", parse_ring_spec("QQ[x,y]")));
                       bool ok = !r.smooth && r.singular_point && r.singular_point->at("x") == 0 &&
                                 r.singular_point->at("y") == 0;
                       return std::pair{ok, "singular at (x=0, y=0)"};
                   }});
    out.push_back({"fitting-criterion", [] {
                       auto Y = make_ring({"y1", "y2"});
                       auto row = [&](const char* a, const char* b) {
                           return std::vector<MultiPoly>{parse_polynomial(a, Y), parse_polynomial(b, Y)};
                       };
                       bool a = can_be_generated_by(PresentationMatrix(Y, 2, {row("y1+1", "-y1")}), 1);
                       bool b = can_be_generated_by(PresentationMatrix(Y, 2, {row("y1", "0"), row("0", "y2")}), 1);
                       bool c = can_be_generated_by(PresentationMatrix(Y, 2), 1);
                       return std::pair{a && !b && !c, "true/false/false"};
                   }});
    out.push_back({"gm-example-report", [] {
                       auto r = section5_report();
                       bool ok = r.verdict.rfind("inconclusive", 0) == 0 &&
                                 r.known_relations.row_string(0) == "(y1 + 1, -y1)";
                       return std::pair{ok, r.verdict + ", relation " + r.known_relations.row_string(0)};
                   }});
    return out;
}

}  // namespace

CliResult verify_paper() {
    CliResult r;
    std::ostringstream out;
    for (const auto& c : checks()) {
        bool ok = false;
        std::string detail;
        try {
            std::tie(ok, detail) = c.run();
        } catch (const Error& e) {
            detail = "error[" + std::string(error_code_name(e.code())) + "]: " + e.what();
        }
        out << (ok ? "PASS " : "FAIL ") << c.name << ": " << detail << "\n";
        if (!ok) r.exit_code = 1;
    }
    r.out = out.str();
    return r;
}

}  // namespace susp
