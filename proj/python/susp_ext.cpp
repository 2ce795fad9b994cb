#include "susp/classgroup.hpp"
#include "susp/cli.hpp"
#include "susp/error.hpp"
#include "susp/geometry.hpp"
#include "susp/modulecheck.hpp"
#include "susp/parse.hpp"
#include "susp/tower.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace susp;

namespace {

TowerPtr tower(const std::string& ring, const std::vector<std::string>& fs) {
    return tower_new(parse_ring_spec(ring), fs);
}

SuspElem top_elem(const TowerPtr& t, const std::string& expr) { return SuspElem::parse(t, t->height(), expr); }

using Pairs = std::vector<std::pair<std::string, unsigned>>;

Pairs pairs(const std::vector<std::pair<MultiPoly, unsigned>>& fs) {
    Pairs out;
    for (const auto& [p, m] : fs) out.emplace_back(p.to_string(), m);
    return out;
}

IntMatrix int_matrix(const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (const auto& x : row) r.back().emplace_back(Integer(py::str(x).cast<std::string>()));
    }
    return IntMatrix::from_rows(r);
}

std::vector<std::vector<py::int_>> py_matrix(const IntMatrix& m) {
    std::vector<std::vector<py::int_>> out(m.rows());
    py::object to_int = py::module_::import("builtins").attr("int");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_int(m.at(i, j).get_str()));
    }
    return out;
}

PresentationMatrix presentation(const std::string& ring, std::size_t cols,
                                const std::vector<std::vector<std::string>>& rows) {
    RingPtr R = parse_ring_spec(ring);
    PresentationMatrix p(R, cols);
    for (const auto& row : rows) {
        std::vector<MultiPoly> r;
        for (const auto& e : row) r.push_back(parse_polynomial(e, R));
        p.append_row(std::move(r));
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_susp, m) {
    m.doc() = "Suspensions uv = f over polynomial rings: factoring, class groups, smoothness";

    static py::exception<Error> exc(m, "_Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(error_code_name(e.code())), std::string(e.what()));
            PyErr_SetObject(exc.ptr(), args.ptr());
        }
    });

    m.def("run", [](const std::vector<std::string>& args) {
        CliResult r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
    }, py::arg("args"), "Run one susp command line; returns (exit_code, stdout, stderr).");

    m.def("normal_form", [](const std::string& ring, const std::vector<std::string>& fs, const std::string& expr) {
        if (fs.empty()) return parse_polynomial(expr, parse_ring_spec(ring)).to_string();
        return top_elem(tower(ring, fs), expr).to_string();
    }, py::arg("ring"), py::arg("fs"), py::arg("expr"));

    m.def("multiply", [](const std::string& ring, const std::vector<std::string>& fs, const std::string& a,
                         const std::string& b) {
        auto t = tower(ring, fs);
        return susp_mul(top_elem(t, a), top_elem(t, b)).to_string();
    }, py::arg("ring"), py::arg("fs"), py::arg("a"), py::arg("b"));

    m.def("factor", [](const std::string& ring, const std::string& expr) {
        Factorization f = factor_multivariate(parse_polynomial(expr, parse_ring_spec(ring)));
        return py::make_tuple(f.unit.get_str(), pairs(f.factors));
    }, py::arg("ring"), py::arg("expr"), "Factor over Q: (unit, [(factor, multiplicity), ...]).");

    m.def("is_irreducible", [](const std::string& ring, const std::string& expr) {
        return is_irreducible(parse_polynomial(expr, parse_ring_spec(ring)));
    }, py::arg("ring"), py::arg("expr"));

    m.def("factor_susp", [](const std::string& ring, const std::string& f, const std::string& expr) {
        auto t = tower(ring, {f});
        SuspFactorResult r = factor_susp(top_elem(t, expr));
        py::dict d;
        if (auto* nu = std::get_if<NotUfd>(&r)) {
            d["ufd"] = false;
            d["witness"] = pairs(nu->witness.factors);
            return d;
        }
        const auto& sf = std::get<SuspFactorization>(r);
        Pairs fs;
        for (const auto& [p, m] : sf.factors) fs.emplace_back(p.to_string(), m);
        d["ufd"] = true;
        d["unit"] = sf.unit.to_string();
        d["factors"] = fs;
        return d;
    }, py::arg("ring"), py::arg("f"), py::arg("expr"));

    m.def("certify_prime", [](const std::string& ring, const std::string& f, const std::string& expr) {
        auto t = tower(ring, {f});
        return certify_prime(top_elem(t, expr));
    }, py::arg("ring"), py::arg("f"), py::arg("expr"));

    m.def("is_prime_uvf", [](const std::string& ring, const std::vector<std::string>& fs) {
        auto t = tower(ring, fs);
        return is_prime_uvf(t, t->height()).f_prime;
    }, py::arg("ring"), py::arg("fs"));

    m.def("divides_u", [](const std::string& ring, const std::string& f, const std::string& expr) -> py::object {
        auto r = divides_u(top_elem(tower(ring, {f}), expr));
        if (!r.divisible()) return py::none();
        return py::str(r.quotient->to_string());
    }, py::arg("ring"), py::arg("f"), py::arg("expr"), "g/u as a string, or None.");

    m.def("class_group_json", [](const std::string& ring, const std::string& f) {
        return exact_sequence_report(*tower(ring, {f})).data.dump();
    }, py::arg("ring"), py::arg("f"));

    m.def("suspension_report_json", [](const std::string& ring, const std::string& f) {
        return suspension_report(*tower(ring, {f})).to_json().dump();
    }, py::arg("ring"), py::arg("f"));

    m.def("smith_normal_form", [](const std::vector<std::vector<py::int_>>& rows) {
        SmithForm s = smith_normal_form(int_matrix(rows));
        return py::make_tuple(py_matrix(s.U), py_matrix(s.D), py_matrix(s.V));
    }, py::arg("rows"), "(U, D, V) with U @ M @ V == D.");

    m.def("cokernel", [](const std::vector<std::vector<py::int_>>& rows) {
        return cokernel(int_matrix(rows)).to_string();
    }, py::arg("rows"));

    m.def("groebner", [](const std::string& ring, const std::vector<std::string>& gens) {
        RingPtr R = parse_ring_spec(ring);
        std::vector<MultiPoly> ps;
        for (const auto& g : gens) ps.push_back(parse_polynomial(g, R));
        if (ps.empty()) return std::vector<std::string>{};
        return groebner(ps).to_strings();
    }, py::arg("ring"), py::arg("gens"), "Reduced grevlex basis.");

    m.def("hypersurface_smooth", [](const std::string& ring, const std::string& f) {
        auto r = hypersurface_smooth(parse_polynomial(f, parse_ring_spec(ring)));
        py::dict d;
        d["smooth"] = r.smooth;
        d["witness"] = r.witness.to_strings();
        if (r.singular_point) {
            std::map<std::string, std::string> pt;
            for (const auto& [k, v] : *r.singular_point) pt[k] = v.get_str();
            d["singular_point"] = pt;
        } else {
            d["singular_point"] = py::none();
        }
        return d;
    }, py::arg("ring"), py::arg("f"));

    m.def("fitting_ideal", [](const std::string& ring, std::size_t cols,
                              const std::vector<std::vector<std::string>>& rows, std::size_t k) {
        std::vector<std::string> out;
        for (const auto& g : fitting_ideal(presentation(ring, cols, rows), k)) out.push_back(g.to_string());
        return out;
    }, py::arg("ring"), py::arg("cols"), py::arg("rows"), py::arg("k"));

    m.def("can_be_generated_by", [](const std::string& ring, std::size_t cols,
                                    const std::vector<std::vector<std::string>>& rows, std::size_t k) {
        return can_be_generated_by(presentation(ring, cols, rows), k);
    }, py::arg("ring"), py::arg("cols"), py::arg("rows"), py::arg("k"));

    m.def("gm_example_report_json", [](std::optional<std::vector<std::vector<std::string>>> rows) {
        std::optional<PresentationMatrix> p;
        if (rows) p = presentation("QQ[y1,y2]", 2, *rows);
        return section5_report(p).to_json().dump();
    }, py::arg("rows") = py::none());

    m.def("verify_paper", [] {
        CliResult r = verify_paper();
        return py::make_tuple(r.exit_code, r.out);
    });
}
