#include "susp/classgroup.hpp"

#include "susp/error.hpp"

#include <sstream>

namespace susp {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

nlohmann::json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

nlohmann::json IntMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(integer_to_json(at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& D = s.D;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        // least nonzero |entry| of the trailing block as pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < r; ++i) {
            for (std::size_t j = t; j < c; ++j) {
                if (D.at(i, j) == 0) continue;
                if (!found || abs(D.at(i, j)) < abs(D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                Integer q = D.at(i, t) / D.at(t, t);
                row_axpy(D, i, t, q);
                row_axpy(s.U, i, t, q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                Integer q = D.at(t, j) / D.at(t, t);
                col_axpy(D, j, t, q);
                col_axpy(s.V, j, t, q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a smaller remainder survived in row or column t: make it the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < r; ++i) {
                    if (D.at(i, t) != 0 && abs(D.at(i, t)) < abs(D.at(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                }
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (D.at(t, j) != 0 && abs(D.at(t, j)) < abs(D.at(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                }
                swap_rows(D, t, bi);
                swap_rows(s.U, t, bi);
                swap_cols(D, t, bj);
                swap_cols(s.V, t, bj);
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i) {
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_axpy(D, t, i, -1);
                        row_axpy(s.U, t, i, -1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (D.at(t, t) < 0) {
            row_axpy(D, t, t, 2);
            row_axpy(s.U, t, t, 2);
        }
    }
    return s;
}

std::optional<Integer> AbelianGroupPresentation::order() const {
    if (free_rank > 0) return std::nullopt;
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::string AbelianGroupPresentation::to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
    return out;
}

AbelianGroupPresentation cokernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    AbelianGroupPresentation g;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        const Integer& d = s.D.at(i, i);
        if (d == 0) continue;
        ++rank;
        if (d > 1) g.invariant_factors.push_back(d);
    }
    g.free_rank = m.rows() - rank;
    return g;
}

std::string FormalDivisor::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += (i ? " + " : "") + terms[i].second.get_str() + "*D(" + terms[i].first.to_string() + ")";
    }
    return out;
}

nlohmann::json ClassGroupResult::to_json() const {
    nlohmann::json j;
    j["free_rank"] = group.free_rank;
    j["invariant_factors"] = nlohmann::json::array();
    for (const auto& d : group.invariant_factors) j["invariant_factors"].push_back(integer_to_json(d));
    j["omega"] = nlohmann::json::array();
    for (const auto& a : omega) j["omega"].push_back(integer_to_json(a));
    j["torsion_free"] = torsion_free;
    j["absolute_irreducibility"] = nlohmann::json::array();
    for (auto v : absolute_irreducibility) j["absolute_irreducibility"].push_back(susp::to_string(v));
    j["primes"] = nlohmann::json::array();
    for (const auto& [p, a] : factorization.factors) j["primes"].push_back(p.to_string());
    j["group"] = group.to_string();
    j["div_u"] = div_u.to_string();
    return j;
}

ClassGroupResult class_group(const SuspTower& t, const FactorOptions& options) {
    ClassGroupResult r;
    MultiPoly f = t.level(1).f.embed(t.base_ring());
    r.factorization = factor_multivariate(f, options);
    std::size_t s = r.factorization.factors.size();
    IntMatrix column(s, 1);
    Integer g = 0;
    for (std::size_t i = 0; i < s; ++i) {
        const auto& [p, a] = r.factorization.factors[i];
        Integer ai = a;
        column.at(i, 0) = ai;
        r.omega.push_back(ai);
        r.div_u.terms.emplace_back(p, ai);
        r.absolute_irreducibility.push_back(newton_indecomposable(p));
        g = gcd(g, ai);
    }
    r.group = cokernel(column);
    r.torsion_free = g == 1;
    return r;
}

ExactSequenceReport exact_sequence_report(const SuspTower& t, const FactorOptions& options) {
    ClassGroupResult cg = class_group(t, options);
    std::size_t s = cg.omega.size();
    std::string zs = s == 1 ? "Z" : "Z^" + std::to_string(s);
    std::string omega = "(";
    for (std::size_t i = 0; i < s; ++i) omega += (i ? "," : "") + cg.omega[i].get_str();
    omega += ")";

    ExactSequenceReport rep;
    std::ostringstream out;
    out << "0 → Z →ξ " << zs << " →ψ " << cg.group.to_string() << " →φ′ 0 → 0\n";
    out << "ξ(1) = ω = " << omega << "\n";
    out << "D_i ↔ ";
    for (std::size_t i = 0; i < s; ++i) out << (i ? ", " : "") << cg.factorization.factors[i].first.to_string();
    out << "\n";
    out << "div_X(u) = " << cg.div_u.to_string() << "\n";
    out << "Cl(Y) = 0 (polynomial base), so Cl(X) ≅ Z^s/⟨ω⟩ = " << cg.group.to_string() << "\n";
    rep.text = out.str();

    rep.data = cg.to_json();
    rep.data["sequence"] = {"0", "Z", zs, cg.group.to_string(), "0", "0"};
    rep.data["cl_y"] = "0";
    return rep;
}

}  // namespace susp
