#include <doctest.h>

#include "support/random_poly.hpp"
#include "susp/error.hpp"
#include "susp/modulecheck.hpp"
#include "susp/parse.hpp"

using namespace susp;

namespace {

RingPtr Y() { return make_ring({"y1", "y2"}); }

PresentationMatrix pm(const RingPtr& R, std::size_t cols, std::vector<std::vector<const char*>> rows) {
    PresentationMatrix p(R, cols);
    for (const auto& r : rows) {
        std::vector<MultiPoly> row;
        for (auto e : r) row.push_back(parse_polynomial(e, R));
        p.append_row(std::move(row));
    }
    return p;
}

std::vector<std::string> strs(const std::vector<MultiPoly>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

// Rank over Q of a constant matrix by plain elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0, cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rational q = m[i][c] / m[rank][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// groebner() needs a ring; the zero ideal has an empty basis.
GroebnerBasis basis(const RingPtr& R, const std::vector<MultiPoly>& gens) {
    if (gens.empty()) return GroebnerBasis{R, {}};
    return groebner(gens);
}

}  // namespace

TEST_CASE("fitting_ideal examples") {
    auto R = Y();
    auto P = pm(R, 2, {{"y1+1", "-y1"}});
    CHECK(strs(fitting_ideal(P, 1)) == std::vector<std::string>{"y1 + 1", "y1"});
    CHECK(strs(fitting_ideal(P, 2)) == std::vector<std::string>{"1"});
    CHECK(strs(fitting_ideal(P, 5)) == std::vector<std::string>{"1"});
    // 2x2 minors of a single row: none
    CHECK(fitting_ideal(P, 0).empty());

    auto D = pm(R, 2, {{"y1", "0"}, {"0", "y2"}});
    CHECK(strs(fitting_ideal(D, 0)) == std::vector<std::string>{"y1*y2"});
    CHECK(strs(fitting_ideal(D, 1)) == std::vector<std::string>{"y1", "y2"});

    PresentationMatrix free2(R, 2);
    CHECK(fitting_ideal(free2, 1).empty());
    CHECK(strs(fitting_ideal(free2, 2)) == std::vector<std::string>{"1"});
}

TEST_CASE("can_be_generated_by examples") {
    auto R = Y();
    CHECK(can_be_generated_by(pm(R, 2, {{"y1+1", "-y1"}}), 1));
    CHECK_FALSE(can_be_generated_by(pm(R, 2, {{"y1", "0"}, {"0", "y2"}}), 1));
    CHECK_FALSE(can_be_generated_by(PresentationMatrix(R, 2), 1));
    CHECK(can_be_generated_by(PresentationMatrix(R, 2), 2));
    // R/(y1) is cyclic but not zero
    auto C = pm(R, 1, {{"y1"}});
    CHECK(can_be_generated_by(C, 1));
    CHECK_FALSE(can_be_generated_by(C, 0));
}

TEST_CASE("presentation validation and JSON") {
    auto R = Y();
    PresentationMatrix p(R, 2);
    CHECK_THROWS_AS(p.append_row({parse_polynomial("y1", R)}), Error);
    auto q = PresentationMatrix::from_json(R, 2, nlohmann::json::parse(R"([["y1+1", "-y1"], [0, "y2"]])"));
    CHECK(q.rows() == 2);
    CHECK(q.row_string(0) == "(y1 + 1, -y1)");
    CHECK(q.to_json()[1][0] == "0");
    CHECK_THROWS_AS(PresentationMatrix::from_json(R, 2, nlohmann::json::parse(R"([["z", "1"]])")), Error);
    CHECK_THROWS_AS(PresentationMatrix::from_json(R, 2, nlohmann::json::parse(R"({"a": 1})")), Error);
}

TEST_CASE("G_m example report") {
    auto rep = section5_report();
    CHECK(rep.verdict == "inconclusive: presentation possibly incomplete");
    CHECK_FALSE(rep.cyclic.has_value());
    CHECK(rep.known_relations.row_string(0) == "(y1 + 1, -y1)");
    CHECK(rep.equations.size() == 3);
    std::vector<int> w;
    for (const auto& [n, k] : rep.weights) w.push_back(k);
    CHECK(w == std::vector<int>{1, 1, -1, 0, 0});
    CHECK(rep.to_text().find("(y1 + 1, -y1)") != std::string::npos);
    CHECK(rep.to_text().find("inconclusive") != std::string::npos);
    auto j = rep.to_json();
    CHECK(j["cyclic"].is_null());
    CHECK(j["known_relations"][0][1] == "-y1");
    CHECK(j["known_fitting1_is_unit"] == true);
    CHECK(j["candidate_generates"] == true);

    auto R = Y();
    rep = section5_report(pm(R, 2, {{"y1+1", "-y1"}, {"y2", "0"}}));
    CHECK(rep.verdict == "cyclic");
    CHECK(rep.cyclic == true);

    rep = section5_report(pm(R, 2, {{"y1", "0"}, {"0", "y2"}}));
    CHECK(rep.verdict == "not cyclic");

    rep = section5_report(PresentationMatrix(R, 2));
    CHECK(rep.cyclic == false);

    CHECK_THROWS_AS(section5_report(PresentationMatrix(R, 3)), Error);
}

TEST_CASE("property: constant presentations match rank over Q") {
    auto R = Y();
    testing::PolyGen gen(R, 51);
    for (int i = 0; i < 100; ++i) {
        std::size_t rows = gen.uniform(0, 3), cols = gen.uniform(1, 3);
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        PresentationMatrix p(R, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < cols; ++c) {
                // low-rank matrices show up often with entries in {-1,0,1}
                m[r][c] = gen.uniform(-1, 1);
                row.push_back(MultiPoly::constant(R, m[r][c]));
            }
            p.append_row(std::move(row));
        }
        // R^cols / (constant rows) is free of rank cols - rank
        std::size_t free_rank = cols - rational_rank(m);
        for (std::size_t k = 0; k <= cols; ++k) {
            CHECK(can_be_generated_by(p, k) == (free_rank <= k));
        }
    }
}

TEST_CASE("property: Fitting chain, row moves and monotonicity") {
    auto R = Y();
    testing::PolyGen gen(R, 52);
    for (int i = 0; i < 40; ++i) {
        std::size_t rows = gen.uniform(1, 3), cols = gen.uniform(1, 3);
        PresentationMatrix p(R, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < cols; ++c) row.push_back(gen.poly(2, 1, 2));
            p.append_row(std::move(row));
        }
        std::vector<GroebnerBasis> bases;
        for (std::size_t k = 0; k <= cols + 1; ++k) bases.push_back(basis(R, fitting_ideal(p, k)));
        for (std::size_t k = 0; k + 1 < bases.size(); ++k) {
            for (const auto& g : bases[k].generators) CHECK(ideal_member(g, bases[k + 1]));
        }

        // append an R-combination of existing rows
        PresentationMatrix q = p;
        std::vector<MultiPoly> combo(cols, MultiPoly(R));
        for (std::size_t r = 0; r < rows; ++r) {
            MultiPoly c = gen.poly(2, 1, 2);
            for (std::size_t j = 0; j < cols; ++j) combo[j] += c * p.at(r, j);
        }
        q.append_row(combo);
        for (std::size_t k = 0; k <= cols + 1; ++k) {
            CHECK(basis(R, fitting_ideal(q, k)).generators == bases[k].generators);
        }

        bool prev = false;
        for (std::size_t k = 0; k <= cols + 1; ++k) {
            bool now = can_be_generated_by(p, k);
            if (prev) CHECK(now);
            prev = now;
        }
    }
}
