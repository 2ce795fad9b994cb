#include "susp/modulecheck.hpp"

#include "susp/error.hpp"
#include "susp/parse.hpp"

#include <sstream>

namespace susp {

PresentationMatrix::PresentationMatrix(RingPtr ring, std::size_t cols, std::vector<std::vector<MultiPoly>> rows)
    : ring_(std::move(ring)), cols_(cols) {
    for (auto& r : rows) append_row(std::move(r));
}

void PresentationMatrix::append_row(std::vector<MultiPoly> row) {
    if (row.size() != cols_) {
        throw Error(ErrorCode::InvalidArgument, "relation row has " + std::to_string(row.size()) +
                                                    " entries, expected " + std::to_string(cols_));
    }
    for (const auto& e : row) {
        if (!same_ring(e.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "relation entry over another ring");
    }
    rows_.push_back(std::move(row));
}

PresentationMatrix PresentationMatrix::from_json(const RingPtr& ring, std::size_t cols, const nlohmann::json& rows) {
    if (!rows.is_array()) throw Error(ErrorCode::InvalidArgument, "presentation must be a JSON array of rows");
    PresentationMatrix p(ring, cols);
    for (const auto& r : rows) {
        if (!r.is_array()) throw Error(ErrorCode::InvalidArgument, "presentation row must be a JSON array");
        std::vector<MultiPoly> row;
        for (const auto& e : r) {
            if (e.is_string()) row.push_back(parse_polynomial(e.get<std::string>(), ring));
            else if (e.is_number_integer()) row.push_back(MultiPoly::constant(ring, Rational(e.get<long>())));
            else throw Error(ErrorCode::InvalidArgument, "presentation entry must be a string or integer");
        }
        p.append_row(std::move(row));
    }
    return p;
}

nlohmann::json PresentationMatrix::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows_) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& e : r) row.push_back(e.to_string());
        out.push_back(row);
    }
    return out;
}

std::string PresentationMatrix::row_string(std::size_t i) const {
    std::string out = "(";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + rows_.at(i)[j].to_string();
    return out + ")";
}

namespace {

// Laplace expansion along the first row; minors here are tiny.
MultiPoly det(const std::vector<std::vector<const MultiPoly*>>& m, const RingPtr& ring) {
    std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(ring, 1);
    if (n == 1) return *m[0][0];
    MultiPoly out(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j]->is_zero()) continue;
        std::vector<std::vector<const MultiPoly*>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<const MultiPoly*> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[i][c]);
            }
            sub.push_back(std::move(row));
        }
        MultiPoly term = *m[0][j] * det(sub, ring);
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

// All size-m subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(m);
    for (std::size_t i = 0; i < m; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<MultiPoly> fitting_ideal(const PresentationMatrix& p, std::size_t k) {
    const RingPtr& R = p.ring();
    if (p.cols() <= k) return {MultiPoly::constant(R, 1)};
    std::size_t m = p.cols() - k;
    if (m > p.rows()) return {};
    std::vector<MultiPoly> out;
    for (const auto& rs : subsets(p.rows(), m)) {
        for (const auto& cs : subsets(p.cols(), m)) {
            std::vector<std::vector<const MultiPoly*>> sub;
            for (auto i : rs) {
                std::vector<const MultiPoly*> row;
                for (auto j : cs) row.push_back(&p.at(i, j));
                sub.push_back(std::move(row));
            }
            MultiPoly d = det(sub, R);
            if (d.is_zero()) continue;
            d = normalize_primitive(d);
            bool seen = false;
            for (const auto& e : out) seen = seen || e == d;
            if (!seen) out.push_back(std::move(d));
        }
    }
    return out;
}

bool can_be_generated_by(const PresentationMatrix& p, std::size_t k, const GroebnerOptions& options) {
    return ideal_contains_one(fitting_ideal(p, k), options);
}

Section5Report section5_report(const std::optional<PresentationMatrix>& presentation, const GroebnerOptions& options) {
    RingPtr Y = make_ring({"y1", "y2"});
    RingPtr A = make_ring({"u1", "u2", "v", "y1", "y2"});
    Section5Report r{.base_ring = Y,
                     .ambient_ring = A,
                     .equations = {"u1*v - y1*y2", "u2*v - (y1+1)*y2", "u1*(y1+1) - u2*y1"},
                     .weights = {{"u1", 1}, {"u2", 1}, {"v", -1}, {"y1", 0}, {"y2", 0}},
                     .known_relations = PresentationMatrix(Y, 2)};
    r.known_relations.append_row({parse_polynomial("y1+1", Y), parse_polynomial("-y1", Y)});

    r.known_fitting1 = fitting_ideal(r.known_relations, 1);
    r.known_fitting1_is_unit = ideal_contains_one(r.known_fitting1, options);

    std::vector<MultiPoly> eqs;
    for (const auto& e : r.equations) eqs.push_back(parse_polynomial(e, A));
    GroebnerBasis gb = groebner(eqs, options);
    r.candidate_generator = "u2 - u1";
    r.candidate_generates = ideal_member(parse_polynomial("u1 - y1*(u2-u1)", A), gb) &&
                            ideal_member(parse_polynomial("u2 - (y1+1)*(u2-u1)", A), gb);

    r.open_question =
        "a complete presentation of A_1 = u1*K[Y] + u2*K[Y] needs module syzygies, which are not computed; "
        "the claim that A_1 is not cyclic is neither confirmed nor refuted by the verdict";

    if (presentation) {
        if (presentation->cols() != 2 || !same_ring(presentation->ring(), Y)) {
            throw Error(ErrorCode::InvalidArgument, "presentation must have 2 columns over QQ[y1,y2]");
        }
        r.presentation_supplied = true;
        r.supplied = presentation;
        r.cyclic = can_be_generated_by(*presentation, 1, options);
        r.verdict = *r.cyclic ? "cyclic" : "not cyclic";
    } else {
        r.verdict = "inconclusive: presentation possibly incomplete";
    }
    return r;
}

nlohmann::json Section5Report::to_json() const {
    nlohmann::json j;
    j["base_ring"] = base_ring->to_string();
    j["ambient_ring"] = ambient_ring->to_string();
    j["equations"] = equations;
    j["weights"] = nlohmann::json::object();
    for (const auto& [name, w] : weights) j["weights"][name] = w;
    j["known_relations"] = known_relations.to_json();
    j["presentation_supplied"] = presentation_supplied;
    j["presentation"] = supplied ? supplied->to_json() : nlohmann::json(nullptr);
    j["cyclic"] = cyclic ? nlohmann::json(*cyclic) : nlohmann::json(nullptr);
    j["verdict"] = verdict;
    j["known_fitting1"] = nlohmann::json::array();
    for (const auto& g : known_fitting1) j["known_fitting1"].push_back(g.to_string());
    j["known_fitting1_is_unit"] = known_fitting1_is_unit;
    j["candidate_generator"] = candidate_generator;
    j["candidate_generates"] = candidate_generates;
    j["open_question"] = open_question;
    return j;
}

std::string Section5Report::to_text() const {
    std::ostringstream out;
    out << "X in A^5 over " << ambient_ring->to_string() << ":\n";
    for (const auto& e : equations) out << "  " << e << " = 0\n";
    out << "G_m weights (u1,u2,v,y1,y2): (";
    for (std::size_t i = 0; i < weights.size(); ++i) out << (i ? "," : "") << weights[i].second;
    out << ")\n";
    out << "A_1 = u1*K[Y] + u2*K[Y], K[Y] = " << base_ring->to_string() << "\n";
    out << "known relation row: " << known_relations.row_string(0) << "\n";
    out << "Fitt_1 of known relations: (";
    for (std::size_t i = 0; i < known_fitting1.size(); ++i) out << (i ? ", " : "") << known_fitting1[i].to_string();
    out << ")" << (known_fitting1_is_unit ? " = (1)" : "") << "\n";
    out << "u1, u2 in (" << candidate_generator << ")*K[Y] modulo the equations: "
        << (candidate_generates ? "yes" : "no") << "\n";
    if (supplied) {
        out << "supplied presentation: " << supplied->rows() << " row(s)\n";
        for (std::size_t i = 0; i < supplied->rows(); ++i) out << "  " << supplied->row_string(i) << "\n";
    }
    out << "verdict: " << verdict << "\n";
    out << "open question: " << open_question << "\n";
    return out.str();
}

}  // namespace susp
