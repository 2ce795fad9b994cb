#pragma once

#include "susp/geometry.hpp"
#include "susp/poly.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace susp {

// coker(R^rows -> R^cols): each row is one relation among `cols` generators.
class PresentationMatrix {
public:
    PresentationMatrix(RingPtr ring, std::size_t cols, std::vector<std::vector<MultiPoly>> rows = {});

    // Rows given as arrays of polynomial expressions, e.g. [["y1+1", "-y1"]].
    static PresentationMatrix from_json(const RingPtr& ring, std::size_t cols, const nlohmann::json& rows);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
    const std::vector<MultiPoly>& row(std::size_t i) const { return rows_.at(i); }

    void append_row(std::vector<MultiPoly> row);

    nlohmann::json to_json() const;
    std::string row_string(std::size_t i) const;

private:
    RingPtr ring_;
    std::size_t cols_;
    std::vector<std::vector<MultiPoly>> rows_;
};

// Generators of Fitt_k, the ideal of (cols-k)-minors, made primitive and
// deduplicated. {1} when cols <= k; empty (the zero ideal) when cols-k > rows.
std::vector<MultiPoly> fitting_ideal(const PresentationMatrix& p, std::size_t k);

// 1 in Fitt_k. A unit Fitting ideal means the module is generated by k
// elements locally at every prime; global k-generation can need more.
bool can_be_generated_by(const PresentationMatrix& p, std::size_t k, const GroebnerOptions& options = {});

struct Section5Report {
    RingPtr base_ring;
    RingPtr ambient_ring;
    std::vector<std::string> equations;
    std::vector<std::pair<std::string, int>> weights;
    PresentationMatrix known_relations;
    bool presentation_supplied = false;
    std::optional<PresentationMatrix> supplied{};
    // Present only when a full presentation was supplied.
    std::optional<bool> cyclic{};
    std::string verdict{};

    // Fitt_1 of the known relations alone; a quotient of a module with unit
    // Fitt_1 also has unit Fitt_1.
    std::vector<MultiPoly> known_fitting1{};
    bool known_fitting1_is_unit = false;
    // u1 = y1*(u2-u1) and u2 = (y1+1)*(u2-u1) modulo the defining equations.
    std::string candidate_generator{};
    bool candidate_generates = false;

    std::string open_question{};

    nlohmann::json to_json() const;
    std::string to_text() const;
};

Section5Report section5_report(const std::optional<PresentationMatrix>& presentation = std::nullopt,
                               const GroebnerOptions& options = {});

}  // namespace susp
