#pragma once

#include "susp/factor.hpp"
#include "susp/tower.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace susp {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Square matrices only (fraction-free elimination).
    Integer determinant() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D
};

// Diagonal d_1 | d_2 | ... with d_i >= 0; U and V unimodular.
SmithForm smith_normal_form(const IntMatrix& m);

struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;  // each >= 2, dividing the next

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    // Order when finite.
    std::optional<Integer> order() const;
    // "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/6"
    std::string to_string() const;
};

// Z^rows modulo the lattice spanned by the columns of m.
AbelianGroupPresentation cokernel(const IntMatrix& m);

struct FormalDivisor {
    std::vector<std::pair<MultiPoly, Integer>> terms;
    // "1*D(x) + 2*D(y)"
    std::string to_string() const;
};

struct ClassGroupResult {
    Factorization factorization;  // f = unit * prod p_i^{a_i}
    std::vector<Integer> omega;   // (a_1, ..., a_s)
    AbelianGroupPresentation group;
    FormalDivisor div_u;  // div_X(u) = sum a_i D_i
    bool torsion_free = false;
    // newton_indecomposable per prime factor; Unknown means the complex class
    // group may be larger than the one computed over Q.
    std::vector<AbsoluteVerdict> absolute_irreducibility;

    nlohmann::json to_json() const;
};

// Cl(X) = Z^s / <omega> for X = {uv = f} over a polynomial base, f the first
// level of the tower.
ClassGroupResult class_group(const SuspTower& t, const FactorOptions& options = {});

struct ExactSequenceReport {
    std::string text;
    nlohmann::json data;
};

// 0 -> Z -xi-> Z^s -psi-> Cl(X) -> Cl(Y) -> 0 with xi(1) = omega; Cl(Y) = 0
// for a polynomial base.
ExactSequenceReport exact_sequence_report(const SuspTower& t, const FactorOptions& options = {});

// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
nlohmann::json integer_to_json(const Integer& n);

}  // namespace susp
