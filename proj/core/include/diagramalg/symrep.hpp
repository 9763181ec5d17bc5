#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "diagramalg/coeff.hpp"
#include "diagramalg/partitions.hpp"

namespace diagramalg {

// Permutation of 1..m with images[i-1] = sigma(i).
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int m);
    // Cycles are lists (a1 a2 ... ar) meaning a1 -> a2 -> ... -> ar -> a1.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }
    Permutation inverse() const;
    IntPartition cycle_type() const;
    int sign() const;

    auto operator<=>(const Permutation&) const = default;
};

// (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);
std::string to_string(const Permutation& p);

// Filling of a Young diagram by 1..m, each once; stored as rows.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    YoungTableau() = default;
    explicit YoungTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    IntPartition shape() const;
    int size() const;
    bool is_standard() const;
    std::vector<int> row_word() const;

    auto operator<=>(const YoungTableau&) const = default;
};

std::string to_string(const YoungTableau& t);
// Entry i replaced by sigma(i).
YoungTableau apply(const Permutation& sigma, const YoungTableau& t);

Integer num_standard_tableaux(const IntPartition& mu);
// All standard tableaux in decreasing row-word order; the column-reading
// tableau comes first.
const std::vector<YoungTableau>& standard_tableaux(const IntPartition& mu);
int standard_index(const YoungTableau& t);
YoungTableau column_reading_tableau(const IntPartition& mu);

// Combination of standard polytabloids of one shape.
struct SpechtVector {
    IntPartition shape;
    std::map<YoungTableau, Rational> combo;

    bool operator==(const SpechtVector&) const = default;
};

SpechtVector basis_vector(const YoungTableau& t);
// Polytabloid of any filling written in the standard basis, as
// (standard index, coefficient) pairs with nonzero integer coefficients.
const std::vector<std::pair<int, Integer>>& straighten(const YoungTableau& t);
SpechtVector act(const Permutation& sigma, const SpechtVector& v);

using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix rep_matrix(const Permutation& sigma, const IntPartition& mu);

Integer sym_character(const IntPartition& lambda_star, const IntPartition& mu);

// Permutation of cycle type mu: consecutive cycles (r, r-1, ..., 1) on
// successive blocks of positions.
Permutation cycle_permutation(const IntPartition& mu);

}  // namespace diagramalg
