#pragma once

// Worked examples shared by the unit and acceptance tests.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "diagramalg/diagramalg.hpp"

namespace fixtures {

using namespace diagramalg;

// Builds a diagram from edges between vertices written "T3" (top 3) or "B3" (bottom 3).
inline Diagram from_edges(int k, const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<int> parent(2 * k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto node = [&](const std::string& v) {
        int i = std::stoi(v.substr(1));
        return (v[0] == 'T' ? i : k + i) - 1;
    };
    for (const auto& [a, b] : edges) parent[find(node(a))] = find(node(b));
    std::vector<int> labels(2 * k);
    for (int v = 0; v < 2 * k; ++v) labels[v] = find(v);
    return Diagram::from_labels(k, labels);
}

// The pair of 12-vertex diagrams whose product has two deleted components.
inline Diagram mult_d1() {
    return from_edges(12, {{"T2", "T3"}, {"T6", "T7"}, {"T3", "T5"}, {"T9", "T11"}, {"T10", "T12"},
                           {"B3", "B5"}, {"B8", "B10"}, {"B7", "B12"}, {"B1", "T4"}, {"B2", "T1"},
                           {"B6", "T9"}, {"B9", "T8"}, {"B11", "T12"}});
}

inline Diagram mult_d2() {
    return from_edges(12, {{"T1", "T2"}, {"T7", "T8"}, {"T10", "T12"}, {"T3", "T6"}, {"B3", "B4"},
                           {"B6", "B7"}, {"B10", "B11"}, {"B1", "B3"}, {"B9", "B12"}, {"B2", "T2"},
                           {"B6", "T5"}, {"B8", "T11"}, {"B10", "T9"}});
}

inline Diagram mult_product() {
    return from_edges(12, {{"T2", "T3"}, {"T6", "T7"}, {"T3", "T5"}, {"T9", "T11"}, {"T10", "T12"},
                           {"B3", "B4"}, {"B6", "B7"}, {"B10", "B11"}, {"B1", "B3"}, {"B9", "B12"},
                           {"T1", "B2"}, {"B2", "T4"}, {"B7", "T9"}, {"B8", "T10"}, {"B10", "T8"}});
}

inline const char* setpartition_text() { return "1' 2 | 2' 3' | 4' 1 3 | 5' 7' | 6' 4 7 8 | 8' 6 | 5"; }

// Conjugation example on 13 vertices: d acting on a symmetric 5-diagram w.
inline Diagram conj_d() {
    return parse_diagram(
        "5 6 7 8' | 8 12 4' | 10 11 | 1 5' | 9 12' | 2 2' | 3 3' 1' | 13 13' | 9' 10' | 4 | 6' | 7' | 11'", 13);
}

inline SymmetricMDiagram conj_w() {
    return SymmetricMDiagram::from_blocks(13, {{1, 2}, {4}, {8, 9, 10}, {12}, {7, 13}}, {{3, 5, 6}, {11}});
}

inline SymmetricMDiagram conj_w_prime() {
    return SymmetricMDiagram::from_blocks(13, {{1, 2, 3}, {5, 6, 7}, {9}, {8, 12}, {13}}, {{10, 11}, {4}});
}

// The five standard tableaux of shape [3,2] in basis order.
inline YoungTableau syt32(int i) {
    static const std::vector<YoungTableau> t = {
        YoungTableau({{1, 3, 5}, {2, 4}}), YoungTableau({{1, 3, 4}, {2, 5}}), YoungTableau({{1, 2, 5}, {3, 4}}),
        YoungTableau({{1, 2, 4}, {3, 5}}), YoungTableau({{1, 2, 3}, {4, 5}})};
    return t[i - 1];
}

inline SetPartitionTableau bijection_T() {
    return SetPartitionTableau{13, IntPartition{3, 2}, {{3, 5, 6}, {11}}, {{{1, 2}, {4}, {12}}, {{8, 9, 10}, {7, 13}}}};
}

inline SetPartitionTableau dT_result() {
    return SetPartitionTableau{13, IntPartition{3, 2}, {{4}, {10, 11}}, {{{1, 2, 3}, {8, 12}, {9}}, {{5, 6, 7}, {13}}}};
}

// A diagram acting as zero on bijection_T().
inline Diagram zero_d() {
    return parse_diagram(
        "1 2 5' | 3 6 4' | 8 9 | 10 12 13 11' | 4 2' 3' | 7 7' | 11 13' | 6' 8' 9' | 5 | 1' | 10' | 12'", 13);
}

// Brauer tableau on 10 points with lambda* = [3,1].
inline SetPartitionTableau brauer_T() {
    return SetPartitionTableau{10, IntPartition{3, 1}, {{1, 3}, {5, 6}, {4, 8}}, {{{2}, {7}, {10}}, {{9}}}};
}

// Rook-Brauer tableau on 10 points with lambda* = [2,1].
inline SetPartitionTableau rook_brauer_T() {
    return SetPartitionTableau{10, IntPartition{2, 1}, {{2}, {1, 4}, {5}, {6}, {8, 10}}, {{{3}, {9}}, {{7}}}};
}

// Published tables, rows lambda* and columns classes in table order.
inline const IntegerMatrix& published_table(Family f, bool factor_f) {
    auto z = [](std::vector<std::vector<int>> rows) {
        IntegerMatrix m;
        for (auto& r : rows) {
            std::vector<Integer> row;
            for (int x : r) row.emplace_back(x);
            m.push_back(row);
        }
        return m;
    };
    static const IntegerMatrix p3 = z({{1, 1, 2, 2, 2, 3, 5}, {0, 1, 1, 3, 1, 4, 10}, {0, 0, 1, 1, 0, 2, 6},
                                       {0, 0, -1, 1, 0, 0, 6}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, -1, 0, 2},
                                       {0, 0, 0, 0, 1, -1, 1}});
    static const IntegerMatrix p3f = z({{1, 1, 2, 2, 2, 3, 5}, {0, 1, 1, 3, 1, 4, 10}, {0, 0, 1, 0, 0, 1, 0},
                                        {0, 0, 0, 1, 0, 1, 6}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 0, 1}});
    static const IntegerMatrix rb3 = z({{1, 1, 2, 2, 1, 2, 4}, {0, 1, 0, 2, 0, 2, 6}, {0, 0, 1, 1, 0, 1, 3},
                                        {0, 0, -1, 1, 0, -1, 3}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, -1, 0, 2},
                                        {0, 0, 0, 0, 1, -1, 1}});
    static const IntegerMatrix rb3f = z({{1, 1, 2, 2, 1, 2, 4}, {0, 1, 0, 2, 0, 2, 6}, {0, 0, 1, 0, 0, 1, 0},
                                         {0, 0, 0, 1, 0, 0, 3}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                         {0, 0, 0, 0, 0, 0, 1}});
    static const IntegerMatrix r3 = z({{1, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 2, 0, 1, 3}, {0, 0, 1, 1, 0, 1, 3},
                                       {0, 0, -1, 1, 0, -1, 3}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, -1, 0, 2},
                                       {0, 0, 0, 0, 1, -1, 1}});
    static const IntegerMatrix r3f = z({{1, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 2, 0, 1, 3}, {0, 0, 1, 0, 0, 1, 0},
                                        {0, 0, 0, 1, 0, 0, 3}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 0, 1}});
    static const IntegerMatrix b4 = z({{1, 1, 1, 1, 0, 3, 1, 3}, {0, 1, 1, 0, 0, 2, 2, 6},
                                       {0, -1, 1, 0, 0, -2, 0, 6}, {0, 0, 0, 1, 1, 1, 1, 1},
                                       {0, 0, 0, -1, 0, -1, 1, 3}, {0, 0, 0, 0, -1, 2, 0, 2},
                                       {0, 0, 0, 0, 0, -1, -1, 3}, {0, 0, 0, -1, 1, 1, -1, 1}});
    static const IntegerMatrix b4f = z({{1, 1, 1, 1, 0, 3, 1, 3}, {0, 1, 0, 0, 0, 2, 1, 0},
                                        {0, 0, 1, 0, 0, 0, 1, 6}, {0, 0, 0, 1, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}});
    switch (f) {
        case Family::Partition: return factor_f ? p3f : p3;
        case Family::RookBrauer: return factor_f ? rb3f : rb3;
        case Family::Rook: return factor_f ? r3f : r3;
        default: return factor_f ? b4f : b4;
    }
}

// The B4 table and its block factor print 0 for lambda* = [2,1,1] on the
// class [4]; the S4 character there is +1. Returns the table with that
// single cell corrected, and the cell position.
inline constexpr int b4_erratum_row = 6;
inline constexpr int b4_erratum_col = 3;

inline IntegerMatrix corrected_table(Family f) {
    IntegerMatrix m = published_table(f, false);
    if (f == Family::Brauer) {
        m[b4_erratum_row][b4_erratum_col] = 1;
    }
    return m;
}

// The published direct sums of symmetric-group tables: S0, S1, S2, S3 for
// the k = 3 tables and S0, S2, S4 for B4 (with the corrected S4 cell).
inline IntegerMatrix published_block(Family f) {
    std::vector<std::vector<std::vector<int>>> blocks;
    if (f == Family::Brauer) {
        blocks = {{{1}},
                  {{1, 1}, {-1, 1}},
                  {{1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}}};
    } else {
        blocks = {{{1}}, {{1}}, {{1, 1}, {-1, 1}}, {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}}};
    }
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IntegerMatrix m(n, std::vector<Integer>(n, 0));
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m[at + i][at + j] = b[i][j];
        at += b.size();
    }
    return m;
}

// Sizes of the published tables.
inline int published_k(Family f) { return f == Family::Brauer ? 4 : 3; }

}  // namespace fixtures
