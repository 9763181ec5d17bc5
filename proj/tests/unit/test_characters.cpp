#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace diagramalg;

TEST_SUITE("characters") {

TEST_CASE("class labels") {
    auto p3 = class_labels(Family::Partition, 3);
    REQUIRE(p3.size() == 7);
    CHECK(p3[0].kappa.empty());
    CHECK(p3[0].s == 3);
    CHECK(p3[5].kappa == IntPartition{2, 1});
    auto b4 = class_labels(Family::Brauer, 4);
    REQUIRE(b4.size() == 8);
    CHECK(b4[1].kappa == IntPartition{2});
    CHECK(b4[1].s == 1);
    auto tl = class_labels(Family::TemperleyLieb, 4);
    CHECK(tl.size() == 3);
    CHECK(class_labels(Family::SymmetricGroup, 3).size() == 3);
    CHECK_THROWS_AS(validate(ClassLabel{IntPartition{2}, 0, Family::Motzkin}), Error);
    CHECK_THROWS_AS(class_labels(Family::PlanarPartition, 2), Error);
}

TEST_CASE("class diagrams") {
    ClassLabel big{IntPartition{6, 5, 2, 1}, 4, Family::Partition};
    Element e = class_diagram(big);
    REQUIRE(e.terms().size() == 1);
    const auto& [d, c] = *e.terms().begin();
    CHECK(d.k() == 18);
    CHECK(c == LaurentPoly::monomial(-4));
    CHECK(rank(d) == 14);
    for (int x = 15; x <= 18; ++x) {
        CHECK(d.label(x) != d.label(18 + x));
    }
    ClassLabel brauer{IntPartition{6, 5, 2, 1}, 2, Family::Brauer};
    Element eb = class_diagram(brauer);
    const auto& [db, cb] = *eb.terms().begin();
    CHECK(db.k() == 18);
    CHECK(cb == LaurentPoly::monomial(-2));
    CHECK(in_family(db, Family::Brauer));
    CHECK(db.label(15) == db.label(16));
    CHECK(db.label(18 + 15) == db.label(18 + 16));
    CHECK(class_diagram(ClassLabel{ones(4), 0, Family::Partition}) == Element(identity(4), Family::Partition));
}

TEST_CASE("the four fixed diagrams behind F = 4") {
    CHECK(f_coeff(Family::Partition, IntPartition{2, 1}, IntPartition{1}) == 4);
    auto fixed = fixed_points(Family::Partition, 3, 1, IntPartition{2, 1});
    REQUIRE(fixed.size() == 1);
    REQUIRE(fixed.count(IntPartition{1}));
    std::set<SymmetricMDiagram> got(fixed[IntPartition{1}].begin(), fixed[IntPartition{1}].end());
    // Symmetric 1-diagrams fixed by the transposition of 1 and 2 with 3 fixed.
    std::set<SymmetricMDiagram> expected = {
        SymmetricMDiagram::from_blocks(3, {{3}}, {{1, 2}}),
        SymmetricMDiagram::from_blocks(3, {{1, 2}}, {{3}}),
        SymmetricMDiagram::from_blocks(3, {{1, 2, 3}}, {}),
        SymmetricMDiagram::from_blocks(3, {{3}}, {{1}, {2}}),
    };
    CHECK(got == expected);
}

TEST_CASE("fixed points of full cycles") {
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= k; ++m) {
            auto fixed = fixed_points(Family::Partition, k, m, IntPartition{k});
            if (k % m) {
                CHECK(fixed.empty());
                continue;
            }
            for (const auto& [mu, ws] : fixed) {
                CHECK(mu == IntPartition{m});
                for (const auto& w : ws) {
                    auto blocks = w.top_blocks();
                    REQUIRE(static_cast<int>(blocks.size()) == m);
                    for (const auto& b : blocks)
                        for (int x : b) CHECK((x - b.front()) % m == 0);
                }
            }
        }
}

TEST_CASE("coefficients equal brute-force fixed-point counts") {
    for (Family f : all_families()) {
        if (f == Family::PlanarPartition) continue;
        for (int k = 1; k <= 4; ++k)
            for (int m : rank_set(f, k))
                for (const auto& kappa : partitions_of(k)) {
                    if (is_planar_family(f) && kappa != ones(k)) continue;
                    if (f == Family::SymmetricGroup) continue;
                    auto fixed = fixed_points(f, k, m, kappa);
                    for (const auto& mu : partitions_of(m)) {
                        long brute = fixed.count(mu) ? static_cast<long>(fixed[mu].size()) : 0;
                        CHECK_MESSAGE(f_coeff(f, kappa, mu) == brute, family_name(f), " kappa=", to_string(kappa),
                                      " mu=", to_string(mu));
                    }
                }
    }
}

TEST_CASE("coefficient spot values") {
    for (int k = 1; k <= 5; ++k)
        for (const auto& kappa : partitions_of(k)) CHECK(f_coeff(Family::Partition, kappa, kappa) == 1);
    CHECK(f_coeff_planar(Family::TemperleyLieb, 4, 2) == 3);
    CHECK(f_coeff_planar(Family::PlanarRook, 5, 2) == 10);
    CHECK_THROWS_AS(f_coeff(Family::PlanarPartition, IntPartition{1}, IntPartition{1}), Error);
    CHECK_THROWS_AS(f_coeff(Family::TemperleyLieb, IntPartition{2}, IntPartition{2}), Error);
}

TEST_CASE("irreducible characters") {
    ClassLabel id3{ones(3), 0, Family::Partition};
    CHECK(irr_character(Family::Partition, 3, IntPartition{}, id3) == 5);
    for (const auto& ls : partitions_of(4))
        for (const auto& kappa : partitions_of(4))
            CHECK(irr_character(Family::Partition, 4, ls, ClassLabel{kappa, 0, Family::Partition}) ==
                  sym_character(ls, kappa));
    // Trivial label: sum over divisors of products of Stirling numbers.
    for (int k = 1; k <= 5; ++k)
        for (const auto& kappa : partitions_of(k)) {
            Integer expected = 0;
            for (const auto& nu : divisors(kappa)) {
                std::map<int, int> mult;
                for (int v : nu) ++mult[v];
                Integer prod = 1;
                for (const auto& [i, mi] : mult) {
                    Integer inner = 0;
                    for (int t = 0; t <= mi; ++t) {
                        Integer pw = 1;
                        for (int e = 0; e < mi - t; ++e) pw *= i;
                        inner += stirling2(mi, t) * pw;
                    }
                    prod *= inner;
                }
                expected += prod;
            }
            CHECK(irr_character(Family::Partition, k, IntPartition{}, ClassLabel{kappa, 0, Family::Partition}) ==
                  expected);
        }
}

TEST_CASE("characters only depend on the class part") {
    for (Family f : {Family::Partition, Family::Brauer, Family::RookBrauer, Family::Rook}) {
        const int step = f == Family::Brauer ? 2 : 1;
        for (int r = 0; r <= 4; ++r)
            for (const auto& kappa : partitions_of(r))
                for (const auto& ls : index_set(f, r)) {
                    Integer base = irr_character(f, r, ls, ClassLabel{kappa, 0, f});
                    for (int s = 1; s <= 2; ++s)
                        CHECK(irr_character(f, r + step * s, ls, ClassLabel{kappa, s, f}) == base);
                }
    }
}

TEST_CASE("oracle agrees with the closed formula on small tables") {
    for (Family f : all_families()) {
        if (f == Family::PlanarPartition) continue;
        for (int k = 1; k <= 3; ++k) {
            for (const auto& ls : index_set(f, k)) {
                for (const auto& label : class_labels(f, k)) {
                    LaurentPoly trace = character_oracle(f, k, ls, label);
                    CHECK_MESSAGE(trace == LaurentPoly(irr_character(f, k, ls, label)), family_name(f), " k=", k,
                                  " lambda*=", to_string(ls), " kappa=", to_string(label.kappa), " s=", label.s);
                }
                CHECK(character_oracle(f, k, ls, ClassLabel{ones(k), 0, f}) == LaurentPoly(irrep_dimension(f, k, ls)));
            }
        }
    }
}

TEST_CASE("published tables and their factorisations") {
    for (Family f : {Family::Partition, Family::RookBrauer, Family::Rook, Family::Brauer}) {
        const int k = fixtures::published_k(f);
        auto table = character_table(f, k);
        CHECK_MESSAGE(table.values == fixtures::corrected_table(f), family_name(f));
        auto factor = factor_table(f, k);
        CHECK_MESSAGE(factor.f == fixtures::published_table(f, true), family_name(f));
        CHECK(integer_matmul(factor.block, factor.f) == table.values);
    }
    auto b4 = factor_table(Family::Brauer, 4);
    // Direct sum of the tables of S_0, S_2 and S_4.
    IntegerMatrix expected(8, std::vector<Integer>(8, 0));
    expected[0][0] = 1;
    int s2[2][2] = {{1, 1}, {-1, 1}};
    int s4[5][5] = {{1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expected[1 + i][1 + j] = s2[i][j];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) expected[3 + i][3 + j] = s4[i][j];
    CHECK(b4.block == expected);
}

TEST_CASE("the corrected B4 cell") {
    const int r = fixtures::b4_erratum_row, c = fixtures::b4_erratum_col;
    auto table = character_table(Family::Brauer, 4);
    CHECK(fixtures::published_table(Family::Brauer, false)[r][c] == 0);
    CHECK(table.values[r][c] == 1);
    CHECK(sym_character(IntPartition{2, 1, 1}, IntPartition{4}) == 1);
    CHECK(character_oracle(Family::Brauer, 4, table.rows[r], table.cols[c]) == LaurentPoly(1));
    // Every other cell matches the display.
    int differing = 0;
    for (size_t i = 0; i < table.values.size(); ++i)
        for (size_t j = 0; j < table.values[i].size(); ++j)
            differing += table.values[i][j] != fixtures::published_table(Family::Brauer, false)[i][j];
    CHECK(differing == 1);
}

TEST_CASE("property: factorisations are exact with unitriangular F") {
    for (Family f : all_families()) {
        if (f == Family::PlanarPartition) continue;
        for (int k = 1; k <= 6; ++k) {
            auto table = character_table(f, k);
            auto factor = factor_table(f, k);
            CHECK(integer_matmul(factor.block, factor.f) == table.values);
            for (size_t i = 0; i < factor.f.size(); ++i)
                for (size_t j = 0; j < factor.f[i].size(); ++j) {
                    CHECK(factor.f[i][j] >= 0);
                    if (j < i) CHECK(factor.f[i][j] == 0);
                    if (j == i) CHECK(factor.f[i][j] == 1);
                }
        }
    }
}

TEST_CASE("determinants") {
    auto p3 = table_determinant_check(Family::Partition, 3);
    CHECK(p3.lhs == 12);
    CHECK(p3.rhs == 12);
    CHECK(p3.ok);
    auto b2 = table_determinant_check(Family::Brauer, 2);
    CHECK(b2.lhs == 2);
    CHECK(b2.ok);
    for (Family f : {Family::TemperleyLieb, Family::Motzkin, Family::PlanarRook}) {
        auto c = table_determinant_check(f, 4);
        CHECK(c.lhs == 1);
        CHECK(c.ok);
    }
    IntegerMatrix m = {{Integer(2), Integer(1)}, {Integer(7), Integer(4)}};
    CHECK(determinant(m) == 1);
}

}  // TEST_SUITE
