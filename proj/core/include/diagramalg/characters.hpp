#pragma once

#include <map>
#include <vector>

#include "diagramalg/coeff.hpp"
#include "diagramalg/diagrams.hpp"
#include "diagramalg/irreps.hpp"
#include "diagramalg/partitions.hpp"

namespace diagramalg {

// Class gamma_kappa (x) ebar^{(x)s}; k = |kappa| + s, or |kappa| + 2s for
// Brauer and Temperley-Lieb.
struct ClassLabel {
    IntPartition kappa;
    int s = 0;
    Family family = Family::Partition;

    int k() const;
    bool operator==(const ClassLabel&) const = default;
};

// Throws InvalidClassLabel or FamilyUnsupported when the label is not valid.
void validate(const ClassLabel& label);
// The class labels of A_k in table order.
std::vector<ClassLabel> class_labels(Family f, int k);

Diagram cycle_diagram(const IntPartition& kappa);
Element class_diagram(const ClassLabel& label);

// Fixed points of conjugation by gamma_kappa on symmetric m-diagrams,
// grouped by the cycle type of the twist.
std::map<IntPartition, std::vector<SymmetricMDiagram>> fixed_points(Family f, int k, int m, const IntPartition& kappa);

Integer f_coeff(Family f, const IntPartition& kappa, const IntPartition& mu);
Integer f_coeff_planar(Family f, int r, int m);

Integer irr_character(Family f, int k, const IntPartition& lambda_star, const ClassLabel& label);

// Trace of the class element on the twisted basis; cap as symmetric_cap().
LaurentPoly character_oracle(Family f, int k, const IntPartition& lambda_star, const ClassLabel& label);
int oracle_cap();

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct CharacterTable {
    Family family;
    int k = 0;
    std::vector<IntPartition> rows;  // lambda*
    std::vector<ClassLabel> cols;
    IntegerMatrix values;
};

struct TableFactorization {
    std::vector<IntPartition> labels;  // mu, shared by both factors
    IntegerMatrix block;               // direct sum of symmetric-group tables
    IntegerMatrix f;                   // F[mu][kappa]
};

CharacterTable character_table(Family f, int k);
TableFactorization factor_table(Family f, int k);
int table_cap();

IntegerMatrix integer_matmul(const IntegerMatrix& a, const IntegerMatrix& b);
Integer determinant(IntegerMatrix a);

struct DeterminantCheck {
    Integer lhs;
    Integer rhs;
    bool ok = false;
};

DeterminantCheck table_determinant_check(Family f, int k);

}  // namespace diagramalg
