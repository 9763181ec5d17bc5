#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "diagramalg/coeff.hpp"
#include "diagramalg/diagrams.hpp"
#include "diagramalg/partitions.hpp"
#include "diagramalg/symrep.hpp"

namespace diagramalg {

using Block = std::vector<int>;

// Max-entry order on blocks of {1..k}.
bool max_entry_less(const Block& a, const Block& b);

// A diagram equal to its mirror image whose propagating blocks are each
// joined to their own mirror. Stored as the top set partition (canonical
// restricted-growth labels) plus a flag per block.
class SymmetricMDiagram {
public:
    SymmetricMDiagram() = default;
    SymmetricMDiagram(int k, const std::vector<int>& top_labels, const std::vector<bool>& propagating_by_label);
    static SymmetricMDiagram from_blocks(int k, const std::vector<Block>& propagating, const std::vector<Block>& other);
    static std::optional<SymmetricMDiagram> from_diagram(const Diagram& d);

    int k() const { return k_; }
    int m() const;
    int block_count() const { return static_cast<int>(prop_.size()); }
    // Top blocks ordered by least element.
    std::vector<Block> top_blocks() const;
    std::vector<Block> propagating_blocks() const;     // max-entry order
    std::vector<Block> nonpropagating_blocks() const;  // max-entry order
    Diagram to_diagram() const;

    auto operator<=>(const SymmetricMDiagram&) const = default;

private:
    int k_ = 0;
    std::vector<std::uint8_t> top_;
    std::vector<bool> prop_;
};

// Symmetric-diagram enumeration cap; DIAGRAMALG_CAP overrides.
int symmetric_cap();
const std::vector<SymmetricMDiagram>& enumerate_symmetric(Family f, int k, int m);

struct ConjugateResult {
    SymmetricMDiagram w_prime;
    int m_prime = 0;
    int deleted = 0;
    std::optional<Permutation> twist;
};

ConjugateResult conjugate(const Diagram& d, const SymmetricMDiagram& w);

struct TwistedVector {
    IntPartition lambda_star;
    std::map<std::pair<SymmetricMDiagram, YoungTableau>, LaurentPoly> combo;

    bool operator==(const TwistedVector&) const = default;
};

TwistedVector act_twisted(const Diagram& d, const TwistedVector& v);

struct SetPartitionTableau {
    int k = 0;
    IntPartition lambda_star;
    std::vector<Block> first_row;
    std::vector<std::vector<Block>> body;

    bool is_standard() const;
    auto operator<=>(const SetPartitionTableau&) const = default;
};

std::string to_string(const SetPartitionTableau& T);

SetPartitionTableau tableau_from_pair(const SymmetricMDiagram& w, const YoungTableau& t);
std::pair<SymmetricMDiagram, YoungTableau> pair_from_tableau(const SetPartitionTableau& T);

struct TableauAction {
    std::optional<SetPartitionTableau> result;  // empty means the action is zero
    int deleted = 0;
};

TableauAction act_tableau(const Diagram& d, const SetPartitionTableau& T);

struct TableauVector {
    IntPartition lambda_star;
    std::map<SetPartitionTableau, LaurentPoly> combo;

    bool operator==(const TableauVector&) const = default;
};

TableauVector act_natural(const Diagram& d, const TableauVector& v);

std::vector<SetPartitionTableau> enumerate_sspt(Family f, int k, const IntPartition& lambda_star);

enum class BasisChoice { Twisted, Tableau };

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix identity_matrix(int size);

// The irreducible module labelled by lambda* with a fixed basis.
class IrreducibleModule {
public:
    IrreducibleModule(Family f, int k, IntPartition lambda_star, BasisChoice basis);

    Family family() const { return family_; }
    int k() const { return k_; }
    int m() const { return m_; }
    const IntPartition& lambda_star() const { return lambda_star_; }
    BasisChoice basis() const { return basis_; }
    int dimension() const { return dim_; }

    // Twisted basis index j = (symmetric diagram index) * f + (tableau index).
    std::pair<SymmetricMDiagram, YoungTableau> twisted_label(int j) const;
    int twisted_index(const SymmetricMDiagram& w, const YoungTableau& t) const;
    const SetPartitionTableau& tableau_label(int j) const { return tableaux_[j]; }
    int tableau_index(const SetPartitionTableau& T) const;

    // Image of basis vector j under d as sparse (row, coefficient) pairs.
    std::vector<std::pair<int, LaurentPoly>> act_on_basis(const Diagram& d, int j) const;
    LaurentMatrix matrix(const Diagram& d) const;
    LaurentMatrix matrix(const Element& a) const;
    LaurentPoly trace(const Element& a) const;

private:
    void check_diagram(const Diagram& d) const;

    Family family_;
    int k_;
    IntPartition lambda_star_;
    BasisChoice basis_;
    int m_ = 0;
    int f_ = 1;
    int dim_ = 0;
    const std::vector<SymmetricMDiagram>* symmetric_ = nullptr;
    std::map<SymmetricMDiagram, int> symmetric_index_;
    std::vector<SetPartitionTableau> tableaux_;
    std::map<SetPartitionTableau, int> tableau_index_;
};

LaurentMatrix rep_matrix_irrep(const Diagram& d, Family f, int k, const IntPartition& lambda_star, BasisChoice basis);
Integer irrep_dimension(Family f, int k, const IntPartition& lambda_star);

}  // namespace diagramalg
