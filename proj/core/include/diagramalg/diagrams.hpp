#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diagramalg {

enum class Row { Top, Bottom };

// A vertex i or i' of a k-diagram. Internally vertices are numbered 1..2k
// with bottom vertex j stored as k + j.
struct Vertex {
    int index = 1;
    Row row = Row::Top;

    int encode(int k) const { return row == Row::Top ? index : k + index; }
    static Vertex decode(int v, int k) {
        return v <= k ? Vertex{v, Row::Top} : Vertex{v - k, Row::Bottom};
    }
    auto operator<=>(const Vertex&) const = default;
};

enum class Family {
    Partition,
    Brauer,
    RookBrauer,
    Rook,
    TemperleyLieb,
    Motzkin,
    PlanarRook,
    PlanarPartition,
    SymmetricGroup,
};

const std::vector<Family>& all_families();
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool is_planar_family(Family f);

// Set partition of the 2k vertices, stored as a restricted-growth string:
// label(v) is the index of v's block, blocks numbered by least vertex.
// This is the canonical form, so defaulted comparison is canonical order.
class Diagram {
public:
    Diagram() = default;

    // Any labelling of the 2k vertices by block ids; renumbered canonically.
    static Diagram from_labels(int k, const std::vector<int>& labels);
    // Blocks over the internal 1..2k encoding; validated.
    static Diagram from_blocks(int k, const std::vector<std::vector<int>>& blocks);

    int k() const { return k_; }
    int block_count() const { return blocks_; }
    int label(int v) const { return labels_[v - 1]; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }

    // Canonical blocks over 1..2k, each sorted, ordered by least vertex.
    std::vector<std::vector<int>> blocks() const;

    auto operator<=>(const Diagram&) const = default;

private:
    // Member order matters: comparison is by k, then labels.
    int k_ = 0;
    std::vector<std::uint8_t> labels_;
    int blocks_ = 0;
};

struct ConcatResult {
    Diagram product;
    int deleted = 0;
};

Diagram identity(int k);
Diagram parse_diagram(std::string_view text, int k);
std::string format_diagram(const Diagram& d);

ConcatResult concat(const Diagram& d1, const Diagram& d2);
Diagram transpose(const Diagram& d);
int rank(const Diagram& d);
bool is_planar(const Diagram& d);
bool in_family(const Diagram& d, Family f);

// Juxtaposition: d1 on vertices 1..k1, d2 shifted to k1+1..k1+k2.
Diagram tensor(const Diagram& d1, const Diagram& d2);
// Permutation diagram with blocks {sigma(j), j'}; images are 1-based.
Diagram permutation_diagram(const std::vector<int>& images);

enum class GeneratorKind { S, P, B, E, L, R };

std::string_view generator_name(GeneratorKind kind);
Diagram generator(GeneratorKind kind, int i, int k);
// Every s_i, p_i, b_i, e_i, l_i, r_i of size k that lies in the family.
std::vector<Diagram> family_generators(Family f, int k);

// Largest k accepted by enumerate_basis; DIAGRAMALG_CAP overrides.
int enumeration_cap(Family f);
std::vector<Diagram> enumerate_basis(Family f, int k);

}  // namespace diagramalg
