#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "diagramalg/coeff.hpp"
#include "diagramalg/diagrams.hpp"

namespace diagramalg {

// Weakly decreasing list of positive parts; empty is the partition of 0.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    IntPartition(std::initializer_list<int> p);
    explicit IntPartition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int operator[](int i) const { return parts[i]; }

    auto operator<=>(const IntPartition&) const = default;
};

// Table order used everywhere labels are listed: by size, then
// lexicographically decreasing, e.g. [3] < [2,1] < [1,1,1].
bool table_less(const IntPartition& a, const IntPartition& b);

std::string to_string(const IntPartition& p);
// Accepts "", "[]", "3,2,1", "[3,2,1]" or "3 2 1".
IntPartition parse_partition(const std::string& text);

// All partitions of n in table order.
std::vector<IntPartition> partitions_of(int n);
IntPartition ones(int n);

std::map<int, int> multiplicities(const IntPartition& p);

// Compositions nu with nu_i | kappa_i, in lexicographic order.
std::vector<std::vector<int>> divisors(const IntPartition& kappa);

Integer binom(long a, long b);
Integer stirling2(long a, long b);
Integer double_factorial(long a);
Integer bell(long a);
Integer factorial(long a);

// Admissible ranks of diagrams in the family.
std::vector<int> rank_set(Family f, int k);
// The lambda* labels of the irreducible modules, in table order.
std::vector<IntPartition> index_set(Family f, int k);
// The same labels as partitions lambda of n, lambda = [n - |lambda*|, lambda*].
std::vector<IntPartition> index_set(Family f, int k, long n);

}  // namespace diagramalg
