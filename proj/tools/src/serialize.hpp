#pragma once

#include <string>
#include <vector>

#include "diagramalg/diagramalg.hpp"
#include "json.hpp"

namespace diagramalg::cli {

using nlohmann::json;

json integer_json(const Integer& z);
json to_json(const IntPartition& p);
json to_json(const Diagram& d);
json to_json(const LaurentPoly& p);
json to_json(const Element& a);
json to_json(const SymmetricMDiagram& w);
json to_json(const SetPartitionTableau& T);
json to_json(const LaurentMatrix& m);
json to_json(const IntegerMatrix& m);
json to_json(const CharacterTable& t);
json to_json(const TableFactorization& f);

// RFC 4180 quoting for labels such as "[2,1]".
std::string csv_field(const std::string& s);
std::string to_csv(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                   const IntegerMatrix& m);
// Right-aligned plain-text grid with row and column labels.
std::string to_text(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                    const std::vector<std::vector<std::string>>& cells);

// Within one table kappa determines s, so kappa alone labels a column.
std::string class_name(const ClassLabel& c);

}  // namespace diagramalg::cli
