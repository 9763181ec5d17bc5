#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace diagramalg::cli {

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

json to_json(const IntPartition& p) { return p.parts; }

json to_json(const Diagram& d) { return json{{"k", d.k()}, {"blocks", d.blocks()}}; }

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"exp", e}, {"num", to_string(Integer(c.get_num()))}, {"den", to_string(Integer(c.get_den()))}});
    return out;
}

json to_json(const Element& a) {
    json out = json::array();
    for (const auto& [d, c] : a.terms()) out.push_back({{"coeff", to_json(c)}, {"diagram", to_json(d)}});
    return out;
}

json to_json(const SymmetricMDiagram& w) {
    return json{{"k", w.k()}, {"propagating", w.propagating_blocks()}, {"nonpropagating", w.nonpropagating_blocks()}};
}

json to_json(const SetPartitionTableau& T) {
    return json{{"lambda_star", to_json(T.lambda_star)}, {"first_row", T.first_row}, {"body", T.body}};
}

json to_json(const LaurentMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        out.push_back(r);
    }
    return out;
}

json to_json(const IntegerMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(integer_json(x));
        out.push_back(r);
    }
    return out;
}

json to_json(const CharacterTable& t) {
    json cols = json::array();
    for (const auto& c : t.cols) cols.push_back({{"kappa", to_json(c.kappa)}, {"s", c.s}});
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return json{{"family", std::string(family_name(t.family))},
                {"k", t.k},
                {"rows", rows},
                {"cols", cols},
                {"values", to_json(t.values)}};
}

json to_json(const TableFactorization& f) {
    json labels = json::array();
    for (const auto& l : f.labels) labels.push_back(to_json(l));
    return json{{"labels", labels}, {"block", to_json(f.block)}, {"f", to_json(f.f)}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                   const IntegerMatrix& m) {
    std::ostringstream out;
    out << "lambda*";
    for (const auto& c : col_labels) out << ',' << csv_field(c);
    out << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << csv_field(row_labels[i]);
        for (const auto& x : m[i]) out << ',' << to_string(x);
        out << '\n';
    }
    return out.str();
}

std::string to_text(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                    const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_width = 0;
    for (const auto& r : row_labels) label_width = std::max(label_width, r.size());
    std::vector<std::size_t> widths(col_labels.size());
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
        widths[j] = col_labels[j].size();
        for (const auto& row : cells) widths[j] = std::max(widths[j], row[j].size());
    }
    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
    pad("", label_width);
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
        out << "  ";
        pad(col_labels[j], widths[j]);
    }
    out << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << row_labels[i] << std::string(label_width - row_labels[i].size(), ' ');
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            out << "  ";
            pad(cells[i][j], widths[j]);
        }
        out << '\n';
    }
    return out.str();
}

std::string class_name(const ClassLabel& c) { return to_string(c.kappa); }

}  // namespace diagramalg::cli
