#include "diagramalg/irreps.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "diagramalg/errors.hpp"
#include "union_find.hpp"

namespace diagramalg {

namespace {

void sort_max_entry(std::vector<Block>& blocks) { std::sort(blocks.begin(), blocks.end(), max_entry_less); }

// Calls visit(labels, block_count) for every set partition of {1..k} as a
// restricted-growth string, in lexicographic order.
void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> labels(k);
    std::function<void(int, int)> rec = [&](int p, int nb) {
        if (p == k) {
            visit(labels, nb);
            return;
        }
        for (int b = 0; b <= nb; ++b) {
            labels[p] = b;
            rec(p + 1, b == nb ? nb + 1 : nb);
        }
    };
    rec(0, 0);
}

// Calls visit(mask) for each choice of m of the nb blocks, in lexicographic
// order of the chosen index lists.
void for_each_subset(int nb, int m, const std::function<void(const std::vector<bool>&)>& visit) {
    if (m > nb) return;
    std::vector<bool> pick(nb, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        visit(pick);
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

void check_label(Family f, int k, const IntPartition& lambda_star) {
    const auto labels = index_set(f, k);
    if (std::find(labels.begin(), labels.end(), lambda_star) == labels.end())
        throw Error(ErrorCode::LabelNotInFamily, to_string(lambda_star) + " does not label an irreducible of " +
                                                     std::string(family_name(f)) + " with k=" + std::to_string(k));
}

void check_content(const SetPartitionTableau& T) {
    std::vector<int> seen(T.k + 1, 0);
    auto mark = [&](const Block& b) {
        if (b.empty()) throw Error(ErrorCode::ShapeMismatch, "empty block in tableau");
        for (int x : b) {
            if (x < 1 || x > T.k) throw Error(ErrorCode::IndexOutOfRange, "tableau entry outside 1..k");
            if (seen[x]++) throw Error(ErrorCode::DuplicateVertex, "tableau entry repeated");
        }
    };
    for (const auto& b : T.first_row) mark(b);
    IntPartition shape;
    for (const auto& row : T.body) {
        for (const auto& b : row) mark(b);
        shape.parts.push_back(static_cast<int>(row.size()));
    }
    for (int x = 1; x <= T.k; ++x)
        if (!seen[x]) throw Error(ErrorCode::MissingVertex, "tableau misses " + std::to_string(x));
    if (shape != T.lambda_star) throw Error(ErrorCode::ShapeMismatch, "tableau body does not have shape lambda*");
}

}  // namespace

bool max_entry_less(const Block& a, const Block& b) {
    return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
}

SymmetricMDiagram::SymmetricMDiagram(int k, const std::vector<int>& top_labels,
                                     const std::vector<bool>& propagating_by_label)
    : k_(k) {
    if (static_cast<int>(top_labels.size()) != k) throw Error(ErrorCode::SizeMismatch, "top row needs k labels");
    std::vector<int> canon_of;
    std::vector<int> raw_of;
    for (int raw : top_labels) {
        auto it = std::find(raw_of.begin(), raw_of.end(), raw);
        int canon = static_cast<int>(it - raw_of.begin());
        if (it == raw_of.end()) {
            raw_of.push_back(raw);
            if (raw < 0 || raw >= static_cast<int>(propagating_by_label.size()))
                throw Error(ErrorCode::IndexOutOfRange, "label without propagation flag");
            prop_.push_back(propagating_by_label[raw]);
        }
        top_.push_back(static_cast<std::uint8_t>(canon));
    }
}

SymmetricMDiagram SymmetricMDiagram::from_blocks(int k, const std::vector<Block>& propagating,
                                                 const std::vector<Block>& other) {
    std::vector<int> labels(k, -1);
    std::vector<bool> flags;
    auto place = [&](const Block& b, bool prop) {
        if (b.empty()) throw Error(ErrorCode::SyntaxError, "empty block");
        for (int x : b) {
            if (x < 1 || x > k) throw Error(ErrorCode::IndexOutOfRange, "block entry outside 1..k");
            if (labels[x - 1] != -1) throw Error(ErrorCode::DuplicateVertex, "block entry repeated");
            labels[x - 1] = static_cast<int>(flags.size());
        }
        flags.push_back(prop);
    };
    for (const auto& b : propagating) place(b, true);
    for (const auto& b : other) place(b, false);
    for (int x = 1; x <= k; ++x)
        if (labels[x - 1] == -1) throw Error(ErrorCode::MissingVertex, "blocks miss " + std::to_string(x));
    return SymmetricMDiagram(k, labels, flags);
}

std::optional<SymmetricMDiagram> SymmetricMDiagram::from_diagram(const Diagram& d) {
    const int k = d.k();
    std::vector<int> labels(k);
    std::vector<bool> flags(d.block_count(), false);
    for (int i = 1; i <= k; ++i) labels[i - 1] = d.label(i);
    for (int i = 1; i <= k; ++i)
        if (d.label(i) == d.label(k + i)) flags[d.label(i)] = true;
    SymmetricMDiagram w(k, labels, flags);
    if (w.to_diagram() != d) return std::nullopt;
    return w;
}

int SymmetricMDiagram::m() const { return static_cast<int>(std::count(prop_.begin(), prop_.end(), true)); }

std::vector<Block> SymmetricMDiagram::top_blocks() const {
    std::vector<Block> out(prop_.size());
    for (int i = 1; i <= k_; ++i) out[top_[i - 1]].push_back(i);
    return out;
}

std::vector<Block> SymmetricMDiagram::propagating_blocks() const {
    std::vector<Block> out;
    auto all = top_blocks();
    for (std::size_t b = 0; b < all.size(); ++b)
        if (prop_[b]) out.push_back(all[b]);
    sort_max_entry(out);
    return out;
}

std::vector<Block> SymmetricMDiagram::nonpropagating_blocks() const {
    std::vector<Block> out;
    auto all = top_blocks();
    for (std::size_t b = 0; b < all.size(); ++b)
        if (!prop_[b]) out.push_back(all[b]);
    sort_max_entry(out);
    return out;
}

Diagram SymmetricMDiagram::to_diagram() const {
    const int nb = block_count();
    std::vector<int> labels(2 * k_);
    for (int i = 0; i < k_; ++i) {
        labels[i] = top_[i];
        labels[k_ + i] = prop_[top_[i]] ? top_[i] : top_[i] + nb;
    }
    return Diagram::from_labels(k_, labels);
}

int symmetric_cap() {
    if (const char* env = std::getenv("DIAGRAMALG_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 10;
}

const std::vector<SymmetricMDiagram>& enumerate_symmetric(Family f, int k, int m) {
    const auto ranks = rank_set(f, k);
    if (std::find(ranks.begin(), ranks.end(), m) == ranks.end())
        throw Error(ErrorCode::InvalidRank, "m=" + std::to_string(m) + " is not a rank of " +
                                                std::string(family_name(f)) + " with k=" + std::to_string(k));
    if (k > symmetric_cap())
        throw Error(ErrorCode::CapExceeded, "k=" + std::to_string(k) + " exceeds symmetric-diagram cap " +
                                                std::to_string(symmetric_cap()));
    static std::map<std::tuple<Family, int, int>, std::vector<SymmetricMDiagram>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(f, k, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<SymmetricMDiagram> out;
    for_each_set_partition(k, [&](const std::vector<int>& labels, int nb) {
        for_each_subset(nb, m, [&](const std::vector<bool>& pick) {
            SymmetricMDiagram w(k, labels, pick);
            if (in_family(w.to_diagram(), f)) out.push_back(std::move(w));
        });
    });
    return cache.emplace(key, std::move(out)).first->second;
}

ConjugateResult conjugate(const Diagram& d, const SymmetricMDiagram& w) {
    if (d.k() != w.k()) throw Error(ErrorCode::RankMismatch, "conjugating by a diagram of different k");
    const int k = d.k();
    const auto left = concat(d, w.to_diagram());
    const auto full = concat(left.product, transpose(d));
    auto wp = SymmetricMDiagram::from_diagram(full.product);
    if (!wp) throw std::logic_error("conjugate of a symmetric diagram is not symmetric");
    ConjugateResult res{*wp, wp->m(), left.deleted, std::nullopt};
    if (res.m_prime != w.m()) return res;

    // Propagating block i of w reaches the top of d∘w through its mirror;
    // the top vertices it reaches lie in propagating block twist(i) of w'.
    const auto from = w.propagating_blocks();
    const auto to = wp->propagating_blocks();
    const Diagram& p = left.product;
    Permutation sigma;
    for (const auto& block : from) {
        const int lab = p.label(k + block.front());
        int top = 0;
        for (int i = 1; i <= k && !top; ++i)
            if (p.label(i) == lab) top = i;
        if (!top) throw std::logic_error("propagating block lost under equal-rank conjugation");
        int j = 0;
        while (std::find(to[j].begin(), to[j].end(), top) == to[j].end()) ++j;
        sigma.images.push_back(j + 1);
    }
    res.twist = sigma;
    return res;
}

TwistedVector act_twisted(const Diagram& d, const TwistedVector& v) {
    TwistedVector out{v.lambda_star, {}};
    const auto& basis = standard_tableaux(v.lambda_star);
    for (const auto& [key, c] : v.combo) {
        const auto& [w, t] = key;
        if (t.shape() != v.lambda_star || w.m() != v.lambda_star.size())
            throw Error(ErrorCode::ShapeMismatch, "twisted vector term does not match lambda*");
        const auto res = conjugate(d, w);
        if (!res.twist) continue;
        for (const auto& [i, x] : straighten(apply(*res.twist, t))) {
            auto& slot = out.combo[{res.w_prime, basis[i]}];
            slot += (c * LaurentPoly(x)).shifted(res.deleted);
            if (slot.is_zero()) out.combo.erase({res.w_prime, basis[i]});
        }
    }
    return out;
}

bool SetPartitionTableau::is_standard() const {
    for (std::size_t i = 0; i + 1 < first_row.size(); ++i)
        if (!max_entry_less(first_row[i], first_row[i + 1])) return false;
    for (std::size_t r = 0; r < body.size(); ++r)
        for (std::size_t c = 0; c < body[r].size(); ++c) {
            if (c + 1 < body[r].size() && !max_entry_less(body[r][c], body[r][c + 1])) return false;
            if (r + 1 < body.size() && c < body[r + 1].size() && !max_entry_less(body[r][c], body[r + 1][c]))
                return false;
        }
    return true;
}

std::string to_string(const SetPartitionTableau& T) {
    auto block = [](const Block& b) {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        return s + "}";
    };
    std::string out = "row1:";
    for (const auto& b : T.first_row) out += " " + block(b);
    for (const auto& row : T.body) {
        out += " /";
        for (const auto& b : row) out += " " + block(b);
    }
    return out;
}

SetPartitionTableau tableau_from_pair(const SymmetricMDiagram& w, const YoungTableau& t) {
    if (t.size() != w.m())
        throw Error(ErrorCode::ShapeMismatch, "tableau size " + std::to_string(t.size()) + " differs from m=" +
                                                  std::to_string(w.m()));
    const auto prop = w.propagating_blocks();
    SetPartitionTableau T;
    T.k = w.k();
    T.lambda_star = t.shape();
    T.first_row = w.nonpropagating_blocks();
    std::vector<bool> seen(prop.size() + 1, false);
    for (const auto& row : t.rows) {
        T.body.emplace_back();
        for (int v : row) {
            if (v < 1 || v > static_cast<int>(prop.size()) || seen[v])
                throw Error(ErrorCode::ShapeMismatch, "tableau entries must be 1..m once");
            seen[v] = true;
            T.body.back().push_back(prop[v - 1]);
        }
    }
    return T;
}

std::pair<SymmetricMDiagram, YoungTableau> pair_from_tableau(const SetPartitionTableau& T) {
    check_content(T);
    std::vector<Block> prop;
    for (const auto& row : T.body) prop.insert(prop.end(), row.begin(), row.end());
    auto w = SymmetricMDiagram::from_blocks(T.k, prop, T.first_row);
    const auto ordered = w.propagating_blocks();
    YoungTableau t;
    for (const auto& row : T.body) {
        t.rows.emplace_back();
        for (const auto& b : row)
            t.rows.back().push_back(static_cast<int>(std::find(ordered.begin(), ordered.end(), b) - ordered.begin()) + 1);
    }
    return {w, t};
}

TableauAction act_tableau(const Diagram& d, const SetPartitionTableau& T) {
    if (d.k() != T.k) throw Error(ErrorCode::RankMismatch, "diagram and tableau have different k");
    check_content(T);
    const int k = d.k();
    // Node v-1 for vertex v of d; T's blocks are glued onto the bottom row.
    detail::UnionFind uf(2 * k);
    std::vector<int> first(d.block_count(), -1);
    for (int v = 1; v <= 2 * k; ++v) {
        int& f = first[d.label(v)];
        if (f < 0) f = v - 1; else uf.unite(f, v - 1);
    }
    auto glue = [&](const Block& b) {
        for (int x : b) uf.unite(k + b.front() - 1, k + x - 1);
    };
    for (const auto& b : T.first_row) glue(b);
    for (const auto& row : T.body)
        for (const auto& b : row) glue(b);

    std::vector<Block> top_part(2 * k);
    for (int i = 1; i <= k; ++i) top_part[uf.find(i - 1)].push_back(i);

    TableauAction res;
    SetPartitionTableau out;
    out.k = k;
    out.lambda_star = T.lambda_star;
    std::vector<bool> owned(2 * k, false);
    for (const auto& row : T.body) {
        out.body.emplace_back();
        for (const auto& b : row) {
            const int r = uf.find(k + b.front() - 1);
            if (owned[r] || top_part[r].empty()) return res;
            owned[r] = true;
            out.body.back().push_back(top_part[r]);
        }
    }
    std::vector<bool> done(2 * k, false);
    for (int i = 1; i <= k; ++i) {
        const int r = uf.find(i - 1);
        if (owned[r] || done[r]) continue;
        done[r] = true;
        out.first_row.push_back(top_part[r]);
    }
    sort_max_entry(out.first_row);
    for (int x = 1; x <= k; ++x) {
        const int r = uf.find(k + x - 1);
        if (top_part[r].empty() && !done[r]) {
            done[r] = true;
            ++res.deleted;
        }
    }
    res.result = std::move(out);
    return res;
}

TableauVector act_natural(const Diagram& d, const TableauVector& v) {
    TableauVector out{v.lambda_star, {}};
    const auto& basis = standard_tableaux(v.lambda_star);
    for (const auto& [T, c] : v.combo) {
        if (T.lambda_star != v.lambda_star) throw Error(ErrorCode::ShapeMismatch, "tableau vector term shape differs");
        const auto res = act_tableau(d, T);
        if (!res.result) continue;
        const auto [w, t] = pair_from_tableau(*res.result);
        for (const auto& [i, x] : straighten(t)) {
            auto key = tableau_from_pair(w, basis[i]);
            auto& slot = out.combo[key];
            slot += (c * LaurentPoly(x)).shifted(res.deleted);
            if (slot.is_zero()) out.combo.erase(key);
        }
    }
    return out;
}

std::vector<SetPartitionTableau> enumerate_sspt(Family f, int k, const IntPartition& lambda_star) {
    check_label(f, k, lambda_star);
    if (k > symmetric_cap())
        throw Error(ErrorCode::CapExceeded, "k=" + std::to_string(k) + " exceeds cap " + std::to_string(symmetric_cap()));
    const int m = lambda_star.size();
    std::vector<SetPartitionTableau> out;
    for_each_set_partition(k, [&](const std::vector<int>& labels, int nb) {
        std::vector<Block> blocks(nb);
        for (int i = 1; i <= k; ++i) blocks[labels[i - 1]].push_back(i);
        for_each_subset(nb, m, [&](const std::vector<bool>& pick) {
            if (!in_family(SymmetricMDiagram(k, labels, pick).to_diagram(), f)) return;
            std::vector<Block> prop, rest;
            for (int b = 0; b < nb; ++b) (pick[b] ? prop : rest).push_back(blocks[b]);
            sort_max_entry(prop);
            sort_max_entry(rest);
            // Standard fillings: place blocks in increasing max-entry order
            // at addable cells of the growing shape.
            SetPartitionTableau T;
            T.k = k;
            T.lambda_star = lambda_star;
            T.first_row = rest;
            T.body.assign(lambda_star.length(), {});
            std::function<void(int)> place = [&](int idx) {
                if (idx == m) {
                    out.push_back(T);
                    return;
                }
                for (int r = 0; r < lambda_star.length(); ++r) {
                    const auto len = T.body[r].size();
                    if (static_cast<int>(len) >= lambda_star[r]) continue;
                    if (r > 0 && T.body[r - 1].size() <= len) continue;
                    T.body[r].push_back(prop[idx]);
                    place(idx + 1);
                    T.body[r].pop_back();
                }
            };
            place(0);
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    LaurentMatrix c(rows, std::vector<LaurentPoly>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

LaurentMatrix identity_matrix(int size) {
    LaurentMatrix m(size, std::vector<LaurentPoly>(size));
    for (int i = 0; i < size; ++i) m[i][i] = 1;
    return m;
}

IrreducibleModule::IrreducibleModule(Family f, int k, IntPartition lambda_star, BasisChoice basis)
    : family_(f), k_(k), lambda_star_(std::move(lambda_star)), basis_(basis) {
    check_label(f, k, lambda_star_);
    m_ = lambda_star_.size();
    symmetric_ = &enumerate_symmetric(f, k, m_);
    for (int i = 0; i < static_cast<int>(symmetric_->size()); ++i) symmetric_index_.emplace((*symmetric_)[i], i);
    f_ = static_cast<int>(standard_tableaux(lambda_star_).size());
    dim_ = static_cast<int>(symmetric_->size()) * f_;
    if (basis_ == BasisChoice::Tableau) {
        tableaux_ = enumerate_sspt(f, k, lambda_star_);
        for (int i = 0; i < static_cast<int>(tableaux_.size()); ++i) tableau_index_.emplace(tableaux_[i], i);
        if (static_cast<int>(tableaux_.size()) != dim_)
            throw std::logic_error("set-partition tableau count differs from module dimension");
    }
}

std::pair<SymmetricMDiagram, YoungTableau> IrreducibleModule::twisted_label(int j) const {
    return {(*symmetric_)[j / f_], standard_tableaux(lambda_star_)[j % f_]};
}

int IrreducibleModule::twisted_index(const SymmetricMDiagram& w, const YoungTableau& t) const {
    return symmetric_index_.at(w) * f_ + standard_index(t);
}

int IrreducibleModule::tableau_index(const SetPartitionTableau& T) const {
    auto it = tableau_index_.find(T);
    if (it == tableau_index_.end()) throw Error(ErrorCode::ShapeMismatch, "not a basis tableau: " + to_string(T));
    return it->second;
}

void IrreducibleModule::check_diagram(const Diagram& d) const {
    if (d.k() != k_) throw Error(ErrorCode::RankMismatch, "diagram size differs from module k");
    if (!in_family(d, family_))
        throw Error(ErrorCode::AlgebraMismatch, format_diagram(d) + " is not in " + std::string(family_name(family_)));
}

std::vector<std::pair<int, LaurentPoly>> IrreducibleModule::act_on_basis(const Diagram& d, int j) const {
    std::vector<std::pair<int, LaurentPoly>> out;
    const auto& syt = standard_tableaux(lambda_star_);
    if (basis_ == BasisChoice::Twisted) {
        const auto& w = (*symmetric_)[j / f_];
        const auto res = conjugate(d, w);
        if (!res.twist) return out;
        const int base = symmetric_index_.at(res.w_prime) * f_;
        for (const auto& [i, x] : straighten(apply(*res.twist, syt[j % f_])))
            out.emplace_back(base + i, LaurentPoly::monomial(res.deleted, Rational(x)));
    } else {
        const auto res = act_tableau(d, tableaux_[j]);
        if (!res.result) return out;
        const auto [w, t] = pair_from_tableau(*res.result);
        for (const auto& [i, x] : straighten(t))
            out.emplace_back(tableau_index(tableau_from_pair(w, syt[i])), LaurentPoly::monomial(res.deleted, Rational(x)));
    }
    return out;
}

LaurentMatrix IrreducibleModule::matrix(const Diagram& d) const {
    check_diagram(d);
    LaurentMatrix mat(dim_, std::vector<LaurentPoly>(dim_));
    for (int j = 0; j < dim_; ++j)
        for (const auto& [i, c] : act_on_basis(d, j)) mat[i][j] += c;
    return mat;
}

LaurentMatrix IrreducibleModule::matrix(const Element& a) const {
    if (a.k() != k_ || a.family() != family_) throw Error(ErrorCode::AlgebraMismatch, "element of a different algebra");
    LaurentMatrix mat(dim_, std::vector<LaurentPoly>(dim_));
    for (const auto& [d, coeff] : a.terms())
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, c] : act_on_basis(d, j)) mat[i][j] += coeff * c;
    return mat;
}

LaurentPoly IrreducibleModule::trace(const Element& a) const {
    if (a.k() != k_ || a.family() != family_) throw Error(ErrorCode::AlgebraMismatch, "element of a different algebra");
    LaurentPoly tr;
    for (const auto& [d, coeff] : a.terms())
        for (int j = 0; j < dim_; ++j)
            for (const auto& [i, c] : act_on_basis(d, j))
                if (i == j) tr += coeff * c;
    return tr;
}

LaurentMatrix rep_matrix_irrep(const Diagram& d, Family f, int k, const IntPartition& lambda_star, BasisChoice basis) {
    return IrreducibleModule(f, k, lambda_star, basis).matrix(d);
}

Integer irrep_dimension(Family f, int k, const IntPartition& lambda_star) {
    check_label(f, k, lambda_star);
    return Integer(static_cast<unsigned long>(enumerate_symmetric(f, k, lambda_star.size()).size())) *
           num_standard_tableaux(lambda_star);
}

}  // namespace diagramalg
