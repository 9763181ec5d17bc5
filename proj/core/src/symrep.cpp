#include "diagramalg/symrep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "diagramalg/errors.hpp"

namespace diagramalg {

namespace {

int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

struct ShapeData {
    std::vector<YoungTableau> list;
    std::map<YoungTableau, int> index;
};

std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex m;
    return m;
}

const ShapeData& shape_data(const IntPartition& mu) {
    static std::map<IntPartition, ShapeData> cache;
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;

    ShapeData data;
    const int m = mu.size();
    std::vector<std::vector<int>> rows(mu.length());
    // Place m, m-1, ..., 1 at removable corners of the remaining shape.
    std::vector<int> len(mu.parts.begin(), mu.parts.end());
    for (int r = 0; r < mu.length(); ++r) rows[r].assign(mu[r], 0);
    std::function<void(int)> rec = [&](int value) {
        if (value == 0) {
            data.list.emplace_back(rows);
            return;
        }
        for (int r = 0; r < static_cast<int>(len.size()); ++r) {
            if (len[r] == 0) continue;
            const bool corner = r + 1 == static_cast<int>(len.size()) || len[r + 1] < len[r];
            if (!corner) continue;
            --len[r];
            rows[r][len[r]] = value;
            rec(value - 1);
            rows[r][len[r]] = 0;
            ++len[r];
        }
    };
    rec(m);
    std::sort(data.list.begin(), data.list.end(),
              [](const YoungTableau& a, const YoungTableau& b) { return a.row_word() > b.row_word(); });
    for (int i = 0; i < static_cast<int>(data.list.size()); ++i) data.index.emplace(data.list[i], i);
    return cache.emplace(mu, std::move(data)).first->second;
}

using Straightened = std::vector<std::pair<int, Integer>>;

const Straightened& straighten_cached(const YoungTableau& t);

Straightened compute_straightening(const YoungTableau& t) {
    const IntPartition shape = t.shape();
    const int ncols = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    auto col_len = [&](int c) {
        int n = 0;
        while (n < static_cast<int>(t.rows.size()) && static_cast<int>(t.rows[n].size()) > c) ++n;
        return n;
    };

    // Sorting columns costs the sign of the column permutation.
    YoungTableau u = t;
    int sign = 1;
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> col;
        for (int r = 0; r < col_len(c); ++r) col.push_back(u.rows[r][c]);
        sign *= inversion_sign(col);
        std::sort(col.begin(), col.end());
        for (int r = 0; r < col_len(c); ++r) u.rows[r][c] = col[r];
    }
    if (u != t) {
        Straightened out = straighten_cached(u);
        for (auto& [i, c] : out) c *= sign;
        return out;
    }
    if (t.is_standard()) return {{shape_data(shape).index.at(t), Integer(1)}};

    int dr = -1, dc = -1;
    for (int r = 0; r < static_cast<int>(t.rows.size()) && dr < 0; ++r)
        for (int c = 0; c + 1 < static_cast<int>(t.rows[r].size()); ++c)
            if (t.rows[r][c] > t.rows[r][c + 1]) {
                dr = r;
                dc = c;
                break;
            }

    // Garnir element on A = column dc from row dr down, B = column dc+1 down to row dr.
    std::vector<std::pair<int, int>> cells;
    for (int r = dr; r < col_len(dc); ++r) cells.emplace_back(r, dc);
    const int asize = static_cast<int>(cells.size());
    for (int r = 0; r <= dr; ++r) cells.emplace_back(r, dc + 1);
    std::vector<int> orig;
    for (auto [r, c] : cells) orig.push_back(t.rows[r][c]);
    std::vector<int> values = orig;
    std::sort(values.begin(), values.end());

    std::map<int, Integer> acc;
    std::vector<bool> pick(values.size(), false);
    std::fill(pick.begin(), pick.begin() + asize, true);
    do {
        std::vector<int> next;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (pick[i]) next.push_back(values[i]);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!pick[i]) next.push_back(values[i]);
        if (next == orig) continue;
        std::vector<int> where;
        for (int v : next) where.push_back(static_cast<int>(std::find(orig.begin(), orig.end(), v) - orig.begin()));
        const int s = inversion_sign(where);
        YoungTableau w = t;
        for (std::size_t p = 0; p < cells.size(); ++p) w.rows[cells[p].first][cells[p].second] = next[p];
        for (const auto& [i, c] : straighten_cached(w)) acc[i] -= s * c;
    } while (std::prev_permutation(pick.begin(), pick.end()));

    Straightened out;
    for (auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, c);
    return out;
}

const Straightened& straighten_cached(const YoungTableau& t) {
    static std::map<YoungTableau, Straightened> cache;
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    Straightened value = compute_straightening(t);
    return cache.emplace(t, std::move(value)).first->second;
}

void check_filling(const YoungTableau& t) {
    const int m = t.size();
    std::vector<bool> seen(m + 1, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size())
            throw Error(ErrorCode::ShapeMismatch, "rows of a tableau must weakly decrease");
        if (t.rows[r].empty()) throw Error(ErrorCode::ShapeMismatch, "empty tableau row");
        for (int v : t.rows[r]) {
            if (v < 1 || v > m || seen[v]) throw Error(ErrorCode::ShapeMismatch, "tableau entries must be 1..m once");
            seen[v] = true;
        }
    }
}

}  // namespace

Permutation Permutation::identity(int m) {
    Permutation p;
    for (int i = 1; i <= m; ++i) p.images.push_back(i);
    return p;
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(m);
    std::vector<bool> used(m + 1, false);
    for (const auto& cyc : cycles) {
        for (int x : cyc) {
            if (x < 1 || x > m || used[x]) throw Error(ErrorCode::IndexOutOfRange, "bad cycle entry");
            used[x] = true;
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) p.images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.assign(images.size(), 0);
    for (int i = 1; i <= degree(); ++i) p.images[images[i - 1] - 1] = i;
    return p;
}

IntPartition Permutation::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(degree() + 1, false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j - 1]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return IntPartition(lens);
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type().parts)
        if (len % 2 == 0) s = -s;
    return s;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    Permutation p;
    for (int i = 1; i <= tau.degree(); ++i) p.images.push_back(sigma(tau(i)));
    return p;
}

std::string to_string(const Permutation& p) {
    std::string out = "[";
    for (int i = 0; i < p.degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.images[i]);
    }
    return out + "]";
}

IntPartition YoungTableau::shape() const {
    IntPartition p;
    for (const auto& r : rows) p.parts.push_back(static_cast<int>(r.size()));
    return p;
}

int YoungTableau::size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
}

bool YoungTableau::is_standard() const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c]) return false;
        }
    return true;
}

std::vector<int> YoungTableau::row_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string to_string(const YoungTableau& t) {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(t.rows[r][c]);
        }
        out += ']';
    }
    return out + "]";
}

YoungTableau apply(const Permutation& sigma, const YoungTableau& t) {
    if (sigma.degree() != t.size()) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from tableau size");
    YoungTableau u = t;
    for (auto& r : u.rows)
        for (int& v : r) v = sigma(v);
    return u;
}

Integer num_standard_tableaux(const IntPartition& mu) {
    // Hook length formula.
    Integer num = factorial(mu.size());
    Integer den = 1;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            int below = 0;
            for (int r2 = r + 1; r2 < mu.length() && mu[r2] > c; ++r2) ++below;
            den *= mu[r] - c + below;
        }
    return num / den;
}

const std::vector<YoungTableau>& standard_tableaux(const IntPartition& mu) { return shape_data(mu).list; }

int standard_index(const YoungTableau& t) {
    const auto& idx = shape_data(t.shape()).index;
    auto it = idx.find(t);
    if (it == idx.end()) throw Error(ErrorCode::ShapeMismatch, "tableau " + to_string(t) + " is not standard");
    return it->second;
}

YoungTableau column_reading_tableau(const IntPartition& mu) {
    YoungTableau t;
    for (int r = 0; r < mu.length(); ++r) t.rows.emplace_back(mu[r], 0);
    int v = 1;
    for (int c = 0; c < (mu.empty() ? 0 : mu[0]); ++c)
        for (int r = 0; r < mu.length() && mu[r] > c; ++r) t.rows[r][c] = v++;
    return t;
}

SpechtVector basis_vector(const YoungTableau& t) {
    if (!t.is_standard()) throw Error(ErrorCode::ShapeMismatch, "basis vectors are indexed by standard tableaux");
    SpechtVector v{t.shape(), {}};
    v.combo.emplace(t, Rational(1));
    return v;
}

const std::vector<std::pair<int, Integer>>& straighten(const YoungTableau& t) {
    check_filling(t);
    return straighten_cached(t);
}

SpechtVector act(const Permutation& sigma, const SpechtVector& v) {
    if (sigma.degree() != v.shape.size()) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from shape size");
    const auto& basis = standard_tableaux(v.shape);
    std::map<int, Rational> acc;
    for (const auto& [t, c] : v.combo)
        for (const auto& [i, x] : straighten(apply(sigma, t))) acc[i] += c * x;
    SpechtVector out{v.shape, {}};
    for (const auto& [i, c] : acc)
        if (c != 0) out.combo.emplace(basis[i], c);
    return out;
}

RationalMatrix rep_matrix(const Permutation& sigma, const IntPartition& mu) {
    if (sigma.degree() != mu.size()) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from shape size");
    const auto& basis = standard_tableaux(mu);
    RationalMatrix mat(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [i, x] : straighten(apply(sigma, basis[j]))) mat[i][j] = x;
    return mat;
}

Integer sym_character(const IntPartition& lambda_star, const IntPartition& mu) {
    if (lambda_star.size() != mu.size())
        throw Error(ErrorCode::SizeMismatch, "character arguments " + to_string(lambda_star) + " and " + to_string(mu));
    // Murnaghan-Nakayama on beta-sets, stripping parts of mu in order.
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
    static std::mutex memo_mutex;
    std::function<Integer(const std::vector<int>&, std::size_t)> chi = [&](const std::vector<int>& lam,
                                                                            std::size_t pos) -> Integer {
        if (pos == mu.parts.size()) return 1;
        std::vector<int> rest(mu.parts.begin() + static_cast<long>(pos), mu.parts.end());
        {
            std::lock_guard lock(memo_mutex);
            auto it = memo.find({lam, rest});
            if (it != memo.end()) return it->second;
        }
        const int len = static_cast<int>(lam.size());
        const int r = mu.parts[pos];
        std::set<int> beta;
        for (int j = 0; j < len; ++j) beta.insert(lam[j] + (len - 1 - j));
        Integer total = 0;
        for (int b : beta) {
            const int target = b - r;
            if (target < 0 || beta.count(target)) continue;
            int between = 0;
            for (int x : beta)
                if (x > target && x < b) ++between;
            std::set<int> next = beta;
            next.erase(b);
            next.insert(target);
            std::vector<int> sorted(next.rbegin(), next.rend());
            std::vector<int> nl;
            for (int j = 0; j < len; ++j) {
                int part = sorted[j] - (len - 1 - j);
                if (part > 0) nl.push_back(part);
            }
            Integer sub = chi(nl, pos + 1);
            total += (between % 2 ? -1 : 1) * sub;
        }
        std::lock_guard lock(memo_mutex);
        memo.emplace(std::make_pair(lam, rest), total);
        return total;
    };
    return chi(lambda_star.parts, 0);
}

Permutation cycle_permutation(const IntPartition& mu) {
    Permutation p;
    int offset = 0;
    for (int r : mu.parts) {
        p.images.push_back(offset + r);
        for (int i = 2; i <= r; ++i) p.images.push_back(offset + i - 1);
        offset += r;
    }
    return p;
}

}  // namespace diagramalg
