#include "diagramalg/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "diagramalg/errors.hpp"
#include "diagramalg/symrep.hpp"

namespace diagramalg {

namespace {

bool pairs_family(Family f) { return f == Family::Brauer || f == Family::TemperleyLieb; }

bool all_ones(const IntPartition& p) {
    return std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x == 1; });
}

int env_cap(int fallback) {
    if (const char* env = std::getenv("DIAGRAMALG_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return fallback;
}

Integer power(long base, long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

std::set<int> part_values(const std::map<int, int>& a, const std::map<int, int>& b) {
    std::set<int> out;
    for (const auto& [i, c] : a) out.insert(i);
    for (const auto& [i, c] : b) out.insert(i);
    return out;
}

int count(const std::map<int, int>& m, int i) {
    auto it = m.find(i);
    return it == m.end() ? 0 : it->second;
}

Integer f_partition(const IntPartition& kappa, const IntPartition& mu) {
    const auto mmu = multiplicities(mu);
    Integer total = 0;
    for (const auto& nu : divisors(kappa)) {
        const auto mnu = multiplicities(IntPartition(nu));
        Integer prod = 1;
        for (int i : part_values(mnu, mmu)) {
            const int a = count(mnu, i), b = count(mmu, i);
            Integer inner = 0;
            for (int t = 0; t <= a; ++t) inner += stirling2(a, t) * binom(t, b) * power(i, a - t);
            prod *= inner;
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

// Brauer (base 0 on odd parts) and rook-Brauer (base 1 on odd, 2 on even).
Integer f_matching(const IntPartition& kappa, const IntPartition& mu, bool rook_brauer) {
    const auto mk = multiplicities(kappa), mm = multiplicities(mu);
    Integer prod = 1;
    for (int i : part_values(mk, mm)) {
        const int a = count(mk, i), b = count(mm, i), d = a - b;
        if (d < 0) return 0;
        const long base = rook_brauer ? (i % 2 == 0 ? 2 : 1) : (i % 2 == 0 ? 1 : 0);
        Integer inner = 0;
        for (int t = 0; 2 * t <= d; ++t) {
            const Integer pw = (d - 2 * t == 0) ? Integer(1) : power(base, d - 2 * t);
            inner += binom(d, 2 * t) * double_factorial(2 * t - 1) * power(i, t) * pw;
        }
        prod *= binom(a, b) * inner;
    }
    return prod;
}

Integer f_rook(const IntPartition& kappa, const IntPartition& mu) {
    const auto mk = multiplicities(kappa), mm = multiplicities(mu);
    Integer prod = 1;
    for (int i : part_values(mk, mm)) prod *= binom(count(mk, i), count(mm, i));
    return prod;
}

}  // namespace

int ClassLabel::k() const { return kappa.size() + (pairs_family(family) ? 2 : 1) * s; }

void validate(const ClassLabel& label) {
    if (label.family == Family::PlanarPartition)
        throw Error(ErrorCode::FamilyUnsupported, "characters of planar-partition are not provided");
    if (label.s < 0) throw Error(ErrorCode::InvalidClassLabel, "negative s");
    if (is_planar_family(label.family) && !all_ones(label.kappa))
        throw Error(ErrorCode::InvalidClassLabel, "planar classes use kappa = [1,...,1] only, got " + to_string(label.kappa));
    if (label.family == Family::SymmetricGroup && label.s != 0)
        throw Error(ErrorCode::InvalidClassLabel, "symmetric-group classes have s = 0");
}

std::vector<ClassLabel> class_labels(Family f, int k) {
    if (f == Family::PlanarPartition)
        throw Error(ErrorCode::FamilyUnsupported, "characters of planar-partition are not provided");
    const int step = pairs_family(f) ? 2 : 1;
    std::vector<ClassLabel> out;
    for (int r : rank_set(f, k)) {
        if (is_planar_family(f)) {
            out.push_back({ones(r), (k - r) / step, f});
        } else {
            for (auto& kappa : partitions_of(r)) out.push_back({kappa, (k - r) / step, f});
        }
    }
    return out;
}

Diagram cycle_diagram(const IntPartition& kappa) { return permutation_diagram(cycle_permutation(kappa).images); }

Element class_diagram(const ClassLabel& label) {
    validate(label);
    Diagram d = cycle_diagram(label.kappa);
    const Diagram ebar =
        pairs_family(label.family) ? generator(GeneratorKind::E, 1, 2) : generator(GeneratorKind::P, 1, 1);
    for (int i = 0; i < label.s; ++i) d = tensor(d, ebar);
    return Element(d, label.family, LaurentPoly::monomial(-label.s));
}

std::map<IntPartition, std::vector<SymmetricMDiagram>> fixed_points(Family f, int k, int m, const IntPartition& kappa) {
    if (kappa.size() != k) throw Error(ErrorCode::SizeMismatch, "kappa must be a partition of k");
    std::map<IntPartition, std::vector<SymmetricMDiagram>> out;
    const auto ranks = rank_set(f, k);
    if (std::find(ranks.begin(), ranks.end(), m) == ranks.end()) return out;
    const Diagram gamma = cycle_diagram(kappa);
    for (const auto& w : enumerate_symmetric(f, k, m)) {
        const auto res = conjugate(gamma, w);
        if (res.twist && res.w_prime == w) out[res.twist->cycle_type()].push_back(w);
    }
    return out;
}

Integer f_coeff_planar(Family f, int r, int m) {
    if (m < 0 || m > r) return 0;
    switch (f) {
        case Family::TemperleyLieb: {
            if ((r - m) % 2) return 0;
            const int h = (r - m) / 2;
            return binom(r, h) - binom(r, h - 1);
        }
        case Family::Motzkin: {
            Integer total = 0;
            for (int t = 0; m + 2 * t <= r; ++t)
                total += binom(r, m + 2 * t) * (binom(m + 2 * t, t) - binom(m + 2 * t, t - 1));
            return total;
        }
        case Family::PlanarRook:
            return binom(r, m);
        default:
            throw Error(ErrorCode::FamilyUnsupported, std::string(family_name(f)) + " has no planar coefficient");
    }
}

Integer f_coeff(Family f, const IntPartition& kappa, const IntPartition& mu) {
    if (f == Family::PlanarPartition)
        throw Error(ErrorCode::FamilyUnsupported, "coefficients of planar-partition are not provided");
    if (f == Family::SymmetricGroup) return kappa == mu ? 1 : 0;
    if (is_planar_family(f)) {
        if (!all_ones(kappa)) throw Error(ErrorCode::InvalidClassLabel, "planar classes use kappa = [1,...,1] only");
        if (!all_ones(mu)) return 0;
        return f_coeff_planar(f, kappa.size(), mu.size());
    }
    if (mu.size() > kappa.size()) return 0;
    switch (f) {
        case Family::Partition: return f_partition(kappa, mu);
        case Family::Brauer: return f_matching(kappa, mu, false);
        case Family::RookBrauer: return f_matching(kappa, mu, true);
        case Family::Rook: return f_rook(kappa, mu);
        default: break;
    }
    throw Error(ErrorCode::FamilyUnsupported, std::string(family_name(f)));
}

Integer irr_character(Family f, int k, const IntPartition& lambda_star, const ClassLabel& label) {
    validate(label);
    if (label.family != f || label.k() != k)
        throw Error(ErrorCode::InvalidClassLabel, "class label belongs to a different algebra");
    const auto labels = index_set(f, k);
    if (std::find(labels.begin(), labels.end(), lambda_star) == labels.end())
        throw Error(ErrorCode::LabelNotInFamily, to_string(lambda_star) + " is not an irreducible label");
    const int m = lambda_star.size(), r = label.kappa.size();
    if (r < m) return 0;
    if (is_planar_family(f)) return f_coeff_planar(f, r, m);
    if (f == Family::SymmetricGroup) return sym_character(lambda_star, label.kappa);
    Integer total = 0;
    for (const auto& mu : partitions_of(m)) {
        const Integer c = f_coeff(f, label.kappa, mu);
        if (c != 0) total += c * sym_character(lambda_star, mu);
    }
    return total;
}

int oracle_cap() { return env_cap(5); }

LaurentPoly character_oracle(Family f, int k, const IntPartition& lambda_star, const ClassLabel& label) {
    if (k > oracle_cap())
        throw Error(ErrorCode::CapExceeded, "oracle limited to k <= " + std::to_string(oracle_cap()));
    validate(label);
    if (label.family != f || label.k() != k)
        throw Error(ErrorCode::InvalidClassLabel, "class label belongs to a different algebra");
    return IrreducibleModule(f, k, lambda_star, BasisChoice::Twisted).trace(class_diagram(label));
}

int table_cap() { return env_cap(12); }

CharacterTable character_table(Family f, int k) {
    if (k > table_cap()) throw Error(ErrorCode::CapExceeded, "tables limited to k <= " + std::to_string(table_cap()));
    CharacterTable table{f, k, index_set(f, k), class_labels(f, k), {}};
    for (const auto& ls : table.rows) {
        table.values.emplace_back();
        for (const auto& label : table.cols) table.values.back().push_back(irr_character(f, k, ls, label));
    }
    return table;
}

TableFactorization factor_table(Family f, int k) {
    if (k > table_cap()) throw Error(ErrorCode::CapExceeded, "tables limited to k <= " + std::to_string(table_cap()));
    TableFactorization out;
    out.labels = index_set(f, k);
    const auto cols = class_labels(f, k);
    const std::size_t n = out.labels.size();
    out.block.assign(n, std::vector<Integer>(n, 0));
    out.f.assign(n, std::vector<Integer>(cols.size(), 0));
    const bool planar = is_planar_family(f);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& mu = out.labels[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& other = out.labels[j];
            if (other.size() != mu.size()) continue;
            out.block[i][j] = planar ? Integer(i == j ? 1 : 0) : sym_character(mu, other);
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& kappa = cols[j].kappa;
            out.f[i][j] = planar ? f_coeff_planar(f, kappa.size(), mu.size()) : f_coeff(f, kappa, mu);
        }
    }
    return out;
}

IntegerMatrix integer_matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    IntegerMatrix c(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < inner; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

Integer determinant(IntegerMatrix a) {
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < n && a[r][p] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

DeterminantCheck table_determinant_check(Family f, int k) {
    const auto table = character_table(f, k);
    DeterminantCheck out;
    out.lhs = abs(determinant(table.values));
    out.rhs = 1;
    if (!is_planar_family(f))
        for (const auto& ls : table.rows)
            for (int part : ls.parts) out.rhs *= part;
    out.ok = out.lhs == out.rhs;
    return out;
}

}  // namespace diagramalg
