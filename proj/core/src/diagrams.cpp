#include "diagramalg/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

#include "diagramalg/errors.hpp"
#include "union_find.hpp"

namespace diagramalg {

namespace {

constexpr int kMaxK = 127;

struct FamilyEntry {
    Family family;
    std::string_view name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::Partition, "partition"},
    {Family::Brauer, "brauer"},
    {Family::RookBrauer, "rook-brauer"},
    {Family::Rook, "rook"},
    {Family::TemperleyLieb, "temperley-lieb"},
    {Family::Motzkin, "motzkin"},
    {Family::PlanarRook, "planar-rook"},
    {Family::PlanarPartition, "planar-partition"},
    {Family::SymmetricGroup, "symmetric-group"},
};

struct BlockStats {
    int tops = 0;
    int bottoms = 0;
};

std::vector<BlockStats> block_stats(const Diagram& d) {
    std::vector<BlockStats> stats(d.block_count());
    const int k = d.k();
    for (int v = 1; v <= 2 * k; ++v) {
        auto& s = stats[d.label(v)];
        (v <= k ? s.tops : s.bottoms)++;
    }
    return stats;
}

}  // namespace

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& e : kFamilies) out.push_back(e.family);
        return out;
    }();
    return families;
}

std::string_view family_name(Family f) {
    for (const auto& e : kFamilies)
        if (e.family == f) return e.name;
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& e : kFamilies)
        if (e.name == name) return e.family;
    if (name == "tl") return Family::TemperleyLieb;
    if (name == "rb") return Family::RookBrauer;
    if (name == "sym" || name == "symmetric") return Family::SymmetricGroup;
    return std::nullopt;
}

bool is_planar_family(Family f) {
    return f == Family::TemperleyLieb || f == Family::Motzkin || f == Family::PlanarRook ||
           f == Family::PlanarPartition;
}

Diagram Diagram::from_labels(int k, const std::vector<int>& labels) {
    if (k < 0 || k > kMaxK) throw Error(ErrorCode::IndexOutOfRange, "k out of supported range");
    if (static_cast<int>(labels.size()) != 2 * k)
        throw Error(ErrorCode::SizeMismatch, "label vector must have 2k entries");
    Diagram d;
    d.k_ = k;
    d.labels_.resize(labels.size());
    std::vector<std::pair<int, int>> seen;  // (raw label, canonical label)
    for (std::size_t v = 0; v < labels.size(); ++v) {
        int raw = labels[v];
        auto it = std::find_if(seen.begin(), seen.end(), [raw](const auto& p) { return p.first == raw; });
        int canon;
        if (it == seen.end()) {
            canon = static_cast<int>(seen.size());
            seen.emplace_back(raw, canon);
        } else {
            canon = it->second;
        }
        d.labels_[v] = static_cast<std::uint8_t>(canon);
    }
    d.blocks_ = static_cast<int>(seen.size());
    return d;
}

Diagram Diagram::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    if (k < 0 || k > kMaxK) throw Error(ErrorCode::IndexOutOfRange, "k out of supported range");
    std::vector<int> labels(2 * k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw Error(ErrorCode::SyntaxError, "empty block");
        for (int v : blocks[b]) {
            if (v < 1 || v > 2 * k)
                throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " outside 1..2k");
            if (labels[v - 1] != -1)
                throw Error(ErrorCode::DuplicateVertex, "vertex " + std::to_string(v) + " repeated");
            labels[v - 1] = static_cast<int>(b);
        }
    }
    for (int v = 1; v <= 2 * k; ++v)
        if (labels[v - 1] == -1)
            throw Error(ErrorCode::MissingVertex, "vertex " + std::to_string(v) + " absent");
    return from_labels(k, labels);
}

std::vector<std::vector<int>> Diagram::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int v = 1; v <= 2 * k_; ++v) out[labels_[v - 1]].push_back(v);
    return out;
}

Diagram identity(int k) {
    std::vector<int> labels(2 * k);
    for (int i = 0; i < k; ++i) labels[i] = labels[k + i] = i;
    return Diagram::from_labels(k, labels);
}

Diagram parse_diagram(std::string_view text, int k) {
    if (k < 1 || k > kMaxK) throw Error(ErrorCode::IndexOutOfRange, "k must be in 1.." + std::to_string(kMaxK));
    std::vector<std::vector<int>> blocks(1);
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (c == '|') {
            if (blocks.back().empty()) throw Error(ErrorCode::SyntaxError, "empty block before '|'");
            blocks.emplace_back();
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 100000) throw Error(ErrorCode::IndexOutOfRange, "vertex index too large");
                ++pos;
            }
            bool primed = pos < text.size() && text[pos] == '\'';
            if (primed) ++pos;
            if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '|')
                throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, text[pos]) + "'");
            if (value < 1 || value > k)
                throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(value) + " outside 1.." + std::to_string(k));
            int v = static_cast<int>(primed ? k + value : value);
            blocks.back().push_back(v);
        } else {
            throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    if (blocks.back().empty()) throw Error(ErrorCode::SyntaxError, "empty block");
    return Diagram::from_blocks(k, blocks);
}

std::string format_diagram(const Diagram& d) {
    std::string out;
    const int k = d.k();
    for (const auto& block : d.blocks()) {
        if (!out.empty()) out += " | ";
        bool first = true;
        for (int v : block) {
            if (!first) out += ' ';
            first = false;
            out += v <= k ? std::to_string(v) : std::to_string(v - k) + "'";
        }
    }
    return out;
}

ConcatResult concat(const Diagram& d1, const Diagram& d2) {
    if (d1.k() != d2.k()) throw Error(ErrorCode::RankMismatch, "concatenating diagrams of different k");
    const int k = d1.k();
    // Nodes: 0..k-1 top of d1, k..2k-1 middle row, 2k..3k-1 bottom of d2.
    detail::UnionFind uf(3 * k);
    std::vector<int> first(2 * k + 2, -1);
    for (int v = 0; v < 2 * k; ++v) {
        int node = v;  // d1: top v, bottom maps to middle
        int& f = first[d1.label(v + 1)];
        if (f < 0) f = node; else uf.unite(f, node);
    }
    std::fill(first.begin(), first.end(), -1);
    for (int v = 0; v < 2 * k; ++v) {
        int node = v + k;  // d2: top maps to middle, bottom to 2k..3k-1
        int& f = first[d2.label(v + 1)];
        if (f < 0) f = node; else uf.unite(f, node);
    }
    std::vector<int> labels(2 * k);
    std::vector<char> outer(3 * k, 0);
    for (int v = 0; v < k; ++v) {
        labels[v] = uf.find(v);
        labels[k + v] = uf.find(2 * k + v);
        outer[labels[v]] = outer[labels[k + v]] = 1;
    }
    std::vector<char> counted(3 * k, 0);
    int deleted = 0;
    for (int v = k; v < 2 * k; ++v) {
        int r = uf.find(v);
        if (!outer[r] && !counted[r]) {
            counted[r] = 1;
            ++deleted;
        }
    }
    return {Diagram::from_labels(k, labels), deleted};
}

Diagram transpose(const Diagram& d) {
    const int k = d.k();
    std::vector<int> labels(2 * k);
    for (int i = 1; i <= k; ++i) {
        labels[i - 1] = d.label(k + i);
        labels[k + i - 1] = d.label(i);
    }
    return Diagram::from_labels(k, labels);
}

int rank(const Diagram& d) {
    int r = 0;
    for (const auto& s : block_stats(d))
        if (s.tops > 0 && s.bottoms > 0) ++r;
    return r;
}

bool is_planar(const Diagram& d) {
    const int k = d.k();
    // Boundary order 1..k, k'..1'.
    std::vector<int> seq(2 * k);
    for (int i = 1; i <= k; ++i) {
        seq[i - 1] = d.label(i);
        seq[2 * k - i] = d.label(k + i);
    }
    const int nb = d.block_count();
    std::vector<int> lo(nb, 2 * k), hi(nb, -1), last(nb, -1);
    for (int p = 0; p < 2 * k; ++p) {
        lo[seq[p]] = std::min(lo[seq[p]], p);
        hi[seq[p]] = std::max(hi[seq[p]], p);
    }
    for (int p = 0; p < 2 * k; ++p) {
        int b = seq[p];
        if (last[b] >= 0) {
            for (int z = last[b] + 1; z < p; ++z) {
                int c = seq[z];
                if (lo[c] < last[b] || hi[c] > p) return false;
            }
        }
        last[b] = p;
    }
    return true;
}

bool in_family(const Diagram& d, Family f) {
    if (f == Family::Partition) return true;
    if (f == Family::PlanarPartition) return is_planar(d);
    const auto stats = block_stats(d);
    auto all = [&](auto pred) { return std::all_of(stats.begin(), stats.end(), pred); };
    switch (f) {
        case Family::Brauer:
            return all([](const BlockStats& s) { return s.tops + s.bottoms == 2; });
        case Family::RookBrauer:
            return all([](const BlockStats& s) { return s.tops + s.bottoms <= 2; });
        case Family::Rook:
            return all([](const BlockStats& s) { return s.tops <= 1 && s.bottoms <= 1; });
        case Family::SymmetricGroup:
            return all([](const BlockStats& s) { return s.tops == 1 && s.bottoms == 1; });
        case Family::TemperleyLieb:
            return all([](const BlockStats& s) { return s.tops + s.bottoms == 2; }) && is_planar(d);
        case Family::Motzkin:
            return all([](const BlockStats& s) { return s.tops + s.bottoms <= 2; }) && is_planar(d);
        case Family::PlanarRook:
            return all([](const BlockStats& s) { return s.tops <= 1 && s.bottoms <= 1; }) && is_planar(d);
        default:
            return true;
    }
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
    const int k1 = d1.k(), k2 = d2.k(), k = k1 + k2;
    const int shift = d1.block_count();
    std::vector<int> labels(2 * k);
    for (int i = 1; i <= k1; ++i) {
        labels[i - 1] = d1.label(i);
        labels[k + i - 1] = d1.label(k1 + i);
    }
    for (int i = 1; i <= k2; ++i) {
        labels[k1 + i - 1] = shift + d2.label(i);
        labels[k + k1 + i - 1] = shift + d2.label(k2 + i);
    }
    return Diagram::from_labels(k, labels);
}

Diagram permutation_diagram(const std::vector<int>& images) {
    const int k = static_cast<int>(images.size());
    std::vector<int> labels(2 * k, -1);
    for (int j = 1; j <= k; ++j) {
        int s = images[j - 1];
        if (s < 1 || s > k || labels[s - 1] != -1)
            throw Error(ErrorCode::IndexOutOfRange, "images do not form a permutation");
        labels[s - 1] = j;
        labels[k + j - 1] = j;
    }
    return Diagram::from_labels(k, labels);
}

std::string_view generator_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::S: return "s";
        case GeneratorKind::P: return "p";
        case GeneratorKind::B: return "b";
        case GeneratorKind::E: return "e";
        case GeneratorKind::L: return "l";
        case GeneratorKind::R: return "r";
    }
    return "?";
}

Diagram generator(GeneratorKind kind, int i, int k) {
    const int hi = kind == GeneratorKind::P ? k : k - 1;
    if (k < 1 || i < 1 || i > hi)
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(generator_name(kind)) + "_" + std::to_string(i) + " undefined for k=" + std::to_string(k));
    std::vector<int> labels(2 * k);
    for (int j = 0; j < k; ++j) labels[j] = labels[k + j] = j;
    const int a = i - 1, b = i;  // zero-based positions of i and i+1
    switch (kind) {
        case GeneratorKind::S:
            labels[k + a] = b;
            labels[k + b] = a;
            break;
        case GeneratorKind::P:
            labels[k + a] = k;
            break;
        case GeneratorKind::B:
            labels[b] = labels[k + b] = a;
            break;
        case GeneratorKind::E:
            labels[b] = a;
            labels[k + a] = labels[k + b] = k;
            break;
        case GeneratorKind::L:
            return concat(generator(GeneratorKind::S, i, k), generator(GeneratorKind::P, i, k)).product;
        case GeneratorKind::R:
            return concat(generator(GeneratorKind::P, i, k), generator(GeneratorKind::S, i, k)).product;
    }
    return Diagram::from_labels(k, labels);
}

std::vector<Diagram> family_generators(Family f, int k) {
    std::vector<Diagram> out;
    for (auto kind : {GeneratorKind::S, GeneratorKind::P, GeneratorKind::B, GeneratorKind::E, GeneratorKind::L,
                      GeneratorKind::R}) {
        const int hi = kind == GeneratorKind::P ? k : k - 1;
        for (int i = 1; i <= hi; ++i) {
            Diagram g = generator(kind, i, k);
            if (in_family(g, f)) out.push_back(g);
        }
    }
    return out;
}

int enumeration_cap(Family f) {
    if (const char* env = std::getenv("DIAGRAMALG_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(std::min<long>(v, kMaxK));
    }
    return (f == Family::Partition || f == Family::PlanarPartition) ? 5 : 7;
}

std::vector<Diagram> enumerate_basis(Family f, int k) {
    if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative k");
    if (k > enumeration_cap(f))
        throw Error(ErrorCode::CapExceeded, "k=" + std::to_string(k) + " exceeds enumeration cap " +
                                                 std::to_string(enumeration_cap(f)) + " for " +
                                                 std::string(family_name(f)));
    const bool size_two = f == Family::Brauer || f == Family::TemperleyLieb || f == Family::RookBrauer ||
                          f == Family::Motzkin;
    const bool perfect = f == Family::Brauer || f == Family::TemperleyLieb;
    const bool rooklike = f == Family::Rook || f == Family::PlanarRook || f == Family::SymmetricGroup;
    const bool bijective = f == Family::SymmetricGroup;

    const int n = 2 * k;
    std::vector<int> labels(n);
    std::vector<int> size(n + 1, 0), tops(n + 1, 0), bottoms(n + 1, 0);
    std::vector<Diagram> out;
    int singletons = 0;

    // Restricted-growth strings in lexicographic order, pruned per family.
    std::function<void(int, int)> rec = [&](int p, int nb) {
        if (p == n) {
            Diagram d = Diagram::from_labels(k, labels);
            if (in_family(d, f)) out.push_back(std::move(d));
            return;
        }
        if (perfect && singletons > n - p) return;
        const bool top = p < k;
        for (int b = 0; b <= nb; ++b) {
            const bool fresh = b == nb;
            if (size_two && size[b] >= 2) continue;
            if (rooklike && (top ? tops[b] : bottoms[b]) >= 1) continue;
            if (bijective && !top && fresh) continue;
            labels[p] = b;
            ++size[b];
            (top ? tops[b] : bottoms[b])++;
            int delta = size[b] == 1 ? 1 : (size[b] == 2 ? -1 : 0);
            singletons += delta;
            rec(p + 1, fresh ? nb + 1 : nb);
            singletons -= delta;
            (top ? tops[b] : bottoms[b])--;
            --size[b];
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace diagramalg
