#include "diagramalg/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "diagramalg/errors.hpp"

namespace diagramalg {

IntPartition::IntPartition(std::initializer_list<int> p) : IntPartition(std::vector<int>(p)) {}

IntPartition::IntPartition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw Error(ErrorCode::SyntaxError, "partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int IntPartition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

bool table_less(const IntPartition& a, const IntPartition& b) {
    const int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts > b.parts;
}

std::string to_string(const IntPartition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out + "]";
}

IntPartition parse_partition(const std::string& text) {
    std::vector<int> parts;
    long value = -1;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            value = (value < 0 ? 0 : value * 10) + (c - '0');
            if (value > 1000) throw Error(ErrorCode::SyntaxError, "partition part too large");
        } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
            if (value >= 0) parts.push_back(static_cast<int>(value));
            value = -1;
        } else {
            throw Error(ErrorCode::SyntaxError, "bad character in partition '" + text + "'");
        }
    }
    if (value >= 0) parts.push_back(static_cast<int>(value));
    return IntPartition(parts);
}

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    // Parts chosen largest first, each choice descending: lexicographically
    // decreasing order, which is the table order within one size.
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            IntPartition p;
            p.parts = cur;
            out.push_back(p);
            return;
        }
        for (int x = std::min(remaining, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

IntPartition ones(int n) {
    IntPartition p;
    p.parts.assign(n, 1);
    return p;
}

std::map<int, int> multiplicities(const IntPartition& p) {
    std::map<int, int> m;
    for (int x : p.parts) ++m[x];
    return m;
}

std::vector<std::vector<int>> divisors(const IntPartition& kappa) {
    std::vector<std::vector<int>> options;
    for (int x : kappa.parts) {
        std::vector<int> ds;
        for (int d = 1; d <= x; ++d)
            if (x % d == 0) ds.push_back(d);
        options.push_back(ds);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == options.size()) {
            out.push_back(cur);
            return;
        }
        for (int d : options[i]) {
            cur.push_back(d);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Integer binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer stirling2(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (a == 0) return b == 0 ? 1 : 0;
    // Row-by-row recurrence S(i,j) = j S(i-1,j) + S(i-1,j-1).
    std::vector<Integer> row(b + 1, 0);
    row[0] = 1;
    for (long i = 1; i <= a; ++i) {
        for (long j = std::min(i, b); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[b];
}

Integer double_factorial(long a) {
    Integer r = 1;
    for (long x = a; x > 1; x -= 2) r *= x;
    return r;
}

Integer factorial(long a) {
    Integer r = 1;
    for (long x = 2; x <= a; ++x) r *= x;
    return r;
}

Integer bell(long a) {
    if (a < 0) return 0;
    Integer sum = 0;
    for (long b = 0; b <= a; ++b) sum += stirling2(a, b);
    return sum;
}

std::vector<int> rank_set(Family f, int k) {
    std::vector<int> out;
    switch (f) {
        case Family::Brauer:
        case Family::TemperleyLieb:
            for (int m = k % 2; m <= k; m += 2) out.push_back(m);
            break;
        case Family::SymmetricGroup:
            out.push_back(k);
            break;
        default:
            for (int m = 0; m <= k; ++m) out.push_back(m);
    }
    return out;
}

std::vector<IntPartition> index_set(Family f, int k) {
    if (f == Family::PlanarPartition)
        throw Error(ErrorCode::FamilyUnsupported, "irreducible labels for planar-partition are not provided");
    std::vector<IntPartition> out;
    for (int m : rank_set(f, k)) {
        if (is_planar_family(f)) {
            out.push_back(m == 0 ? IntPartition{} : IntPartition{m});
        } else {
            for (auto& p : partitions_of(m)) out.push_back(p);
        }
    }
    return out;
}

std::vector<IntPartition> index_set(Family f, int k, long n) {
    if (n < 2L * k) throw Error(ErrorCode::SizeMismatch, "labels require n >= 2k");
    std::vector<IntPartition> out;
    for (const auto& ls : index_set(f, k)) {
        IntPartition lambda;
        lambda.parts.push_back(static_cast<int>(n - ls.size()));
        for (int x : ls.parts) lambda.parts.push_back(x);
        out.push_back(lambda);
    }
    return out;
}

}  // namespace diagramalg
